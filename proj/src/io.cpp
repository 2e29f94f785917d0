#include "bipramsey/io.hpp"

#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace bipramsey {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw MalformedInput(std::string(what) + ": " + e.what());
  }
}

ColorId color_from(const Json& j) {
  const auto v = j.get<std::int64_t>();
  if (v < 0 || v > std::numeric_limits<std::uint32_t>::max()) {
    throw MalformedInput("color id out of range: " + std::to_string(v));
  }
  return ColorId(static_cast<std::uint32_t>(v));
}

Index index_from(const Json& j) {
  const auto v = j.get<std::int64_t>();
  if (v < 0) throw MalformedInput("negative index");
  return static_cast<Index>(v);
}

IndexSet index_set_from(const Json& j) {
  IndexSet out;
  for (const auto& x : j) out.push_back(index_from(x));
  return out;
}

Json rectangles_json(const RectangleCover& cover) {
  Json rects = Json::array();
  for (const auto& rect : cover.rectangles()) {
    rects.push_back({{"color", rect.color.value}, {"rows", rect.rows}, {"cols", rect.cols}});
  }
  return rects;
}

std::vector<Rectangle> rectangles_from(const Json& j) {
  std::vector<Rectangle> rects;
  for (const auto& r : j) {
    rects.push_back(Rectangle{color_from(r.at("color")), index_set_from(r.at("rows")),
                              index_set_from(r.at("cols"))});
  }
  return rects;
}

}  // namespace

ColorMatrix read_matrix(std::istream& in) {
  long long rows = 0, cols = 0;
  if (!(in >> rows >> cols) || rows <= 0 || cols <= 0) {
    throw MalformedInput("matrix header must be two positive integers");
  }
  std::vector<ColorId> cells;
  cells.reserve(static_cast<std::size_t>(rows * cols));
  for (long long i = 0; i < rows * cols; ++i) {
    long long v = 0;
    if (!(in >> v)) throw MalformedInput("matrix has fewer cells than its header declares");
    if (v < 0 || v > std::numeric_limits<std::uint32_t>::max()) {
      throw MalformedInput("color id out of range: " + std::to_string(v));
    }
    cells.emplace_back(static_cast<std::uint32_t>(v));
  }
  std::string extra;
  if (in >> extra) throw MalformedInput("trailing data after matrix");
  return ColorMatrix(static_cast<Index>(rows), static_cast<Index>(cols), std::move(cells));
}

void write_matrix(std::ostream& out, const ColorMatrix& matrix) {
  out << matrix.n_rows() << ' ' << matrix.n_cols() << '\n';
  for (Index r = 0; r < matrix.n_rows(); ++r) {
    for (Index c = 0; c < matrix.n_cols(); ++c) {
      if (c > 0) out << ' ';
      out << matrix(r, c).value;
    }
    out << '\n';
  }
}

Json to_json(const RectangleCover& cover) {
  return {{"n_rows", cover.n_rows()}, {"n_cols", cover.n_cols()},
          {"rectangles", rectangles_json(cover)}};
}

RectangleCover cover_from_json(const Json& j) {
  return guarded("cover", [&] {
    return RectangleCover(index_from(j.at("n_rows")), index_from(j.at("n_cols")),
                          rectangles_from(j.at("rectangles")));
  });
}

Json to_json(const KPartiteCover& cover) {
  Json pairs = Json::array();
  for (Index a = 0; a < cover.k(); ++a) {
    for (Index b = a + 1; b < cover.k(); ++b) {
      pairs.push_back({{"a", a}, {"b", b}, {"rectangles", rectangles_json(cover.pair(a, b))}});
    }
  }
  return {{"k", cover.k()}, {"n", cover.n()}, {"pairs", pairs}};
}

KPartiteCover kpartite_from_json(const Json& j) {
  return guarded("k-partite cover", [&] {
    KPartiteCover cover(index_from(j.at("k")), index_from(j.at("n")));
    for (const auto& pair : j.at("pairs")) {
      const Index a = index_from(pair.at("a"));
      const Index b = index_from(pair.at("b"));
      if (a >= b || b >= cover.k()) throw MalformedInput("bad part pair in k-partite cover");
      cover.set_pair(a, b, RectangleCover(cover.n(), cover.n(), rectangles_from(pair.at("rectangles"))));
    }
    return cover;
  });
}

Json to_json(const CliqueFamily& family) {
  Json cliques = Json::array();
  for (const auto& clique : family.cliques()) {
    cliques.push_back({{"color", clique.color.value}, {"vertices", clique.vertices}});
  }
  return {{"n_vertices", family.n_vertices()}, {"cliques", cliques}};
}

CliqueFamily clique_family_from_json(const Json& j) {
  return guarded("clique family", [&] {
    std::vector<Clique> cliques;
    for (const auto& c : j.at("cliques")) {
      cliques.push_back(Clique{color_from(c.at("color")), index_set_from(c.at("vertices"))});
    }
    return CliqueFamily(index_from(j.at("n_vertices")), std::move(cliques));
  });
}

Json to_json(const Witness& witness) {
  if (witness.parts.size() == 2) {
    return {{"kind", "biclique"},
            {"color", witness.color.value},
            {"rows", witness.rows()},
            {"cols", witness.cols()}};
  }
  return {{"kind", "kpartite"}, {"color", witness.color.value}, {"parts", witness.parts}};
}

Witness witness_from_json(const Json& j) {
  return guarded("witness", [&] {
    const auto kind = j.at("kind").get<std::string>();
    Witness w{color_from(j.at("color")), {}};
    if (kind == "biclique") {
      w.parts = {index_set_from(j.at("rows")), index_set_from(j.at("cols"))};
    } else if (kind == "kpartite") {
      for (const auto& part : j.at("parts")) w.parts.push_back(index_set_from(part));
    } else {
      throw MalformedInput("unknown witness kind " + kind);
    }
    return w;
  });
}

Json to_json(const Violation& violation) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ShuffleViolation>) {
          return {{"kind", "shuffle"}, {"color", v.color.value}, {"u", v.u},
                  {"u_prime", v.u_prime}, {"v", v.v}, {"v_prime", v.v_prime}};
        } else if constexpr (std::is_same_v<T, PartShuffleViolation>) {
          return {{"kind", "shuffle"}, {"color", v.color.value}, {"part_a", v.part_a},
                  {"u", v.u}, {"part_b", v.part_b}, {"v", v.v}};
        } else if constexpr (std::is_same_v<T, CoverageViolation>) {
          Json j = {{"kind", "coverage"}, {"row", v.row}, {"col", v.col}};
          if (v.parts) j["parts"] = {v.parts->first, v.parts->second};
          return j;
        } else {
          return {{"kind", "locality"},
                  {"side", v.side == Side::row ? "row" : "col"},
                  {"vertex", v.vertex},
                  {"count", v.count},
                  {"limit", v.limit}};
        }
      },
      violation);
}

Violation violation_from_json(const Json& j) {
  return guarded("violation", [&]() -> Violation {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "shuffle") {
      if (j.contains("part_a")) {
        return PartShuffleViolation{color_from(j.at("color")), index_from(j.at("part_a")),
                                    index_from(j.at("u")), index_from(j.at("part_b")),
                                    index_from(j.at("v"))};
      }
      return ShuffleViolation{color_from(j.at("color")), index_from(j.at("u")),
                              index_from(j.at("u_prime")), index_from(j.at("v")),
                              index_from(j.at("v_prime"))};
    }
    if (kind == "coverage") {
      CoverageViolation v{index_from(j.at("row")), index_from(j.at("col")), {}};
      if (j.contains("parts")) {
        v.parts = std::make_pair(index_from(j.at("parts").at(0)), index_from(j.at("parts").at(1)));
      }
      return v;
    }
    if (kind == "locality") {
      const auto side = j.at("side").get<std::string>();
      if (side != "row" && side != "col") throw MalformedInput("bad locality side " + side);
      return LocalityViolation{side == "row" ? Side::row : Side::col, index_from(j.at("vertex")),
                               index_from(j.at("count")), index_from(j.at("limit"))};
    }
    throw MalformedInput("unknown violation kind " + kind);
  });
}

Json to_json(const SuperimposedWitness& witness) {
  Json colors = Json::array();
  for (ColorId c : witness.colors) colors.push_back(c.value);
  return {{"colors", colors}, {"vertices", witness.vertices}};
}

Json to_json(const SearchOutcome& outcome) {
  return {{"verdict", to_string(outcome.verdict)},
          {"witness", outcome.witness ? to_json(*outcome.witness) : Json(nullptr)},
          {"stats",
           {{"nodes", outcome.stats.nodes},
            {"prunes", {{"budget", outcome.stats.budget_prunes}, {"memo", outcome.stats.memo_hits}}},
            {"millis", outcome.stats.millis}}}};
}

Document read_document(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw MalformedInput("empty input");
  if (text[first] != '{') {
    std::istringstream matrix_in(text);
    return read_matrix(matrix_in);
  }
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
  if (j.contains("rectangles")) return cover_from_json(j);
  if (j.contains("pairs")) return kpartite_from_json(j);
  if (j.contains("cliques")) return clique_family_from_json(j);
  throw MalformedInput("unrecognized JSON document");
}

}  // namespace bipramsey
