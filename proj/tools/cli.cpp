#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bipramsey/constructions.hpp"
#include "bipramsey/core.hpp"
#include "bipramsey/detect.hpp"
#include "bipramsey/io.hpp"
#include "bipramsey/search.hpp"

namespace bipramsey::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Document load(const std::string& path, std::istream& in) {
  if (path == "-") return read_document(in);
  std::ifstream file(path);
  if (!file) throw MalformedInput("cannot open " + path);
  return read_document(file);
}

SearchLimits limits_from(double timeout_sec) {
  SearchLimits limits;
  limits.timeout_seconds = timeout_sec;
  if (const char* env = std::getenv("RAMSEY_GUARD_NODES")) {
    try {
      limits.node_limit = std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("RAMSEY_GUARD_NODES is not a number: ") + env);
    }
  }
  return limits;
}

struct GenerateArgs {
  std::string kind;
  std::optional<Index> n, m, k;
  std::string format = "matrix";
  std::string out_path;
};

int do_generate(const GenerateArgs& a, std::ostream& out) {
  auto need = [](const std::optional<Index>& v, const char* flag) {
    if (!v) throw UsageError(std::string("--") + flag + " is required for this kind");
    return *v;
  };
  std::ostringstream text;
  if (a.kind == "kpartite") {
    if (a.format != "json") throw UsageError("kpartite output is only available as json");
    text << to_json(construct_kpartite_avoiding(need(a.n, "n"), need(a.m, "m"), need(a.k, "k")))
                .dump()
         << '\n';
  } else {
    const ColorMatrix matrix = a.kind == "modm"
                                   ? construct_mod_m(need(a.n, "n"), need(a.m, "m"))
                                   : construct_recursive_matrix(need(a.k, "k"));
    if (a.format == "matrix") {
      write_matrix(text, matrix);
    } else {
      text << to_json(matrix_to_rectangles(matrix)).dump() << '\n';
    }
  }
  if (a.out_path.empty()) {
    out << text.str();
  } else {
    std::ofstream file(a.out_path);
    if (!file) throw UsageError("cannot write " + a.out_path);
    file << text.str();
  }
  return kOk;
}

int report(const std::optional<Violation>& v, std::ostream& out) {
  if (v) {
    out << to_json(*v).dump() << '\n';
    return kViolation;
  }
  out << "ok\n";
  return kOk;
}

int do_validate(const Document& doc, std::optional<Index> max_local, std::ostream& out) {
  if (const auto* matrix = std::get_if<ColorMatrix>(&doc)) {
    if (auto v = validate_shuffle_preserved(*matrix)) return report(v, out);
    if (max_local) return report(check_locality(matrix_to_rectangles(*matrix), *max_local), out);
    return report(std::nullopt, out);
  }
  if (const auto* cover = std::get_if<RectangleCover>(&doc)) {
    if (auto v = check_coverage(*cover)) return report(v, out);
    if (max_local) return report(check_locality(*cover, *max_local), out);
    return report(std::nullopt, out);
  }
  if (const auto* kp = std::get_if<KPartiteCover>(&doc)) {
    if (max_local) throw UsageError("--max-local is not supported for k-partite input");
    return report(validate_kpartite(*kp), out);
  }
  throw MalformedInput("validate expects a matrix, cover or k-partite document");
}

int do_detect(const Document& doc, Index p, const std::string& mode, std::ostream& out) {
  const bool brute = mode == "brute";
  std::optional<Witness> witness;
  if (const auto* matrix = std::get_if<ColorMatrix>(&doc)) {
    if (brute) {
      witness = find_mono_biclique_brute(*matrix, p);
    } else {
      if (auto v = validate_shuffle_preserved(*matrix)) return report(v, out);
      witness = find_mono_biclique_fast(matrix_to_rectangles(*matrix), p);
    }
  } else if (const auto* cover = std::get_if<RectangleCover>(&doc)) {
    witness = brute ? find_mono_biclique_brute(to_multigraph(*cover), p)
                    : find_mono_biclique_fast(*cover, p);
  } else if (const auto* kp = std::get_if<KPartiteCover>(&doc)) {
    if (brute) {
      witness = find_mono_kpartite_brute(*kp, p);
    } else {
      if (auto v = validate_kpartite(*kp)) return report(v, out);
      witness = find_mono_kpartite(*kp, p);
    }
  } else {
    throw MalformedInput("detect expects a matrix, cover or k-partite document");
  }
  if (witness) {
    out << to_json(*witness).dump() << '\n';
  } else {
    out << "none\n";
  }
  return kOk;
}

int do_superimposed(const Document& doc, Index t, std::ostream& out) {
  const auto* family = std::get_if<CliqueFamily>(&doc);
  if (family == nullptr) throw MalformedInput("superimposed expects a clique family document");
  const SuperimposedWitness best = max_superimposed(*family, t);
  Json j;
  j["bound"] = superimposed_bound(*family, t);
  j["s_t"] = best.vertices.size();
  j["witness"] = to_json(best);
  out << j.dump() << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Shuffle-preserved colorings of bipartite multigraphs"};
  app.name("bipramsey");
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write an extremal construction");
  generate->add_option("--kind", gen.kind)
      ->required()
      ->check(CLI::IsMember({"modm", "recursive", "kpartite"}));
  generate->add_option("--n", gen.n, "Side length");
  generate->add_option("--m", gen.m, "Number of colors");
  generate->add_option("--k", gen.k, "Recursion depth or number of parts");
  generate->add_option("--format", gen.format)->check(CLI::IsMember({"matrix", "json"}));
  generate->add_option("--out", gen.out_path, "Output file (default stdout)");

  std::string in_path = "-";
  std::optional<Index> max_local;
  auto* validate = app.add_subcommand("validate", "Check shuffle preservation and locality");
  validate->add_option("--in", in_path);
  validate->add_option("--max-local", max_local);

  Index p = 0;
  std::string mode = "fast";
  auto* detect = app.add_subcommand("detect", "Find a monochromatic complete subgraph");
  detect->add_option("--in", in_path);
  detect->add_option("--p", p)->required()->check(CLI::PositiveNumber);
  detect->add_option("--mode", mode)->check(CLI::IsMember({"fast", "brute"}));

  Index n = 0, m = 0;
  auto* bound = app.add_subcommand("bound", "Guaranteed and avoidable biclique sizes");
  bound->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  bound->add_option("--m", m)->required()->check(CLI::PositiveNumber);

  double timeout_sec = 600.0;
  unsigned workers = 1;
  auto* search = app.add_subcommand("search", "Decide whether an avoiding coloring exists");
  search->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  search->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  search->add_option("--p", p)->required()->check(CLI::PositiveNumber);
  search->add_option("--timeout-sec", timeout_sec)->check(CLI::NonNegativeNumber);
  search->add_option("--workers", workers)->check(CLI::PositiveNumber);

  Index t = 0;
  auto* superimposed = app.add_subcommand("superimposed", "Superimposed clique bound");
  superimposed->add_option("--in", in_path);
  superimposed->add_option("--t", t)->required()->check(CLI::PositiveNumber);

  Index n_max = 0;
  std::optional<Index> m_max, p_max;
  double cell_timeout = 600.0;
  auto* table = app.add_subcommand("table", "Search verdicts over a parameter range as CSV");
  table->add_option("--n-max", n_max)->required()->check(CLI::PositiveNumber);
  table->add_option("--m-max", m_max)->check(CLI::PositiveNumber);
  table->add_option("--p-max", p_max)->check(CLI::PositiveNumber);
  table->add_option("--timeout-sec", cell_timeout)->check(CLI::NonNegativeNumber);
  table->add_option("--workers", workers)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "bipramsey: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (generate->parsed()) return do_generate(gen, out);
    if (validate->parsed()) return do_validate(load(in_path, in), max_local, out);
    if (detect->parsed()) return do_detect(load(in_path, in), p, mode, out);
    if (bound->parsed()) {
      Json j;
      j["guaranteed_p"] = guaranteed_p(n, m);
      j["avoidance_threshold"] = avoidance_threshold(n, m);
      out << j.dump() << '\n';
      return kOk;
    }
    if (search->parsed()) {
      const SearchOutcome outcome =
          search_avoiding(SearchParams{n, m, p, limits_from(timeout_sec)}, workers);
      out << to_json(outcome).dump() << '\n';
      switch (outcome.verdict) {
        case Verdict::sat: return kOk;
        case Verdict::unsat: return kUnsat;
        case Verdict::inconclusive: return kInconclusive;
      }
    }
    if (superimposed->parsed()) return do_superimposed(load(in_path, in), t, out);
    if (table->parsed()) {
      out << kTableHeader << '\n';
      threshold_table(n_max, m_max.value_or(n_max), p_max.value_or(n_max),
                      limits_from(cell_timeout), workers,
                      [&](const TableRow& row) { out << to_csv(row) << '\n' << std::flush; });
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "bipramsey: " << e.what() << '\n';
    return kUsage;
  } catch (const NotShufflePreserved& e) {
    out << to_json(e.violation).dump() << '\n';
    return kViolation;
  } catch (const MalformedInput& e) {
    err << "bipramsey: malformed input: " << e.what() << '\n';
    return kBadInput;
  } catch (const NotTwoColored& e) {
    err << "bipramsey: " << e.what() << '\n';
    return kBadInput;
  } catch (const GuardExceeded& e) {
    err << "bipramsey: guard exceeded: " << e.what() << '\n';
    return kGuard;
  } catch (const std::exception& e) {
    err << "bipramsey: internal error: " << e.what() << '\n';
    return kGuard;
  }
  return kUsage;
}

}  // namespace bipramsey::cli
