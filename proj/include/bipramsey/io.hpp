#pragma once

// File formats.
//
// Matrix text: first line `n_rows n_cols`, then n_rows lines of n_cols
// space-separated decimal color ids.
//
// JSON documents:
//   cover          {"n_rows":4,"n_cols":4,"rectangles":[{"color":1,"rows":[0,1],"cols":[0]}]}
//   k-partite      {"k":3,"n":4,"pairs":[{"a":0,"b":1,"rectangles":[...]}, ...]}
//   clique family  {"n_vertices":6,"cliques":[{"color":0,"vertices":[0,1,2]}]}
// Witnesses and violations carry a "kind" discriminator.

#include <iosfwd>
#include <string>
#include <variant>

#include <json.hpp>

#include "bipramsey/core.hpp"
#include "bipramsey/detect.hpp"
#include "bipramsey/search.hpp"

namespace bipramsey {

using Json = nlohmann::ordered_json;

ColorMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const ColorMatrix& matrix);

Json to_json(const RectangleCover& cover);
RectangleCover cover_from_json(const Json& j);

Json to_json(const KPartiteCover& cover);
KPartiteCover kpartite_from_json(const Json& j);

Json to_json(const CliqueFamily& family);
CliqueFamily clique_family_from_json(const Json& j);

Json to_json(const Witness& witness);
Witness witness_from_json(const Json& j);

Json to_json(const Violation& violation);
Violation violation_from_json(const Json& j);

Json to_json(const SuperimposedWitness& witness);
Json to_json(const SearchOutcome& outcome);

using Document = std::variant<ColorMatrix, RectangleCover, KPartiteCover, CliqueFamily>;

// Sniffs the first non-blank character: '{' means JSON (dispatched on its
// keys), anything else means matrix text. Throws MalformedInput.
Document read_document(std::istream& in);

}  // namespace bipramsey
