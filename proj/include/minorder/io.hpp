#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "minorder/biarc.hpp"
#include "minorder/digraph.hpp"
#include "minorder/homomorphism.hpp"
#include "minorder/interval_models.hpp"
#include "minorder/matrix.hpp"
#include "minorder/obstructions.hpp"
#include "minorder/ordering.hpp"
#include "minorder/rays.hpp"

namespace minorder {

using Json = nlohmann::json;

/// Graph text format: first non-comment line is n, then one "u v" pair per
/// line, 0-indexed, loops as "u u". '#' starts a comment, blank lines are
/// ignored, and both LF and CRLF are accepted. The writer emits LF.
Digraph parse_graph_text(std::string_view text);
std::string format_graph_text(const Digraph& h);

/// Matrix text format: one row per line as a string of 0/1 characters.
BinaryMatrix parse_matrix_text(std::string_view text);
std::string format_matrix_text(const BinaryMatrix& m);

/// Orderings serialize as a JSON array of vertex indices (alpha implicit).
Json ordering_to_json(const VertexOrdering& ord);
VertexOrdering ordering_from_json(const Json& j);

Json digraph_to_json(const Digraph& h);

/// Model JSON: {"n": int, "x": [...], "y": [...], "z": [...]} with rationals
/// as "p/q" or integer strings; the co-TT form omits "z".
Json signed_model_to_json(const SignedIntervalModel& m);
SignedIntervalModel signed_model_from_json(const Json& j);
Json cott_model_to_json(const CoTTModel& m);
CoTTModel cott_model_from_json(const Json& j);
Json tt_model_to_json(const ThresholdToleranceModel& m);
ThresholdToleranceModel tt_model_from_json(const Json& j);

/// Bi-arc JSON: array of per-vertex {"I": [ccw, cw], "J": [ccw, cw]}.
Json biarc_model_to_json(const BiArcModel& m);
BiArcModel biarc_model_from_json(const Json& j);

/// Ray JSON: {"A": [{"P": [x, y]}...], "B": [{"Q": [x, y]}...]}. The bare
/// format is positional; parts default to 0..|A|-1 and |A|..n-1.
Json ray_model_to_json(const RayModel& m);
RayModel ray_model_from_json(const Json& j);

/// Lists as a JSON object mapping vertex indices (as strings) to arrays of
/// template vertices; missing keys mean a full list.
ListAssignment lists_from_json(const Json& j, int n_g, int n_h);
Json lists_to_json(const ListAssignment& lists);

Json violation_to_json(const MinOrderViolation& v);
Json asteroidal_triple_to_json(const AsteroidalTriple& t);
Json invertible_pair_to_json(const InvertiblePairWitness& w);

std::string read_file(const std::string& path);

}  // namespace minorder
