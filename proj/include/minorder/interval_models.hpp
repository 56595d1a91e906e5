#pragma once

#include <optional>
#include <vector>

#include "minorder/digraph.hpp"
#include "minorder/ordering.hpp"
#include "minorder/rational.hpp"

namespace minorder {

/// Signed-interval model: vertex v carries the source interval [x_v, y_v] and
/// the sink interval [x_v, z_v], either of which may run backwards. The
/// realized arc relation is uv in E iff x_u <= z_v and x_v <= y_u.
struct SignedIntervalModel {
    std::vector<Rat> x, y, z;

    int n() const { return static_cast<int>(x.size()); }
};

/// Co-TT model: ab in E iff x_a <= y_b and x_b <= y_a. Symmetric by
/// construction; vertex v has a loop exactly when x_v <= y_v.
struct CoTTModel {
    std::vector<Rat> x, y;

    int n() const { return static_cast<int>(x.size()); }
};

/// Threshold tolerance model: on distinct pairs, ab is an edge iff
/// w_a + w_b > t_a or w_a + w_b > t_b.
struct ThresholdToleranceModel {
    std::vector<Rat> weight, tolerance;

    int n() const { return static_cast<int>(weight.size()); }
};

enum class IntervalSign { positive, negative };

/// Type (alpha, beta) of a vertex: sign of its source and sink interval.
struct VertexType {
    IntervalSign source;
    IntervalSign sink;

    bool operator==(const VertexType&) const = default;
};

/// Vertex types plus the checked structural consequences: (-,-)-vertices are
/// pairwise non-adjacent and the (+,+)-vertices induce a reflexive subdigraph
/// realized by the restricted model. The flags are computed, not assumed.
struct TypeDecomposition {
    std::vector<VertexType> types;
    std::vector<int> plus_plus, plus_minus, minus_plus, minus_minus;
    bool minus_minus_independent = false;
    bool plus_plus_reflexive = false;
    bool plus_plus_model_realizes = false;
};

Digraph realize_signed(const SignedIntervalModel& model);

/// Extrema construction: x_v = pos(v), y_v = pos(O(v)), z_v = pos(I(v)).
/// Requires a verified min ordering (throws InvalidOrderingError otherwise)
/// and re-checks that the model realizes h exactly.
SignedIntervalModel signed_from_min_ordering(const Digraph& h, const VertexOrdering& ord);

/// The x-sorted vertex order (ties broken by vertex index), re-verified as a
/// min ordering of realize_signed(model) before return.
VertexOrdering min_ordering_from_signed(const SignedIntervalModel& model);

TypeDecomposition vertex_types(const SignedIntervalModel& model);

Digraph realize_cott(const CoTTModel& model);

/// z := y. Realizes the same graph.
SignedIntervalModel cott_to_signed(const CoTTModel& model);

/// For symmetric h with a verified min ordering: x_v = pos(v), y_v = pos(O(v)).
CoTTModel cott_from_min_ordering(const Digraph& h, const VertexOrdering& ord);

/// For reflexive symmetric h: the co-TT construction, which reflexivity makes
/// a genuine interval model (x_v <= y_v = z_v).
SignedIntervalModel interval_model_from_min_ordering(const Digraph& h, const VertexOrdering& ord);

bool is_adjusted_interval_model(const SignedIntervalModel& model);  // all x <= y and x <= z
bool is_interval_model(const SignedIntervalModel& model);           // adjusted and y = z
bool is_cott_shape(const SignedIntervalModel& model);               // y = z

/// w_v = x_v, t_v = x_v + y_v; the TT relation on distinct pairs is the
/// complement of the co-TT relation on distinct pairs.
ThresholdToleranceModel cott_to_threshold_tolerance(const CoTTModel& model);

/// Irreflexive symmetric digraph of the TT relation (distinct pairs only).
Digraph realize_threshold_tolerance(const ThresholdToleranceModel& model);

/// Standard-to-reflexive co-TT translation: adds a loop on every vertex
/// except simplicial vertices without a true twin (identical closed
/// neighborhoods). Input must be irreflexive and symmetric.
Digraph standard_cott_lift(const Digraph& g);

}  // namespace minorder
