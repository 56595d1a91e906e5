#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "minorder/digraph.hpp"
#include "minorder/ordering.hpp"
#include "minorder/rational.hpp"

namespace minorder {

/// Closed arc on the unit circle, parameterized by rationals in [0,1) with
/// clockwise as the increasing direction. The arc runs clockwise from `ccw`
/// to `cw` and wraps through 0 when ccw > cw.
struct CircularArc {
    Rat ccw;
    Rat cw;

    bool contains(const Rat& t) const {
        return ccw <= cw ? (ccw <= t && t <= cw) : (t >= ccw || t <= cw);
    }

    bool operator==(const CircularArc&) const = default;
};

/// Closed arcs never cover the whole circle here (each excludes a pole), so
/// they intersect exactly when one contains an endpoint of the other.
bool arcs_intersect(const CircularArc& a, const CircularArc& b);

/// Bi-arc model: pole N at parameter 0, pole S at 1/2. Every I_v contains N
/// and avoids S; every J_v contains S and avoids N; within each family the
/// clockwise ends are pairwise distinct.
struct BiArcModel {
    std::vector<CircularArc> i_arcs;
    std::vector<CircularArc> j_arcs;

    int n() const { return static_cast<int>(i_arcs.size()); }
};

/// Checks the pole-containment and distinct-ends invariants; throws
/// InputError naming the offending arc.
void validate_biarc(const BiArcModel& model);

/// The consistency witness: a vertex pair whose I-end order and J-end order
/// disagree, or nullopt when the families are consistent. Validates first.
std::optional<std::pair<int, int>> consistency_witness(const BiArcModel& model);

bool is_consistent(const BiArcModel& model);

/// Vertices by clockwise order of the clockwise ends of their I-arcs.
/// Requires consistency.
VertexOrdering ordering_generated(const BiArcModel& model);

/// Arc uv exactly when I_u and J_v are disjoint. Requires consistency.
Digraph realize_biarc(const BiArcModel& model);

/// Grid construction with denominator 4(n+1): the
/// clockwise end of I_v sits at pos(v)/D and of J_v at 1/2 + pos(v)/D; each
/// counterclockwise end stops at the half-step grid point just clockwise of
/// the blocking arc's clockwise end, with the alpha sentinel acting as grid
/// position 0 (so an empty neighborhood stops just past the opposite pole).
/// Re-checks consistency, realization, and the generated ordering.
BiArcModel biarc_from_min_ordering(const Digraph& h, const VertexOrdering& ord);

}  // namespace minorder
