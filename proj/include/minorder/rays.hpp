#pragma once

#include "minorder/digraph.hpp"
#include "minorder/interval_models.hpp"
#include "minorder/ordering.hpp"
#include "minorder/rational.hpp"

namespace minorder {

/// Two-directional orthogonal ray model of a bipartite digraph: the i-th
/// A-vertex owns an upward vertical ray from (u[i], v[i]), the j-th B-vertex
/// a rightward horizontal ray from (r[j], s[j]). Rays are closed, so they
/// meet exactly when r <= u and v <= s. Constructions normalize coordinates
/// onto an integer grid with all x-coordinates distinct and all
/// y-coordinates distinct.
struct RayModel {
    std::vector<int> part_a;
    std::vector<int> part_b;
    std::vector<Rat> u, v;  // per A index
    std::vector<Rat> r, s;  // per B index
};

bool rays_meet(const Rat& u, const Rat& v, const Rat& r, const Rat& s);

/// Arcs from A to B exactly where the rays intersect.
BipartiteDigraph realize_rays(const RayModel& model);

/// Coordinate swap construction: P_a = (y_a, x_a), Q_b = (x_b, z_b), then an
/// order-preserving re-indexing onto integers (B x-coordinates and A
/// y-coordinates win ties, which keeps every non-strict comparison intact).
/// Requires that the model's realized arcs, restricted to A x B, equal E(h);
/// throws InputError with the first mismatched pair otherwise. The result is
/// re-checked to realize h.
RayModel rays_from_signed(const BipartiteDigraph& h, const SignedIntervalModel& model);

/// A sorted by v, then B sorted by r, as one linear order on all vertices.
/// Requires pairwise distinct v/s and u/r families (normalization); the
/// output is re-verified as a min ordering of the realized digraph.
VertexOrdering min_ordering_from_rays(const RayModel& model);

}  // namespace minorder
