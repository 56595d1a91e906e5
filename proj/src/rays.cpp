#include "minorder/rays.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

namespace minorder {

namespace {

void check_ray_sizes(const RayModel& m) {
    if (m.u.size() != m.part_a.size() || m.v.size() != m.part_a.size() ||
        m.r.size() != m.part_b.size() || m.s.size() != m.part_b.size()) {
        throw InputError("ray model has mismatched coordinate lists");
    }
}

// Replaces one axis worth of coordinates by their rank in the combined sort.
// Entries tagged kind 0 win ties against kind 1, preserving every "kind-0
// value <= kind-1 value" comparison the intersection predicate uses.
void reindex_axis(std::vector<Rat>& kind0, std::vector<Rat>& kind1) {
    std::vector<std::tuple<Rat, int, size_t>> entries;
    for (size_t i = 0; i < kind0.size(); ++i) entries.emplace_back(kind0[i], 0, i);
    for (size_t i = 0; i < kind1.size(); ++i) entries.emplace_back(kind1[i], 1, i);
    std::sort(entries.begin(), entries.end());
    for (size_t rank = 0; rank < entries.size(); ++rank) {
        auto [value, kind, index] = entries[rank];
        (kind == 0 ? kind0 : kind1)[index] = Rat(static_cast<long long>(rank));
    }
}

bool all_distinct(std::vector<Rat> values) {
    std::sort(values.begin(), values.end());
    return std::adjacent_find(values.begin(), values.end()) == values.end();
}

}  // namespace

bool rays_meet(const Rat& u, const Rat& v, const Rat& r, const Rat& s) {
    return r <= u && v <= s;
}

BipartiteDigraph realize_rays(const RayModel& model) {
    check_ray_sizes(model);
    std::vector<std::pair<int, int>> arcs;
    for (size_t i = 0; i < model.part_a.size(); ++i) {
        for (size_t j = 0; j < model.part_b.size(); ++j) {
            if (rays_meet(model.u[i], model.v[i], model.r[j], model.s[j])) {
                arcs.emplace_back(model.part_a[i], model.part_b[j]);
            }
        }
    }
    return BipartiteDigraph(model.part_a, model.part_b, arcs);
}

RayModel rays_from_signed(const BipartiteDigraph& h, const SignedIntervalModel& model) {
    if (model.n() != h.n()) {
        throw InputError("signed-interval model does not cover the bipartite digraph's vertices");
    }
    for (int a : h.part_a()) {
        for (int b : h.part_b()) {
            bool realized = model.x[a] <= model.z[b] && model.x[b] <= model.y[a];
            if (realized != h.has_arc(a, b)) {
                throw InputError("model does not realize the digraph at pair (" +
                                 std::to_string(a) + ", " + std::to_string(b) + ")");
            }
        }
    }
    RayModel rays;
    rays.part_a = h.part_a();
    rays.part_b = h.part_b();
    for (int a : rays.part_a) {
        rays.u.push_back(model.y[a]);
        rays.v.push_back(model.x[a]);
    }
    for (int b : rays.part_b) {
        rays.r.push_back(model.x[b]);
        rays.s.push_back(model.z[b]);
    }
    // The meet predicate tests r <= u and v <= s, so r and v take the tie wins.
    reindex_axis(rays.r, rays.u);
    reindex_axis(rays.v, rays.s);
    if (!(realize_rays(rays) == h)) {
        throw InternalError("ray construction does not realize its bipartite digraph");
    }
    return rays;
}

VertexOrdering min_ordering_from_rays(const RayModel& model) {
    check_ray_sizes(model);
    {
        std::vector<Rat> xs = model.u;
        xs.insert(xs.end(), model.r.begin(), model.r.end());
        std::vector<Rat> ys = model.v;
        ys.insert(ys.end(), model.s.begin(), model.s.end());
        if (!all_distinct(xs) || !all_distinct(ys)) {
            throw InputError("ray model is not normalized: coordinate ties");
        }
    }
    std::vector<size_t> a_idx(model.part_a.size()), b_idx(model.part_b.size());
    std::iota(a_idx.begin(), a_idx.end(), size_t{0});
    std::iota(b_idx.begin(), b_idx.end(), size_t{0});
    std::sort(a_idx.begin(), a_idx.end(), [&](size_t i, size_t j) { return model.v[i] < model.v[j]; });
    std::sort(b_idx.begin(), b_idx.end(), [&](size_t i, size_t j) { return model.r[i] < model.r[j]; });
    std::vector<int> order;
    for (size_t i : a_idx) order.push_back(model.part_a[i]);
    for (size_t j : b_idx) order.push_back(model.part_b[j]);
    VertexOrdering ord = VertexOrdering::of_vertices(order);
    if (!is_min_ordering(realize_rays(model).to_digraph(), ord)) {
        throw InternalError("ray ordering fails min ordering verification");
    }
    return ord;
}

}  // namespace minorder
