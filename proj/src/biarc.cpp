#include "minorder/biarc.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace minorder {

namespace {

const Rat kNorth(0);
const Rat kSouth(1, 2);

void check_param(const Rat& t, const char* what, int v) {
    if (t < Rat(0) || t >= Rat(1)) {
        throw InputError(std::string(what) + " of vertex " + std::to_string(v) +
                         " lies outside [0,1)");
    }
}

}  // namespace

bool arcs_intersect(const CircularArc& a, const CircularArc& b) {
    return a.contains(b.ccw) || a.contains(b.cw) || b.contains(a.ccw) || b.contains(a.cw);
}

void validate_biarc(const BiArcModel& model) {
    if (model.j_arcs.size() != model.i_arcs.size()) {
        throw InputError("bi-arc model has mismatched arc families");
    }
    const int n = model.n();
    for (int v = 0; v < n; ++v) {
        const CircularArc& iv = model.i_arcs[v];
        const CircularArc& jv = model.j_arcs[v];
        check_param(iv.ccw, "I-arc ccw end", v);
        check_param(iv.cw, "I-arc cw end", v);
        check_param(jv.ccw, "J-arc ccw end", v);
        check_param(jv.cw, "J-arc cw end", v);
        if (!iv.contains(kNorth) || iv.contains(kSouth)) {
            throw InputError("I-arc of vertex " + std::to_string(v) +
                             " must contain the north pole and avoid the south pole");
        }
        if (!jv.contains(kSouth) || jv.contains(kNorth)) {
            throw InputError("J-arc of vertex " + std::to_string(v) +
                             " must contain the south pole and avoid the north pole");
        }
    }
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (model.i_arcs[u].cw == model.i_arcs[v].cw) {
                throw InputError("I-arcs of vertices " + std::to_string(u) + " and " +
                                 std::to_string(v) + " share a clockwise end");
            }
            if (model.j_arcs[u].cw == model.j_arcs[v].cw) {
                throw InputError("J-arcs of vertices " + std::to_string(u) + " and " +
                                 std::to_string(v) + " share a clockwise end");
            }
        }
    }
}

namespace {

// Ranks of vertices under the clockwise order of the given family's cw ends.
// Both families' cw ends live on a half-circle that never wraps (I on the N
// side, J on the S side), so parameter order is clockwise order.
std::vector<int> cw_end_ranks(const std::vector<CircularArc>& arcs) {
    std::vector<int> order(arcs.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int u, int v) { return arcs[u].cw < arcs[v].cw; });
    std::vector<int> rank(arcs.size());
    for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
    return rank;
}

}  // namespace

std::optional<std::pair<int, int>> consistency_witness(const BiArcModel& model) {
    validate_biarc(model);
    std::vector<int> i_rank = cw_end_ranks(model.i_arcs);
    std::vector<int> j_rank = cw_end_ranks(model.j_arcs);
    for (int u = 0; u < model.n(); ++u) {
        for (int v = u + 1; v < model.n(); ++v) {
            if ((i_rank[u] < i_rank[v]) != (j_rank[u] < j_rank[v])) {
                return std::make_pair(u, v);
            }
        }
    }
    return std::nullopt;
}

bool is_consistent(const BiArcModel& model) { return !consistency_witness(model).has_value(); }

VertexOrdering ordering_generated(const BiArcModel& model) {
    if (auto witness = consistency_witness(model)) {
        throw InputError("bi-arc families are inconsistent at vertices " +
                         std::to_string(witness->first) + " and " + std::to_string(witness->second));
    }
    std::vector<int> order(model.n());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int u, int v) { return model.i_arcs[u].cw < model.i_arcs[v].cw; });
    return VertexOrdering::of_vertices(order);
}

Digraph realize_biarc(const BiArcModel& model) {
    if (auto witness = consistency_witness(model)) {
        throw InputError("bi-arc families are inconsistent at vertices " +
                         std::to_string(witness->first) + " and " + std::to_string(witness->second));
    }
    const int n = model.n();
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (!arcs_intersect(model.i_arcs[u], model.j_arcs[v])) {
                arcs.emplace_back(u, v);
            }
        }
    }
    return Digraph(n, arcs);
}

BiArcModel biarc_from_min_ordering(const Digraph& h, const VertexOrdering& ord) {
    if (auto violation = verify_min_ordering(h, ord)) {
        throw InvalidOrderingError("ordering is not a min ordering", *violation);
    }
    const NeighborExtrema ext = extrema(h, ord);
    const int n = h.n();
    const long long denom = 4LL * (n + 1);
    BiArcModel model;
    model.i_arcs.reserve(n);
    model.j_arcs.reserve(n);
    for (int v = 0; v < n; ++v) {
        Rat i_cw(ord.position(v), denom);
        Rat i_ccw = kSouth + Rat(2 * ext.out_pos[v] + 1, 2 * denom);
        Rat j_cw = kSouth + Rat(ord.position(v), denom);
        Rat j_ccw(2 * ext.in_pos[v] + 1, 2 * denom);
        model.i_arcs.push_back({i_ccw, i_cw});
        model.j_arcs.push_back({j_ccw, j_cw});
    }
    if (!is_consistent(model)) {
        throw InternalError("bi-arc construction produced inconsistent families");
    }
    if (realize_biarc(model) != h) {
        throw InternalError("bi-arc construction does not realize its digraph");
    }
    if (!(ordering_generated(model) == ord)) {
        throw InternalError("bi-arc construction does not generate its ordering");
    }
    return model;
}

}  // namespace minorder
