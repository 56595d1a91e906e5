#include "minorder/ordering.hpp"

#include <algorithm>
#include <string>

namespace minorder {

VertexOrdering VertexOrdering::of_vertices(std::vector<int> order) {
    const int n = static_cast<int>(order.size());
    std::vector<int> pos(n, 0);
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        if (v < 0 || v >= n || pos[v] != 0) {
            throw InputError("ordering is not a permutation of 0.." + std::to_string(n - 1));
        }
        pos[v] = i + 1;
    }
    VertexOrdering out;
    out.order_ = std::move(order);
    out.pos_ = std::move(pos);
    return out;
}

namespace {

void check_matching_sizes(const Digraph& h, const VertexOrdering& ord) {
    if (h.n() != ord.n()) {
        throw InputError("ordering covers " + std::to_string(ord.n()) + " vertices but the digraph has " +
                         std::to_string(h.n()));
    }
}

}  // namespace

std::optional<MinOrderViolation> verify_min_ordering(const Digraph& h, const VertexOrdering& ord) {
    check_matching_sizes(h, ord);
    const int n = h.n();
    for (int pa = 1; pa <= n; ++pa) {
        int a = ord.vertex_at(pa);
        for (int pa2 = pa + 1; pa2 <= n; ++pa2) {
            int a2 = ord.vertex_at(pa2);
            for (int pb2 = 1; pb2 <= n; ++pb2) {
                int b2 = ord.vertex_at(pb2);
                if (!h.has_arc(a2, b2) || h.has_arc(a, b2)) continue;
                for (int pb = pb2 + 1; pb <= n; ++pb) {
                    int b = ord.vertex_at(pb);
                    if (h.has_arc(a, b)) {
                        return MinOrderViolation{a, b, a2, b2};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

bool is_min_ordering(const Digraph& h, const VertexOrdering& ord) {
    return !verify_min_ordering(h, ord).has_value();
}

NeighborExtrema extrema(const Digraph& h, const VertexOrdering& ord) {
    check_matching_sizes(h, ord);
    const int n = h.n();
    NeighborExtrema out;
    out.out_pos.assign(n, VertexOrdering::kAlphaPos);
    out.in_pos.assign(n, VertexOrdering::kAlphaPos);
    for (int v = 0; v < n; ++v) {
        for (int p = n; p >= 1; --p) {
            if (h.has_arc(v, ord.vertex_at(p))) {
                out.out_pos[v] = p;
                break;
            }
        }
        for (int p = n; p >= 1; --p) {
            if (h.has_arc(ord.vertex_at(p), v)) {
                out.in_pos[v] = p;
                break;
            }
        }
    }
    return out;
}

std::optional<std::pair<int, int>> verify_via_extrema(const Digraph& h, const VertexOrdering& ord) {
    const NeighborExtrema ext = extrema(h, ord);
    const int n = h.n();
    for (int pa = 1; pa <= n; ++pa) {
        int a = ord.vertex_at(pa);
        for (int pb = 1; pb <= n; ++pb) {
            int b = ord.vertex_at(pb);
            bool characterized = pa <= ext.in_pos[b] && pb <= ext.out_pos[a];
            if (characterized != h.has_arc(a, b)) {
                return std::make_pair(a, b);
            }
        }
    }
    return std::nullopt;
}

namespace {

// Violations whose quadruple lies inside the placed prefix must involve the
// vertex just placed (it holds the largest position, so it can only play the
// roles of a' or b).
bool last_placed_creates_violation(const Digraph& h, const std::vector<int>& prefix) {
    const int k = static_cast<int>(prefix.size());
    const int v = prefix[k - 1];
    // v as b: arcs (a, v) and (a', b') with pos(a) < pos(a'), b' anywhere below v.
    for (int ia = 0; ia < k; ++ia) {
        int a = prefix[ia];
        if (!h.has_arc(a, v)) continue;
        for (int ia2 = ia + 1; ia2 < k; ++ia2) {
            int a2 = prefix[ia2];
            for (int ib2 = 0; ib2 + 1 < k; ++ib2) {
                int b2 = prefix[ib2];
                if (h.has_arc(a2, b2) && !h.has_arc(a, b2)) return true;
            }
        }
    }
    // v as a': arcs (a, b) and (v, b') with pos(b') < pos(b), a anywhere below v.
    for (int ib2 = 0; ib2 < k; ++ib2) {
        int b2 = prefix[ib2];
        if (!h.has_arc(v, b2)) continue;
        for (int ib = ib2 + 1; ib < k; ++ib) {
            int b = prefix[ib];
            for (int ia = 0; ia + 1 < k; ++ia) {
                int a = prefix[ia];
                if (h.has_arc(a, b) && !h.has_arc(a, b2)) return true;
            }
        }
    }
    return false;
}

// Depth-first over prefixes, candidates in ascending vertex order so complete
// orderings arrive lexicographically. `emit` returns false to stop the search.
bool search_orderings(const Digraph& h, std::vector<int>& prefix, std::vector<bool>& used,
                      const std::function<bool(const VertexOrdering&)>& emit) {
    const int n = h.n();
    if (static_cast<int>(prefix.size()) == n) {
        VertexOrdering ord = VertexOrdering::of_vertices(prefix);
        if (verify_min_ordering(h, ord)) {
            throw InternalError("pruned search produced an ordering that fails verification");
        }
        return emit(ord);
    }
    for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        used[v] = true;
        prefix.push_back(v);
        bool keep_going = true;
        if (!last_placed_creates_violation(h, prefix)) {
            keep_going = search_orderings(h, prefix, used, emit);
        }
        prefix.pop_back();
        used[v] = false;
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace

std::optional<VertexOrdering> find_min_ordering(const Digraph& h) {
    std::optional<VertexOrdering> found;
    std::vector<int> prefix;
    std::vector<bool> used(h.n(), false);
    search_orderings(h, prefix, used, [&](const VertexOrdering& ord) {
        found = ord;
        return false;
    });
    return found;
}

std::vector<VertexOrdering> enumerate_min_orderings(const Digraph& h) {
    std::vector<VertexOrdering> out;
    std::vector<int> prefix;
    std::vector<bool> used(h.n(), false);
    search_orderings(h, prefix, used, [&](const VertexOrdering& ord) {
        out.push_back(ord);
        return true;
    });
    return out;
}

}  // namespace minorder
