#include "minorder/homomorphism.hpp"

#include <algorithm>
#include <string>

namespace minorder {

int ListAssignment::count(int u) const {
    return static_cast<int>(std::count(allowed[u].begin(), allowed[u].end(), true));
}

bool ListAssignment::any_empty() const {
    for (int u = 0; u < n_g(); ++u) {
        if (count(u) == 0) return true;
    }
    return false;
}

namespace {

void check_lists(const Digraph& g, const Digraph& h, const ListAssignment& lists) {
    if (lists.n_g() != g.n()) {
        throw InputError("list assignment does not cover V(G)");
    }
    for (const auto& row : lists.allowed) {
        if (static_cast<int>(row.size()) != h.n()) {
            throw InputError("list assignment rows must range over V(H)");
        }
    }
}

}  // namespace

ListAssignment arc_consistency(const Digraph& g, const Digraph& h, ListAssignment lists) {
    check_lists(g, h, lists);
    const auto arcs = g.arcs();
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto [u, v] : arcs) {
            if (u == v) {
                // a loop constrains one variable: the image itself needs a loop
                for (int a = 0; a < h.n(); ++a) {
                    if (lists.allowed[u][a] && !h.has_arc(a, a)) {
                        lists.allowed[u][a] = false;
                        changed = true;
                    }
                }
                continue;
            }
            for (int a = 0; a < h.n(); ++a) {
                if (!lists.allowed[u][a]) continue;
                bool supported = false;
                for (int b = 0; b < h.n() && !supported; ++b) {
                    supported = lists.allowed[v][b] && h.has_arc(a, b);
                }
                if (!supported) {
                    lists.allowed[u][a] = false;
                    changed = true;
                }
            }
            for (int b = 0; b < h.n(); ++b) {
                if (!lists.allowed[v][b]) continue;
                bool supported = false;
                for (int a = 0; a < h.n() && !supported; ++a) {
                    supported = lists.allowed[u][a] && h.has_arc(a, b);
                }
                if (!supported) {
                    lists.allowed[v][b] = false;
                    changed = true;
                }
            }
        }
    }
    return lists;
}

bool is_list_homomorphism(const Digraph& g, const Digraph& h, const std::vector<int>& f,
                          const ListAssignment& lists) {
    if (static_cast<int>(f.size()) != g.n()) return false;
    for (int u = 0; u < g.n(); ++u) {
        if (f[u] < 0 || f[u] >= h.n() || !lists.at(u, f[u])) return false;
    }
    for (auto [u, v] : g.arcs()) {
        if (!h.has_arc(f[u], f[v])) return false;
    }
    return true;
}

std::optional<std::vector<int>> solve_list_hom(const Digraph& g, const Digraph& h,
                                               const VertexOrdering& ord,
                                               const ListAssignment& lists) {
    if (auto violation = verify_min_ordering(h, ord)) {
        throw InvalidOrderingError("template ordering is not a min ordering", *violation);
    }
    ListAssignment reduced = arc_consistency(g, h, lists);
    if (reduced.any_empty()) return std::nullopt;
    std::vector<int> f(g.n());
    for (int u = 0; u < g.n(); ++u) {
        int best = -1;
        for (int a = 0; a < h.n(); ++a) {
            if (reduced.allowed[u][a] && (best == -1 || ord.position(a) < ord.position(best))) {
                best = a;
            }
        }
        f[u] = best;
    }
    if (!is_list_homomorphism(g, h, f, lists)) {
        throw InternalError("minimum selection from arc-consistent lists failed verification");
    }
    return f;
}

std::optional<std::vector<int>> brute_force_hom(const Digraph& g, const Digraph& h,
                                                const ListAssignment& lists, uint64_t budget) {
    check_lists(g, h, lists);
    uint64_t work = 1;
    for (int u = 0; u < g.n(); ++u) {
        work *= static_cast<uint64_t>(h.n());
        if (work > budget) {
            throw InputError("brute force budget exceeded: |V(H)|^|V(G)| > " +
                             std::to_string(budget));
        }
    }
    std::vector<int> f(g.n(), -1);
    // Ascending image choices with prefix pruning still visit assignments in
    // lexicographic order, so the first hit is the least solution.
    auto consistent_prefix = [&](int placed) {
        int u = placed - 1;
        for (int w = 0; w < placed; ++w) {
            if (g.has_arc(u, w) && !h.has_arc(f[u], f[w])) return false;
            if (g.has_arc(w, u) && !h.has_arc(f[w], f[u])) return false;
        }
        return true;
    };
    auto search = [&](auto&& self, int u) -> bool {
        if (u == g.n()) return true;
        for (int a = 0; a < h.n(); ++a) {
            if (!lists.at(u, a)) continue;
            f[u] = a;
            if (consistent_prefix(u + 1) && self(self, u + 1)) return true;
        }
        f[u] = -1;
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    return f;
}

}  // namespace minorder
