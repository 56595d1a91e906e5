#include "minorder/digraph.hpp"

#include <algorithm>
#include <string>

namespace minorder {

namespace {

std::string pair_text(int u, int v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Digraph::Digraph(int n, const std::vector<std::pair<int, int>>& arc_pairs) : Digraph(n) {
    if (n < 0) {
        throw InputError("vertex count must be non-negative");
    }
    for (auto [u, v] : arc_pairs) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw InputError("arc " + pair_text(u, v) + " out of range for n = " + std::to_string(n));
        }
        adj_[index(u, v)] = true;
    }
}

int Digraph::arc_count() const {
    return static_cast<int>(std::count(adj_.begin(), adj_.end(), true));
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        for (int v = 0; v < n_; ++v) {
            if (has_arc(u, v)) out.emplace_back(u, v);
        }
    }
    return out;
}

bool Digraph::is_reflexive() const {
    for (int v = 0; v < n_; ++v) {
        if (!has_arc(v, v)) return false;
    }
    return true;
}

bool Digraph::is_irreflexive() const {
    for (int v = 0; v < n_; ++v) {
        if (has_arc(v, v)) return false;
    }
    return true;
}

bool Digraph::is_symmetric() const {
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (has_arc(u, v) != has_arc(v, u)) return false;
        }
    }
    return true;
}

BipartiteDigraph::BipartiteDigraph(std::vector<int> part_a, std::vector<int> part_b,
                                   std::vector<std::pair<int, int>> arc_pairs)
    : part_a_(std::move(part_a)), part_b_(std::move(part_b)), arcs_(std::move(arc_pairs)) {
    const int total = n();
    side_.assign(total, -1);
    for (int a : part_a_) {
        if (a < 0 || a >= total || side_[a] != -1) {
            throw InputError("parts must partition 0..n-1");
        }
        side_[a] = 0;
    }
    for (int b : part_b_) {
        if (b < 0 || b >= total || side_[b] != -1) {
            throw InputError("parts must partition 0..n-1");
        }
        side_[b] = 1;
    }
    std::sort(part_a_.begin(), part_a_.end());
    std::sort(part_b_.begin(), part_b_.end());
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
    for (auto [a, b] : arcs_) {
        if (a < 0 || a >= total || b < 0 || b >= total || side_[a] != 0 || side_[b] != 1) {
            throw InputError("bipartite arc " + pair_text(a, b) + " does not go from A to B");
        }
    }
}

bool BipartiteDigraph::has_arc(int a, int b) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), std::make_pair(a, b));
}

Digraph BipartiteDigraph::to_digraph() const {
    return Digraph(n(), arcs_);
}

Digraph symmetric_closure(const Digraph& h) {
    std::vector<std::pair<int, int>> out = h.arcs();
    for (auto [u, v] : h.arcs()) out.emplace_back(v, u);
    return Digraph(h.n(), out);
}

Digraph complement(const Digraph& h, DiagonalPolicy diagonal) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < h.n(); ++u) {
        for (int v = 0; v < h.n(); ++v) {
            bool keep = u == v && diagonal == DiagonalPolicy::preserve ? h.has_arc(u, v)
                                                                       : !h.has_arc(u, v);
            if (keep) out.emplace_back(u, v);
        }
    }
    return Digraph(h.n(), out);
}

Digraph induced_subgraph(const Digraph& h, const std::vector<int>& keep) {
    std::vector<int> verts = keep;
    std::sort(verts.begin(), verts.end());
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) {
        throw InputError("induced_subgraph: duplicate vertex in selection");
    }
    for (int v : verts) {
        if (v < 0 || v >= h.n()) {
            throw InputError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
        }
    }
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < verts.size(); ++i) {
        for (size_t j = 0; j < verts.size(); ++j) {
            if (h.has_arc(verts[i], verts[j])) {
                out.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return Digraph(static_cast<int>(verts.size()), out);
}

namespace {

std::vector<int> odd_cycle_witness(const std::vector<int>& parent, int u, int v) {
    // Climb both BFS chains to the meeting point; the edge uv closes the cycle.
    std::vector<int> chain_u{u}, chain_v{v};
    for (int w = u; parent[w] != -1; w = parent[w]) chain_u.push_back(parent[w]);
    for (int w = v; parent[w] != -1; w = parent[w]) chain_v.push_back(parent[w]);
    size_t iu = chain_u.size(), iv = chain_v.size();
    while (iu > 0 && iv > 0 && chain_u[iu - 1] == chain_v[iv - 1]) {
        --iu;
        --iv;
    }
    // chain_u[iu] is the lowest common ancestor; walk down to u, cross the
    // edge to v, and climb back.
    std::vector<int> cycle(chain_u.rend() - static_cast<long>(iu + 1), chain_u.rend());
    cycle.insert(cycle.end(), chain_v.begin(), chain_v.begin() + static_cast<long>(iv));
    return cycle;
}

}  // namespace

BipartiteDigraph as_bipartite_digraph(const Digraph& h) {
    const int n = h.n();
    for (int v = 0; v < n; ++v) {
        if (h.has_arc(v, v)) {
            throw NotBipartiteError("loop at vertex " + std::to_string(v), {v});
        }
    }
    auto adjacent = [&](int u, int v) { return h.has_arc(u, v) || h.has_arc(v, u); };
    std::vector<int> color(n, -1), parent(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::vector<int> queue{root};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int v = 0; v < n; ++v) {
                if (v == u || !adjacent(u, v)) continue;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    throw NotBipartiteError("underlying graph is not bipartite",
                                            odd_cycle_witness(parent, u, v));
                }
            }
        }
    }
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : h.arcs()) {
        if (color[u] == 0) {
            arcs.emplace_back(u, v);
        } else if (!h.has_arc(v, u)) {
            throw NotOneDirectionalError(
                "arc " + pair_text(u, v) + " runs from part B to part A", u, v);
        }
        // B-to-A arcs with a symmetric twin are the same undirected edge and
        // are emitted once, from the A side.
    }
    std::vector<int> part_a, part_b;
    for (int v = 0; v < n; ++v) (color[v] == 0 ? part_a : part_b).push_back(v);
    return BipartiteDigraph(std::move(part_a), std::move(part_b), std::move(arcs));
}

uint64_t digraph_count(int n) {
    if (n < 0 || n > 7) {
        throw InputError("digraph_count supports 0 <= n <= 7");
    }
    return uint64_t{1} << (n * n);
}

Digraph digraph_from_code(int n, uint64_t code) {
    if (n < 0 || n > 7) {
        throw InputError("digraph_from_code supports 0 <= n <= 7");
    }
    if (n > 0 && code >= digraph_count(n)) {
        throw InputError("digraph code out of range");
    }
    std::vector<std::pair<int, int>> arcs;
    const int cells = n * n;
    for (int cell = 0; cell < cells; ++cell) {
        if ((code >> (cells - 1 - cell)) & 1u) {
            arcs.emplace_back(cell / n, cell % n);
        }
    }
    return Digraph(n, arcs);
}

void for_each_digraph(int n, const std::function<void(const Digraph&)>& fn) {
    if (n < 0 || n > kMaxEnumerationN) {
        throw InputError("exhaustive digraph enumeration is capped at n = " +
                         std::to_string(kMaxEnumerationN));
    }
    const uint64_t total = digraph_count(n);
    for (uint64_t code = 0; code < total; ++code) {
        fn(digraph_from_code(n, code));
    }
}

}  // namespace minorder
