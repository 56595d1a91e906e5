#pragma once

// Test-only helpers: deterministic generators, named graphs, and independent
// brute-force oracles. Everything here stays independent of the search and
// construction paths it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "minorder/digraph.hpp"
#include "minorder/ordering.hpp"

namespace testsupport {

using minorder::Digraph;
using minorder::VertexOrdering;

class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t bits() { return eng_(); }
    // Uniform-ish in [0, bound); bias is irrelevant at test scale and this
    // stays reproducible across standard libraries.
    int below(int bound) { return static_cast<int>(eng_() % static_cast<uint64_t>(bound)); }
    bool coin() { return (eng_() & 1u) != 0; }

  private:
    std::mt19937_64 eng_;
};

inline Digraph random_digraph(Rng& rng, int n) {
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            if (rng.coin()) arcs.emplace_back(u, v);
        }
    }
    return Digraph(n, arcs);
}

inline Digraph random_symmetric_digraph(Rng& rng, int n) {
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < n; ++u) {
        if (rng.coin()) arcs.emplace_back(u, u);
        for (int v = u + 1; v < n; ++v) {
            if (rng.coin()) {
                arcs.emplace_back(u, v);
                arcs.emplace_back(v, u);
            }
        }
    }
    return Digraph(n, arcs);
}

inline Digraph random_reflexive_graph(Rng& rng, int n) {
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < n; ++v) arcs.emplace_back(v, v);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.coin()) {
                arcs.emplace_back(u, v);
                arcs.emplace_back(v, u);
            }
        }
    }
    return Digraph(n, arcs);
}

inline Digraph random_irreflexive_graph_with_edge(Rng& rng, int n) {
    while (true) {
        std::vector<std::pair<int, int>> arcs;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (rng.coin()) {
                    arcs.emplace_back(u, v);
                    arcs.emplace_back(v, u);
                }
            }
        }
        if (!arcs.empty()) return Digraph(n, arcs);
    }
}

// Undirected edge list with loops on every vertex.
inline Digraph reflexive_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::pair<int, int>> arcs;
    for (int v = 0; v < n; ++v) arcs.emplace_back(v, v);
    for (auto [u, v] : edges) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return Digraph(n, arcs);
}

inline Digraph irreflexive_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : edges) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return Digraph(n, arcs);
}

inline std::vector<std::pair<int, int>> path_edges(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return edges;
}

inline std::vector<std::pair<int, int>> cycle_edges(int n) {
    auto edges = path_edges(n);
    edges.emplace_back(n - 1, 0);
    return edges;
}

inline Digraph reflexive_path(int n) { return reflexive_graph(n, path_edges(n)); }
inline Digraph reflexive_cycle(int n) { return reflexive_graph(n, cycle_edges(n)); }

// Claw K_{1,3}: center 0, leaves 1..3.
inline std::vector<std::pair<int, int>> claw_edges() { return {{0, 1}, {0, 2}, {0, 3}}; }
inline Digraph reflexive_claw() { return reflexive_graph(4, claw_edges()); }

// Spider S(2,2,2): claw with every edge subdivided. Center 0, mids 1..3,
// tips 4..6 (mid i is adjacent to tip i+3).
inline Digraph reflexive_spider222() {
    return reflexive_graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}});
}

// 3-sun (trampoline, k = 3): triangle 0,1,2 plus independent u_i = 3,4,5 with
// u_i adjacent to v_i and v_{i+1}.
inline Digraph reflexive_sun3() {
    return reflexive_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 2}, {5, 0}});
}

inline std::vector<std::vector<int>> all_orderings(int n) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    return out;
}

// Independent oracle: min ordering existence by checking all n! orderings
// against the definitional verifier.
inline bool brute_force_has_min_ordering(const Digraph& h) {
    for (const auto& order : all_orderings(h.n())) {
        if (minorder::is_min_ordering(h, VertexOrdering::of_vertices(order))) return true;
    }
    return false;
}

}  // namespace testsupport
