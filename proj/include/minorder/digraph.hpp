#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "minorder/errors.hpp"

namespace minorder {

/// Directed graph on vertices 0..n-1, loops allowed. Adjacency is a dense bit
/// matrix: instances stay small (the recognition oracles are exponential) and
/// pairwise scans dominate everything. Immutable after construction.
class Digraph {
  public:
    Digraph() = default;
    explicit Digraph(int n) : n_(n), adj_(static_cast<size_t>(n) * static_cast<size_t>(n), false) {}

    /// Builds from an arc list, deduplicating. Out-of-range endpoints are an
    /// input error naming the offending pair.
    Digraph(int n, const std::vector<std::pair<int, int>>& arc_pairs);

    static Digraph from_edge_list(int n, const std::vector<std::pair<int, int>>& arc_pairs) {
        return Digraph(n, arc_pairs);
    }

    int n() const { return n_; }
    bool has_arc(int u, int v) const { return adj_[index(u, v)]; }
    int arc_count() const;

    /// All arcs in lexicographic (u, v) order.
    std::vector<std::pair<int, int>> arcs() const;

    bool is_reflexive() const;   // every vertex has a loop
    bool is_irreflexive() const; // no vertex has a loop
    bool is_symmetric() const;   // uv in E implies vu in E

    bool operator==(const Digraph& other) const = default;

  private:
    size_t index(int u, int v) const { return static_cast<size_t>(u) * n_ + v; }

    int n_ = 0;
    std::vector<bool> adj_;
};

/// Bipartite digraph: parts A and B partition 0..n-1 and every arc goes from
/// A to B. The canonical in-memory form of "a bipartite graph viewed as a
/// digraph".
class BipartiteDigraph {
  public:
    BipartiteDigraph(std::vector<int> part_a, std::vector<int> part_b,
                     std::vector<std::pair<int, int>> arc_pairs);

    const std::vector<int>& part_a() const { return part_a_; }
    const std::vector<int>& part_b() const { return part_b_; }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    int n() const { return static_cast<int>(part_a_.size() + part_b_.size()); }
    bool in_part_a(int v) const { return side_[v] == 0; }
    bool has_arc(int a, int b) const;

    /// The same object as a plain digraph (arcs A to B, no loops).
    Digraph to_digraph() const;

    bool operator==(const BipartiteDigraph& other) const = default;

  private:
    std::vector<int> part_a_, part_b_;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<int> side_;  // 0 = A, 1 = B
};

enum class DiagonalPolicy {
    preserve,   // loops copied as-is
    complement, // loops flipped along with everything else
};

Digraph symmetric_closure(const Digraph& h);
Digraph complement(const Digraph& h, DiagonalPolicy diagonal);

/// Induced subdigraph on the distinct vertices of `keep`; vertex i of the
/// result is the i-th smallest member of `keep`.
Digraph induced_subgraph(const Digraph& h, const std::vector<int>& keep);

/// Two-colors the underlying graph (lowest-index vertex of each component
/// goes to A) and orients every underlying edge from A to B. Symmetric arc
/// pairs are read as undirected edges; an A-bound arc without its reverse is
/// rejected. Throws NotBipartiteError with an odd-cycle witness, or
/// NotOneDirectionalError naming the offending arc.
BipartiteDigraph as_bipartite_digraph(const Digraph& h);

/// Exhaustive enumeration is refused above this bound.
inline constexpr int kMaxEnumerationN = 4;

/// Number of digraphs on n labeled vertices (2^(n^2)); n must be at most 7.
uint64_t digraph_count(int n);

/// The digraph whose row-major adjacency matrix, read as a binary string with
/// cell (0,0) most significant, equals `code`. Codes in increasing order give
/// the lexicographic adjacency-matrix order.
Digraph digraph_from_code(int n, uint64_t code);

/// Calls `fn` once per digraph on n labeled vertices, in lexicographic
/// adjacency-matrix order. Refuses n > kMaxEnumerationN.
void for_each_digraph(int n, const std::function<void(const Digraph&)>& fn);

}  // namespace minorder
