#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "minorder/digraph.hpp"
#include "minorder/errors.hpp"

namespace minorder {

/// A linear order on the vertices of a digraph, with a sentinel alpha
/// prepended at position 0. Vertices occupy positions 1..n, so every "last
/// neighbor" comparison is a plain position comparison and "no neighbor"
/// uniformly means position 0.
class VertexOrdering {
  public:
    static constexpr int kAlphaPos = 0;

    /// `order[i]` is the vertex at position i+1. Throws InputError unless
    /// `order` is a permutation of 0..n-1.
    static VertexOrdering of_vertices(std::vector<int> order);

    int n() const { return static_cast<int>(order_.size()); }
    int position(int v) const { return pos_[v]; }           // 1..n
    int vertex_at(int position) const { return order_[position - 1]; }
    const std::vector<int>& order() const { return order_; } // vertices by position

    bool operator==(const VertexOrdering& other) const { return order_ == other.order_; }

  private:
    std::vector<int> order_;
    std::vector<int> pos_;
};

/// Witness that an ordering is not a min ordering: arcs ab and a'b' with
/// a < a' and b' < b, yet ab' missing.
struct MinOrderViolation {
    int a;
    int b;
    int a_prime;
    int b_prime;

    bool operator==(const MinOrderViolation& other) const = default;
};

struct InvalidOrderingError : InputError {
    InvalidOrderingError(const std::string& msg, MinOrderViolation v)
        : InputError(msg), violation(v) {}
    MinOrderViolation violation;
};

/// Positions of the <-last out-neighbor O(v) and in-neighbor I(v) of each
/// vertex; 0 (alpha) when the vertex has none.
struct NeighborExtrema {
    std::vector<int> out_pos;
    std::vector<int> in_pos;
};

/// Checks the min ordering definition directly. Returns the first violation
/// in lexicographic (pos(a), pos(a'), pos(b'), pos(b)) order, or nullopt when
/// the ordering is a min ordering of h.
std::optional<MinOrderViolation> verify_min_ordering(const Digraph& h, const VertexOrdering& ord);

bool is_min_ordering(const Digraph& h, const VertexOrdering& ord);

NeighborExtrema extrema(const Digraph& h, const VertexOrdering& ord);

/// Checks the extrema characterization: ab in E iff a <= I(b) and b <= O(a).
/// Returns the first (pos(a), pos(b)) pair where the biconditional fails.
/// Agrees with verify_min_ordering on every input.
std::optional<std::pair<int, int>> verify_via_extrema(const Digraph& h, const VertexOrdering& ord);

/// Backtracking search with incremental violation pruning: a partial prefix is
/// extended only while the placed vertices contain no violation. Returns the
/// lexicographically least min ordering, re-verified before return, or nullopt
/// after exhausting the tree. Practical up to n of about 10.
std::optional<VertexOrdering> find_min_ordering(const Digraph& h);

/// Every min ordering of h, in lexicographic order, each certified.
std::vector<VertexOrdering> enumerate_min_orderings(const Digraph& h);

}  // namespace minorder
