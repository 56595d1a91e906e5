#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "minorder/digraph.hpp"
#include "minorder/ordering.hpp"

namespace minorder {

/// Per-vertex lists of allowed images: allowed[u][a] says vertex u of G may
/// map to vertex a of H. An empty list is a legitimate state and signals
/// infeasibility for that vertex.
struct ListAssignment {
    std::vector<std::vector<bool>> allowed;

    static ListAssignment full(int n_g, int n_h) {
        return ListAssignment{std::vector<std::vector<bool>>(n_g, std::vector<bool>(n_h, true))};
    }

    int n_g() const { return static_cast<int>(allowed.size()); }
    bool at(int u, int a) const { return allowed[u][a]; }
    int count(int u) const;
    bool any_empty() const;

    bool operator==(const ListAssignment&) const = default;
};

/// Greatest fixpoint of the support-pruning rule: a is dropped from L(u) when
/// some arc uv (or vu) of G has no surviving partner image in L(v). The
/// fixpoint is unique, so the processing order does not matter.
ListAssignment arc_consistency(const Digraph& g, const Digraph& h, ListAssignment lists);

/// True when f maps every arc of G to an arc of H and respects the lists.
bool is_list_homomorphism(const Digraph& g, const Digraph& h, const std::vector<int>& f,
                          const ListAssignment& lists);

/// Arc consistency, then f(u) = the <-least surviving image. The extracted
/// map is re-verified; with a valid min ordering of H the verification can
/// only fail through a construction bug, which raises InternalError.
std::optional<std::vector<int>> solve_list_hom(const Digraph& g, const Digraph& h,
                                               const VertexOrdering& ord,
                                               const ListAssignment& lists);

inline constexpr uint64_t kBruteForceBudget = 10000000;

/// Exhaustive oracle; refuses when |V(H)|^|V(G)| exceeds the budget. Returns
/// the lexicographically least solution.
std::optional<std::vector<int>> brute_force_hom(const Digraph& g, const Digraph& h,
                                                const ListAssignment& lists,
                                                uint64_t budget = kBruteForceBudget);

}  // namespace minorder
