#pragma once

#include <optional>
#include <set>
#include <vector>

#include "minorder/digraph.hpp"

namespace minorder {

/// Three pairwise non-adjacent vertices such that any two are joined by a
/// path avoiding the closed neighborhood of the third. path_xy connects x and
/// y while dodging N[z], and so on by rotation.
struct AsteroidalTriple {
    int x, y, z;
    std::vector<int> path_xy;
    std::vector<int> path_xz;
    std::vector<int> path_yz;
};

/// Two synchronized walk pairs: P runs u to v and Q runs v to u with the i-th
/// vertex of P non-adjacent to the (i+1)-st of Q; R and S do the same from
/// the other side. Walk-length equality is inherent: the walks advance in
/// lockstep.
struct InvertiblePairWitness {
    int u, v;
    std::vector<int> walk_p;  // u -> v
    std::vector<int> walk_q;  // v -> u
    std::vector<int> walk_r;  // v -> u
    std::vector<int> walk_s;  // u -> v
};

struct LekkerkerkerBolandResult {
    bool interval = false;
    std::optional<std::vector<int>> cycle;           // induced C4 or C5
    std::optional<AsteroidalTriple> triple;
};

/// All operations below require a reflexive symmetric input and throw
/// InputError otherwise.

std::optional<AsteroidalTriple> find_asteroidal_triple(const Digraph& h);

/// An induced cycle (off-diagonal adjacency exactly the cycle) whose length
/// lies in `lengths`, or nullopt. Symmetric input.
std::optional<std::vector<int>> find_induced_cycle(const Digraph& h, const std::set<int>& lengths);

/// Interval exactly when there is no induced C4/C5 and no asteroidal triple.
LekkerkerkerBolandResult lekkerkerker_boland(const Digraph& h);

/// Searches the pair digraph on ordered vertex pairs with steps
/// (p,q) -> (p',q') allowed when pp' and qq' are edges and p is non-adjacent
/// to q'. A pair (u,v) is invertible when (u,v) reaches (v,u) and back.
std::optional<InvertiblePairWitness> find_invertible_pair(const Digraph& h);

bool validate_asteroidal_triple(const Digraph& h, const AsteroidalTriple& t);
bool validate_invertible_pair(const Digraph& h, const InvertiblePairWitness& w);

}  // namespace minorder
