#include "minorder/obstructions.hpp"

#include <algorithm>
#include <string>

namespace minorder {

namespace {

void require_reflexive_symmetric(const Digraph& h) {
    if (!h.is_reflexive()) {
        throw InputError("obstruction search requires a reflexive graph");
    }
    if (!h.is_symmetric()) {
        throw InputError("obstruction search requires a symmetric graph");
    }
}

// Shortest path from `from` to `to` avoiding `blocked`, by BFS with ascending
// neighbor order. Empty when none exists.
std::vector<int> bfs_path(const Digraph& h, int from, int to, const std::vector<bool>& blocked) {
    const int n = h.n();
    std::vector<int> parent(n, -2);
    parent[from] = -1;
    std::vector<int> queue{from};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        if (u == to) break;
        for (int w = 0; w < n; ++w) {
            if (w == u || blocked[w] || parent[w] != -2 || !h.has_arc(u, w)) continue;
            parent[w] = u;
            queue.push_back(w);
        }
    }
    if (parent[to] == -2) return {};
    std::vector<int> path;
    for (int w = to; w != -1; w = parent[w]) path.push_back(w);
    std::reverse(path.begin(), path.end());
    return path;
}

// Path between a and b avoiding the closed neighborhood of c.
std::vector<int> path_avoiding(const Digraph& h, int a, int b, int c) {
    std::vector<bool> blocked(h.n(), false);
    blocked[c] = true;
    for (int w = 0; w < h.n(); ++w) {
        if (w != c && h.has_arc(c, w)) blocked[w] = true;
    }
    return bfs_path(h, a, b, blocked);
}

}  // namespace

std::optional<AsteroidalTriple> find_asteroidal_triple(const Digraph& h) {
    require_reflexive_symmetric(h);
    const int n = h.n();
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            if (h.has_arc(x, y)) continue;
            for (int z = y + 1; z < n; ++z) {
                if (h.has_arc(x, z) || h.has_arc(y, z)) continue;
                std::vector<int> xy = path_avoiding(h, x, y, z);
                if (xy.empty()) continue;
                std::vector<int> xz = path_avoiding(h, x, z, y);
                if (xz.empty()) continue;
                std::vector<int> yz = path_avoiding(h, y, z, x);
                if (yz.empty()) continue;
                return AsteroidalTriple{x, y, z, std::move(xy), std::move(xz), std::move(yz)};
            }
        }
    }
    return std::nullopt;
}

namespace {

// Ordered DFS for an induced cycle of exactly `length`. The first cycle
// vertex is the smallest, and the orientation is fixed by requiring the
// second vertex to be smaller than the last.
bool extend_cycle(const Digraph& h, std::vector<int>& path, std::vector<bool>& used, int length) {
    const int n = h.n();
    const int have = static_cast<int>(path.size());
    if (have == length) {
        return h.has_arc(path.back(), path.front()) && path[1] < path.back();
    }
    for (int w = path.front() + 1; w < n; ++w) {
        if (used[w] || !h.has_arc(path.back(), w)) continue;
        bool chord = false;
        for (int i = 0; i + 1 < have; ++i) {
            if (h.has_arc(path[i], w) && !(i == 0 && have == length - 1)) {
                chord = true;
                break;
            }
        }
        // closing vertex may touch the front, nothing else
        if (have == length - 1 && !h.has_arc(w, path.front())) chord = true;
        if (chord) continue;
        path.push_back(w);
        used[w] = true;
        if (extend_cycle(h, path, used, length)) return true;
        used[w] = false;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_induced_cycle(const Digraph& h, const std::set<int>& lengths) {
    if (!h.is_symmetric()) {
        throw InputError("induced cycle search requires a symmetric graph");
    }
    const int n = h.n();
    for (int length : lengths) {
        if (length < 3 || length > n) continue;
        for (int start = 0; start < n; ++start) {
            std::vector<int> path{start};
            std::vector<bool> used(n, false);
            used[start] = true;
            if (extend_cycle(h, path, used, length)) return path;
        }
    }
    return std::nullopt;
}

LekkerkerkerBolandResult lekkerkerker_boland(const Digraph& h) {
    require_reflexive_symmetric(h);
    LekkerkerkerBolandResult out;
    out.cycle = find_induced_cycle(h, {4, 5});
    if (!out.cycle.has_value()) {
        out.triple = find_asteroidal_triple(h);
    }
    out.interval = !out.cycle.has_value() && !out.triple.has_value();
    return out;
}

namespace {

struct PairReach {
    std::vector<int> parent;  // indexed by p*n+q, -2 unvisited, -1 root
    bool visited(int state) const { return parent[state] != -2; }
};

// BFS over the synchronized pair digraph from (p0, q0).
PairReach pair_bfs(const Digraph& h, int p0, int q0) {
    const int n = h.n();
    PairReach reach{std::vector<int>(n * n, -2)};
    int root = p0 * n + q0;
    reach.parent[root] = -1;
    std::vector<int> queue{root};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int p = queue[qi] / n, q = queue[qi] % n;
        for (int p2 = 0; p2 < n; ++p2) {
            if (!h.has_arc(p, p2)) continue;
            for (int q2 = 0; q2 < n; ++q2) {
                if (!h.has_arc(q, q2)) continue;
                if (p == q2 || h.has_arc(p, q2)) continue;  // p must avoid the next q
                int state = p2 * n + q2;
                if (reach.visited(state)) continue;
                reach.parent[state] = queue[qi];
                queue.push_back(state);
            }
        }
    }
    return reach;
}

// The state chain from the root to `state`, as (first, second) walks.
std::pair<std::vector<int>, std::vector<int>> unwind(const PairReach& reach, int n, int state) {
    std::vector<int> firsts, seconds;
    for (int s = state; s != -1; s = reach.parent[s]) {
        firsts.push_back(s / n);
        seconds.push_back(s % n);
    }
    std::reverse(firsts.begin(), firsts.end());
    std::reverse(seconds.begin(), seconds.end());
    return {std::move(firsts), std::move(seconds)};
}

}  // namespace

std::optional<InvertiblePairWitness> find_invertible_pair(const Digraph& h) {
    require_reflexive_symmetric(h);
    const int n = h.n();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            PairReach forward = pair_bfs(h, u, v);
            if (!forward.visited(v * n + u)) continue;
            PairReach backward = pair_bfs(h, v, u);
            if (!backward.visited(u * n + v)) continue;
            InvertiblePairWitness w;
            w.u = u;
            w.v = v;
            auto [p, q] = unwind(forward, n, v * n + u);
            auto [r, s] = unwind(backward, n, u * n + v);
            w.walk_p = std::move(p);
            w.walk_q = std::move(q);
            w.walk_r = std::move(r);
            w.walk_s = std::move(s);
            if (!validate_invertible_pair(h, w)) {
                throw InternalError("pair digraph search produced an invalid witness");
            }
            return w;
        }
    }
    return std::nullopt;
}

bool validate_asteroidal_triple(const Digraph& h, const AsteroidalTriple& t) {
    auto distinct = [&](int a, int b) { return a != b && !h.has_arc(a, b); };
    if (!distinct(t.x, t.y) || !distinct(t.x, t.z) || !distinct(t.y, t.z)) return false;
    auto path_ok = [&](const std::vector<int>& path, int from, int to, int avoid) {
        if (path.empty() || path.front() != from || path.back() != to) return false;
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            if (!h.has_arc(path[i], path[i + 1])) return false;
        }
        for (int w : path) {
            if (w == avoid || h.has_arc(avoid, w)) return false;
        }
        return true;
    };
    return path_ok(t.path_xy, t.x, t.y, t.z) && path_ok(t.path_xz, t.x, t.z, t.y) &&
           path_ok(t.path_yz, t.y, t.z, t.x);
}

bool validate_invertible_pair(const Digraph& h, const InvertiblePairWitness& w) {
    auto synced = [&](const std::vector<int>& first, const std::vector<int>& second, int from,
                      int to) {
        if (first.size() != second.size() || first.size() < 2) return false;
        if (first.front() != from || first.back() != to) return false;
        if (second.front() != to || second.back() != from) return false;
        for (size_t i = 0; i + 1 < first.size(); ++i) {
            if (!h.has_arc(first[i], first[i + 1])) return false;
            if (!h.has_arc(second[i], second[i + 1])) return false;
            if (first[i] == second[i + 1] || h.has_arc(first[i], second[i + 1])) return false;
        }
        return true;
    };
    return w.u != w.v && synced(w.walk_p, w.walk_q, w.u, w.v) && synced(w.walk_r, w.walk_s, w.v, w.u);
}

}  // namespace minorder
