#include "minorder/rays.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace minorder;
using testsupport::Rng;

namespace {

Rat r(long long p, long long q = 1) { return Rat(p, q); }

// Bipartite digraph from a bi-adjacency matrix: A = 0..k-1, B = k..k+l-1.
BipartiteDigraph from_biadjacency(const std::vector<std::vector<int>>& m) {
    int k = static_cast<int>(m.size());
    int l = k > 0 ? static_cast<int>(m[0].size()) : 0;
    std::vector<int> a(k), b(l);
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), k);
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < l; ++j) {
            if (m[i][j]) arcs.emplace_back(i, k + j);
        }
    }
    return BipartiteDigraph(a, b, arcs);
}

}  // namespace

TEST_SUITE_BEGIN("ray-bipartite");

TEST_CASE("rays_meet predicate") {
    CHECK(rays_meet(r(5), r(0), r(1), r(3)));
    CHECK_FALSE(rays_meet(r(0), r(5), r(1), r(3)));
    // closed rays: touching counts
    CHECK(rays_meet(r(2), r(1), r(2), r(1)));
}

TEST_CASE("realize_rays point cases") {
    RayModel meet{{0}, {1}, {r(5)}, {r(0)}, {r(1)}, {r(3)}};
    CHECK(realize_rays(meet).arcs() == std::vector<std::pair<int, int>>{{0, 1}});

    RayModel miss{{0}, {1}, {r(0)}, {r(5)}, {r(1)}, {r(3)}};
    CHECK(realize_rays(miss).arcs().empty());
}

TEST_CASE("rays_from_signed single arc") {
    BipartiteDigraph h({0}, {1}, {{0, 1}});
    SignedIntervalModel m{{r(1), r(2)}, {r(2), r(0)}, {r(0), r(1)}};
    RayModel rays = rays_from_signed(h, m);
    CHECK(realize_rays(rays) == h);
    // raw coordinates (2,1) for both origins get pulled apart by the
    // normalization, with the B ray keeping the smaller x and the A ray the
    // smaller y
    CHECK(rays.r == std::vector<Rat>{r(0)});
    CHECK(rays.u == std::vector<Rat>{r(1)});
    CHECK(rays.v == std::vector<Rat>{r(0)});
    CHECK(rays.s == std::vector<Rat>{r(1)});
}

TEST_CASE("rays_from_signed empty digraph and empty part") {
    BipartiteDigraph empty({0}, {1}, {});
    SignedIntervalModel m{{r(2), r(1)}, {r(0), r(0)}, {r(0), r(1)}};
    RayModel rays = rays_from_signed(empty, m);
    CHECK(realize_rays(rays).arcs().empty());

    BipartiteDigraph no_a({}, {0}, {});
    SignedIntervalModel single{{r(1)}, {r(1)}, {r(1)}};
    RayModel lonely = rays_from_signed(no_a, single);
    CHECK(lonely.part_a.empty());
    CHECK(realize_rays(lonely) == no_a);
}

TEST_CASE("rays_from_signed rejects a mismatched model") {
    BipartiteDigraph h({0}, {1}, {{0, 1}});
    SignedIntervalModel wrong{{r(5), r(1)}, {r(0), r(0)}, {r(0), r(0)}};
    CHECK_THROWS_AS(rays_from_signed(h, wrong), InputError);
}

TEST_CASE("min_ordering_from_rays sorts A by v and B by r") {
    RayModel m{{0, 1}, {2}, {r(10), r(20)}, {r(3), r(1)}, {r(5)}, {r(7)}};
    CHECK(min_ordering_from_rays(m).order() == std::vector<int>{1, 0, 2});

    RayModel tied{{0, 1}, {2}, {r(10), r(10)}, {r(3), r(1)}, {r(5)}, {r(7)}};
    CHECK_THROWS_AS(min_ordering_from_rays(tied), InputError);
}

TEST_CASE("full round trip on bipartite digraphs") {
    Rng rng(307);
    int checked = 0;
    while (checked < 120) {
        int k = 1 + rng.below(3), l = 1 + rng.below(3);
        std::vector<std::vector<int>> cells(k, std::vector<int>(l));
        for (auto& row : cells) {
            for (auto& cell : row) cell = rng.coin() ? 1 : 0;
        }
        BipartiteDigraph h = from_biadjacency(cells);
        auto ord = find_min_ordering(h.to_digraph());
        if (!ord.has_value()) continue;
        ++checked;
        SignedIntervalModel sm = signed_from_min_ordering(h.to_digraph(), *ord);
        RayModel rays = rays_from_signed(h, sm);
        CHECK(realize_rays(rays) == h);
        VertexOrdering extracted = min_ordering_from_rays(rays);
        CHECK(is_min_ordering(h.to_digraph(), extracted));
    }
}

TEST_CASE("min ordering crossing property on random normalized models") {
    Rng rng(311);
    for (int trial = 0; trial < 150; ++trial) {
        int k = 1 + rng.below(3), l = 1 + rng.below(3);
        // random distinct coordinates via shuffled ranks
        RayModel m;
        m.part_a.resize(k);
        std::iota(m.part_a.begin(), m.part_a.end(), 0);
        m.part_b.resize(l);
        std::iota(m.part_b.begin(), m.part_b.end(), k);
        std::vector<int> xs(k + l), ys(k + l);
        std::iota(xs.begin(), xs.end(), 0);
        std::iota(ys.begin(), ys.end(), 0);
        for (int i = k + l - 1; i > 0; --i) {
            std::swap(xs[i], xs[rng.below(i + 1)]);
            std::swap(ys[i], ys[rng.below(i + 1)]);
        }
        for (int i = 0; i < k; ++i) {
            m.u.push_back(r(xs[i]));
            m.v.push_back(r(ys[i]));
        }
        for (int j = 0; j < l; ++j) {
            m.r.push_back(r(xs[k + j]));
            m.s.push_back(r(ys[k + j]));
        }
        // the extracted ordering must verify; the constructor re-checks too
        VertexOrdering ord = min_ordering_from_rays(m);
        CHECK(is_min_ordering(realize_rays(m).to_digraph(), ord));
    }
}

TEST_SUITE_END();
