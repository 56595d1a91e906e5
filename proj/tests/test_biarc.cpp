#include "minorder/biarc.hpp"

#include "doctest.h"
#include "support.hpp"

using namespace minorder;
using testsupport::Rng;

namespace {

VertexOrdering ord_of(std::vector<int> order) { return VertexOrdering::of_vertices(std::move(order)); }

Rat r(long long p, long long q = 1) { return Rat(p, q); }

}  // namespace

TEST_SUITE_BEGIN("bi-arc");

TEST_CASE("arc membership and intersection") {
    CircularArc wrapping{r(9, 10), r(1, 10)};
    CHECK(wrapping.contains(r(0)));
    CHECK(wrapping.contains(r(95, 100)));
    CHECK_FALSE(wrapping.contains(r(1, 2)));

    CircularArc south{r(2, 5), r(3, 5)};
    CHECK(south.contains(r(1, 2)));
    CHECK_FALSE(south.contains(r(0)));

    CHECK_FALSE(arcs_intersect(wrapping, south));
    CHECK(arcs_intersect(CircularArc{r(11, 20), r(1, 10)}, south));
}

TEST_CASE("validation names the broken arc") {
    BiArcModel bad;
    bad.i_arcs = {{r(2, 5), r(3, 5)}};  // contains S, not N
    bad.j_arcs = {{r(2, 5), r(3, 5)}};
    CHECK_THROWS_AS(validate_biarc(bad), InputError);

    BiArcModel dup;
    dup.i_arcs = {{r(9, 10), r(1, 10)}, {r(9, 10), r(1, 10)}};
    dup.j_arcs = {{r(2, 5), r(11, 20)}, {r(2, 5), r(3, 5)}};
    CHECK_THROWS_AS(validate_biarc(dup), InputError);
}

TEST_CASE("consistency examples") {
    BiArcModel single;
    single.i_arcs = {{r(9, 10), r(1, 10)}};
    single.j_arcs = {{r(2, 5), r(3, 5)}};
    CHECK(is_consistent(single));

    BiArcModel two;
    two.i_arcs = {{r(9, 10), r(1, 10)}, {r(17, 20), r(3, 20)}};
    two.j_arcs = {{r(2, 5), r(11, 20)}, {r(2, 5), r(3, 5)}};
    CHECK(is_consistent(two));
    CHECK(ordering_generated(two).order() == std::vector<int>{0, 1});

    BiArcModel swapped = two;
    std::swap(swapped.j_arcs[0], swapped.j_arcs[1]);
    auto witness = consistency_witness(swapped);
    REQUIRE(witness.has_value());
    CHECK(*witness == std::pair<int, int>{0, 1});
    CHECK_THROWS_AS(ordering_generated(swapped), InputError);
    CHECK_THROWS_AS(realize_biarc(swapped), InputError);
}

TEST_CASE("ordering_generated sorts by I clockwise ends") {
    BiArcModel two;
    two.i_arcs = {{r(9, 10), r(1, 5)}, {r(17, 20), r(1, 10)}};
    two.j_arcs = {{r(2, 5), r(3, 5)}, {r(2, 5), r(11, 20)}};
    CHECK(ordering_generated(two).order() == std::vector<int>{1, 0});
}

TEST_CASE("biarc_from_min_ordering frozen single-arc geometry") {
    // n = 2, denominator 12; vertex 1 has no out-neighbor and vertex 0 no
    // in-neighbor, so both counterclockwise ends stop just past a pole.
    Digraph arc(2, {{0, 1}});
    BiArcModel m = biarc_from_min_ordering(arc, ord_of({0, 1}));
    CHECK(m.i_arcs[0] == CircularArc{r(17, 24), r(1, 12)});
    CHECK(m.i_arcs[1] == CircularArc{r(13, 24), r(1, 6)});
    CHECK(m.j_arcs[0] == CircularArc{r(1, 24), r(7, 12)});
    CHECK(m.j_arcs[1] == CircularArc{r(1, 8), r(2, 3)});
    CHECK(realize_biarc(m) == arc);
    CHECK(ordering_generated(m).order() == std::vector<int>{0, 1});
}

TEST_CASE("biarc_from_min_ordering point cases") {
    Digraph loop(1, {{0, 0}});
    BiArcModel lm = biarc_from_min_ordering(loop, ord_of({0}));
    CHECK_FALSE(arcs_intersect(lm.i_arcs[0], lm.j_arcs[0]));
    CHECK(realize_biarc(lm) == loop);

    // a loopless vertex must keep its I and J arcs intersecting
    Digraph lonely(1);
    BiArcModel nm = biarc_from_min_ordering(lonely, ord_of({0}));
    CHECK(arcs_intersect(nm.i_arcs[0], nm.j_arcs[0]));
    CHECK(realize_biarc(nm) == lonely);

    Digraph p3 = testsupport::reflexive_path(3);
    CHECK(realize_biarc(biarc_from_min_ordering(p3, ord_of({0, 1, 2}))) == p3);

    CHECK_THROWS_AS(biarc_from_min_ordering(Digraph(2, {{0, 1}, {1, 0}}), ord_of({0, 1})),
                    InvalidOrderingError);
}

TEST_CASE("round trip through bi-arc models") {
    Rng rng(211);
    int checked = 0;
    while (checked < 100) {
        Digraph h = testsupport::random_digraph(rng, 1 + rng.below(5));
        auto ord = find_min_ordering(h);
        if (!ord.has_value()) continue;
        ++checked;
        BiArcModel m = biarc_from_min_ordering(h, *ord);
        CHECK(realize_biarc(m) == h);
        CHECK(ordering_generated(m) == *ord);
    }
}

TEST_CASE("generated ordering of a consistent model is a min ordering") {
    Rng rng(223);
    int checked = 0;
    while (checked < 60) {
        Digraph h = testsupport::random_digraph(rng, 1 + rng.below(5));
        auto ord = find_min_ordering(h);
        if (!ord.has_value()) continue;
        ++checked;
        BiArcModel m = biarc_from_min_ordering(h, *ord);
        VertexOrdering generated = ordering_generated(m);
        CHECK(is_min_ordering(realize_biarc(m), generated));
    }
}

TEST_CASE("generated ordering is a min ordering on arbitrary consistent models") {
    // random valid models, arc extents uncorrelated with any target digraph
    Rng rng(227);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + rng.below(5);
        long long d = 4LL * (n + 1);
        std::vector<int> rank(n);
        std::iota(rank.begin(), rank.end(), 0);
        for (int i = n - 1; i > 0; --i) std::swap(rank[i], rank[rng.below(i + 1)]);
        BiArcModel m;
        for (int v = 0; v < n; ++v) {
            Rat i_cw(1 + rank[v], d);
            Rat j_cw = Rat(1, 2) + i_cw;
            Rat i_ccw = rng.coin() ? Rat(0) : Rat(2 * (n + 1) + 1 + rng.below(2 * n + 1), d);
            Rat j_ccw(1 + rng.below(2 * (n + 1)), d);
            m.i_arcs.push_back({i_ccw, i_cw});
            m.j_arcs.push_back({j_ccw, j_cw});
        }
        REQUIRE(is_consistent(m));
        VertexOrdering ord = ordering_generated(m);
        CHECK(is_min_ordering(realize_biarc(m), ord));
    }
}

TEST_SUITE_END();
