#include "minorder/matrix.hpp"

#include <numeric>

#include "doctest.h"
#include "minorder/ordering.hpp"
#include "support.hpp"

using namespace minorder;
using testsupport::Rng;

namespace {

BinaryMatrix random_matrix(Rng& rng, int rows, int cols) {
    BinaryMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) m.set(i, j, rng.coin());
    }
    return m;
}

// Independent oracle: try every simultaneous permutation directly.
bool simultaneous_klfree_oracle(const BinaryMatrix& m) {
    std::vector<int> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (is_kl_free(permute(m, perm, perm))) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Independent oracle: try every row/column permutation pair directly.
bool independent_klfree_oracle(const BinaryMatrix& m) {
    std::vector<int> rows(m.rows());
    std::iota(rows.begin(), rows.end(), 0);
    do {
        std::vector<int> cols(m.cols());
        std::iota(cols.begin(), cols.end(), 0);
        do {
            if (is_kl_free(permute(m, rows, cols))) return true;
        } while (std::next_permutation(cols.begin(), cols.end()));
    } while (std::next_permutation(rows.begin(), rows.end()));
    return false;
}

// Bi-adjacency of the 6-cycle 0-3-1-4-2-5-0 (A = rows, B = cols).
BinaryMatrix c6_biadjacency() {
    return BinaryMatrix::from_strings({"101", "110", "011"});
}

}  // namespace

TEST_SUITE_BEGIN("matrix-patterns");

TEST_CASE("construction and round trips") {
    BinaryMatrix m = BinaryMatrix::from_strings({"01", "11"});
    CHECK(m.at(0, 1) == 1);
    CHECK(m.at(0, 0) == 0);
    CHECK(m.to_strings() == std::vector<std::string>{"01", "11"});
    CHECK_THROWS_AS(BinaryMatrix::from_strings({"01", "1"}), InputError);
    CHECK_THROWS_AS(BinaryMatrix::from_strings({"02"}), InputError);

    Digraph digon(2, {{0, 1}, {1, 0}});
    CHECK(BinaryMatrix::adjacency_of(digon) == pattern_matrix(Pattern::K));
    CHECK(BinaryMatrix::adjacency_of(digon).to_digraph() == digon);
    CHECK_THROWS_AS(BinaryMatrix(2, 3).to_digraph(), InputError);
}

TEST_CASE("find_pattern examples") {
    BinaryMatrix l = BinaryMatrix::from_strings({"01", "11"});
    auto loc = find_pattern(l, Pattern::L);
    REQUIRE(loc.has_value());
    CHECK(*loc == SubmatrixLoc{0, 1, 0, 1});

    BinaryMatrix ones = BinaryMatrix::from_strings({"11", "11"});
    CHECK_FALSE(find_pattern(ones, Pattern::K).has_value());

    CHECK(find_pattern(pattern_matrix(Pattern::K), Pattern::K).has_value());
}

TEST_CASE("is_kl_free examples") {
    CHECK(is_kl_free(pattern_matrix(Pattern::Identity)));
    CHECK_FALSE(is_kl_free(BinaryMatrix::from_strings({"01", "11"})));
    CHECK(is_kl_free(BinaryMatrix::adjacency_of(testsupport::reflexive_path(3))));
}

TEST_CASE("min_orderable examples") {
    CHECK_FALSE(min_orderable(BinaryMatrix::adjacency_of(testsupport::reflexive_cycle(4))).has_value());

    auto zeros = min_orderable(BinaryMatrix(3, 3));
    REQUIRE(zeros.has_value());
    CHECK(*zeros == std::vector<int>{0, 1, 2});

    BinaryMatrix claw = BinaryMatrix::adjacency_of(testsupport::reflexive_claw());
    auto perm = min_orderable(claw);
    REQUIRE(perm.has_value());
    CHECK(is_kl_free(permute(claw, *perm, *perm)));

    CHECK_THROWS_AS(min_orderable(BinaryMatrix(2, 3)), InputError);
}

TEST_CASE("augment block layout") {
    BinaryMatrix one = augment(BinaryMatrix::from_strings({"1"}));
    CHECK(one.to_strings() == std::vector<std::string>{"01", "00"});

    BinaryMatrix m = BinaryMatrix::from_strings({"101", "010"});
    BinaryMatrix plus = augment(m);
    CHECK(plus.rows() == 5);
    CHECK(plus.cols() == 5);
    CHECK(plus.to_strings() ==
          std::vector<std::string>{"00101", "00010", "00000", "00000", "00000"});
}

TEST_CASE("independent_kl_free examples") {
    auto id = independent_kl_free(BinaryMatrix::from_strings({"1"}));
    REQUIRE(id.has_value());
    CHECK(id->first == std::vector<int>{0});
    CHECK(id->second == std::vector<int>{0});

    auto swapped = independent_kl_free(pattern_matrix(Pattern::K));
    REQUIRE(swapped.has_value());
    CHECK(is_kl_free(permute(pattern_matrix(Pattern::K), swapped->first, swapped->second)));

    CHECK_FALSE(independent_kl_free(c6_biadjacency()).has_value());
}

TEST_CASE("independent route agrees with the direct search") {
    // exhaustive at 2x2 plus random rectangles
    for (uint64_t code = 0; code < 16; ++code) {
        BinaryMatrix m(2, 2);
        for (int cell = 0; cell < 4; ++cell) m.set(cell / 2, cell % 2, (code >> cell) & 1);
        CHECK(independent_kl_free(m).has_value() == independent_klfree_oracle(m));
    }
    Rng rng(401);
    for (int trial = 0; trial < 60; ++trial) {
        BinaryMatrix m = random_matrix(rng, 1 + rng.below(3), 1 + rng.below(3));
        CHECK(independent_kl_free(m).has_value() == independent_klfree_oracle(m));
        CHECK(independent_kl_free(m).has_value() == min_orderable(augment(m)).has_value());
    }
}

TEST_CASE("min_orderable agrees with the direct simultaneous search") {
    Rng rng(409);
    for (int trial = 0; trial < 80; ++trial) {
        int n = 1 + rng.below(4);
        BinaryMatrix m = random_matrix(rng, n, n);
        CHECK(min_orderable(m).has_value() == simultaneous_klfree_oracle(m));
    }
}

TEST_CASE("transform algebra on the patterns") {
    CHECK(transform(pattern_matrix(Pattern::L), MatrixTransform::rotate180) ==
          pattern_matrix(Pattern::Gamma));
    CHECK(transform(pattern_matrix(Pattern::K), MatrixTransform::rotate180) ==
          pattern_matrix(Pattern::K));
    CHECK(transform(pattern_matrix(Pattern::Identity), MatrixTransform::rotate180) ==
          pattern_matrix(Pattern::Identity));
    CHECK(transform(pattern_matrix(Pattern::Gamma), MatrixTransform::transpose) ==
          pattern_matrix(Pattern::Gamma));

    BinaryMatrix m = BinaryMatrix::from_strings({"1011", "0100", "1100"});
    CHECK(transform(transform(m, MatrixTransform::reverse_rows), MatrixTransform::reverse_cols) ==
          transform(m, MatrixTransform::rotate180));
    CHECK(transform(transform(m, MatrixTransform::transpose), MatrixTransform::transpose) == m);
}

TEST_CASE("pattern containment commutes with rotate180") {
    Rng rng(419);
    for (int trial = 0; trial < 300; ++trial) {
        int k = 2 + rng.below(4), l = 2 + rng.below(5);
        BinaryMatrix m = random_matrix(rng, k, l);
        BinaryMatrix rotated = transform(m, MatrixTransform::rotate180);
        for (Pattern p : {Pattern::K, Pattern::L, Pattern::Gamma, Pattern::Identity}) {
            // occurrences of p in m, reflected, must equal occurrences of
            // rotate180(p) in rotate180(m)
            Pattern rotated_p = p == Pattern::L ? Pattern::Gamma : p == Pattern::Gamma ? Pattern::L : p;
            auto occurrences = find_all_patterns(m, p);
            std::vector<SubmatrixLoc> reflected;
            for (const SubmatrixLoc& loc : occurrences) {
                reflected.push_back(
                    {k - 1 - loc.i2, k - 1 - loc.i1, l - 1 - loc.j2, l - 1 - loc.j1});
            }
            std::sort(reflected.begin(), reflected.end(), [](const SubmatrixLoc& a, const SubmatrixLoc& b) {
                return std::tie(a.i1, a.i2, a.j1, a.j2) < std::tie(b.i1, b.i2, b.j1, b.j2);
            });
            CHECK(reflected == find_all_patterns(rotated, rotated_p));
        }
    }
}

TEST_CASE("ID-Gamma-free classes mirror KL-free classes under rotation") {
    auto idgamma_free = [](const BinaryMatrix& m) {
        return !find_pattern(m, Pattern::Identity).has_value() &&
               !find_pattern(m, Pattern::Gamma).has_value();
    };
    auto idl_free = [](const BinaryMatrix& m) {
        return !find_pattern(m, Pattern::Identity).has_value() &&
               !find_pattern(m, Pattern::L).has_value();
    };
    auto klfree = [](const BinaryMatrix& m) {
        return is_kl_free(m);
    };
    // rotation swaps Gamma and L and fixes ID, so the pointwise law pairs
    // {ID,Gamma} with {ID,L}
    Rng rng(421);
    for (int trial = 0; trial < 200; ++trial) {
        BinaryMatrix m = random_matrix(rng, 2 + rng.below(4), 2 + rng.below(4));
        CHECK(idgamma_free(m) == idl_free(transform(m, MatrixTransform::rotate180)));
    }

    // class level: reversal is itself a simultaneous permutation, so the
    // {K,L}-free-permutable matrices are exactly the {K,Gamma}-free-permutable
    // ones; exhaustively at 3x3
    auto kgamma_free = [](const BinaryMatrix& m) {
        return !find_pattern(m, Pattern::K).has_value() &&
               !find_pattern(m, Pattern::Gamma).has_value();
    };
    auto simultaneous_exists = [](const BinaryMatrix& m, auto&& pred) {
        std::vector<int> perm(m.rows());
        std::iota(perm.begin(), perm.end(), 0);
        do {
            if (pred(permute(m, perm, perm))) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return false;
    };
    for (uint64_t code = 0; code < 512; ++code) {
        BinaryMatrix m(3, 3);
        for (int cell = 0; cell < 9; ++cell) m.set(cell / 3, cell % 3, (code >> cell) & 1);
        CHECK(simultaneous_exists(m, klfree) == simultaneous_exists(m, kgamma_free));
    }

    // the {ID,Gamma} class genuinely differs from the {K,L} class: the digon
    // plus an isolated vertex is {ID,Gamma}-free as given yet has no
    // simultaneous permutation to {K,L}-free
    BinaryMatrix digon_plus = BinaryMatrix::from_strings({"010", "100", "000"});
    CHECK(idgamma_free(digon_plus));
    CHECK_FALSE(simultaneous_exists(digon_plus, klfree));
}

TEST_CASE("gamma_free searches") {
    BinaryMatrix triangle = BinaryMatrix::adjacency_of(
        testsupport::reflexive_graph(3, {{0, 1}, {1, 2}, {2, 0}}));
    CHECK(gamma_free_simultaneous(triangle).has_value());

    BinaryMatrix sun = BinaryMatrix::adjacency_of(testsupport::reflexive_sun3());
    CHECK_FALSE(gamma_free_simultaneous(sun).has_value());

    CHECK_FALSE(gamma_free_independent(c6_biadjacency()).has_value());
    CHECK(gamma_free_independent(BinaryMatrix::from_strings({"11", "01"})).has_value());

    CHECK_THROWS_AS(gamma_free_simultaneous(BinaryMatrix(9, 9)), InputError);
    CHECK_THROWS_AS(gamma_free_independent(BinaryMatrix(10, 10)), InputError);
}

TEST_SUITE_END();
