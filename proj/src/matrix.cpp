#include "minorder/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "minorder/ordering.hpp"

namespace minorder {

BinaryMatrix::BinaryMatrix(int rows, int cols, std::vector<uint8_t> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != static_cast<size_t>(rows) * static_cast<size_t>(cols)) {
        throw InputError("matrix data does not match its dimensions");
    }
    for (uint8_t& cell : data_) {
        if (cell > 1) throw InputError("matrix entries must be 0 or 1");
    }
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string>& rows) {
    const int k = static_cast<int>(rows.size());
    const int l = k > 0 ? static_cast<int>(rows[0].size()) : 0;
    BinaryMatrix m(k, l);
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(rows[i].size()) != l) {
            throw InputError("matrix rows have unequal lengths");
        }
        for (int j = 0; j < l; ++j) {
            char ch = rows[i][j];
            if (ch != '0' && ch != '1') {
                throw InputError(std::string("bad matrix character '") + ch + "'");
            }
            m.set(i, j, ch == '1');
        }
    }
    return m;
}

BinaryMatrix BinaryMatrix::adjacency_of(const Digraph& h) {
    BinaryMatrix m(h.n(), h.n());
    for (auto [u, v] : h.arcs()) m.set(u, v, 1);
    return m;
}

std::vector<std::string> BinaryMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_);
    for (int i = 0; i < rows_; ++i) {
        std::string row(cols_, '0');
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j)) row[j] = '1';
        }
        out.push_back(std::move(row));
    }
    return out;
}

Digraph BinaryMatrix::to_digraph() const {
    if (!is_square()) {
        throw InputError("only square matrices are adjacency matrices");
    }
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j)) arcs.emplace_back(i, j);
        }
    }
    return Digraph(rows_, arcs);
}

BipartiteDigraph bipartite_from_biadjacency(const BinaryMatrix& m) {
    std::vector<int> a(m.rows()), b(m.cols());
    std::iota(a.begin(), a.end(), 0);
    std::iota(b.begin(), b.end(), m.rows());
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (m.at(i, j)) arcs.emplace_back(i, m.rows() + j);
        }
    }
    return BipartiteDigraph(std::move(a), std::move(b), std::move(arcs));
}

BinaryMatrix pattern_matrix(Pattern p) {
    switch (p) {
        case Pattern::K: return BinaryMatrix(2, 2, {0, 1, 1, 0});
        case Pattern::L: return BinaryMatrix(2, 2, {0, 1, 1, 1});
        case Pattern::Gamma: return BinaryMatrix(2, 2, {1, 1, 1, 0});
        case Pattern::Identity: return BinaryMatrix(2, 2, {1, 0, 0, 1});
    }
    throw InputError("unknown pattern");
}

namespace {

bool matches_at(const BinaryMatrix& m, const BinaryMatrix& p, const SubmatrixLoc& loc) {
    return m.at(loc.i1, loc.j1) == p.at(0, 0) && m.at(loc.i1, loc.j2) == p.at(0, 1) &&
           m.at(loc.i2, loc.j1) == p.at(1, 0) && m.at(loc.i2, loc.j2) == p.at(1, 1);
}

}  // namespace

std::optional<SubmatrixLoc> find_pattern(const BinaryMatrix& m, Pattern p) {
    const BinaryMatrix pat = pattern_matrix(p);
    for (int i1 = 0; i1 < m.rows(); ++i1) {
        for (int i2 = i1 + 1; i2 < m.rows(); ++i2) {
            for (int j1 = 0; j1 < m.cols(); ++j1) {
                for (int j2 = j1 + 1; j2 < m.cols(); ++j2) {
                    SubmatrixLoc loc{i1, i2, j1, j2};
                    if (matches_at(m, pat, loc)) return loc;
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<SubmatrixLoc> find_all_patterns(const BinaryMatrix& m, Pattern p) {
    const BinaryMatrix pat = pattern_matrix(p);
    std::vector<SubmatrixLoc> out;
    for (int i1 = 0; i1 < m.rows(); ++i1) {
        for (int i2 = i1 + 1; i2 < m.rows(); ++i2) {
            for (int j1 = 0; j1 < m.cols(); ++j1) {
                for (int j2 = j1 + 1; j2 < m.cols(); ++j2) {
                    SubmatrixLoc loc{i1, i2, j1, j2};
                    if (matches_at(m, pat, loc)) out.push_back(loc);
                }
            }
        }
    }
    return out;
}

bool is_kl_free(const BinaryMatrix& m) {
    return !find_pattern(m, Pattern::K).has_value() && !find_pattern(m, Pattern::L).has_value();
}

BinaryMatrix permute(const BinaryMatrix& m, const std::vector<int>& row_perm,
                     const std::vector<int>& col_perm) {
    if (static_cast<int>(row_perm.size()) != m.rows() ||
        static_cast<int>(col_perm.size()) != m.cols()) {
        throw InputError("permutation sizes do not match the matrix");
    }
    BinaryMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            out.set(i, j, m.at(row_perm[i], col_perm[j]));
        }
    }
    return out;
}

std::optional<std::vector<int>> min_orderable(const BinaryMatrix& m) {
    if (!m.is_square()) {
        throw InputError("min-orderability is defined for square matrices");
    }
    auto ord = find_min_ordering(m.to_digraph());
    if (!ord.has_value()) return std::nullopt;
    std::vector<int> perm = ord->order();
    if (!is_kl_free(permute(m, perm, perm))) {
        throw InternalError("min ordering did not yield a K,L-free matrix");
    }
    return perm;
}

BinaryMatrix augment(const BinaryMatrix& m) {
    const int k = m.rows(), l = m.cols();
    BinaryMatrix out(k + l, k + l);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < l; ++j) {
            out.set(i, k + j, m.at(i, j));
        }
    }
    return out;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> independent_kl_free(
    const BinaryMatrix& m) {
    auto perm = min_orderable(augment(m));
    if (!perm.has_value()) return std::nullopt;
    std::vector<int> row_perm, col_perm;
    for (int p : *perm) {
        if (p < m.rows()) {
            row_perm.push_back(p);
        } else {
            col_perm.push_back(p - m.rows());
        }
    }
    if (!is_kl_free(permute(m, row_perm, col_perm))) {
        throw InternalError("projected permutations did not yield a K,L-free matrix");
    }
    return std::make_pair(std::move(row_perm), std::move(col_perm));
}

BinaryMatrix transform(const BinaryMatrix& m, MatrixTransform op) {
    const int k = m.rows(), l = m.cols();
    switch (op) {
        case MatrixTransform::rotate180: {
            BinaryMatrix out(k, l);
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < l; ++j) out.set(i, j, m.at(k - 1 - i, l - 1 - j));
            }
            return out;
        }
        case MatrixTransform::transpose: {
            BinaryMatrix out(l, k);
            for (int i = 0; i < l; ++i) {
                for (int j = 0; j < k; ++j) out.set(i, j, m.at(j, i));
            }
            return out;
        }
        case MatrixTransform::reverse_rows: {
            BinaryMatrix out(k, l);
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < l; ++j) out.set(i, j, m.at(k - 1 - i, j));
            }
            return out;
        }
        case MatrixTransform::reverse_cols: {
            BinaryMatrix out(k, l);
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < l; ++j) out.set(i, j, m.at(i, l - 1 - j));
            }
            return out;
        }
    }
    throw InputError("unknown transform");
}

namespace {

bool gamma_free(const BinaryMatrix& m) { return !find_pattern(m, Pattern::Gamma).has_value(); }

uint64_t factorial_capped(int n, uint64_t cap) {
    uint64_t out = 1;
    for (int i = 2; i <= n; ++i) {
        out *= static_cast<uint64_t>(i);
        if (out > cap) return cap + 1;
    }
    return out;
}

}  // namespace

std::optional<std::vector<int>> gamma_free_simultaneous(const BinaryMatrix& m) {
    if (!m.is_square()) {
        throw InputError("simultaneous permutations need a square matrix");
    }
    if (m.rows() > kMaxSimultaneousN) {
        throw InputError("simultaneous Gamma-freeness search is capped at n = " +
                         std::to_string(kMaxSimultaneousN));
    }
    std::vector<int> perm(m.rows());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (gamma_free(permute(m, perm, perm))) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> gamma_free_independent(
    const BinaryMatrix& m) {
    if (factorial_capped(m.rows(), kMaxIndependentPerms) *
            factorial_capped(m.cols(), kMaxIndependentPerms) >
        kMaxIndependentPerms) {
        throw InputError("independent Gamma-freeness search is capped at k!*l! = " +
                         std::to_string(kMaxIndependentPerms));
    }
    std::vector<int> row_perm(m.rows());
    std::iota(row_perm.begin(), row_perm.end(), 0);
    do {
        std::vector<int> col_perm(m.cols());
        std::iota(col_perm.begin(), col_perm.end(), 0);
        do {
            if (gamma_free(permute(m, row_perm, col_perm))) {
                return std::make_pair(row_perm, col_perm);
            }
        } while (std::next_permutation(col_perm.begin(), col_perm.end()));
    } while (std::next_permutation(row_perm.begin(), row_perm.end()));
    return std::nullopt;
}

}  // namespace minorder
