#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minorder/digraph.hpp"
#include "minorder/errors.hpp"

namespace minorder {

/// Rectangular 0,1-matrix.
class BinaryMatrix {
  public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {}
    BinaryMatrix(int rows, int cols, std::vector<uint8_t> data);

    /// One string of 0/1 characters per row; all rows the same length.
    static BinaryMatrix from_strings(const std::vector<std::string>& rows);

    static BinaryMatrix adjacency_of(const Digraph& h);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    int at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
    void set(int i, int j, int value) { data_[static_cast<size_t>(i) * cols_ + j] = value ? 1 : 0; }

    std::vector<std::string> to_strings() const;

    /// Digraph whose adjacency matrix this is; square only.
    Digraph to_digraph() const;

    bool operator==(const BinaryMatrix&) const = default;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<uint8_t> data_;
};

/// Bipartite digraph of a bi-adjacency matrix: A-vertices 0..k-1 are the
/// rows, B-vertices k..k+l-1 the columns.
BipartiteDigraph bipartite_from_biadjacency(const BinaryMatrix& m);

/// The 2x2 forbidden patterns. K has rows 01,10; L has rows 01,11; Gamma has
/// rows 11,10; Identity has rows 10,01.
enum class Pattern { K, L, Gamma, Identity };

BinaryMatrix pattern_matrix(Pattern p);

/// Row/column selections are order-preserving: i1 < i2, j1 < j2, 0-based.
struct SubmatrixLoc {
    int i1, i2, j1, j2;

    bool operator==(const SubmatrixLoc&) const = default;
};

/// First (lexicographic) occurrence of p as an order-preserving 2x2
/// submatrix, or nullopt.
std::optional<SubmatrixLoc> find_pattern(const BinaryMatrix& m, Pattern p);

/// All occurrences, lexicographic.
std::vector<SubmatrixLoc> find_all_patterns(const BinaryMatrix& m, Pattern p);

bool is_kl_free(const BinaryMatrix& m);

/// result(i, j) = m(row_perm[i], col_perm[j]).
BinaryMatrix permute(const BinaryMatrix& m, const std::vector<int>& row_perm,
                     const std::vector<int>& col_perm);

/// Simultaneous permutation making m K,L-free, or nullopt. Square input only;
/// delegates to the min ordering search on the digraph of m.
std::optional<std::vector<int>> min_orderable(const BinaryMatrix& m);

/// The (k+l) x (k+l) matrix with m in the first k rows and last l columns,
/// zero elsewhere.
BinaryMatrix augment(const BinaryMatrix& m);

/// Independent row and column permutations making m K,L-free, obtained by
/// simultaneously permuting the augmented matrix and projecting.
std::optional<std::pair<std::vector<int>, std::vector<int>>> independent_kl_free(
    const BinaryMatrix& m);

enum class MatrixTransform { rotate180, transpose, reverse_rows, reverse_cols };

BinaryMatrix transform(const BinaryMatrix& m, MatrixTransform op);

/// Brute-force bounds for the Gamma-freeness searches; sizes beyond them are
/// refused. They back acceptance sweeps, not production use.
inline constexpr int kMaxSimultaneousN = 8;
inline constexpr uint64_t kMaxIndependentPerms = 1000000;

/// Simultaneous permutation to a Gamma-free matrix (strongly chordal
/// adjacency matrices), by exhaustive search over n! permutations.
std::optional<std::vector<int>> gamma_free_simultaneous(const BinaryMatrix& m);

/// Independent permutations to a Gamma-free matrix (chordal bipartite
/// bi-adjacency matrices), by exhaustive search over k! * l! pairs.
std::optional<std::pair<std::vector<int>, std::vector<int>>> gamma_free_independent(
    const BinaryMatrix& m);

}  // namespace minorder
