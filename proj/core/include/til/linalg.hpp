#pragma once

// Exact and modular linear algebra over the coefficient fields.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "til/field.hpp"

namespace til {

/// Prime used to bound ranks of rational matrices from below.
inline constexpr std::uint32_t kRankPrime = 2147483647u;

template <class K>
struct Entry {
  std::size_t row, col;
  K value;
};

/// Sparse matrix in coordinate form; duplicate positions are summed.
template <class K>
struct SparseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Entry<K>> entries;
  void add(std::size_t r, std::size_t c, K v) { entries.push_back({r, c, std::move(v)}); }
};

/// Residue of a rational number modulo a prime; nullopt when the
/// denominator vanishes there.
std::optional<std::uint32_t> residue(const Rational& x, std::uint32_t prime);
std::optional<std::uint32_t> residue(const Fp& x, std::uint32_t prime);

/// Rank of a dense matrix over F_prime (row-major, entries already reduced).
std::size_t rank_mod(std::size_t rows, std::size_t cols, std::vector<std::uint32_t> data,
                     std::uint32_t prime);

/// Rank over K by exact elimination.
template <class K>
std::size_t rank_exact(const SparseMatrix<K>& m);

/// Rank over K. Over F_p this is exact; over Q the result is the rank
/// modulo kRankPrime, a lower bound for the rational rank, together with
/// `exact = false`.
struct RankResult {
  std::size_t rank;
  bool exact;
};
template <class K>
RankResult rank_fast(const SparseMatrix<K>& m);

/// Ranks and homology of a finite chain complex of vector spaces with
/// dims[i] = dim C_i and maps[i] : C_i -> C_{i-1} (maps[0] is ignored).
/// Modular ranks are kept when a vanishing homology bound pins them, since
/// they never exceed the true rank and d o d = 0 caps adjacent sums; other
/// ranks are recomputed exactly.
struct ChainHomology {
  std::vector<long> ranks;     // ranks[i] = rank of maps[i], ranks[0] = 0
  std::vector<long> homology;  // dim H_i
  long exact_recomputations = 0;
};
template <class K>
ChainHomology chain_homology(const std::vector<long>& dims, const std::vector<SparseMatrix<K>>& maps);

template <class K>
using SparseVector = std::map<std::int64_t, K>;

/// Coordinates of vectors with respect to a fixed linearly independent
/// family, by row reduction.
template <class K>
class SpanSolver {
 public:
  /// Throws std::invalid_argument when the family is dependent.
  explicit SpanSolver(const std::vector<SparseVector<K>>& basis);
  std::size_t dim() const { return n_; }
  /// Coefficients c with v = sum c_i basis_i, or nullopt if v is outside the span.
  std::optional<std::vector<K>> coordinates(const SparseVector<K>& v) const;

 private:
  struct PivotRow {
    std::int64_t pivot;
    SparseVector<K> row;           // leading entry 1 at `pivot`
    std::map<std::size_t, K> combo;  // row = sum combo_j basis_j
  };
  std::size_t n_;
  std::vector<PivotRow> rows_;
  std::map<std::int64_t, std::size_t> by_pivot_;
};

}  // namespace til
