#pragma once

// Transfer polynomial families, their elimination ideals, the determinantal
// matrices A and A', and the checks relating them.

#include <cstdint>
#include <vector>

#include "til/algebra.hpp"
#include "til/groebner.hpp"
#include "til/hilbert.hpp"
#include "til/report.hpp"

namespace til {

/// k[e1..en] with the Z/p grading deg(e_i) = i mod p.
Ring symmetric_ring(std::size_t n, const Field& field, int p, const std::string& prefix = "e");
/// k[e1..en, t]; t is the last variable and has Z/p degree 0.
Ring transfer_ring(std::size_t n, const Field& field, int p);

/// e_k in a ring named e1..eN, with e_0 = 1 and e_k = 0 outside [0, N].
template <class K>
Polynomial<K> e_lookup(const Ring& r, long k, const std::string& prefix = "e");

template <class K>
struct TransferFamily {
  int p, q, r;
  Ring ring;  // k[e1..en, t]
  std::vector<Polynomial<K>> f;
  std::size_t n() const { return static_cast<std::size_t>(q * p + r); }
  long t_degree(std::size_t k) const { return f[k].degree_in(ring.nvars() - 1); }
  IdealBasis<K> ideal() const { return IdealBasis<K>(ring, f); }
};

/// Throws std::invalid_argument unless p >= 2, q >= 0 and 0 <= r < p.
template <class K>
TransferFamily<K> build_transfer_family(int p, int q, int r, const Field& field);

/// f_i replaced by f_i - e_i f_0 for 1 <= i <= r.
template <class K>
std::vector<Polynomial<K>> replaced_family(const TransferFamily<K>& fam);

/// Elimination ideal <f_0..f_{p-1}> meet k[e1..en], inside symmetric_ring(n).
template <class K>
IdealBasis<K> transfer_ideal(const TransferFamily<K>& fam);

/// Source ring A = k[e'1..e'qp] and the images of iota_r in k[e1..e_{qp+r}].
Ring iota_source(int p, int q, const Field& field);
template <class K>
Images<K> iota_map(int p, int q, int r, const Ring& source, const Ring& target);

Report check_stability(int p, int q, int r, long degree_bound, const Field& field);

/// Dense matrix of polynomials.
template <class K>
class SymbolicMatrix {
 public:
  SymbolicMatrix(Ring ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(rows * cols, Polynomial<K>(ring_)) {}

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Polynomial<K>& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Polynomial<K>& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::vector<Polynomial<K>> column(std::size_t j) const;
  SymbolicMatrix select_columns(const std::vector<std::size_t>& cols) const;
  /// Row-major arrays of polynomial strings.
  nlohmann::json to_json() const;

 private:
  Ring ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial<K>> a_;
};

/// Ring k[e1..e_qp] used for the matrices A and A'.
Ring matrix_ring(int p, int q, const Field& field);

template <class K>
SymbolicMatrix<K> build_A(int p, int q, const Ring& S);
template <class K>
SymbolicMatrix<K> build_A_prime(int p, int q, const Ring& S);
/// Column j (1-based) of block A_i, i.e. the vector v_{i,j}.
template <class K>
std::vector<Polynomial<K>> sylvester_column(int p, int q, int i, int j, const Ring& S);

/// Determinant by first-row Laplace expansion.
template <class K>
Polynomial<K> determinant(const SymbolicMatrix<K>& M);

/// Maximal minors, column subsets in lexicographic order, zeros kept.
template <class K>
std::vector<Polynomial<K>> all_maximal_minors(const SymbolicMatrix<K>& M);
/// Ideal of maximal minors (zeros stripped).
template <class K>
IdealBasis<K> maximal_minors(const SymbolicMatrix<K>& M);

/// Coefficient of mu^alpha in R(f_0, sum mu_i f_i); alpha has p-1 entries
/// summing to q.
template <class K>
Polynomial<K> sum_of_minors_generator(int p, int q, const std::vector<int>& alpha, const Ring& S);
template <class K>
IdealBasis<K> sum_of_minors_ideal(int p, int q, const Ring& S);

/// Some window of p-1 consecutive exponents among the first n-1 entries is
/// entirely zero (n = number of variables). The last variable never takes
/// part in a gap, matching the windows that define L.
bool has_large_gap(const ExponentVector& m, int p);
/// The monomial ideal L as an intersection of consecutive-variable ideals.
MonomialIdeal ideal_L(int p, int q);

Report verify_antidiagonal_lead(int p, int q, const Field& field);
/// Gap criterion versus membership in L for every monomial of degree <= bound.
Report verify_gap_lemma(int p, int q, long degree_bound);

/// Conjectured equality of the elimination ideal and the ideal of maximal
/// minors of A, with the containment of the minors in the elimination ideal.
Report check_conjecture(int p, int q, const Field& field, GbCache* cache = nullptr);

Report transfer_image_sanity(int p, std::size_t samples, long max_degree, std::uint64_t seed);

}  // namespace til
