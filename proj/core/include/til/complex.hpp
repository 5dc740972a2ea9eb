#pragma once

// Graded free modules, maps between them given by polynomial matrices, and
// chain complexes with degree-wise homology.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "til/linalg.hpp"
#include "til/third_party/json.hpp"
#include "til/polynomial.hpp"

namespace til {

/// Degree of variable i: the ring grading if present, else (1).
MultiDegree variable_weight(const Ring& ring, std::size_t i);
/// Weight of a monomial under variable_weight.
MultiDegree monomial_weight(const Ring& ring, const ExponentVector& m);
/// Monomials of the given weight; variable weights must be nonzero and
/// nonnegative.
std::vector<ExponentVector> monomials_of_weight(const Ring& ring, const MultiDegree& w);
/// Every weight with nonnegative entries and total at most `max_total`.
std::vector<MultiDegree> weights_up_to(std::size_t dim, long max_total);

class GradedFreeModule {
 public:
  GradedFreeModule() = default;
  void add(std::string label, long twist, MultiDegree weight);
  void append(const GradedFreeModule& o);

  std::size_t rank() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  long twist(std::size_t i) const { return twists_.at(i); }
  const MultiDegree& weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<long>& twists() const { return twists_; }

 private:
  std::vector<std::string> labels_;
  std::vector<long> twists_;
  std::vector<MultiDegree> weights_;
};

/// Map of free modules; entry (i, j) is the coefficient of target generator
/// i in the image of source generator j.
template <class K>
class ComplexMap {
 public:
  ComplexMap(Ring ring, GradedFreeModule source, GradedFreeModule target);

  const Ring& ring() const { return ring_; }
  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }
  Polynomial<K>& at(std::size_t i, std::size_t j) { return m_.at(i).at(j); }
  const Polynomial<K>& at(std::size_t i, std::size_t j) const { return m_.at(i).at(j); }

  bool is_zero() const;
  ComplexMap operator-() const;
  friend ComplexMap operator+(const ComplexMap& a, const ComplexMap& b) { return a.combine(b, false); }
  friend ComplexMap operator-(const ComplexMap& a, const ComplexMap& b) { return a.combine(b, true); }
  /// a o b.
  friend ComplexMap compose(const ComplexMap& a, const ComplexMap& b) { return a.after(b); }

  /// Positions of entries with a nonzero constant term.
  std::vector<std::pair<std::size_t, std::size_t>> unit_entries() const;
  /// Positions of nonzero entries that are not homogeneous of weight
  /// weight_source(j) - weight_target(i).
  std::vector<std::pair<std::size_t, std::size_t>> degree_violations() const;
  /// Smallest and largest total degree over nonzero entries, or (-1, -1).
  std::pair<long, long> entry_degree_range() const;

  nlohmann::json to_json() const;

 private:
  ComplexMap combine(const ComplexMap& b, bool subtract) const;
  ComplexMap after(const ComplexMap& b) const;

  Ring ring_;
  GradedFreeModule source_, target_;
  std::vector<std::vector<Polynomial<K>>> m_;
};

/// Terms C_0, C_1, ... with d[i] : C_{i+1} -> C_i.
template <class K>
struct GradedComplex {
  Ring ring;
  std::vector<GradedFreeModule> terms;
  std::vector<ComplexMap<K>> d;

  std::vector<std::size_t> ranks() const;
  /// Largest index with a nonzero term, or -1.
  long length() const;
  /// Indices i with d[i-1] o d[i] != 0.
  std::vector<std::size_t> d_squared_failures() const;
};

/// Coordinates of a free module in one weight: pairs (generator, monomial).
class DegreeBasis {
 public:
  DegreeBasis(const Ring& ring, const GradedFreeModule& M, const MultiDegree& w);
  std::size_t size() const { return cells_.size(); }
  const std::pair<std::size_t, ExponentVector>& cell(std::size_t k) const { return cells_[k]; }
  std::optional<std::size_t> index(std::size_t gen, const ExponentVector& m) const;

 private:
  std::vector<std::pair<std::size_t, ExponentVector>> cells_;
  std::vector<std::map<std::vector<int>, std::size_t>> lookup_;
};

/// The weight-w component of a map as a matrix over K.
template <class K>
SparseMatrix<K> degree_block(const ComplexMap<K>& f, const DegreeBasis& src, const DegreeBasis& tgt);

struct HomologyBlock {
  MultiDegree weight;
  std::vector<long> term_dims;  // dim C_i in this weight
  std::vector<long> ranks;      // rank of d_i : C_i -> C_{i-1}, ranks[0] = 0
  std::vector<long> homology;   // dim H_i
  long exact_recomputations = 0;
};

/// Homology in every weight with total at most max_total, one block per
/// weight, computed in parallel (see chain_homology for rank certification).
template <class K>
std::vector<HomologyBlock> homology_by_weight(const GradedComplex<K>& C, long max_total);

/// Koszul complex S (x) wedge^i U on the listed variables of `ring`, with
/// d(u_J) = sum_k (-1)^k u_{j_k} u_{J - j_k}.
template <class K>
GradedComplex<K> koszul_complex(const Ring& ring, const std::vector<std::size_t>& vars);

/// Subsets of {0..n-1} of size k in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

}  // namespace til
