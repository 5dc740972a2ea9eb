#pragma once

// Ideals, Groebner bases and the operations built on them.

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "til/io.hpp"
#include "til/polynomial.hpp"

namespace til {

/// Generators of an ideal. Zero generators are dropped on construction.
template <class K>
class IdealBasis {
 public:
  explicit IdealBasis(Ring ring) : ring_(std::move(ring)) {}
  IdealBasis(Ring ring, std::vector<Polynomial<K>> gens);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }
  void add(Polynomial<K> f);
  /// True when every generator is a monomial.
  bool is_monomial() const;

 private:
  Ring ring_;
  std::vector<Polynomial<K>> gens_;
};

/// A Groebner basis. `ring()` carries the order the basis is taken with.
template <class K>
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, std::vector<Polynomial<K>> elems, bool reduced)
      : basis_(std::move(ring), std::move(elems)), reduced_(reduced) {}

  const Ring& ring() const { return basis_.ring(); }
  const MonomialOrder& order() const { return basis_.ring().order(); }
  const std::vector<Polynomial<K>>& elements() const { return basis_.gens(); }
  const IdealBasis<K>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  bool reduced() const { return reduced_; }
  std::vector<ExponentVector> leads() const;

 private:
  IdealBasis<K> basis_;
  bool reduced_;
};

/// Counters from a Buchberger run.
struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t elements_added = 0;
};

/// Fully reduced remainder of f by the basis (f is moved into G's ring).
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& G);
/// Remainder of f by an arbitrary list of divisors in f's ring.
template <class K>
Polynomial<K> reduce_by(const Polynomial<K>& f, const std::vector<Polynomial<K>>& divisors);

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g);

/// Reduced Groebner basis of the generators under `order`.
template <class K>
GroebnerBasis<K> buchberger(const IdealBasis<K>& gens, const MonomialOrder& order,
                            BuchbergerStats* stats = nullptr);

/// Result of checking Buchberger's criterion on a fixed list.
struct CriterionReport {
  std::size_t pairs = 0;
  std::size_t nonzero_remainders = 0;
  bool holds() const { return nonzero_remainders == 0; }
};

/// Checks that every S-pair of `gens` reduces to zero modulo `gens` under
/// `order`. No pair is skipped.
template <class K>
CriterionReport check_buchberger_criterion(const IdealBasis<K>& gens, const MonomialOrder& order);

/// Generators of the intersection of the ideal with the subring on the
/// variables not in `drop`. The result lives in `target` when given (it must
/// contain every remaining variable), otherwise in a fresh grevlex ring on the
/// remaining variables.
template <class K>
IdealBasis<K> elimination_ideal(const IdealBasis<K>& gens, const std::vector<std::string>& drop,
                                std::optional<Ring> target = std::nullopt);

/// Reduced grevlex basis used for canonical comparisons.
template <class K>
GroebnerBasis<K> canonical_basis(const IdealBasis<K>& gens);

template <class K>
bool ideal_member(const Polynomial<K>& f, const GroebnerBasis<K>& G);
/// B is contained in A.
template <class K>
bool ideal_contains(const IdealBasis<K>& A, const IdealBasis<K>& B);
template <class K>
bool ideal_contains(const GroebnerBasis<K>& A, const IdealBasis<K>& B);
template <class K>
bool ideal_equal(const IdealBasis<K>& A, const IdealBasis<K>& B);

/// Minimal monomial generators of the initial ideal under `order`.
template <class K>
IdealBasis<K> initial_ideal(const IdealBasis<K>& gens, const MonomialOrder& order);

/// Lowest-degree homogeneous component in the standard grading.
template <class K>
Polynomial<K> initial_form(const Polynomial<K>& f);

/// Homogenizes f into `target`, which must contain f's variables and `t`.
template <class K>
Polynomial<K> homogenize_t(const Polynomial<K>& f, const Ring& target, const std::string& t);
/// Sets t = 1 and maps the result into `target`.
template <class K>
Polynomial<K> dehomogenize_t(const Polynomial<K>& h, const Ring& target, const std::string& t);

/// JSON cache form {"order", "ring", "generators", "reduced"}.
template <class K>
nlohmann::json gb_to_json(const GroebnerBasis<K>& G);
template <class K>
GroebnerBasis<K> gb_from_json(const nlohmann::json& j);

/// Directory of GB cache files, one JSON document per key. Each file also
/// records the input it was computed from; a mismatch counts as a miss.
class GbCache {
 public:
  explicit GbCache(std::filesystem::path dir);
  const std::filesystem::path& dir() const { return dir_; }

  /// Loads the basis stored under `key` when its recorded input equals
  /// `source`, otherwise computes it and writes the file.
  template <class K>
  GroebnerBasis<K> get(const std::string& key, const std::vector<std::string>& source,
                       const std::function<GroebnerBasis<K>()>& compute);

  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

 private:
  std::filesystem::path dir_;
  std::size_t hits_ = 0, misses_ = 0;
};

}  // namespace til
