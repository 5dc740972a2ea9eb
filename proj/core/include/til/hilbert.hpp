#pragma once

// Monomial ideals, standard monomials and Hilbert functions.

#include <map>
#include <vector>

#include "til/groebner.hpp"
#include "til/multidegree.hpp"

namespace til {

/// Monomial ideal given by its minimal generators.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars) : n_(nvars) {}
  MonomialIdeal(std::size_t nvars, std::vector<ExponentVector> gens);

  /// Throws std::invalid_argument unless every generator is a monomial.
  template <class K>
  static MonomialIdeal from_basis(const IdealBasis<K>& I) {
    if (!I.is_monomial()) throw std::invalid_argument("ideal is not monomial");
    std::vector<ExponentVector> g;
    for (const auto& f : I.gens()) g.push_back(f.lead_monomial());
    return MonomialIdeal(I.ring().nvars(), std::move(g));
  }
  template <class K>
  static MonomialIdeal leading(const GroebnerBasis<K>& G) {
    return MonomialIdeal(G.ring().nvars(), G.leads());
  }

  std::size_t nvars() const { return n_; }
  const std::vector<ExponentVector>& gens() const { return gens_; }
  bool contains(const ExponentVector& m) const;
  MonomialIdeal intersect(const MonomialIdeal& o) const;
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

  template <class K>
  IdealBasis<K> to_basis(const Ring& r) const {
    IdealBasis<K> out(r);
    for (const auto& m : gens_) out.add(Polynomial<K>::monomial(r, m));
    return out;
  }

 private:
  std::size_t n_;
  std::vector<ExponentVector> gens_;  // minimal, sorted lexicographically
};

/// All monomials in n variables of total degree d, in lex-descending order.
std::vector<ExponentVector> monomials_of_degree(std::size_t n, long d);

/// Monomials of total degree d outside the ideal.
std::vector<ExponentVector> standard_monomials(const MonomialIdeal& I, long d);

/// dim (S/I)_d for d = 0..max_degree.
std::vector<long> hilbert_function(const MonomialIdeal& I, long max_degree);

/// dim (S/I)_D for every multidegree D reached by standard monomials of
/// total degree at most max_degree, using the ring's grading.
std::map<MultiDegree, long> hilbert_by_multidegree(const MonomialIdeal& I, const Ring& graded,
                                                   long max_degree);

/// Standard monomials of total degree at most max_degree whose multidegree is D.
std::vector<ExponentVector> standard_monomials_of_multidegree(const MonomialIdeal& I,
                                                              const Ring& graded,
                                                              const MultiDegree& D,
                                                              long max_degree);

/// Hilbert function of S/I computed from a Groebner basis of I.
template <class K>
std::vector<long> hilbert_function(const GroebnerBasis<K>& G, long max_degree) {
  return hilbert_function(MonomialIdeal::leading(G), max_degree);
}

/// Intersection of monomial ideals; throws on non-monomial input.
template <class K>
IdealBasis<K> monomial_ideal_intersect(const std::vector<IdealBasis<K>>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("empty intersection");
  MonomialIdeal acc = MonomialIdeal::from_basis(ideals.front());
  for (std::size_t i = 1; i < ideals.size(); ++i) {
    if (!ideals[i].ring().same_space(ideals.front().ring()))
      throw std::invalid_argument("ideals live in different rings");
    acc = acc.intersect(MonomialIdeal::from_basis(ideals[i]));
  }
  return acc.to_basis<K>(ideals.front().ring());
}

}  // namespace til
