#pragma once

// The q = 2 parametrization e -> (u, alpha), its initial algebra, and the
// factorization maps between the initial algebra and S/L.

#include <string>
#include <vector>

#include "til/algebra.hpp"
#include "til/groebner.hpp"
#include "til/hilbert.hpp"
#include "til/report.hpp"

namespace til {

/// S = k[e1..e2p] graded by deg e_i = eps_i (i <= p), deg e_{p+i} = eps_i + eps_p.
Ring param_source(int p, const Field& field);
/// k[u1..up, alpha], grevlex with u1 > ... > up > alpha, deg u_i = eps_i,
/// deg alpha = eps_p.
Ring param_target(int p, const Field& field);

template <class K>
struct ParamHom {
  int p;
  Ring source, target;
  Images<K> images;
  Polynomial<K> operator()(const Polynomial<K>& f) const { return substitute(f, target, images); }
};

template <class K>
ParamHom<K> param_hom(int p, const Field& field);

/// Kernel of the parametrization, by eliminating u and alpha; lives in param_source.
template <class K>
IdealBasis<K> kernel_ideal(int p, const Field& field);

/// Membership of a monomial of param_target in the initial algebra of the image.
bool initial_algebra_member(const ExponentVector& m, int p);
/// Closed-form dimension of the initial algebra in multidegree d.
long dim_initial_algebra(int p, const MultiDegree& d);
/// Monomials of param_target of multidegree d (d has p entries).
std::vector<ExponentVector> target_monomials(int p, const MultiDegree& d);

struct Factor {
  enum class Kind { u, u_alpha, alpha };
  Kind kind;
  int index;  // 1-based u index; 0 for alpha
  friend bool operator==(const Factor&, const Factor&) = default;
  std::string to_string() const;
};

/// Factorization of an initial-algebra monomial into u_i, u_i*alpha and
/// alpha; throws std::invalid_argument for non-members.
std::vector<Factor> factorize(const ExponentVector& m, int p);
/// Image in S: u_i -> e_i, u_i*alpha -> e_{p+i}, alpha -> e_p.
ExponentVector psi(const ExponentVector& m, int p);
/// Leading (or trailing) monomial of the parametrization applied to a
/// standard monomial of S/L.
template <class K>
ExponentVector phi_inverse(const ExponentVector& m, const ParamHom<K>& phi);

/// Report per multidegree up to the bound, plus the final ideal equality.
Report verify_q2_conjecture(int p, long degree_bound, const Field& field);

}  // namespace til
