#pragma once

// The associated graded ideal of the q = 2 minors and its linear resolution
// as a mapping cone of a Koszul double complex into the resolution of S/n^2.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "til/complex.hpp"
#include "til/groebner.hpp"
#include "til/report.hpp"
#include "til/tableaux.hpp"

namespace til {

/// Type (i) minors -e_{p+i} e_j + e_{p+j} e_i (i < j) and type (ii) minors
/// e_{p+i} e_{p+j} - e_i e_{p+j} e_p + e_i e_j e_2p (i <= j), in matrix_ring(p, 2).
template <class K>
std::vector<Polynomial<K>> type_one_minors(int p, const Ring& S);
template <class K>
std::vector<Polynomial<K>> type_two_minors(int p, const Ring& S);

/// S[t] with the order comparing t-degree first, then grevlex on S.
Ring t_graded_ring(int p, const Field& field);

/// 2x2 minors of [e_i; e_{p+i}] plus the squares of <e_{p+1}..e_{2p-1}>, in matrix_ring(p, 2).
template <class K>
IdealBasis<K> associated_graded_ideal(int p, const Field& field);
/// Initial forms of the dehomogenized Groebner basis of the homogenized
/// maximal minors; the independent route to the same ideal.
template <class K>
IdealBasis<K> associated_graded_ideal_from_minors(int p, const Field& field);

/// Buchberger's criterion for the homogenized type (i)/(ii) minors.
Report check_homogenized_minors_gb(int p, const Field& field);

/// S' = k[e1..e_{p-1}, e_{p+1}..e_{2p-1}], both e_i and e_{p+i} of weight eps_i.
Ring resolution_ring(int p, const Field& field);

template <class K>
struct DoubleComplex {
  GradedComplex<K> total;
  std::vector<ComplexMap<K>> vertical, horizontal;  // same shapes as total.d
};

template <class K>
struct ResolutionData {
  int p;
  Ring ring;
  DoubleComplex<K> F;
  GradedComplex<K> G;
  std::vector<ComplexMap<K>> phi;  // phi[i] : F_i -> G_i
  GradedComplex<K> cone;
};

template <class K>
DoubleComplex<K> build_F(int p, const Ring& ring);
template <class K>
GradedComplex<K> build_G(int p, const Ring& ring);
template <class K>
std::vector<ComplexMap<K>> comparison_map(int p, const Ring& ring, const DoubleComplex<K>& F,
                                          const GradedComplex<K>& G);
/// Cone_i = G_i + F_{i-1} with differential [[dG, phi], [0, -dF]].
template <class K>
GradedComplex<K> mapping_cone(const GradedComplex<K>& G, const GradedComplex<K>& F,
                              const std::vector<ComplexMap<K>>& phi);
template <class K>
ResolutionData<K> build_resolution(int p, const Field& field);

/// Graded Betti numbers beta[i][j].
using BettiTable = std::map<std::pair<long, long>, long>;
BettiTable betti_of_free_complex(const std::vector<GradedFreeModule>& terms);
/// Rows are j - i, columns are i; zeros print as '.'.
std::string betti_table_text(const BettiTable& b);
nlohmann::json betti_table_json(const BettiTable& b);

/// Graded Betti numbers of S'/I' up to internal degree `max_degree`, as the
/// homology of the Koszul complex of the variables over S'/I'.
template <class K>
BettiTable koszul_betti(const IdealBasis<K>& I, long max_degree);

Report verify_resolution(int p, long degree_bound, const Field& field);
Report betti_crosscheck(int p, long degree_bound, const Field& field);

}  // namespace til
