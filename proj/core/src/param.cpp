#include "til/param.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "til/transfer.hpp"

namespace til {

Ring param_source(int p, const Field& field) {
  const std::size_t P = static_cast<std::size_t>(p);
  Ring::Grading g;
  for (std::size_t i = 0; i < P; ++i) g.push_back(MultiDegree::unit(P, i));
  for (std::size_t i = 0; i < P; ++i) g.push_back(MultiDegree::unit(P, i) + MultiDegree::unit(P, P - 1));
  return Ring(indexed_names("e", 2 * P), field, MonomialOrder::grevlex(), std::move(g));
}

Ring param_target(int p, const Field& field) {
  const std::size_t P = static_cast<std::size_t>(p);
  auto vars = indexed_names("u", P);
  vars.push_back("alpha");
  Ring::Grading g;
  for (std::size_t i = 0; i < P; ++i) g.push_back(MultiDegree::unit(P, i));
  g.push_back(MultiDegree::unit(P, P - 1));
  return Ring(std::move(vars), field, MonomialOrder::grevlex(), std::move(g));
}

template <class K>
ParamHom<K> param_hom(int p, const Field& field) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  ParamHom<K> h{p, param_source(p, field), param_target(p, field), {}};
  const std::size_t P = static_cast<std::size_t>(p);
  auto u = [&](std::size_t i) { return Polynomial<K>::variable(h.target, i - 1); };
  auto alpha = Polynomial<K>::variable(h.target, P);
  h.images.resize(2 * P);
  for (std::size_t i = 1; i < P; ++i) h.images[i - 1] = u(i);
  h.images[P - 1] = u(P) + alpha;
  for (std::size_t i = 1; i <= P; ++i) h.images[P + i - 1] = u(i) * alpha;
  return h;
}

template <class K>
IdealBasis<K> kernel_ideal(int p, const Field& field) {
  auto h = param_hom<K>(p, field);
  std::vector<std::string> vars = h.source.vars();
  for (const auto& v : h.target.vars()) vars.push_back(v);
  Ring big(vars, field);
  IdealBasis<K> gens(big);
  for (std::size_t i = 0; i < h.source.nvars(); ++i)
    gens.add(Polynomial<K>::variable(big, i) - map_by_name(*h.images[i], big));
  return elimination_ideal(gens, h.target.vars(), h.source);
}

bool initial_algebra_member(const ExponentVector& m, int p) {
  const std::size_t P = static_cast<std::size_t>(p);
  if (m.size() != P + 1) throw std::invalid_argument("monomial is not in k[u1..up, alpha]");
  for (std::size_t i = 0; i + 1 < P; ++i)
    if (m[i] > 0) return true;
  return m[P] <= m[P - 1];
}

long dim_initial_algebra(int p, const MultiDegree& d) {
  if (d.size() != static_cast<std::size_t>(p)) throw std::invalid_argument("multidegree must have p entries");
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] < 0) return 0;
  const long dp = d[d.size() - 1];
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    if (d[i] > 0) return dp + 1;
  return 1 + dp / 2;
}

std::vector<ExponentVector> target_monomials(int p, const MultiDegree& d) {
  const std::size_t P = static_cast<std::size_t>(p);
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < P; ++i)
    if (d[i] < 0) return out;
  for (long b = 0; b <= d[P - 1]; ++b) {
    ExponentVector m(P + 1);
    for (std::size_t i = 0; i + 1 < P; ++i) m.set(i, static_cast<int>(d[i]));
    m.set(P - 1, static_cast<int>(d[P - 1] - b));
    m.set(P, static_cast<int>(b));
    out.push_back(m);
  }
  return out;
}

std::string Factor::to_string() const {
  switch (kind) {
    case Kind::u: return "u" + std::to_string(index);
    case Kind::u_alpha: return "u" + std::to_string(index) + "*alpha";
    case Kind::alpha: return "alpha";
  }
  return "?";
}

std::vector<Factor> factorize(const ExponentVector& m0, int p) {
  if (!initial_algebra_member(m0, p)) throw std::invalid_argument("monomial is not in the initial algebra");
  const std::size_t P = static_cast<std::size_t>(p);
  ExponentVector m = m0;
  std::vector<Factor> x;
  for (std::size_t i = P; i >= 1 && !m.is_one(); --i) {
    while (m[i - 1] > 0 && m[P] > 0) {
      x.push_back({Factor::Kind::u_alpha, static_cast<int>(i)});
      m.set(i - 1, m[i - 1] - 1);
      m.set(P, m[P] - 1);
    }
  }
  for (int l = 0; l < m[P]; ++l) x.push_back({Factor::Kind::alpha, 0});
  // Remaining u factors are listed from u_p down to u_1.
  for (std::size_t i = P; i >= 1; --i)
    for (int a = 0; a < m[i - 1]; ++a) x.push_back({Factor::Kind::u, static_cast<int>(i)});
  return x;
}

ExponentVector psi(const ExponentVector& m, int p) {
  const std::size_t P = static_cast<std::size_t>(p);
  ExponentVector out(2 * P);
  for (const auto& f : factorize(m, p)) {
    std::size_t v = f.kind == Factor::Kind::u ? f.index - 1
                    : f.kind == Factor::Kind::u_alpha ? P + f.index - 1
                                                      : P - 1;
    out.set(v, out[v] + 1);
  }
  return out;
}

template <class K>
ExponentVector phi_inverse(const ExponentVector& m, const ParamHom<K>& phi) {
  const std::size_t P = static_cast<std::size_t>(phi.p);
  bool in_small = false, low_degree = false;
  for (std::size_t i = 0; i + 1 < P; ++i) {
    if (m[i] > 0) in_small = true;
    if (m[i] > 0 || m[P + i] > 0) low_degree = true;
  }
  Polynomial<K> img = phi(Polynomial<K>::monomial(phi.source, m));
  // Monomials in e_p and e_2p alone take the leading term: the trailing one
  // carries more alpha than u_p and is not in the initial algebra.
  return in_small || !low_degree ? img.lead_monomial() : img.trail().mono;
}

namespace {

template <class K>
Report q2_impl(int p, long bound, const Field& field) {
  Report rep("q2");
  rep.params = {{"p", p}, {"degree_bound", bound}, {"field", field.name()}};
  const std::size_t P = static_cast<std::size_t>(p);
  auto phi = param_hom<K>(p, field);
  const Ring& S = phi.source;

  auto fam = build_transfer_family<K>(p, 2, 0, field);
  const IdealBasis<K> I0 = transfer_ideal(fam);
  IdealBasis<K> I(S);
  for (const auto& g : I0.gens()) I.add(map_by_name(g, S));
  const Ring MR = matrix_ring(p, 2, field);
  const IdealBasis<K> J0 = maximal_minors(build_A<K>(p, 2, MR));
  IdealBasis<K> J(S);
  for (const auto& g : J0.gens()) J.add(map_by_name(g, S));
  IdealBasis<K> ker = kernel_ideal<K>(p, field);

  for (const auto& g : I.gens()) rep.expect(multidegree_of(g).has_value(), "generator of I is not multihomogeneous");
  for (std::size_t i = 0; i < S.nvars(); ++i) {
    auto deg = multidegree_of(*phi.images[i]);
    rep.expect(deg && *deg == multidegree_of_monomial(S, ExponentVector::unit(S.nvars(), i)),
               "parametrization is not homogeneous at " + S.var(i));
  }

  auto GI = canonical_basis(I);
  MonomialIdeal inI = MonomialIdeal::leading(GI);
  MonomialIdeal L = ideal_L(p, 2);
  auto hSL = hilbert_by_multidegree(L, S, bound);
  auto hSI = hilbert_by_multidegree(inI, S, bound);

  nlohmann::json per_degree = nlohmann::json::array();
  std::vector<long> d(P, 0);
  auto visit = [&](const MultiDegree& D) {
    auto look = [&](const std::map<MultiDegree, long>& h) {
      auto it = h.find(D);
      return it == h.end() ? 0L : it->second;
    };
    const long dim_SL = look(hSL), dim_SI = look(hSI);
    const long closed = dim_initial_algebra(p, D);
    long brute = 0;
    for (const auto& m : target_monomials(p, D)) {
      if (!initial_algebra_member(m, p)) continue;
      ++brute;
      ExponentVector img = psi(m, p);
      rep.expect(multidegree_of_monomial(S, img) == D, "psi changes the multidegree at " + D.to_string());
      rep.expect(!L.contains(img), "psi image lies in L at " + D.to_string());
    }
    bool psi_phi_ok = true;
    for (const auto& mb : standard_monomials_of_multidegree(L, S, D, bound)) {
      ExponentVector m = phi_inverse(mb, phi);
      bool ok = initial_algebra_member(m, p) && psi(m, p) == mb;
      psi_phi_ok = psi_phi_ok && ok;
      rep.expect(ok, "psi(phi(" + monomial_to_string(S, mb) + ")) differs");
    }
    const std::string at = " at " + D.to_string();
    rep.expect(closed == brute, "closed-form initial algebra dimension differs from enumeration" + at);
    rep.expect(dim_SL >= dim_SI, "dim (S/L) < dim (S/I)" + at);
    rep.expect(dim_SI == closed, "dim (S/I) differs from the initial algebra dimension" + at);
    rep.expect(dim_SL == dim_SI, "dim (S/L) differs from dim (S/I)" + at);
    per_degree.push_back({{"d", D.values()},
                          {"dim_SL", dim_SL},
                          {"dim_SI", dim_SI},
                          {"dim_inA", closed},
                          {"psi_phi_ok", psi_phi_ok}});
  };
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i == P) {
      visit(MultiDegree(d));
      return;
    }
    for (long a = 0; a <= left; ++a) {
      d[i] = a;
      self(self, i + 1, left - a);
    }
    d[i] = 0;
  };
  rec(rec, 0, bound);

  const bool L_is_initial = inI == L;
  const bool eq_ker = ideal_equal(I, ker);
  const bool eq = ideal_equal(I, J);
  rep.expect(L_is_initial, "initial ideal of I differs from L");
  rep.expect(eq_ker, "kernel of the parametrization differs from I");
  rep.expect(eq, "I differs from the ideal of maximal minors");
  rep.details = {{"p", p},
                 {"degree_bound", bound},
                 {"per_degree", per_degree},
                 {"L_equals_in_I", L_is_initial},
                 {"kernel_equals_I", eq_ker},
                 {"ideal_equal", eq}};
  return rep;
}

}  // namespace

Report verify_q2_conjecture(int p, long degree_bound, const Field& field) {
  return visit_field(field, [&](auto tag) {
    return q2_impl<typename decltype(tag)::type>(p, degree_bound, field);
  });
}

template ParamHom<Rational> param_hom(int, const Field&);
template ParamHom<Fp> param_hom(int, const Field&);
template IdealBasis<Rational> kernel_ideal(int, const Field&);
template IdealBasis<Fp> kernel_ideal(int, const Field&);
template ExponentVector phi_inverse(const ExponentVector&, const ParamHom<Rational>&);
template ExponentVector phi_inverse(const ExponentVector&, const ParamHom<Fp>&);

}  // namespace til
