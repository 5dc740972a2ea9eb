#include "til/transfer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace til {

Ring symmetric_ring(std::size_t n, const Field& field, int p, const std::string& prefix) {
  Ring::Grading g;
  for (std::size_t i = 1; i <= n; ++i) g.emplace_back(std::vector<long>{static_cast<long>(i)}, p);
  return Ring(indexed_names(prefix, n), field, MonomialOrder::grevlex(), std::move(g));
}

Ring transfer_ring(std::size_t n, const Field& field, int p) {
  auto vars = indexed_names("e", n);
  vars.push_back("t");
  Ring::Grading g;
  for (std::size_t i = 1; i <= n; ++i) g.emplace_back(std::vector<long>{static_cast<long>(i)}, p);
  g.emplace_back(std::vector<long>{0}, p);
  return Ring(std::move(vars), field, MonomialOrder::grevlex(), std::move(g));
}

template <class K>
Polynomial<K> e_lookup(const Ring& r, long k, const std::string& prefix) {
  if (k == 0) return Polynomial<K>::one(r);
  auto idx = r.index_of(prefix + std::to_string(k));
  if (k < 0 || !idx) return Polynomial<K>(r);
  return Polynomial<K>::variable(r, *idx);
}

template <class K>
TransferFamily<K> build_transfer_family(int p, int q, int r, const Field& field) {
  if (p < 2) throw std::invalid_argument("p must be at least 2");
  if (q < 0) throw std::invalid_argument("q must be non-negative");
  if (r < 0 || r >= p) throw std::invalid_argument("r must satisfy 0 <= r < p");
  const std::size_t n = static_cast<std::size_t>(q * p + r);
  Ring R = transfer_ring(n, field, p);
  const auto t = Polynomial<K>::variable(R, "t");
  auto e = [&](long k) { return e_lookup<K>(R, k); };
  TransferFamily<K> fam{p, q, r, R, {}};
  Polynomial<K> f0(R);
  for (int k = 0; k <= q; ++k) f0 += e(static_cast<long>(k) * p) * t.pow(q - k);
  fam.f.push_back(f0);
  for (int k = 1; k < p; ++k) {
    Polynomial<K> fk(R);
    if (k <= r) {
      for (int j = 0; j <= q; ++j) fk += e(static_cast<long>(j) * p + k) * t.pow(q - j);
    } else {
      for (int j = 0; j + 1 <= q; ++j) fk += e(static_cast<long>(j) * p + k) * t.pow(q - 1 - j);
    }
    fam.f.push_back(fk);
  }
  return fam;
}

template <class K>
std::vector<Polynomial<K>> replaced_family(const TransferFamily<K>& fam) {
  std::vector<Polynomial<K>> out = fam.f;
  for (int i = 1; i <= fam.r; ++i) out[i] = fam.f[i] - e_lookup<K>(fam.ring, i) * fam.f[0];
  return out;
}

template <class K>
IdealBasis<K> transfer_ideal(const TransferFamily<K>& fam) {
  Ring S = symmetric_ring(fam.n(), fam.ring.field(), fam.p);
  return elimination_ideal(fam.ideal(), {"t"}, S);
}

Ring iota_source(int p, int q, const Field& field) {
  return symmetric_ring(static_cast<std::size_t>(q * p), field, p, "e'");
}

template <class K>
Images<K> iota_map(int p, int q, int r, const Ring& source, const Ring& target) {
  Images<K> out(source.nvars());
  for (int j = 1; j <= q * p; ++j) {
    const int d = j / p, i = j % p;
    Polynomial<K> img(target);
    if (i == 0 || i > r) {
      img = e_lookup<K>(target, j);
    } else {
      img = e_lookup<K>(target, static_cast<long>(d + 1) * p + i) -
            e_lookup<K>(target, static_cast<long>(d + 1) * p) * e_lookup<K>(target, i);
    }
    out[Ring::gen_index(j)] = img;
  }
  return out;
}

namespace {

// Standard-monomial counts keyed by (total degree, Z/p degree).
std::map<std::pair<long, long>, long> graded_counts(const MonomialIdeal& lead, const Ring& R,
                                                    long bound) {
  std::map<std::pair<long, long>, long> out;
  for (long d = 0; d <= bound; ++d)
    for (const auto& m : standard_monomials(lead, d)) ++out[{d, multidegree_of_monomial(R, m)[0]}];
  return out;
}

template <class K>
Report stability_impl(int p, int q, int r, long bound, const Field& field) {
  Report rep("stability");
  rep.params = {{"p", p}, {"q", q}, {"r", r}, {"degree_bound", bound}, {"field", field.name()}};
  const int n = q * p + r;

  auto fam0 = build_transfer_family<K>(p, q, 0, field);
  auto famr = build_transfer_family<K>(p, q, r, field);
  Ring A = iota_source(p, q, field);
  Ring RS = symmetric_ring(static_cast<std::size_t>(n), field, p);

  // I_qp, renamed into A.
  IdealBasis<K> Iqp_e = transfer_ideal(fam0);
  Images<K> rename(Iqp_e.ring().nvars());
  for (std::size_t i = 0; i < rename.size(); ++i) rename[i] = Polynomial<K>::variable(A, i);
  IdealBasis<K> Iqp(A);
  for (const auto& g : Iqp_e.gens()) Iqp.add(substitute(g, A, rename));

  Images<K> iota = iota_map<K>(p, q, r, A, RS);
  for (std::size_t j = 0; j < iota.size(); ++j) {
    auto deg = multidegree_of(*iota[j]);
    rep.expect(deg && *deg == multidegree_of_monomial(A, ExponentVector::unit(A.nvars(), j)),
               "iota image of " + A.var(j) + " is not homogeneous of the right Z/p degree");
  }

  IdealBasis<K> ext(RS);
  for (const auto& g : Iqp.gens()) ext.add(substitute(g, RS, iota));
  IdealBasis<K> In = transfer_ideal(famr);
  bool equal = ideal_equal(ext, In);
  rep.expect(equal, "extension of iota(I_qp) differs from I_n");

  // Generator replacements inside S_n[t].
  const Ring& T = famr.ring;
  IdealBasis<K> replaced(T, replaced_family(famr));
  rep.expect(ideal_equal(famr.ideal(), replaced), "S-pair replacement changed the ideal");
  Images<K> to_T(fam0.ring.nvars());
  for (std::size_t j = 0; j < iota.size(); ++j) to_T[j] = map_by_name(*iota[j], T);
  to_T.back() = Polynomial<K>::variable(T, "t");
  IdealBasis<K> g_ideal(T);
  for (const auto& f : fam0.f) g_ideal.add(substitute(f, T, to_T));
  rep.expect(ideal_equal(famr.ideal(), g_ideal), "iota-substituted family generates a different ideal");

  auto hx = graded_counts(MonomialIdeal::leading(canonical_basis(ext)), RS, bound);
  auto hn = graded_counts(MonomialIdeal::leading(canonical_basis(In)), RS, bound);
  for (const auto& [key, v] : hn) {
    auto it = hx.find(key);
    long w = it == hx.end() ? 0 : it->second;
    rep.expect(w == v, "Hilbert function differs in degree " + std::to_string(key.first) +
                           ", Z/p degree " + std::to_string(key.second));
  }
  rep.expect(hx.size() == hn.size(), "Hilbert function supports differ");

  nlohmann::json hilb = nlohmann::json::array();
  for (const auto& [key, v] : hn) hilb.push_back({key.first, key.second, v});
  rep.details = {{"I_qp_generators", Iqp.size()},
                 {"I_n_generators", In.size()},
                 {"ideals_equal", equal},
                 {"hilbert", hilb}};
  return rep;
}

// Determinants of the bottom rows of M restricted to column masks.
template <class K>
class MinorMemo {
 public:
  explicit MinorMemo(const SymbolicMatrix<K>& M) : M_(M) {
    if (M.cols() > 64) throw std::invalid_argument("too many columns for minor enumeration");
  }

  const Polynomial<K>& det(std::uint64_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const std::size_t k = static_cast<std::size_t>(__builtin_popcountll(mask));
    Polynomial<K> acc(M_.ring());
    if (k == 0) {
      acc = Polynomial<K>::one(M_.ring());
    } else {
      const std::size_t row = M_.rows() - k;
      std::size_t pos = 0;
      for (std::size_t c = 0; c < M_.cols(); ++c) {
        if (!(mask >> c & 1u)) continue;
        const auto& entry = M_(row, c);
        if (!entry.is_zero()) {
          Polynomial<K> sub = entry * det(mask & ~(std::uint64_t{1} << c));
          if (pos % 2) acc -= sub;
          else acc += sub;
        }
        ++pos;
      }
    }
    return memo_.emplace(mask, std::move(acc)).first->second;
  }

 private:
  const SymbolicMatrix<K>& M_;
  std::unordered_map<std::uint64_t, Polynomial<K>> memo_;
};

void column_subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  if (k > n) return;
  for (;;) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

template <class K>
Report antidiagonal_impl(int p, int q, const Field& field) {
  Report rep("initial");
  rep.params = {{"p", p}, {"q", q}, {"field", field.name()}};
  Ring S = matrix_ring(p, q, field);
  auto Ap = build_A_prime<K>(p, q, S);
  auto A = build_A<K>(p, q, S);

  // A' is a column rearrangement of A.
  auto column_keys = [](const SymbolicMatrix<K>& M) {
    std::vector<std::string> keys;
    for (std::size_t j = 0; j < M.cols(); ++j) {
      std::string s;
      for (const auto& e : M.column(j)) s += to_string(e) + ";";
      keys.push_back(s);
    }
    std::sort(keys.begin(), keys.end());
    return keys;
  };
  rep.expect(column_keys(A) == column_keys(Ap), "columns of A and A' differ as multisets");

  MonomialIdeal L = ideal_L(p, q);
  const std::size_t R = Ap.rows();
  std::vector<std::vector<std::size_t>> subsets;
  column_subsets(Ap.cols(), R, subsets);
  MinorMemo<K> memo(Ap);
  std::size_t zero_anti = 0, checked = 0;
  for (const auto& cols : subsets) {
    std::uint64_t mask = 0;
    for (auto c : cols) mask |= std::uint64_t{1} << c;
    const Polynomial<K>& det = memo.det(mask);
    Polynomial<K> anti = Polynomial<K>::one(S);
    for (std::size_t i = 0; i < R; ++i) anti *= Ap(i, cols[R - 1 - i]);
    std::string where = "columns";
    for (auto c : cols) where += " " + std::to_string(c + 1);
    ++checked;
    if (anti.is_zero()) {
      ++zero_anti;
      rep.expect(det.is_zero(), "zero antidiagonal but nonzero determinant at " + where);
      continue;
    }
    const ExponentVector& m = anti.lead_monomial();
    if (!rep.expect(!det.is_zero(), "nonzero antidiagonal but zero determinant at " + where)) continue;
    rep.expect(det.lead_monomial() == m, "leading term " + monomial_to_string(S, det.lead_monomial()) +
                                             " is not the antidiagonal " + monomial_to_string(S, m) +
                                             " at " + where);
    rep.expect(det.lead_coeff() == field_int<K>(S.field(), 1) ||
                   det.lead_coeff() == field_int<K>(S.field(), -1),
               "leading coefficient is not a unit sign at " + where);
    rep.expect(!has_large_gap(m, p), "antidiagonal has a large gap at " + where);
    rep.expect(L.contains(m), "antidiagonal not in L at " + where);
  }
  rep.details = {{"minors", checked}, {"zero_antidiagonals", zero_anti}, {"L_generators", L.gens().size()}};
  return rep;
}

template <class K>
Report conjecture_impl(int p, int q, const Field& field, GbCache* cache) {
  Report rep("conjecture");
  rep.params = {{"p", p}, {"q", q}, {"field", field.name()}};
  auto fam = build_transfer_family<K>(p, q, 0, field);
  const Ring S = symmetric_ring(fam.n(), field, p);
  IdealBasis<K> J = maximal_minors(build_A<K>(p, q, S));
  auto strings = [](const auto& polys) {
    std::vector<std::string> out;
    for (const auto& f : polys) out.push_back(to_string(f));
    return out;
  };
  const std::string tag = "p" + std::to_string(p) + "_q" + std::to_string(q) + "_" + field.name();
  std::function<GroebnerBasis<K>()> eliminate = [&] { return canonical_basis(transfer_ideal(fam)); };
  std::function<GroebnerBasis<K>()> minors = [&] { return canonical_basis(J); };
  auto GI = cache ? cache->get<K>("transfer_" + tag, strings(fam.f), eliminate) : eliminate();
  auto GJ = cache ? cache->get<K>("minors_" + tag, strings(J.gens()), minors) : minors();
  bool contained = ideal_contains(GI, J);
  bool equal = GI.size() == GJ.size() &&
               std::equal(GI.elements().begin(), GI.elements().end(), GJ.elements().begin());
  rep.expect(contained, "some maximal minor of A is not in the elimination ideal");
  rep.expect(equal, "elimination ideal differs from the ideal of maximal minors");
  if (!equal) {
    for (const auto& g : GI.elements())
      if (!ideal_member(g, GJ)) {
        rep.witnesses.push_back("in I but not in J: " + to_string(g));
        break;
      }
  }
  rep.details = {{"minor_generators", J.size()},
                 {"gb_size", GI.size()},
                 {"J_in_I", contained},
                 {"I_equals_J", equal}};
  return rep;
}

// Adds g.x^a for every permutation g of the n variables.
void add_orbit_sum(const ExponentVector& a, std::size_t n, std::map<std::vector<int>, long>& acc) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> img(n);
    for (std::size_t i = 0; i < n; ++i) img[perm[i]] = a[i];
    ++acc[img];
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

Report check_stability(int p, int q, int r, long degree_bound, const Field& field) {
  return visit_field(field, [&](auto tag) {
    return stability_impl<typename decltype(tag)::type>(p, q, r, degree_bound, field);
  });
}

template <class K>
std::vector<Polynomial<K>> SymbolicMatrix<K>::column(std::size_t j) const {
  std::vector<Polynomial<K>> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
  return out;
}

template <class K>
SymbolicMatrix<K> SymbolicMatrix<K>::select_columns(const std::vector<std::size_t>& cols) const {
  SymbolicMatrix<K> out(ring_, rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(i, cols.at(j));
  return out;
}

template <class K>
nlohmann::json SymbolicMatrix<K>::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < rows_; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < cols_; ++j) row.push_back(to_string((*this)(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Ring matrix_ring(int p, int q, const Field& field) {
  return symmetric_ring(static_cast<std::size_t>(q * p), field, p);
}

template <class K>
std::vector<Polynomial<K>> sylvester_column(int p, int q, int i, int j, const Ring& S) {
  const std::size_t rows = static_cast<std::size_t>(2 * q - 1);
  std::vector<Polynomial<K>> v(rows, Polynomial<K>(S));
  if (i == 0) {
    if (j < 1 || j > q - 1) throw std::out_of_range("column index out of range for A_0");
    for (int k = 0; k <= q; ++k) v[j - 1 + k] = e_lookup<K>(S, static_cast<long>(k) * p);
  } else {
    if (i >= p || j < 1 || j > q) throw std::out_of_range("column index out of range for A_i");
    for (int k = 0; k < q; ++k) v[j - 1 + k] = e_lookup<K>(S, static_cast<long>(k) * p + i);
  }
  return v;
}

template <class K>
SymbolicMatrix<K> build_A(int p, int q, const Ring& S) {
  if (q < 1) throw std::invalid_argument("the matrix A needs q >= 1");
  const std::size_t rows = static_cast<std::size_t>(2 * q - 1);
  const std::size_t cols = static_cast<std::size_t>((q - 1) + (p - 1) * q);
  SymbolicMatrix<K> M(S, rows, cols);
  std::size_t c = 0;
  auto put = [&](const std::vector<Polynomial<K>>& v) {
    for (std::size_t r = 0; r < rows; ++r) M(r, c) = v[r];
    ++c;
  };
  for (int j = 1; j <= q - 1; ++j) put(sylvester_column<K>(p, q, 0, j, S));
  for (int i = 1; i < p; ++i)
    for (int j = 1; j <= q; ++j) put(sylvester_column<K>(p, q, i, j, S));
  return M;
}

template <class K>
SymbolicMatrix<K> build_A_prime(int p, int q, const Ring& S) {
  if (q < 1) throw std::invalid_argument("the matrix A' needs q >= 1");
  const std::size_t rows = static_cast<std::size_t>(2 * q - 1);
  const std::size_t cols = static_cast<std::size_t>((q - 1) + (p - 1) * q);
  const long qp = static_cast<long>(q) * p;
  SymbolicMatrix<K> M(S, rows, cols);
  for (std::size_t i = 1; i <= rows; ++i)
    for (std::size_t j = 1; j <= cols; ++j) {
      long k = static_cast<long>(p) * static_cast<long>(i) + static_cast<long>(j) - qp;
      M(i - 1, j - 1) = k > qp ? Polynomial<K>(S) : e_lookup<K>(S, k);
    }
  return M;
}

template <class K>
Polynomial<K> determinant(const SymbolicMatrix<K>& M) {
  if (M.rows() != M.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  MinorMemo<K> memo(M);
  std::uint64_t mask = M.cols() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << M.cols()) - 1;
  return memo.det(mask);
}

template <class K>
std::vector<Polynomial<K>> all_maximal_minors(const SymbolicMatrix<K>& M) {
  if (M.rows() > M.cols()) throw std::invalid_argument("more rows than columns");
  std::vector<std::vector<std::size_t>> subsets;
  column_subsets(M.cols(), M.rows(), subsets);
  MinorMemo<K> memo(M);
  std::vector<Polynomial<K>> out;
  for (const auto& cols : subsets) {
    std::uint64_t mask = 0;
    for (auto c : cols) mask |= std::uint64_t{1} << c;
    out.push_back(memo.det(mask));
  }
  return out;
}

template <class K>
IdealBasis<K> maximal_minors(const SymbolicMatrix<K>& M) {
  return IdealBasis<K>(M.ring(), all_maximal_minors(M));
}

template <class K>
Polynomial<K> sum_of_minors_generator(int p, int q, const std::vector<int>& alpha, const Ring& S) {
  if (alpha.size() != static_cast<std::size_t>(p - 1))
    throw std::invalid_argument("alpha must have p-1 entries");
  if (std::accumulate(alpha.begin(), alpha.end(), 0) != q || *std::min_element(alpha.begin(), alpha.end()) < 0)
    throw std::invalid_argument("alpha must be a composition of q");
  std::vector<int> beta;
  for (int i = 0; i < p - 1; ++i) beta.insert(beta.end(), alpha[i], i + 1);
  const std::size_t n = static_cast<std::size_t>(2 * q - 1);
  Polynomial<K> sum(S);
  do {
    SymbolicMatrix<K> M(S, n, n);
    std::size_t c = 0;
    auto put = [&](const std::vector<Polynomial<K>>& v) {
      for (std::size_t r = 0; r < n; ++r) M(r, c) = v[r];
      ++c;
    };
    for (int j = 1; j <= q - 1; ++j) put(sylvester_column<K>(p, q, 0, j, S));
    for (int j = 1; j <= q; ++j) put(sylvester_column<K>(p, q, beta[j - 1], j, S));
    sum += determinant(M);
  } while (std::next_permutation(beta.begin(), beta.end()));
  return sum;
}

template <class K>
IdealBasis<K> sum_of_minors_ideal(int p, int q, const Ring& S) {
  IdealBasis<K> out(S);
  std::vector<int> alpha(static_cast<std::size_t>(p - 1), 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == alpha.size()) {
      alpha[i] = left;
      out.add(sum_of_minors_generator<K>(p, q, alpha, S));
      return;
    }
    for (int a = left; a >= 0; --a) {
      alpha[i] = a;
      self(self, i + 1, left - a);
    }
  };
  rec(rec, 0, q);
  return out;
}

bool has_large_gap(const ExponentVector& m, int p) {
  // Windows start at positions 1..n-p+1, i.e. they never reach the last
  // variable; this is the window range of L.
  std::size_t run = 0;
  for (std::size_t i = 0; i + 1 < m.size(); ++i) {
    run = m[i] == 0 ? run + 1 : 0;
    if (run >= static_cast<std::size_t>(p - 1)) return true;
  }
  return false;
}

MonomialIdeal ideal_L(int p, int q) {
  const std::size_t n = static_cast<std::size_t>(q * p);
  std::optional<MonomialIdeal> acc;
  for (int j = 1; j <= (q - 1) * p + 1; ++j) {
    std::vector<ExponentVector> g;
    for (int k = j; k <= j + p - 2; ++k) g.push_back(ExponentVector::unit(n, Ring::gen_index(k)));
    MonomialIdeal window(n, std::move(g));
    acc = acc ? acc->intersect(window) : window;
  }
  return acc ? *acc : MonomialIdeal(n, {ExponentVector(n)});
}

Report verify_antidiagonal_lead(int p, int q, const Field& field) {
  return visit_field(field, [&](auto tag) {
    return antidiagonal_impl<typename decltype(tag)::type>(p, q, field);
  });
}

Report verify_gap_lemma(int p, int q, long degree_bound) {
  Report rep("gap-lemma");
  rep.params = {{"p", p}, {"q", q}, {"degree_bound", degree_bound}};
  MonomialIdeal L = ideal_L(p, q);
  const std::size_t n = static_cast<std::size_t>(q * p);
  std::size_t count = 0;
  for (long d = 0; d <= degree_bound; ++d)
    for (const auto& m : monomials_of_degree(n, d)) {
      ++count;
      rep.expect(has_large_gap(m, p) == !L.contains(m),
                 "gap criterion disagrees with L at exponent vector of degree " + std::to_string(d));
    }
  rep.details = {{"monomials", count}};
  return rep;
}

Report check_conjecture(int p, int q, const Field& field, GbCache* cache) {
  return visit_field(field, [&](auto tag) {
    return conjecture_impl<typename decltype(tag)::type>(p, q, field, cache);
  });
}

Report transfer_image_sanity(int p, std::size_t samples, long max_degree, std::uint64_t seed) {
  Report rep("transfer-sanity");
  rep.params = {{"p", p}, {"samples", samples}, {"max_degree", max_degree}, {"seed", seed}};
  if (p < 2 || p > 5 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("transfer sanity check needs a prime p <= 5");
  const Field F = Field::prime(static_cast<std::uint64_t>(p));
  const std::size_t n = static_cast<std::size_t>(p);
  Ring X(indexed_names("x", n), F, MonomialOrder::lex());
  Ring E = symmetric_ring(n, F, p);

  std::vector<Polynomial<Fp>> elem;  // e_1..e_n as polynomials in x
  for (std::size_t i = 1; i <= n; ++i) {
    Polynomial<Fp> s(X);
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(i), true);
    do {
      ExponentVector m(n);
      for (std::size_t k = 0; k < n; ++k)
        if (pick[k]) m.set(k, 1);
      s += Polynomial<Fp>::monomial(X, m);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    elem.push_back(s);
  }
  Images<Fp> e_to_x(n);
  for (std::size_t i = 0; i < n; ++i) e_to_x[i] = elem[i];

  std::vector<Polynomial<Fp>> small;
  for (int i = 1; i < p; ++i) small.push_back(Polynomial<Fp>::variable(E, Ring::gen_index(i)));
  IdealBasis<Fp> target(E, small);
  GroebnerBasis<Fp> target_gb = canonical_basis(target);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> deg_dist(0, max_degree);
  std::uniform_int_distribution<std::size_t> var_dist(0, n - 1);
  nlohmann::json sample_log = nlohmann::json::array();
  for (std::size_t s = 0; s < samples; ++s) {
    ExponentVector a(n);
    for (long d = deg_dist(rng); d > 0; --d) {
      std::size_t v = var_dist(rng);
      a.set(v, a[v] + 1);
    }
    std::map<std::vector<int>, long> orbit;
    add_orbit_sum(a, n, orbit);
    std::vector<Term<Fp>> terms;
    for (const auto& [exps, c] : orbit)
      terms.push_back({ExponentVector::from(exps), Fp::from_int(c, F)});
    Polynomial<Fp> tr(X, std::move(terms));

    // Classical rewriting in elementary symmetric polynomials.
    Polynomial<Fp> rest = tr, expr(E);
    bool symmetric = true;
    while (!rest.is_zero()) {
      const auto& lt = rest.lead();
      ExponentVector em(n);
      for (std::size_t i = 0; i < n; ++i) {
        int next = i + 1 < n ? lt.mono[i + 1] : 0;
        if (lt.mono[i] < next) {
          symmetric = false;
          break;
        }
        em.set(i, lt.mono[i] - next);
      }
      if (!symmetric) break;
      Polynomial<Fp> prod = Polynomial<Fp>::constant(X, lt.coeff);
      for (std::size_t i = 0; i < n; ++i)
        if (em[i]) prod *= elem[i].pow(em[i]);
      expr += Polynomial<Fp>::monomial(E, em, lt.coeff);
      rest -= prod;
    }
    std::string label = "Tr(" + monomial_to_string(X, a) + ")";
    if (!rep.expect(symmetric, "non-symmetric intermediate while rewriting " + label)) continue;
    rep.expect(substitute(expr, X, e_to_x) == tr, "rewriting of " + label + " does not expand back");
    rep.expect(ideal_member(expr, target_gb), label + " = " + to_string(expr) + " is outside <e1..e_{p-1}>");
    sample_log.push_back({{"monomial", monomial_to_string(X, a)}, {"transfer", to_string(expr)}});
  }

  auto fam = build_transfer_family<Fp>(p, 1, 0, F);
  IdealBasis<Fp> elim = transfer_ideal(fam);
  bool elim_ok = ideal_equal(elim, target);
  rep.expect(elim_ok, "elimination ideal for n = p differs from <e1..e_{p-1}>");
  rep.details = {{"samples", sample_log}, {"elimination_matches", elim_ok}};
  return rep;
}

#define TIL_INSTANTIATE(K)                                                                      \
  template Polynomial<K> e_lookup(const Ring&, long, const std::string&);                       \
  template TransferFamily<K> build_transfer_family(int, int, int, const Field&);                \
  template std::vector<Polynomial<K>> replaced_family(const TransferFamily<K>&);                \
  template IdealBasis<K> transfer_ideal(const TransferFamily<K>&);                              \
  template Images<K> iota_map(int, int, int, const Ring&, const Ring&);                         \
  template class SymbolicMatrix<K>;                                                             \
  template SymbolicMatrix<K> build_A(int, int, const Ring&);                                    \
  template SymbolicMatrix<K> build_A_prime(int, int, const Ring&);                              \
  template std::vector<Polynomial<K>> sylvester_column(int, int, int, int, const Ring&);        \
  template Polynomial<K> determinant(const SymbolicMatrix<K>&);                                 \
  template std::vector<Polynomial<K>> all_maximal_minors(const SymbolicMatrix<K>&);             \
  template IdealBasis<K> maximal_minors(const SymbolicMatrix<K>&);                              \
  template Polynomial<K> sum_of_minors_generator(int, int, const std::vector<int>&, const Ring&); \
  template IdealBasis<K> sum_of_minors_ideal(int, int, const Ring&);

TIL_INSTANTIATE(Rational)
TIL_INSTANTIATE(Fp)

}  // namespace til
