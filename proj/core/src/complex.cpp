#include "til/complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "til/io.hpp"
#include "til/parallel.hpp"

namespace til {

MultiDegree variable_weight(const Ring& ring, std::size_t i) {
  if (const auto* g = ring.grading()) return (*g)[i];
  return MultiDegree(std::vector<long>{1});
}

MultiDegree monomial_weight(const Ring& ring, const ExponentVector& m) {
  MultiDegree w = variable_weight(ring, 0).scaled(0);
  for (std::size_t i = 0; i < ring.nvars(); ++i)
    if (m[i]) w += variable_weight(ring, i).scaled(m[i]);
  return w;
}

std::vector<ExponentVector> monomials_of_weight(const Ring& ring, const MultiDegree& w) {
  const std::size_t n = ring.nvars();
  std::vector<MultiDegree> vw;
  for (std::size_t i = 0; i < n; ++i) {
    vw.push_back(variable_weight(ring, i));
    bool positive = false;
    for (std::size_t k = 0; k < vw.back().size(); ++k) {
      if (vw.back()[k] < 0) throw std::invalid_argument("negative variable weight");
      positive = positive || vw.back()[k] > 0;
    }
    if (!positive || vw.back().modulus() != 0) throw std::invalid_argument("variable weights must be positive integer vectors");
  }
  std::vector<ExponentVector> out;
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] < 0) return out;
  ExponentVector cur(n);
  auto rec = [&](auto&& self, std::size_t i, MultiDegree left) -> void {
    if (i == n) {
      if (left.is_zero()) out.push_back(cur);
      return;
    }
    int e = 0;
    while (true) {
      cur.set(i, e);
      self(self, i + 1, left);
      left -= vw[i];
      bool ok = true;
      for (std::size_t k = 0; k < left.size(); ++k) ok = ok && left[k] >= 0;
      if (!ok) break;
      ++e;
    }
    cur.set(i, 0);
  };
  rec(rec, 0, w);
  return out;
}

std::vector<MultiDegree> weights_up_to(std::size_t dim, long max_total) {
  std::vector<MultiDegree> out;
  std::vector<long> v(dim, 0);
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i == dim) {
      out.emplace_back(v);
      return;
    }
    for (long a = 0; a <= left; ++a) {
      v[i] = a;
      self(self, i + 1, left - a);
    }
    v[i] = 0;
  };
  rec(rec, 0, max_total);
  std::stable_sort(out.begin(), out.end(),
                   [](const MultiDegree& a, const MultiDegree& b) { return a.total() < b.total(); });
  return out;
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

void GradedFreeModule::add(std::string label, long twist, MultiDegree weight) {
  labels_.push_back(std::move(label));
  twists_.push_back(twist);
  weights_.push_back(std::move(weight));
}

void GradedFreeModule::append(const GradedFreeModule& o) {
  for (std::size_t i = 0; i < o.rank(); ++i) add(o.labels_[i], o.twists_[i], o.weights_[i]);
}

template <class K>
ComplexMap<K>::ComplexMap(Ring ring, GradedFreeModule source, GradedFreeModule target)
    : ring_(std::move(ring)), source_(std::move(source)), target_(std::move(target)) {
  m_.assign(target_.rank(), std::vector<Polynomial<K>>(source_.rank(), Polynomial<K>(ring_)));
}

template <class K>
bool ComplexMap<K>::is_zero() const {
  for (const auto& row : m_)
    for (const auto& e : row)
      if (!e.is_zero()) return false;
  return true;
}

template <class K>
ComplexMap<K> ComplexMap<K>::operator-() const {
  ComplexMap r = *this;
  for (auto& row : r.m_)
    for (auto& e : row) e = -e;
  return r;
}

template <class K>
ComplexMap<K> ComplexMap<K>::combine(const ComplexMap& b, bool subtract) const {
  if (source_.rank() != b.source_.rank() || target_.rank() != b.target_.rank())
    throw std::invalid_argument("map shapes differ");
  ComplexMap r = *this;
  for (std::size_t i = 0; i < m_.size(); ++i)
    for (std::size_t j = 0; j < source_.rank(); ++j)
      r.m_[i][j] = subtract ? m_[i][j] - b.m_[i][j] : m_[i][j] + b.m_[i][j];
  return r;
}

template <class K>
ComplexMap<K> ComplexMap<K>::after(const ComplexMap& b) const {
  if (b.target_.rank() != source_.rank()) throw std::invalid_argument("maps are not composable");
  ComplexMap r(ring_, b.source_, target_);
  for (std::size_t i = 0; i < target_.rank(); ++i)
    for (std::size_t k = 0; k < source_.rank(); ++k) {
      if (m_[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b.source_.rank(); ++j)
        if (!b.m_[k][j].is_zero()) r.m_[i][j] += m_[i][k] * b.m_[k][j];
    }
  return r;
}

template <class K>
std::vector<std::pair<std::size_t, std::size_t>> ComplexMap<K>::unit_entries() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < m_.size(); ++i)
    for (std::size_t j = 0; j < source_.rank(); ++j)
      if (!m_[i][j].constant_term().is_zero()) out.emplace_back(i, j);
  return out;
}

template <class K>
std::vector<std::pair<std::size_t, std::size_t>> ComplexMap<K>::degree_violations() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < m_.size(); ++i)
    for (std::size_t j = 0; j < source_.rank(); ++j) {
      const auto& e = m_[i][j];
      if (e.is_zero()) continue;
      const MultiDegree want = source_.weight(j) - target_.weight(i);
      const long deg = source_.twist(j) - target_.twist(i);
      bool ok = true;
      for (const auto& t : e.terms())
        ok = ok && static_cast<long>(t.mono.degree()) == deg && monomial_weight(ring_, t.mono) == want;
      if (!ok) out.emplace_back(i, j);
    }
  return out;
}

template <class K>
std::pair<long, long> ComplexMap<K>::entry_degree_range() const {
  long lo = -1, hi = -1;
  for (const auto& row : m_)
    for (const auto& e : row) {
      if (e.is_zero()) continue;
      lo = lo < 0 ? e.min_degree() : std::min(lo, e.min_degree());
      hi = std::max(hi, e.degree());
    }
  return {lo, hi};
}

template <class K>
nlohmann::json ComplexMap<K>::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m_) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& e : row) r.push_back(to_string(e));
    rows.push_back(r);
  }
  return {{"source", source_.labels()}, {"target", target_.labels()}, {"matrix", rows}};
}

template <class K>
std::vector<std::size_t> GradedComplex<K>::ranks() const {
  std::vector<std::size_t> r;
  for (const auto& t : terms) r.push_back(t.rank());
  return r;
}

template <class K>
long GradedComplex<K>::length() const {
  long last = -1;
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (terms[i].rank() > 0) last = static_cast<long>(i);
  return last;
}

template <class K>
std::vector<std::size_t> GradedComplex<K>::d_squared_failures() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < d.size(); ++i)
    if (!compose(d[i - 1], d[i]).is_zero()) out.push_back(i);
  return out;
}

DegreeBasis::DegreeBasis(const Ring& ring, const GradedFreeModule& M, const MultiDegree& w) {
  lookup_.resize(M.rank());
  std::map<MultiDegree, std::vector<ExponentVector>> cache;
  for (std::size_t g = 0; g < M.rank(); ++g) {
    const MultiDegree rest = w - M.weight(g);
    auto it = cache.find(rest);
    if (it == cache.end()) it = cache.emplace(rest, monomials_of_weight(ring, rest)).first;
    for (const auto& m : it->second) {
      lookup_[g].emplace(m.to_vector(), cells_.size());
      cells_.emplace_back(g, m);
    }
  }
}

std::optional<std::size_t> DegreeBasis::index(std::size_t gen, const ExponentVector& m) const {
  auto it = lookup_.at(gen).find(m.to_vector());
  if (it == lookup_[gen].end()) return std::nullopt;
  return it->second;
}

template <class K>
SparseMatrix<K> degree_block(const ComplexMap<K>& f, const DegreeBasis& src, const DegreeBasis& tgt) {
  SparseMatrix<K> M;
  M.rows = tgt.size();
  M.cols = src.size();
  for (std::size_t c = 0; c < src.size(); ++c) {
    const auto& [j, s] = src.cell(c);
    for (std::size_t i = 0; i < f.target().rank(); ++i) {
      for (const auto& t : f.at(i, j).terms()) {
        auto r = tgt.index(i, t.mono * s);
        if (!r) throw std::logic_error("map is not homogeneous for the module weights");
        M.add(*r, c, t.coeff);
      }
    }
  }
  return M;
}

template <class K>
std::vector<HomologyBlock> homology_by_weight(const GradedComplex<K>& C, long max_total) {
  const std::size_t dim = variable_weight(C.ring, 0).size();
  const auto weights = weights_up_to(dim, max_total);
  const std::size_t n = C.terms.size();
  std::vector<HomologyBlock> out(weights.size());
  parallel_for(weights.size(), [&](std::size_t w) {
    HomologyBlock& b = out[w];
    b.weight = weights[w];
    std::vector<DegreeBasis> bases;
    for (const auto& T : C.terms) bases.emplace_back(C.ring, T, b.weight);
    b.term_dims.resize(n);
    for (std::size_t i = 0; i < n; ++i) b.term_dims[i] = static_cast<long>(bases[i].size());
    std::vector<SparseMatrix<K>> blocks(n);
    for (std::size_t i = 1; i < n; ++i)
      if (bases[i].size() && bases[i - 1].size()) blocks[i] = degree_block(C.d[i - 1], bases[i], bases[i - 1]);
    auto h = chain_homology(b.term_dims, blocks);
    b.ranks = std::move(h.ranks);
    b.homology = std::move(h.homology);
    b.exact_recomputations = h.exact_recomputations;
  });
  return out;
}

template <class K>
GradedComplex<K> koszul_complex(const Ring& ring, const std::vector<std::size_t>& vars) {
  GradedComplex<K> C{ring, {}, {}};
  const std::size_t r = vars.size();
  std::vector<std::vector<std::vector<std::size_t>>> bases;
  const MultiDegree zero = variable_weight(ring, 0).scaled(0);
  for (std::size_t i = 0; i <= r; ++i) {
    bases.push_back(subsets(r, i));
    GradedFreeModule M;
    for (const auto& J : bases.back()) {
      std::string label = J.empty() ? "1" : "";
      MultiDegree w = zero;
      for (std::size_t k = 0; k < J.size(); ++k) {
        label += (k ? "^" : "") + ring.var(vars[J[k]]);
        w += variable_weight(ring, vars[J[k]]);
      }
      M.add(label, static_cast<long>(i), w);
    }
    C.terms.push_back(M);
  }
  for (std::size_t i = 1; i <= r; ++i) {
    ComplexMap<K> d(ring, C.terms[i], C.terms[i - 1]);
    std::map<std::vector<std::size_t>, std::size_t> where;
    for (std::size_t t = 0; t < bases[i - 1].size(); ++t) where.emplace(bases[i - 1][t], t);
    for (std::size_t s = 0; s < bases[i].size(); ++s) {
      const auto& J = bases[i][s];
      for (std::size_t k = 0; k < J.size(); ++k) {
        auto rest = J;
        rest.erase(rest.begin() + static_cast<long>(k));
        auto x = Polynomial<K>::variable(ring, vars[J[k]]);
        d.at(where.at(rest), s) += (k % 2 == 0) ? -x : x;
      }
    }
    C.d.push_back(std::move(d));
  }
  return C;
}

template class ComplexMap<Rational>;
template class ComplexMap<Fp>;
template struct GradedComplex<Rational>;
template struct GradedComplex<Fp>;
template SparseMatrix<Rational> degree_block(const ComplexMap<Rational>&, const DegreeBasis&, const DegreeBasis&);
template SparseMatrix<Fp> degree_block(const ComplexMap<Fp>&, const DegreeBasis&, const DegreeBasis&);
template std::vector<HomologyBlock> homology_by_weight(const GradedComplex<Rational>&, long);
template std::vector<HomologyBlock> homology_by_weight(const GradedComplex<Fp>&, long);
template GradedComplex<Rational> koszul_complex(const Ring&, const std::vector<std::size_t>&);
template GradedComplex<Fp> koszul_complex(const Ring&, const std::vector<std::size_t>&);

}  // namespace til
