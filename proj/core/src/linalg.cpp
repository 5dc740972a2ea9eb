#include "til/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace til {

namespace {

std::uint32_t mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t powmod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint32_t mpz_residue(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

Rational zero_like(const Rational&) { return Rational(0); }
Fp zero_like(const Fp& like) { return Fp(0, like.modulus()); }
Rational one_like(const Rational&) { return Rational(1); }
Fp one_like(const Fp& like) { return Fp(1, like.modulus()); }

template <class K>
void axpy(SparseVector<K>& y, const K& a, const SparseVector<K>& x) {
  for (const auto& [k, v] : x) {
    auto it = y.find(k);
    if (it == y.end()) {
      y.emplace(k, a * v);
    } else {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

template <class K>
void axpy(std::map<std::size_t, K>& y, const K& a, const std::map<std::size_t, K>& x) {
  for (const auto& [k, v] : x) {
    auto it = y.find(k);
    if (it == y.end()) {
      y.emplace(k, a * v);
    } else {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

}  // namespace

std::optional<std::uint32_t> residue(const Rational& x, std::uint32_t prime) {
  std::uint32_t den = mpz_residue(x.value().get_den(), prime);
  if (den == 0) return std::nullopt;
  return mulmod(mpz_residue(x.value().get_num(), prime), powmod(den, prime - 2, prime), prime);
}

std::optional<std::uint32_t> residue(const Fp& x, std::uint32_t prime) {
  if (x.modulus() != prime) return std::nullopt;
  return x.value();
}

std::size_t rank_mod(std::size_t rows, std::size_t cols, std::vector<std::uint32_t> a,
                     std::uint32_t p) {
  if (a.size() != rows * cols) throw std::invalid_argument("matrix data has the wrong size");
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != rank)
      for (std::size_t k = c; k < cols; ++k) std::swap(a[piv * cols + k], a[rank * cols + k]);
    const std::uint32_t inv = powmod(a[rank * cols + c], p - 2, p);
    for (std::size_t k = c; k < cols; ++k) a[rank * cols + k] = mulmod(a[rank * cols + k], inv, p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const std::uint32_t f = a[r * cols + c];
      if (f == 0) continue;
      const std::uint32_t nf = p - f;
      for (std::size_t k = c; k < cols; ++k) {
        const std::uint32_t x = a[rank * cols + k];
        if (x) a[r * cols + k] = static_cast<std::uint32_t>((a[r * cols + k] + static_cast<std::uint64_t>(nf) * x) % p);
      }
    }
    ++rank;
  }
  return rank;
}

template <class K>
std::size_t rank_exact(const SparseMatrix<K>& m) {
  std::vector<SparseVector<K>> rows(m.rows);
  for (const auto& e : m.entries) {
    if (e.row >= m.rows || e.col >= m.cols) throw std::out_of_range("matrix entry out of range");
    auto [it, fresh] = rows[e.row].emplace(static_cast<std::int64_t>(e.col), e.value);
    if (!fresh) it->second += e.value;
    if (it->second.is_zero()) rows[e.row].erase(it);
  }
  std::map<std::int64_t, SparseVector<K>> pivots;
  for (auto& r : rows) {
    while (!r.empty()) {
      auto lead = r.begin();
      auto pv = pivots.find(lead->first);
      if (pv == pivots.end()) {
        const K lc = lead->second;
        SparseVector<K> normalized;
        for (const auto& [k, v] : r) normalized.emplace(k, v / lc);
        pivots.emplace(lead->first, std::move(normalized));
        break;
      }
      K f = -lead->second;
      axpy(r, f, pv->second);
    }
  }
  return pivots.size();
}

template <class K>
RankResult rank_fast(const SparseMatrix<K>& m) {
  std::uint32_t prime = kRankPrime;
  bool exact = false;
  if constexpr (std::is_same_v<K, Fp>) {
    if (!m.entries.empty()) prime = m.entries.front().value.modulus();
    exact = true;
  }
  std::vector<std::uint32_t> data(m.rows * m.cols, 0);
  for (const auto& e : m.entries) {
    auto r = residue(e.value, prime);
    if (!r) return {rank_exact(m), true};
    auto& cell = data[e.row * m.cols + e.col];
    cell = static_cast<std::uint32_t>((static_cast<std::uint64_t>(cell) + *r) % prime);
  }
  return {rank_mod(m.rows, m.cols, std::move(data), prime), exact};
}

template <class K>
ChainHomology chain_homology(const std::vector<long>& dims, const std::vector<SparseMatrix<K>>& maps) {
  const std::size_t n = dims.size();
  ChainHomology out;
  out.ranks.assign(n + 1, 0);
  std::vector<bool> exact(n + 1, true);
  for (std::size_t i = 1; i < n && i < maps.size(); ++i) {
    if (dims[i] == 0 || dims[i - 1] == 0) continue;
    auto r = rank_fast(maps[i]);
    out.ranks[i] = static_cast<long>(r.rank);
    exact[i] = r.exact;
  }
  auto homology = [&](std::size_t i) { return dims[i] - out.ranks[i] - out.ranks[i + 1]; };
  std::vector<bool> pinned(n + 1, false);
  for (std::size_t i = 0; i < n; ++i)
    if (homology(i) == 0) pinned[i] = pinned[i + 1] = true;
  for (std::size_t i = 1; i < n && i < maps.size(); ++i)
    if (!exact[i] && !pinned[i] && out.ranks[i] < std::min(dims[i], dims[i - 1])) {
      out.ranks[i] = static_cast<long>(rank_exact(maps[i]));
      ++out.exact_recomputations;
    }
  out.homology.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.homology[i] = homology(i);
  out.ranks.resize(n);
  return out;
}

template <class K>
SpanSolver<K>::SpanSolver(const std::vector<SparseVector<K>>& basis) : n_(basis.size()) {
  for (std::size_t j = 0; j < basis.size(); ++j) {
    SparseVector<K> r = basis[j];
    if (r.empty()) throw std::invalid_argument("zero vector in spanning family");
    std::map<std::size_t, K> combo;
    combo.emplace(j, one_like(r.begin()->second));
    for (const auto& pr : rows_) {
      auto it = r.find(pr.pivot);
      if (it == r.end()) continue;
      K f = -it->second;
      axpy(r, f, pr.row);
      axpy(combo, f, pr.combo);
    }
    if (r.empty()) throw std::invalid_argument("spanning family is linearly dependent");
    // Keep the rows fully reduced so coordinates need a single pass.
    const std::int64_t piv = r.begin()->first;
    K inv = one_like(r.begin()->second) / r.begin()->second;
    for (auto& [k, v] : r) v *= inv;
    for (auto& [k, v] : combo) v *= inv;
    for (auto& pr : rows_) {
      auto it = pr.row.find(piv);
      if (it == pr.row.end()) continue;
      K f = -it->second;
      axpy(pr.row, f, r);
      axpy(pr.combo, f, combo);
    }
    by_pivot_.emplace(piv, rows_.size());
    rows_.push_back({piv, std::move(r), std::move(combo)});
  }
}

template <class K>
std::optional<std::vector<K>> SpanSolver<K>::coordinates(const SparseVector<K>& v) const {
  std::vector<K> out;
  if (n_ == 0) return v.empty() ? std::optional<std::vector<K>>(out) : std::nullopt;
  const K zero = zero_like(rows_.front().row.begin()->second);
  out.assign(n_, zero);
  SparseVector<K> r = v;
  while (!r.empty()) {
    auto lead = r.begin();
    auto pv = by_pivot_.find(lead->first);
    if (pv == by_pivot_.end()) return std::nullopt;
    const auto& pr = rows_[pv->second];
    K f = lead->second;
    for (const auto& [j, c] : pr.combo) out[j] += f * c;
    axpy(r, -f, pr.row);
  }
  return out;
}

template std::size_t rank_exact(const SparseMatrix<Rational>&);
template std::size_t rank_exact(const SparseMatrix<Fp>&);
template RankResult rank_fast(const SparseMatrix<Rational>&);
template RankResult rank_fast(const SparseMatrix<Fp>&);
template ChainHomology chain_homology(const std::vector<long>&, const std::vector<SparseMatrix<Rational>>&);
template ChainHomology chain_homology(const std::vector<long>&, const std::vector<SparseMatrix<Fp>>&);
template class SpanSolver<Rational>;
template class SpanSolver<Fp>;

}  // namespace til
