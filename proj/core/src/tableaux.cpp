#include "til/tableaux.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace til {

bool is_semistandard(const Tableau& t, int m) {
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (t[r].empty() || (r > 0 && t[r].size() > t[r - 1].size())) return false;
    for (std::size_t c = 0; c < t[r].size(); ++c) {
      const int x = t[r][c];
      if (x < 1 || x > m) return false;
      if (c > 0 && t[r][c - 1] > x) return false;
      if (r > 0 && t[r - 1][c] >= x) return false;
    }
  }
  return true;
}

std::vector<Tableau> semistandard_tableaux(const std::vector<int>& shape, int m) {
  for (std::size_t i = 1; i < shape.size(); ++i)
    if (shape[i] > shape[i - 1]) throw std::invalid_argument("shape is not a partition");
  std::vector<Tableau> out;
  Tableau t;
  for (int len : shape) t.emplace_back(static_cast<std::size_t>(len), 0);
  // Fill cells in row-major order with the smallest admissible values first.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t r = 0; r < t.size(); ++r)
    for (std::size_t c = 0; c < t[r].size(); ++c) cells.emplace_back(r, c);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      out.push_back(t);
      return;
    }
    auto [r, c] = cells[k];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int x = lo; x <= m; ++x) {
      t[r][c] = x;
      self(self, k + 1);
    }
    t[r][c] = 0;
  };
  rec(rec, 0);
  return out;
}

long hook_content_count(const std::vector<int>& shape, int m) {
  std::vector<int> conj;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) {
      if (conj.size() <= static_cast<std::size_t>(c)) conj.push_back(0);
      ++conj[static_cast<std::size_t>(c)];
    }
  // Rational product kept exact with GMP integers.
  mpz_class num = 1, den = 1;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) {
      const long content = c - static_cast<long>(r);
      const long hook = (shape[r] - c - 1) + (conj[static_cast<std::size_t>(c)] - static_cast<long>(r) - 1) + 1;
      num *= m + content;
      den *= hook;
    }
  if (num <= 0) return 0;
  mpz_class q = num / den;
  return q.get_si();
}

Tableau HookTableau::rows() const {
  Tableau t;
  for (std::size_t i = 0; i < column.size(); ++i) t.push_back({column[i]});
  if (!t.empty()) t[0].push_back(arm);
  return t;
}

std::string HookTableau::to_string() const {
  std::string s;
  const Tableau t = rows();
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (r) s += '/';
    for (int x : t[r]) s += std::to_string(x);
  }
  return s;
}

HookTableauBasis hook_schur_basis(int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("hook shape needs k >= 1 and m >= 1");
  HookTableauBasis B{k, m, {}};
  std::vector<int> shape{2};
  for (int i = 1; i < k; ++i) shape.push_back(1);
  for (const auto& t : semistandard_tableaux(shape, m)) {
    HookTableau h;
    for (const auto& row : t) h.column.push_back(row[0]);
    h.arm = t[0][1];
    B.tableaux.push_back(std::move(h));
  }
  std::sort(B.tableaux.begin(), B.tableaux.end());
  return B;
}

SparseVector<Rational> hook_embedding(const std::vector<int>& column, int arm, int m) {
  const std::size_t k = column.size();
  if (k == 0) throw std::invalid_argument("empty column");
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  SparseVector<Rational> v;
  do {
    // Sign of the permutation by counting inversions.
    int inv = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) ++inv;
    std::int64_t key = 0;
    for (std::size_t a = 0; a + 1 < k; ++a) key = key * m + (column[perm[a]] - 1);
    int x = column[perm[k - 1]] - 1, y = arm - 1;
    if (x > y) std::swap(x, y);
    key = (key * m + x) * m + y;
    Rational s(inv % 2 ? -1 : 1);
    auto [it, fresh] = v.emplace(key, s);
    if (!fresh) {
      it->second += s;
      if (it->second.is_zero()) v.erase(it);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return v;
}

namespace {

std::vector<SparseVector<Rational>> basis_vectors(const HookTableauBasis& B) {
  std::vector<SparseVector<Rational>> out;
  for (const auto& t : B.tableaux) out.push_back(hook_embedding(t.column, t.arm, B.m));
  return out;
}

}  // namespace

HookSchurModule::HookSchurModule(int k, int m)
    : basis_(hook_schur_basis(k, m)), solver_(basis_vectors(basis_)) {}

const std::vector<Rational>& HookSchurModule::coordinates(const std::vector<int>& column, int arm) {
  if (static_cast<int>(column.size()) != basis_.column_length)
    throw std::invalid_argument("column has the wrong length");
  for (std::size_t i = 0; i < column.size(); ++i)
    if (column[i] < 1 || column[i] > basis_.m || (i && column[i - 1] >= column[i]))
      throw std::invalid_argument("column must be strictly increasing with entries in range");
  if (arm < 1 || arm > basis_.m) throw std::invalid_argument("arm entry out of range");
  auto key = std::make_pair(column, arm);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  auto c = solver_.coordinates(hook_embedding(column, arm, basis_.m));
  if (!c) throw std::logic_error("element lies outside the Schur module");
  return cache_.emplace(std::move(key), std::move(*c)).first->second;
}

std::size_t HookSchurModule::index_of(const HookTableau& t) const {
  auto it = std::lower_bound(basis_.tableaux.begin(), basis_.tableaux.end(), t);
  if (it == basis_.tableaux.end() || !(*it == t)) throw std::out_of_range("tableau is not in the basis");
  return static_cast<std::size_t>(it - basis_.tableaux.begin());
}

}  // namespace til
