#include "til/hilbert.hpp"

#include <algorithm>

#include "til/algebra.hpp"

namespace til {
namespace {

bool lex_less(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::vector<ExponentVector> minimalize(std::vector<ExponentVector> g) {
  std::sort(g.begin(), g.end(), [](const auto& a, const auto& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : lex_less(a, b);
  });
  std::vector<ExponentVector> out;
  for (const auto& m : g) {
    bool redundant = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

std::size_t last_support(const ExponentVector& m) {
  for (std::size_t i = m.size(); i-- > 0;)
    if (m[i]) return i;
  return 0;
}

// Calls visit(m) for every standard monomial of degree 0..max_degree.
template <class F>
void for_each_standard(const MonomialIdeal& I, long max_degree, F&& visit) {
  std::vector<ExponentVector> layer;
  ExponentVector one(I.nvars());
  if (I.contains(one) || max_degree < 0) return;
  layer.push_back(one);
  for (long d = 0;; ++d) {
    for (const auto& m : layer) visit(m, d);
    if (d == max_degree) break;
    std::vector<ExponentVector> next;
    for (const auto& m : layer) {
      for (std::size_t i = m.is_one() ? 0 : last_support(m); i < I.nvars(); ++i) {
        ExponentVector w = m;
        w.set(i, m[i] + 1);
        if (!I.contains(w)) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<ExponentVector> gens)
    : n_(nvars), gens_(minimalize(std::move(gens))) {
  for (const auto& g : gens_)
    if (g.size() != n_) throw std::invalid_argument("generator length does not match ideal");
}

bool MonomialIdeal::contains(const ExponentVector& m) const {
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

MonomialIdeal MonomialIdeal::intersect(const MonomialIdeal& o) const {
  if (o.n_ != n_) throw std::invalid_argument("ideals have different variable counts");
  std::vector<ExponentVector> g;
  for (const auto& a : gens_)
    for (const auto& b : o.gens_) g.push_back(ExponentVector::lcm(a, b));
  return MonomialIdeal(n_, std::move(g));
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a.n_ == b.n_ && a.gens_ == b.gens_;
}

std::vector<ExponentVector> monomials_of_degree(std::size_t n, long d) {
  std::vector<ExponentVector> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  ExponentVector m(n);
  // Recursive composition enumeration with the first variable outermost.
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i + 1 == n) {
      m.set(i, static_cast<int>(left));
      out.push_back(m);
      m.set(i, 0);
      return;
    }
    for (long e = left; e >= 0; --e) {
      m.set(i, static_cast<int>(e));
      self(self, i + 1, left - e);
    }
    m.set(i, 0);
  };
  rec(rec, 0, d);
  return out;
}

std::vector<ExponentVector> standard_monomials(const MonomialIdeal& I, long d) {
  std::vector<ExponentVector> out;
  for_each_standard(I, d, [&](const ExponentVector& m, long deg) {
    if (deg == d) out.push_back(m);
  });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_less(b, a); });
  return out;
}

std::vector<long> hilbert_function(const MonomialIdeal& I, long max_degree) {
  std::vector<long> h(static_cast<std::size_t>(std::max(max_degree + 1, 0L)), 0);
  for_each_standard(I, max_degree, [&](const ExponentVector&, long deg) { ++h[deg]; });
  return h;
}

std::map<MultiDegree, long> hilbert_by_multidegree(const MonomialIdeal& I, const Ring& graded,
                                                   long max_degree) {
  std::map<MultiDegree, long> out;
  for_each_standard(I, max_degree, [&](const ExponentVector& m, long) {
    ++out[multidegree_of_monomial(graded, m)];
  });
  return out;
}

std::vector<ExponentVector> standard_monomials_of_multidegree(const MonomialIdeal& I,
                                                              const Ring& graded,
                                                              const MultiDegree& D,
                                                              long max_degree) {
  std::vector<ExponentVector> out;
  for_each_standard(I, max_degree, [&](const ExponentVector& m, long) {
    if (multidegree_of_monomial(graded, m) == D) out.push_back(m);
  });
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return lex_less(b, a); });
  return out;
}

}  // namespace til
