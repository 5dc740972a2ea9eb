#include "til/algebra.hpp"

namespace til {

MultiDegree multidegree_of_monomial(const Ring& r, const ExponentVector& m) {
  const auto* g = r.grading();
  if (!g) throw std::invalid_argument("ring has no grading");
  if (g->empty()) return MultiDegree();
  MultiDegree d(g->front().size(), g->front().modulus());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i]) d += (*g)[i].scaled(m[i]);
  return d;
}

Ring::Grading fine_grading(std::size_t n) {
  Ring::Grading g;
  for (std::size_t i = 0; i < n; ++i) g.push_back(MultiDegree::unit(n, i));
  return g;
}

}  // namespace til
