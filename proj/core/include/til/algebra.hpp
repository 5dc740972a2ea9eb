#pragma once

// Ring homomorphisms and grading queries on polynomials.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "til/multidegree.hpp"
#include "til/polynomial.hpp"

namespace til {

template <class K>
using Images = std::vector<std::optional<Polynomial<K>>>;

/// Applies the ring homomorphism sending source variable i to images[i].
/// Throws std::invalid_argument if a variable occurring in f has no image or
/// an image lives outside `target`.
template <class K>
Polynomial<K> substitute(const Polynomial<K>& f, const Ring& target, const Images<K>& images) {
  const std::size_t n = f.ring().nvars();
  if (images.size() != n) throw std::invalid_argument("image list does not match source ring");
  for (const auto& img : images)
    if (img && !(img->ring() == target)) throw std::invalid_argument("image lives in a different ring");
  // Powers are cached per variable; desk-scale exponents are small.
  std::vector<std::vector<Polynomial<K>>> powers(n);
  auto power = [&](std::size_t v, unsigned e) -> const Polynomial<K>& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial<K>::one(target));
    while (cache.size() <= e) cache.push_back(cache.back() * *images[v]);
    return cache[e];
  };
  Polynomial<K> result(target);
  for (const auto& t : f.terms()) {
    Polynomial<K> term = Polynomial<K>::constant(target, t.coeff);
    for (std::size_t v = 0; v < n; ++v) {
      if (t.mono[v] == 0) continue;
      if (!images[v])
        throw std::invalid_argument("no image for variable '" + f.ring().var(v) + "'");
      term *= power(v, t.mono[v]);
    }
    result += term;
  }
  return result;
}

/// Name-keyed convenience overload.
template <class K>
Polynomial<K> substitute(const Polynomial<K>& f, const Ring& target,
                         const std::map<std::string, Polynomial<K>>& images) {
  Images<K> list(f.ring().nvars());
  for (const auto& [name, img] : images) list[f.ring().at(name)] = img;
  return substitute(f, target, list);
}

/// Identity-by-name images into a ring containing all the source variables.
template <class K>
Images<K> inclusion_images(const Ring& source, const Ring& target) {
  Images<K> out(source.nvars());
  for (std::size_t i = 0; i < source.nvars(); ++i)
    if (auto j = target.index_of(source.var(i))) out[i] = Polynomial<K>::variable(target, *j);
  return out;
}

/// Maps f into a ring that contains all of its variables (by name).
template <class K>
Polynomial<K> map_by_name(const Polynomial<K>& f, const Ring& target) {
  const Ring& src = f.ring();
  std::vector<std::optional<std::size_t>> where(src.nvars());
  for (std::size_t i = 0; i < src.nvars(); ++i) where[i] = target.index_of(src.var(i));
  std::vector<Term<K>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    ExponentVector m(target.nvars());
    for (std::size_t i = 0; i < src.nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!where[i]) throw std::invalid_argument("no image for variable '" + src.var(i) + "'");
      m.set(*where[i], t.mono[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial<K>(target, std::move(terms));
}

/// Multidegree of a monomial under the ring grading.
MultiDegree multidegree_of_monomial(const Ring& r, const ExponentVector& m);

/// Common multidegree of all terms, or nullopt when f is not homogeneous.
/// The zero polynomial and constants have the zero multidegree. Throws if the
/// ring carries no grading.
template <class K>
std::optional<MultiDegree> multidegree_of(const Polynomial<K>& f) {
  const Ring& r = f.ring();
  if (!r.grading()) throw std::invalid_argument("ring has no grading");
  if (f.is_zero()) return multidegree_of_monomial(r, ExponentVector(r.nvars()));
  MultiDegree d = multidegree_of_monomial(r, f.terms().front().mono);
  for (const auto& t : f.terms())
    if (!(multidegree_of_monomial(r, t.mono) == d)) return std::nullopt;
  return d;
}

/// Standard Z^n basis grading deg(x_i) = e_i.
Ring::Grading fine_grading(std::size_t n);

}  // namespace til
