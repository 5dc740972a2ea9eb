#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "til/field.hpp"
#include "til/monomial.hpp"
#include "til/ring.hpp"

namespace til {

template <class K>
struct Term {
  ExponentVector mono;
  K coeff;
};

template <class K>
K field_int(const Field& f, long long v) {
  return K::from_int(v, f);
}

/// Sparse polynomial with coefficients in K (Rational or Fp).
///
/// Canonical form: terms strictly decreasing under the ring's order, no zero
/// coefficients. Every mutating operation restores it.
template <class K>
class Polynomial {
 public:
  using coeff_type = K;

  explicit Polynomial(Ring ring) : ring_(std::move(ring)) { check_field(); }
  Polynomial(Ring ring, std::vector<Term<K>> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
    check_field();
    canonicalize();
  }

  static Polynomial constant(const Ring& r, const K& c) {
    Polynomial p(r);
    if (!c.is_zero()) p.terms_.push_back({ExponentVector(r.nvars()), c});
    return p;
  }
  static Polynomial constant(const Ring& r, long long c) { return constant(r, field_int<K>(r.field(), c)); }
  static Polynomial one(const Ring& r) { return constant(r, 1); }
  /// Variable by 0-based storage index.
  static Polynomial variable(const Ring& r, std::size_t idx) {
    if (idx >= r.nvars()) throw std::out_of_range("variable index out of range");
    return monomial(r, ExponentVector::unit(r.nvars(), idx), field_int<K>(r.field(), 1));
  }
  static Polynomial variable(const Ring& r, std::string_view name) { return variable(r, r.at(name)); }
  static Polynomial monomial(const Ring& r, ExponentVector m, K c) {
    if (m.size() != r.nvars()) throw std::invalid_argument("monomial length does not match ring");
    Polynomial p(r);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }
  static Polynomial monomial(const Ring& r, ExponentVector m) {
    return monomial(r, std::move(m), field_int<K>(r.field(), 1));
  }

  const Ring& ring() const { return ring_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }

  const Term<K>& lead() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
  }
  const ExponentVector& lead_monomial() const { return lead().mono; }
  const K& lead_coeff() const { return lead().coeff; }
  /// Smallest term under the ring order.
  const Term<K>& trail() const {
    if (terms_.empty()) throw std::logic_error("trailing term of zero polynomial");
    return terms_.back();
  }

  /// Coefficient of a monomial (zero if absent).
  K coeff(const ExponentVector& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return field_int<K>(ring_.field(), 0);
  }
  /// Constant term.
  K constant_term() const { return coeff(ExponentVector(ring_.nvars())); }

  /// Maximal total degree; -1 for zero.
  long degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max<long>(d, t.mono.degree());
    return d;
  }
  long min_degree() const {
    if (terms_.empty()) return -1;
    long d = terms_.front().mono.degree();
    for (const auto& t : terms_) d = std::min<long>(d, t.mono.degree());
    return d;
  }
  long degree_in(std::size_t var) const {
    long d = terms_.empty() ? -1 : 0;
    for (const auto& t : terms_) d = std::max<long>(d, t.mono[var]);
    return d;
  }
  /// Homogeneous in the standard grading (all variables degree 1).
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.mono.degree() != terms_.front().mono.degree()) return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) { return *this = combine(*this, o, false); }
  Polynomial& operator-=(const Polynomial& o) { return *this = combine(*this, o, true); }
  Polynomial& operator*=(const Polynomial& o) { return *this = multiply(*this, o); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) { return multiply(a, b); }
  friend Polynomial operator*(const K& c, const Polynomial& a) { return a.scaled(c); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!a.ring_.same_space(b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    if (a.ring_.order() == b.ring_.order()) {
      for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff))
          return false;
      return true;
    }
    return a == b.in_ring(a.ring_);
  }

  Polynomial scaled(const K& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }
  /// this * c * x^m.
  Polynomial mul_term(const ExponentVector& m, const K& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    // Multiplying by a monomial preserves the order of terms.
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
  }
  /// this - c * x^m * g, computed by a single merge.
  Polynomial sub_mul(const K& c, const ExponentVector& m, const Polynomial& g) const {
    check_same_ring(g);
    const auto& ord = ring_.order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      ExponentVector gm = g.terms_[j].mono * m;
      auto cmp = i < terms_.size() ? ord.compare(terms_[i].mono, gm) : std::strong_ordering::less;
      if (cmp == std::strong_ordering::greater) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp == std::strong_ordering::less) {
        r.terms_.push_back({gm, -(c * g.terms_[j].coeff)});
        ++j;
      } else {
        K v = terms_[i].coeff - c * g.terms_[j].coeff;
        if (!v.is_zero()) r.terms_.push_back({gm, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  Polynomial monic() const {
    if (terms_.empty() || terms_.front().coeff.is_one()) return *this;
    return scaled(terms_.front().coeff.inverse());
  }

  Polynomial pow(unsigned e) const {
    Polynomial result = one(ring_), base = *this;
    while (e) {
      if (e & 1u) result *= base;
      e >>= 1u;
      if (e) base *= base;
    }
    return result;
  }

  /// Sum of the terms of the given total degree.
  Polynomial homogeneous_part(long d) const {
    Polynomial r(ring_);
    for (const auto& t : terms_)
      if (static_cast<long>(t.mono.degree()) == d) r.terms_.push_back(t);
    return r;
  }

  /// Same polynomial viewed in a ring with identical variables and field but
  /// possibly a different order or grading.
  Polynomial in_ring(const Ring& target) const {
    if (!ring_.same_space(target)) throw std::invalid_argument("rings have different variables or fields");
    Polynomial r(target);
    r.terms_ = terms_;
    if (!(ring_.order() == target.order())) r.sort_terms();
    return r;
  }

  /// Direct access for algorithms that maintain canonical form themselves.
  std::vector<Term<K>>& mutable_terms() { return terms_; }
  void canonicalize() {
    for (const auto& t : terms_)
      if (t.mono.size() != ring_.nvars()) throw std::invalid_argument("term length does not match ring");
    sort_terms();
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff += t.coeff;
      } else {
        if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    terms_ = std::move(out);
  }

 private:
  void check_field() const {
    if (ring_.field().kind != field_kind_of<K>)
      throw std::invalid_argument("coefficient type does not match ring field");
  }
  void check_same_ring(const Polynomial& o) const {
    if (!(ring_ == o.ring_)) throw std::invalid_argument("polynomials belong to different rings");
  }
  void sort_terms() {
    const auto& ord = ring_.order();
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term<K>& a, const Term<K>& b) { return ord.less(b.mono, a.mono); });
  }

  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    a.check_same_ring(b);
    const auto& ord = a.ring_.order();
    Polynomial r(a.ring_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
      auto cmp = ord.compare(a.terms_[i].mono, b.terms_[j].mono);
      if (cmp == std::strong_ordering::greater) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp == std::strong_ordering::less) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
      } else {
        K v = subtract ? a.terms_[i].coeff - b.terms_[j].coeff : a.terms_[i].coeff + b.terms_[j].coeff;
        if (!v.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
      const auto& t = b.terms_[j];
      r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
    }
    return r;
  }

  static Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    a.check_same_ring(b);
    Polynomial r(a.ring_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.terms_.size() == 1) return b.mul_term(a.terms_[0].mono, a.terms_[0].coeff);
    if (b.terms_.size() == 1) return a.mul_term(b.terms_[0].mono, b.terms_[0].coeff);
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) r.terms_.push_back({s.mono * t.mono, s.coeff * t.coeff});
    r.canonicalize();
    return r;
  }

  Ring ring_;
  std::vector<Term<K>> terms_;
};

}  // namespace til
