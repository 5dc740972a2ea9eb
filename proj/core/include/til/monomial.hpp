#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace til {

inline constexpr std::size_t kMaxVars = 24;

/// Exponent vector of a monomial. Storage is inline; the length is fixed by
/// the ring the monomial belongs to and may not exceed kMaxVars.
class ExponentVector {
 public:
  using value_type = std::uint16_t;

  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : n_(checked_size(n)) {}
  ExponentVector(std::initializer_list<int> exps) : n_(checked_size(exps.size())) {
    std::size_t i = 0;
    for (int e : exps) set(i++, e);
  }
  static ExponentVector from(std::span<const int> exps) {
    ExponentVector v(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) v.set(i, exps[i]);
    return v;
  }
  static ExponentVector unit(std::size_t n, std::size_t i) {
    ExponentVector v(n);
    v.set(i, 1);
    return v;
  }

  std::size_t size() const { return n_; }
  value_type operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  void set(std::size_t i, int value) {
    if (value < 0 || value > 0xFFFF) throw std::out_of_range("exponent out of range");
    deg_ = deg_ - e_[i] + static_cast<std::uint32_t>(value);
    e_[i] = static_cast<value_type>(value);
  }

  bool divides(const ExponentVector& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  bool coprime(const ExponentVector& o) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (e_[i] != 0 && o.e_[i] != 0) return false;
    return true;
  }

  friend ExponentVector operator*(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = static_cast<value_type>(a.e_[i] + b.e_[i]);
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }
  /// Quotient a / b; requires b | a.
  friend ExponentVector operator/(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) r.e_[i] = static_cast<value_type>(a.e_[i] - b.e_[i]);
    r.deg_ = a.deg_ - b.deg_;
    return r;
  }
  static ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      r.e_[i] = std::max(a.e_[i], b.e_[i]);
      r.deg_ += r.e_[i];
    }
    return r;
  }
  static ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      r.e_[i] = std::min(a.e_[i], b.e_[i]);
      r.deg_ += r.e_[i];
    }
    return r;
  }

  std::vector<int> to_vector() const { return {e_.begin(), e_.begin() + n_}; }

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.n_ == b.n_ && a.e_ == b.e_;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (std::size_t i = 0; i < n_; ++i) h = h * 1000003u ^ e_[i];
    return h;
  }

 private:
  static std::uint8_t checked_size(std::size_t n) {
    if (n > kMaxVars) throw std::length_error("too many variables for ExponentVector");
    return static_cast<std::uint8_t>(n);
  }

  std::array<value_type, kMaxVars> e_{};
  std::uint32_t deg_ = 0;
  std::uint8_t n_ = 0;
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const { return v.hash(); }
};

}  // namespace til
