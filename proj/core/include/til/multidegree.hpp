#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace til {

/// Element of Z^k, optionally interpreted modulo a positive integer.
/// A Z/p grading is a length-1 MultiDegree with modulus p.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::size_t k, long modulus = 0) : v_(k, 0), modulus_(modulus) {}
  MultiDegree(std::vector<long> v, long modulus = 0) : v_(std::move(v)), modulus_(modulus) {
    reduce();
  }
  static MultiDegree unit(std::size_t k, std::size_t i, long modulus = 0) {
    MultiDegree d(k, modulus);
    d.v_[i] = 1;
    d.reduce();
    return d;
  }

  std::size_t size() const { return v_.size(); }
  long operator[](std::size_t i) const { return v_[i]; }
  long modulus() const { return modulus_; }
  const std::vector<long>& values() const { return v_; }
  long total() const {
    long s = 0;
    for (long x : v_) s += x;
    return s;
  }
  bool is_zero() const {
    for (long x : v_)
      if (x != 0) return false;
    return true;
  }

  MultiDegree& operator+=(const MultiDegree& o);
  MultiDegree& operator-=(const MultiDegree& o);
  friend MultiDegree operator+(MultiDegree a, const MultiDegree& b) { return a += b; }
  friend MultiDegree operator-(MultiDegree a, const MultiDegree& b) { return a -= b; }
  MultiDegree scaled(long c) const;

  friend bool operator==(const MultiDegree& a, const MultiDegree& b) = default;
  friend auto operator<=>(const MultiDegree& a, const MultiDegree& b) = default;

  std::string to_string() const;

 private:
  void reduce();

  std::vector<long> v_;
  long modulus_ = 0;
};

}  // namespace til
