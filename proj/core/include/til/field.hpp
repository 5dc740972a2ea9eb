#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace til {

bool is_prime(std::uint64_t n);

/// Descriptor of a coefficient field: the rationals or a prime field F_p
/// with p < 2^31.
struct Field {
  enum class Kind : std::uint8_t { rational, prime };

  Kind kind = Kind::rational;
  std::uint32_t modulus = 0;

  static Field rationals() { return {}; }
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);
  /// Accepts "Q" or "F<p>" (e.g. "F3").
  static Field parse(std::string_view name);

  bool is_prime_field() const { return kind == Kind::prime; }
  std::string name() const;

  bool operator==(const Field&) const = default;
};

/// Arbitrary-precision rational number, always in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational from_int(long long v, const Field&) { return Rational(static_cast<long>(v)); }
  /// Parses "n" or "n/d"; throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text, const Field&);

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return sgn(v_) < 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational inverse() const;
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }

  /// Absolute value as a string, for sign-aware printing.
  std::string abs_string() const;
  std::string to_string() const { return v_.get_str(); }

  const mpq_class& value() const { return v_; }

 private:
  mpq_class v_;
};

/// Element of F_p stored as a residue in [0, p) together with its modulus.
class Fp {
 public:
  Fp() = default;
  Fp(std::uint32_t value, std::uint32_t modulus) : v_(value % modulus), p_(modulus) {}

  static Fp from_int(long long v, const Field& f);
  static Fp parse(std::string_view text, const Field& f);

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_negative() const { return false; }
  bool is_integer() const { return true; }

  std::uint32_t value() const { return v_; }
  std::uint32_t modulus() const { return p_; }

  Fp inverse() const;
  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, raw_tag{}); }

  Fp& operator+=(const Fp& o) {
    std::uint32_t s = v_ + o.v_;
    v_ = s >= p_ ? s - p_ : s;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    v_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_) * o.v_ % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }

  std::string abs_string() const { return std::to_string(v_); }
  std::string to_string() const { return std::to_string(v_); }

 private:
  struct raw_tag {};
  Fp(std::uint32_t value, std::uint32_t modulus, raw_tag) : v_(value), p_(modulus) {}

  std::uint32_t v_ = 0;
  std::uint32_t p_ = 2;
};

template <class T>
struct type_tag {
  using type = T;
};

template <class K>
inline constexpr Field::Kind field_kind_of =
    std::is_same_v<K, Rational> ? Field::Kind::rational : Field::Kind::prime;

/// Calls fn(type_tag<K>{}) with K the coefficient type matching the field.
template <class F>
decltype(auto) visit_field(const Field& f, F&& fn) {
  if (f.is_prime_field()) return fn(type_tag<Fp>{});
  return fn(type_tag<Rational>{});
}

}  // namespace til
