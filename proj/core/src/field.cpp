#include "til/field.hpp"

#include <charconv>
#include <stdexcept>

namespace til {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ULL << 31)) throw std::invalid_argument("prime modulus must be below 2^31");
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  return Field{Kind::prime, static_cast<std::uint32_t>(p)};
}

Field Field::parse(std::string_view name) {
  if (name == "Q" || name == "QQ") return rationals();
  if (name.size() >= 2 && name[0] == 'F') {
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), p);
    if (ec == std::errc() && ptr == name.data() + name.size()) return prime(p);
  }
  throw std::invalid_argument("unknown field '" + std::string(name) + "'");
}

std::string Field::name() const {
  return kind == Kind::rational ? "Q" : "F" + std::to_string(modulus);
}

Rational Rational::parse(std::string_view text, const Field&) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("malformed rational '" + s + "'");
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::abs_string() const { return mpq_class(abs(v_)).get_str(); }

Fp Fp::from_int(long long v, const Field& f) {
  long long p = f.modulus;
  long long r = v % p;
  if (r < 0) r += p;
  return Fp(static_cast<std::uint32_t>(r), f.modulus, raw_tag{});
}

Fp Fp::parse(std::string_view text, const Field& f) {
  // Rational literals are accepted and mapped into F_p when the denominator is invertible.
  Rational q = Rational::parse(text, f);
  mpz_class num = q.value().get_num() % f.modulus;
  mpz_class den = q.value().get_den() % f.modulus;
  if (den == 0) throw std::domain_error("denominator vanishes in " + f.name());
  Fp n = from_int(num.get_si(), f);
  Fp d = from_int(den.get_si(), f);
  return n / d;
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("division by zero");
  long long a = v_, m = p_, x0 = 1, x1 = 0;
  while (m != 0) {
    long long q = a / m;
    long long t = a - q * m; a = m; m = t;
    t = x0 - q * x1; x0 = x1; x1 = t;
  }
  long long r = x0 % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Fp(static_cast<std::uint32_t>(r), p_, raw_tag{});
}

}  // namespace til
