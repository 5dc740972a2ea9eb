#include "til/multidegree.hpp"

#include <stdexcept>

namespace til {

void MultiDegree::reduce() {
  if (modulus_ <= 0) return;
  for (long& x : v_) {
    x %= modulus_;
    if (x < 0) x += modulus_;
  }
}

MultiDegree& MultiDegree::operator+=(const MultiDegree& o) {
  if (o.v_.size() != v_.size()) throw std::invalid_argument("multidegree length mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  reduce();
  return *this;
}

MultiDegree& MultiDegree::operator-=(const MultiDegree& o) {
  if (o.v_.size() != v_.size()) throw std::invalid_argument("multidegree length mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  reduce();
  return *this;
}

MultiDegree MultiDegree::scaled(long c) const {
  MultiDegree r = *this;
  for (long& x : r.v_) x *= c;
  r.reduce();
  return r;
}

std::string MultiDegree::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v_[i]);
  }
  s += ")";
  if (modulus_ > 0) s += " mod " + std::to_string(modulus_);
  return s;
}

}  // namespace til
