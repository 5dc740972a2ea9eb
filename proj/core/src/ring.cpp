#include "til/ring.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace til {
namespace {

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
  return true;
}

}  // namespace

Ring::Ring(std::vector<std::string> vars, Field field, MonomialOrder order,
           std::optional<Grading> grading) {
  auto d = std::make_shared<Data>(Data{std::move(vars), field, std::move(order), std::move(grading)});
  validate(*d);
  d_ = std::move(d);
}

void Ring::validate(const Data& d) {
  if (d.vars.size() > kMaxVars) throw std::invalid_argument("too many variables");
  std::set<std::string> seen;
  for (const auto& v : d.vars) {
    if (!valid_name(v)) throw std::invalid_argument("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name '" + v + "'");
  }
  if (d.field.is_prime_field() && !is_prime(d.field.modulus))
    throw std::invalid_argument("modulus is not prime");
  if (d.order.kind() == MonomialOrder::Kind::block && d.order.mask().size() != d.vars.size())
    throw std::invalid_argument("block order mask does not match variable count");
  if (d.order.kind() == MonomialOrder::Kind::weight && d.order.weights().size() != d.vars.size())
    throw std::invalid_argument("weight vector does not match variable count");
  if (d.grading) {
    if (d.grading->size() != d.vars.size())
      throw std::invalid_argument("grading must assign a degree to every variable");
    for (const auto& g : *d.grading)
      if (g.size() != d.grading->front().size())
        throw std::invalid_argument("grading degrees have inconsistent lengths");
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < d_->vars.size(); ++i)
    if (d_->vars[i] == name) return i;
  return std::nullopt;
}

std::size_t Ring::at(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return *i;
}

Ring Ring::with_order(MonomialOrder order) const {
  auto d = std::make_shared<Data>(*d_);
  d->order = std::move(order);
  validate(*d);
  return Ring(std::move(d));
}

Ring Ring::with_grading(std::optional<Grading> grading) const {
  auto d = std::make_shared<Data>(*d_);
  d->grading = std::move(grading);
  validate(*d);
  return Ring(std::move(d));
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->vars == b.d_->vars && a.d_->field == b.d_->field && a.d_->order == b.d_->order &&
         a.d_->grading == b.d_->grading;
}

std::vector<std::string> indexed_names(std::string_view prefix, std::size_t n, std::size_t first) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(prefix) + std::to_string(first + i));
  return out;
}

}  // namespace til
