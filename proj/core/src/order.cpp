#include "til/order.hpp"

#include <sstream>
#include <stdexcept>

namespace til {
namespace {

std::strong_ordering lex_cmp(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::strong_ordering grevlex_cmp(const ExponentVector& a, const ExponentVector& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

// grevlex restricted to the variables whose mask bit equals `flag`.
std::strong_ordering masked_grevlex_cmp(const ExponentVector& a, const ExponentVector& b,
                                        const std::vector<bool>& mask, bool flag) {
  long da = 0, db = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (mask[i] == flag) {
      da += a[i];
      db += b[i];
    }
  if (da != db) return da <=> db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (mask[i] == flag && a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

const char* kind_name(MonomialOrder::Kind k) {
  switch (k) {
    case MonomialOrder::Kind::lex: return "lex";
    case MonomialOrder::Kind::grevlex: return "grevlex";
    case MonomialOrder::Kind::block: return "block";
    case MonomialOrder::Kind::weight: return "weight";
  }
  return "?";
}

}  // namespace

MonomialOrder MonomialOrder::block(std::vector<bool> first_block) {
  MonomialOrder o(Kind::block);
  o.mask_ = std::move(first_block);
  return o;
}

MonomialOrder MonomialOrder::weight(std::vector<int> weights, Kind tie) {
  if (tie != Kind::lex && tie != Kind::grevlex)
    throw std::invalid_argument("weight order tie-break must be lex or grevlex");
  MonomialOrder o(Kind::weight);
  o.weights_ = std::move(weights);
  o.tie_ = tie;
  return o;
}

std::strong_ordering MonomialOrder::compare(const ExponentVector& a,
                                            const ExponentVector& b) const {
  if (a.size() != b.size()) throw std::invalid_argument("exponent vector length mismatch");
  switch (kind_) {
    case Kind::lex:
      return lex_cmp(a, b);
    case Kind::grevlex:
      return grevlex_cmp(a, b);
    case Kind::block: {
      if (mask_.size() != a.size()) throw std::invalid_argument("block mask length mismatch");
      auto c = masked_grevlex_cmp(a, b, mask_, true);
      if (c != 0) return c;
      return masked_grevlex_cmp(a, b, mask_, false);
    }
    case Kind::weight: {
      if (weights_.size() != a.size()) throw std::invalid_argument("weight length mismatch");
      long wa = 0, wb = 0;
      for (std::size_t i = 0; i < a.size(); ++i) {
        wa += static_cast<long>(weights_[i]) * a[i];
        wb += static_cast<long>(weights_[i]) * b[i];
      }
      if (wa != wb) return wa <=> wb;
      return tie_ == Kind::lex ? lex_cmp(a, b) : grevlex_cmp(a, b);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::to_string() const {
  std::ostringstream os;
  os << kind_name(kind_);
  if (kind_ == Kind::block) {
    os << ':';
    for (std::size_t i = 0; i < mask_.size(); ++i) os << (i ? "," : "") << (mask_[i] ? 1 : 0);
  } else if (kind_ == Kind::weight) {
    os << ':';
    for (std::size_t i = 0; i < weights_.size(); ++i) os << (i ? "," : "") << weights_[i];
    os << ';' << kind_name(tie_);
  }
  return os.str();
}

MonomialOrder MonomialOrder::parse(std::string_view text) {
  auto ints = [](std::string_view s) {
    std::vector<int> out;
    std::string item;
    std::istringstream is{std::string(s)};
    while (std::getline(is, item, ',')) out.push_back(std::stoi(item));
    return out;
  };
  if (text == "lex") return lex();
  if (text == "grevlex") return grevlex();
  if (text.starts_with("block:")) {
    std::vector<bool> mask;
    for (int v : ints(text.substr(6))) mask.push_back(v != 0);
    return block(std::move(mask));
  }
  if (text.starts_with("weight:")) {
    auto body = text.substr(7);
    auto semi = body.find(';');
    if (semi == std::string_view::npos) throw std::invalid_argument("weight order lacks tie-break");
    auto tie_name = body.substr(semi + 1);
    Kind tie = tie_name == "lex" ? Kind::lex : Kind::grevlex;
    if (tie_name != "lex" && tie_name != "grevlex")
      throw std::invalid_argument("bad tie-break order");
    return weight(ints(body.substr(0, semi)), tie);
  }
  throw std::invalid_argument("unknown monomial order '" + std::string(text) + "'");
}

}  // namespace til
