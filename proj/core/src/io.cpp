#include "til/io.hpp"

#include <cctype>
#include <stdexcept>

namespace til {

std::string monomial_to_string(const Ring& r, const ExponentVector& m) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += r.var(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

template <class K>
std::string to_string(const Polynomial<K>& f) {
  if (f.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    bool neg = t.coeff.is_negative();
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    std::string c = t.coeff.abs_string();
    if (t.mono.is_one()) {
      s += c;
    } else {
      if (c != "1") s += c + '*';
      s += monomial_to_string(f.ring(), t.mono);
    }
  }
  return s;
}

namespace {

template <class K>
class Parser {
 public:
  Parser(const Ring& r, std::string_view text) : r_(r), s_(text) {}

  Polynomial<K> parse() {
    Polynomial<K> p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + what +
                                " in '" + std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<K> expr() {
    Polynomial<K> acc(r_);
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    Polynomial<K> t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else break;
    }
    return acc;
  }
  Polynomial<K> term() {
    Polynomial<K> acc = factor();
    while (eat('*')) acc *= factor();
    return acc;
  }
  unsigned exponent() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
  }
  Polynomial<K> factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    Polynomial<K> base(r_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      base = expr();
      if (!eat(')')) fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected denominator");
      }
      base = Polynomial<K>::constant(r_, K::parse(s_.substr(start, pos_ - start), r_.field()));
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_' || s_[pos_] == '\''))
        ++pos_;
      auto name = s_.substr(start, pos_ - start);
      auto idx = r_.index_of(name);
      if (!idx) fail("unknown variable '" + std::string(name) + "'");
      base = Polynomial<K>::variable(r_, *idx);
    } else {
      fail(std::string("unexpected '") + c + "'");
    }
    if (eat('^')) base = base.pow(exponent());
    return base;
  }

  const Ring& r_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class K>
Polynomial<K> parse_polynomial(const Ring& r, std::string_view text) {
  return Parser<K>(r, text).parse();
}

nlohmann::json ring_to_json(const Ring& r) {
  nlohmann::json j;
  j["vars"] = r.vars();
  j["field"] = r.field().name();
  j["order"] = r.order().to_string();
  if (const auto* g = r.grading()) {
    nlohmann::json gr = nlohmann::json::array();
    for (const auto& d : *g) gr.push_back(d.values());
    j["grading"] = gr;
    if (!g->empty() && g->front().modulus() > 0) j["grading_modulus"] = g->front().modulus();
  }
  return j;
}

Ring ring_from_json(const nlohmann::json& j) {
  std::optional<Ring::Grading> grading;
  if (j.contains("grading")) {
    long mod = j.value("grading_modulus", 0L);
    Ring::Grading g;
    for (const auto& d : j.at("grading")) g.emplace_back(d.get<std::vector<long>>(), mod);
    grading = std::move(g);
  }
  return Ring(j.at("vars").get<std::vector<std::string>>(),
              Field::parse(j.at("field").get<std::string>()),
              MonomialOrder::parse(j.value("order", std::string("grevlex"))), std::move(grading));
}

template <class K>
nlohmann::json to_json(const Polynomial<K>& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : f.terms()) terms.push_back({t.mono.to_vector(), t.coeff.to_string()});
  return {{"ring", ring_to_json(f.ring())}, {"terms", terms}};
}

template <class K>
Polynomial<K> polynomial_from_json(const nlohmann::json& j, const Ring& r) {
  std::vector<Term<K>> terms;
  for (const auto& t : j.at("terms")) {
    auto exps = t.at(0).get<std::vector<int>>();
    if (exps.size() != r.nvars()) throw std::invalid_argument("exponent vector length mismatch");
    terms.push_back({ExponentVector::from(exps), K::parse(t.at(1).get<std::string>(), r.field())});
  }
  return Polynomial<K>(r, std::move(terms));
}

template <class K>
Polynomial<K> polynomial_from_json(const nlohmann::json& j) {
  return polynomial_from_json<K>(j, ring_from_json(j.at("ring")));
}

template std::string to_string(const Polynomial<Rational>&);
template std::string to_string(const Polynomial<Fp>&);
template Polynomial<Rational> parse_polynomial(const Ring&, std::string_view);
template Polynomial<Fp> parse_polynomial(const Ring&, std::string_view);
template nlohmann::json to_json(const Polynomial<Rational>&);
template nlohmann::json to_json(const Polynomial<Fp>&);
template Polynomial<Rational> polynomial_from_json(const nlohmann::json&, const Ring&);
template Polynomial<Fp> polynomial_from_json(const nlohmann::json&, const Ring&);
template Polynomial<Rational> polynomial_from_json(const nlohmann::json&);
template Polynomial<Fp> polynomial_from_json(const nlohmann::json&);

}  // namespace til
