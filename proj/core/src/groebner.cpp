#include "til/groebner.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "til/algebra.hpp"

namespace til {

template <class K>
IdealBasis<K>::IdealBasis(Ring ring, std::vector<Polynomial<K>> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) add(std::move(g));
}

template <class K>
void IdealBasis<K>::add(Polynomial<K> f) {
  if (!(f.ring() == ring_)) throw std::invalid_argument("generator belongs to a different ring");
  if (!f.is_zero()) gens_.push_back(std::move(f));
}

template <class K>
bool IdealBasis<K>::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const auto& g) { return g.is_monomial(); });
}

template <class K>
std::vector<ExponentVector> GroebnerBasis<K>::leads() const {
  std::vector<ExponentVector> out;
  for (const auto& g : elements()) out.push_back(g.lead_monomial());
  return out;
}

namespace {

// Remainder of f modulo the divisors; every term is reduced, not just the lead.
template <class K>
Polynomial<K> reduce_impl(const Polynomial<K>& f, const std::vector<const Polynomial<K>*>& divs) {
  const Ring& R = f.ring();
  const auto& ord = R.order();
  std::vector<Term<K>> work = f.terms();
  std::vector<Term<K>> rem;
  std::size_t s = 0;
  while (s < work.size()) {
    const ExponentVector& m = work[s].mono;
    const Polynomial<K>* d = nullptr;
    for (const auto* g : divs)
      if (g->lead_monomial().divides(m)) {
        d = g;
        break;
      }
    if (!d) {
      rem.push_back(std::move(work[s]));
      ++s;
      continue;
    }
    const ExponentVector shift = m / d->lead_monomial();
    const K c = d->lead_coeff().is_one() ? work[s].coeff : work[s].coeff / d->lead_coeff();
    const auto& gt = d->terms();
    std::vector<Term<K>> next;
    next.reserve(work.size() - s + gt.size());
    std::size_t i = s + 1, j = 1;
    while (i < work.size() || j < gt.size()) {
      if (j == gt.size()) {
        next.push_back(std::move(work[i++]));
        continue;
      }
      ExponentVector gm = gt[j].mono * shift;
      auto cmp = i < work.size() ? ord.compare(work[i].mono, gm) : std::strong_ordering::less;
      if (cmp == std::strong_ordering::greater) {
        next.push_back(std::move(work[i++]));
      } else if (cmp == std::strong_ordering::less) {
        next.push_back({gm, -(c * gt[j].coeff)});
        ++j;
      } else {
        K v = work[i].coeff - c * gt[j].coeff;
        if (!v.is_zero()) next.push_back({gm, std::move(v)});
        ++i;
        ++j;
      }
    }
    work = std::move(next);
    s = 0;
  }
  Polynomial<K> r(R);
  r.mutable_terms() = std::move(rem);
  return r;
}

struct Pair {
  std::size_t i, j;
  ExponentVector lcm;
};

template <class K>
class Buchberger {
 public:
  Buchberger(Ring ring, BuchbergerStats* stats) : R_(std::move(ring)), stats_(stats) {}

  void add_input(const Polynomial<K>& f) {
    Polynomial<K> h = reduce_impl(f, active_divisors());
    if (!h.is_zero()) insert(h.monic());
  }

  void run() {
    const auto& ord = R_.order();
    while (!pairs_.empty()) {
      auto best = pairs_.begin();
      for (auto it = pairs_.begin() + 1; it != pairs_.end(); ++it)
        if (selects_before(*it, *best, ord)) best = it;
      Pair pr = *best;
      pairs_.erase(best);
      if (stats_) ++stats_->pairs_reduced;
      Polynomial<K> h = reduce_impl(s_polynomial(polys_[pr.i], polys_[pr.j]), active_divisors());
      if (h.is_zero()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      if (stats_) ++stats_->elements_added;
      insert(h.monic());
    }
  }

  GroebnerBasis<K> reduced_basis() const {
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) idx.push_back(k);
    std::vector<Polynomial<K>> out;
    for (std::size_t k : idx) {
      std::vector<const Polynomial<K>*> others;
      for (std::size_t o : idx)
        if (o != k) others.push_back(&polys_[o]);
      out.push_back(reduce_impl(polys_[k], others).monic());
    }
    const auto& ord = R_.order();
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
      return ord.less(a.lead_monomial(), b.lead_monomial());
    });
    return GroebnerBasis<K>(R_, std::move(out), true);
  }

 private:
  // Normal strategy: smallest lcm first (by degree, then by the order), with
  // index pairs breaking the remaining ties.
  static bool selects_before(const Pair& a, const Pair& b, const MonomialOrder& ord) {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    auto c = ord.compare(a.lcm, b.lcm);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return std::pair(a.j, a.i) < std::pair(b.j, b.i);
  }

  std::vector<const Polynomial<K>*> active_divisors() const {
    std::vector<const Polynomial<K>*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    return out;
  }

  const ExponentVector& lead(std::size_t k) const { return polys_[k].lead_monomial(); }

  // Gebauer-Moeller update for a new element h.
  void insert(Polynomial<K> hp) {
    const std::size_t h = polys_.size();
    polys_.push_back(std::move(hp));
    active_.push_back(false);
    const ExponentVector& lh = lead(h);

    std::vector<std::size_t> C;
    for (std::size_t k = 0; k < h; ++k)
      if (active_[k]) C.push_back(k);
    if (stats_) stats_->pairs_considered += C.size();
    std::vector<std::size_t> D;
    std::vector<bool> pending(C.size(), true);
    for (std::size_t a = 0; a < C.size(); ++a) {
      pending[a] = false;
      const std::size_t g1 = C[a];
      bool keep = lh.coprime(lead(g1));
      if (!keep) {
        const ExponentVector l1 = ExponentVector::lcm(lh, lead(g1));
        keep = true;
        for (std::size_t b = 0; b < C.size() && keep; ++b)
          if (pending[b] && ExponentVector::lcm(lh, lead(C[b])).divides(l1)) keep = false;
        for (std::size_t g2 : D)
          if (keep && ExponentVector::lcm(lh, lead(g2)).divides(l1)) keep = false;
      }
      if (keep) D.push_back(g1);
    }

    std::vector<Pair> kept;
    for (const auto& pr : pairs_) {
      if (!lh.divides(pr.lcm) || ExponentVector::lcm(lead(pr.i), lh) == pr.lcm ||
          ExponentVector::lcm(lh, lead(pr.j)) == pr.lcm)
        kept.push_back(pr);
    }
    for (std::size_t g : D)
      if (!lh.coprime(lead(g))) kept.push_back({g, h, ExponentVector::lcm(lead(g), lh)});
    pairs_ = std::move(kept);

    for (std::size_t k = 0; k < h; ++k)
      if (active_[k] && lh.divides(lead(k))) active_[k] = false;
    active_[h] = true;
  }

  Ring R_;
  BuchbergerStats* stats_;
  std::vector<Polynomial<K>> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

std::vector<bool> mask_for(const Ring& R, const std::vector<std::string>& names) {
  std::vector<bool> mask(R.nvars(), false);
  for (const auto& n : names) mask[R.at(n)] = true;
  return mask;
}

}  // namespace

template <class K>
Polynomial<K> reduce_by(const Polynomial<K>& f, const std::vector<Polynomial<K>>& divisors) {
  std::vector<const Polynomial<K>*> d;
  for (const auto& g : divisors) {
    if (!(g.ring() == f.ring())) throw std::invalid_argument("divisor belongs to a different ring");
    if (!g.is_zero()) d.push_back(&g);
  }
  return reduce_impl(f, d);
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& G) {
  Polynomial<K> g = f.ring() == G.ring() ? f : f.in_ring(G.ring());
  std::vector<const Polynomial<K>*> d;
  for (const auto& e : G.elements()) d.push_back(&e);
  return reduce_impl(g, d);
}

template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g) {
  const ExponentVector L = ExponentVector::lcm(f.lead_monomial(), g.lead_monomial());
  Polynomial<K> a = f.mul_term(L / f.lead_monomial(), f.lead_coeff().inverse());
  return a.sub_mul(g.lead_coeff().inverse(), L / g.lead_monomial(), g);
}

template <class K>
GroebnerBasis<K> buchberger(const IdealBasis<K>& gens, const MonomialOrder& order,
                            BuchbergerStats* stats) {
  Ring R = gens.ring().with_order(order);
  std::vector<Polynomial<K>> input;
  for (const auto& g : gens.gens()) input.push_back(g.in_ring(R));
  // Feeding inputs smallest-lead first keeps the run independent of the
  // caller's generator order for monomial-distinct inputs.
  std::stable_sort(input.begin(), input.end(), [&](const auto& a, const auto& b) {
    return order.less(a.lead_monomial(), b.lead_monomial());
  });
  Buchberger<K> bb(R, stats);
  for (const auto& f : input) bb.add_input(f);
  bb.run();
  return bb.reduced_basis();
}

template <class K>
CriterionReport check_buchberger_criterion(const IdealBasis<K>& gens, const MonomialOrder& order) {
  Ring R = gens.ring().with_order(order);
  std::vector<Polynomial<K>> g;
  for (const auto& f : gens.gens()) g.push_back(f.in_ring(R));
  std::vector<const Polynomial<K>*> d;
  for (const auto& f : g) d.push_back(&f);
  CriterionReport rep;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      ++rep.pairs;
      if (!reduce_impl(s_polynomial(g[i], g[j]), d).is_zero()) ++rep.nonzero_remainders;
    }
  return rep;
}

template <class K>
IdealBasis<K> elimination_ideal(const IdealBasis<K>& gens, const std::vector<std::string>& drop,
                                std::optional<Ring> target) {
  const Ring& R = gens.ring();
  std::vector<bool> mask = mask_for(R, drop);
  std::vector<std::string> keep;
  for (std::size_t i = 0; i < R.nvars(); ++i)
    if (!mask[i]) keep.push_back(R.var(i));
  Ring T = target ? *target : Ring(keep, R.field());
  GroebnerBasis<K> G = drop.empty() ? buchberger(gens, R.order()) : buchberger(gens, MonomialOrder::block(mask));
  IdealBasis<K> out(T);
  for (const auto& g : G.elements()) {
    bool free = true;
    for (std::size_t i = 0; i < R.nvars() && free; ++i)
      if (mask[i] && g.degree_in(i) > 0) free = false;
    if (free) out.add(map_by_name(g, T));
  }
  return out;
}

template <class K>
GroebnerBasis<K> canonical_basis(const IdealBasis<K>& gens) {
  return buchberger(gens, MonomialOrder::grevlex());
}

template <class K>
bool ideal_member(const Polynomial<K>& f, const GroebnerBasis<K>& G) {
  return normal_form(f, G).is_zero();
}

template <class K>
bool ideal_contains(const GroebnerBasis<K>& A, const IdealBasis<K>& B) {
  for (const auto& g : B.gens())
    if (!ideal_member(g, A)) return false;
  return true;
}

template <class K>
bool ideal_contains(const IdealBasis<K>& A, const IdealBasis<K>& B) {
  if (!A.ring().same_space(B.ring())) throw std::invalid_argument("ideals live in different rings");
  return ideal_contains(buchberger(A, A.ring().order()), B);
}

template <class K>
bool ideal_equal(const IdealBasis<K>& A, const IdealBasis<K>& B) {
  if (!A.ring().same_space(B.ring())) throw std::invalid_argument("ideals live in different rings");
  auto ga = canonical_basis(A), gb = canonical_basis(B);
  if (ga.size() != gb.size()) return false;
  for (std::size_t i = 0; i < ga.size(); ++i)
    if (!(ga.elements()[i] == gb.elements()[i])) return false;
  return true;
}

template <class K>
IdealBasis<K> initial_ideal(const IdealBasis<K>& gens, const MonomialOrder& order) {
  auto G = buchberger(gens, order);
  IdealBasis<K> out(gens.ring());
  for (const auto& m : G.leads()) out.add(Polynomial<K>::monomial(gens.ring(), m));
  return out;
}

template <class K>
Polynomial<K> initial_form(const Polynomial<K>& f) {
  return f.homogeneous_part(f.min_degree());
}

template <class K>
Polynomial<K> homogenize_t(const Polynomial<K>& f, const Ring& target, const std::string& t) {
  const std::size_t ti = target.at(t);
  const long D = f.degree();
  Polynomial<K> base = map_by_name(f, target);
  std::vector<Term<K>> terms;
  for (const auto& term : base.terms()) {
    ExponentVector m = term.mono;
    m.set(ti, m[ti] + static_cast<int>(D - static_cast<long>(term.mono.degree())));
    terms.push_back({m, term.coeff});
  }
  return Polynomial<K>(target, std::move(terms));
}

template <class K>
Polynomial<K> dehomogenize_t(const Polynomial<K>& h, const Ring& target, const std::string& t) {
  const std::size_t ti = h.ring().at(t);
  std::vector<Term<K>> terms;
  for (const auto& term : h.terms()) {
    ExponentVector m = term.mono;
    m.set(ti, 0);
    terms.push_back({m, term.coeff});
  }
  return map_by_name(Polynomial<K>(h.ring(), std::move(terms)), target);
}

template <class K>
nlohmann::json gb_to_json(const GroebnerBasis<K>& G) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : G.elements()) gens.push_back(to_json(g).at("terms"));
  return {{"order", G.order().to_string()},
          {"ring", ring_to_json(G.ring())},
          {"generators", gens},
          {"reduced", G.reduced()}};
}

template <class K>
GroebnerBasis<K> gb_from_json(const nlohmann::json& j) {
  Ring R = ring_from_json(j.at("ring")).with_order(MonomialOrder::parse(j.at("order").get<std::string>()));
  std::vector<Polynomial<K>> elems;
  for (const auto& g : j.at("generators"))
    elems.push_back(polynomial_from_json<K>(nlohmann::json{{"terms", g}}, R));
  return GroebnerBasis<K>(R, std::move(elems), j.value("reduced", false));
}

GbCache::GbCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

template <class K>
GroebnerBasis<K> GbCache::get(const std::string& key, const std::vector<std::string>& source,
                              const std::function<GroebnerBasis<K>()>& compute) {
  const auto path = dir_ / (key + ".json");
  if (std::ifstream in(path); in) {
    try {
      nlohmann::json j = nlohmann::json::parse(in);
      if (j.value("source", std::vector<std::string>{}) == source) {
        ++hits_;
        return gb_from_json<K>(j);
      }
    } catch (const std::exception&) {
      // Unreadable cache files are recomputed.
    }
  }
  ++misses_;
  GroebnerBasis<K> G = compute();
  nlohmann::json j = gb_to_json(G);
  j["source"] = source;
  std::ofstream(path) << j.dump() << '\n';
  return G;
}

#define TIL_INSTANTIATE(K)                                                                        \
  template class IdealBasis<K>;                                                                   \
  template class GroebnerBasis<K>;                                                                \
  template Polynomial<K> reduce_by(const Polynomial<K>&, const std::vector<Polynomial<K>>&);      \
  template Polynomial<K> normal_form(const Polynomial<K>&, const GroebnerBasis<K>&);              \
  template Polynomial<K> s_polynomial(const Polynomial<K>&, const Polynomial<K>&);                \
  template GroebnerBasis<K> buchberger(const IdealBasis<K>&, const MonomialOrder&,                \
                                       BuchbergerStats*);                                         \
  template CriterionReport check_buchberger_criterion(const IdealBasis<K>&, const MonomialOrder&); \
  template IdealBasis<K> elimination_ideal(const IdealBasis<K>&, const std::vector<std::string>&, \
                                           std::optional<Ring>);                                  \
  template GroebnerBasis<K> canonical_basis(const IdealBasis<K>&);                                \
  template bool ideal_member(const Polynomial<K>&, const GroebnerBasis<K>&);                      \
  template bool ideal_contains(const IdealBasis<K>&, const IdealBasis<K>&);                       \
  template bool ideal_contains(const GroebnerBasis<K>&, const IdealBasis<K>&);                    \
  template bool ideal_equal(const IdealBasis<K>&, const IdealBasis<K>&);                          \
  template IdealBasis<K> initial_ideal(const IdealBasis<K>&, const MonomialOrder&);               \
  template Polynomial<K> initial_form(const Polynomial<K>&);                                      \
  template Polynomial<K> homogenize_t(const Polynomial<K>&, const Ring&, const std::string&);     \
  template Polynomial<K> dehomogenize_t(const Polynomial<K>&, const Ring&, const std::string&);   \
  template nlohmann::json gb_to_json(const GroebnerBasis<K>&);                                    \
  template GroebnerBasis<K> gb_from_json(const nlohmann::json&);                                  \
  template GroebnerBasis<K> GbCache::get(const std::string&, const std::vector<std::string>&,     \
                                         const std::function<GroebnerBasis<K>()>&);

TIL_INSTANTIATE(Rational)
TIL_INSTANTIATE(Fp)

}  // namespace til
