#include <algorithm>
#include <set>

#include "doctest.h"
#include "test_support.hpp"

#include "til/algebra.hpp"
#include "til/complex.hpp"
#include "til/hilbert.hpp"
#include "til/linalg.hpp"
#include "til/resolution.hpp"
#include "til/tableaux.hpp"
#include "til/transfer.hpp"

using namespace til;
using namespace til::test;

namespace {

const Field kQ = Field::rationals();

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

SparseMatrix<Q> dense(std::vector<std::vector<long>> rows) {
  SparseMatrix<Q> m;
  m.rows = rows.size();
  m.cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j] != 0) m.add(i, j, Q(rows[i][j]));
  return m;
}

template <class K>
std::vector<std::size_t> nonzero_ranks(const GradedComplex<K>& C) {
  auto r = C.ranks();
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

}  // namespace

TEST_SUITE("linear algebra") {
  TEST_CASE("exact and modular ranks") {
    auto m = dense({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    CHECK(rank_exact(m) == 2);
    auto f = rank_fast(m);
    CHECK(f.rank == 2);
    CHECK_FALSE(f.exact);
    CHECK(rank_mod(2, 2, {1, 1, 1, 1}, 7) == 1);
    CHECK(rank_exact(SparseMatrix<Q>{3, 4, {}}) == 0);
  }

  TEST_CASE("duplicate entries are summed") {
    SparseMatrix<Q> m{1, 1, {}};
    m.add(0, 0, Q(2));
    m.add(0, 0, Q(-2));
    CHECK(rank_exact(m) == 0);
  }

  TEST_CASE("modular rank can undershoot and is then recomputed") {
    // det = kRankPrime, so the matrix is singular modulo the prime only.
    SparseMatrix<Q> m{2, 2, {}};
    m.add(0, 0, Q(static_cast<long>(kRankPrime)));
    m.add(1, 1, Q(1));
    CHECK(rank_fast(m).rank == 1);
    CHECK(rank_exact(m) == 2);
    // C_1 -> C_0 with C_1 = C_0 = Q^2: the modular rank cannot certify vanishing homology.
    auto h = chain_homology<Q>({2, 2}, {SparseMatrix<Q>{}, m});
    CHECK(h.ranks[1] == 2);
    CHECK(h.homology == std::vector<long>{0, 0});
    CHECK(h.exact_recomputations >= 1);
  }

  TEST_CASE("residues of rationals") {
    CHECK(residue(Rational(mpq_class(1, 2)), 7) == std::optional<std::uint32_t>(4));
    CHECK_FALSE(residue(Rational(mpq_class(1, 7)), 7).has_value());
    CHECK(residue(Rational(-1), 5) == std::optional<std::uint32_t>(4));
  }

  TEST_CASE("homology of a short exact sequence") {
    // 0 -> Q -> Q^2 -> Q -> 0 with maps x -> (x, x) and (a, b) -> a - b.
    auto d1 = dense({{1, -1}});
    auto d2 = dense({{1}, {1}});
    auto h = chain_homology<Q>({1, 2, 1}, {SparseMatrix<Q>{}, d1, d2});
    CHECK(h.homology == std::vector<long>{0, 0, 0});
    CHECK(h.ranks == std::vector<long>{0, 1, 1});
  }

  TEST_CASE("coordinates in a span") {
    SparseVector<Q> a{{0, Q(1)}, {1, Q(1)}}, b{{1, Q(1)}, {2, Q(1)}};
    SpanSolver<Q> s({a, b});
    auto c = s.coordinates({{0, Q(2)}, {1, Q(5)}, {2, Q(3)}});
    REQUIRE(c);
    CHECK((*c)[0] == Q(2));
    CHECK((*c)[1] == Q(3));
    CHECK_FALSE(s.coordinates({{0, Q(1)}}).has_value());
    CHECK_THROWS_AS(SpanSolver<Q>({a, a}), std::invalid_argument);
  }
}

TEST_SUITE("koszul complex") {
  TEST_CASE("one variable: 0 -> S(-1) -> S -> 0") {
    Ring R = qring({"x"});
    auto K = koszul_complex<Q>(R, {0});
    CHECK(nonzero_ranks(K) == std::vector<std::size_t>{1, 1});
    CHECK(K.terms[1].twist(0) == 1);
    CHECK(K.d[0].at(0, 0) == poly(R, "-x"));
  }

  TEST_CASE("d^2 = 0 and the ranks are binomial up to five variables") {
    for (std::size_t n = 1; n <= 5; ++n) {
      Ring R(indexed_names("x", n), kQ);
      std::vector<std::size_t> vars(n);
      for (std::size_t i = 0; i < n; ++i) vars[i] = i;
      auto K = koszul_complex<Q>(R, vars);
      CHECK(K.d_squared_failures().empty());
      for (std::size_t i = 0; i <= n; ++i) CHECK(K.terms[i].rank() == static_cast<std::size_t>(binom(static_cast<long>(n), static_cast<long>(i))));
    }
  }

  TEST_CASE("H_0 is S / <u_1..u_r> and higher homology vanishes") {
    Ring R(indexed_names("x", 4), kQ, MonomialOrder::grevlex(), fine_grading(4));
    auto K = koszul_complex<Q>(R, {0, 2});
    MonomialIdeal u(4, {ExponentVector::unit(4, 0), ExponentVector::unit(4, 2)});
    for (const auto& b : homology_by_weight(K, 4)) {
      ExponentVector m(4);
      for (std::size_t i = 0; i < 4; ++i) m.set(i, static_cast<int>(b.weight[i]));
      CHECK(b.homology[0] == (u.contains(m) ? 0 : 1));
      for (std::size_t i = 1; i < b.homology.size(); ++i) CHECK(b.homology[i] == 0);
    }
  }

  TEST_CASE("subsets are listed lexicographically") {
    CHECK(subsets(4, 2) == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(subsets(3, 0).size() == 1);
  }
}

TEST_SUITE("tableaux") {
  TEST_CASE("shape (2,1) with entries at most 3 has eight semistandard tableaux") {
    auto all = semistandard_tableaux({2, 1}, 3);
    CHECK(all.size() == 8);
    CHECK(hook_content_count({2, 1}, 3) == 8);
    // The six tableaux of the displayed example all belong to the basis.
    std::vector<Tableau> shown{{{1, 1}, {2}}, {{1, 1}, {3}}, {{1, 2}, {2}}, {{1, 2}, {3}}, {{2, 2}, {3}}, {{2, 3}, {3}}};
    for (const auto& t : shown) CHECK(std::find(all.begin(), all.end(), t) != all.end());
    // The remaining two.
    CHECK(std::find(all.begin(), all.end(), Tableau{{1, 3}, {2}}) != all.end());
    CHECK(std::find(all.begin(), all.end(), Tableau{{1, 3}, {3}}) != all.end());
  }

  TEST_CASE("shape (2,1) with entries at most 2 is {11/2, 12/2}") {
    auto b = hook_schur_basis(2, 2);
    std::vector<std::string> names;
    for (const auto& t : b.tableaux) names.push_back(t.to_string());
    CHECK(names == std::vector<std::string>{"11/2", "12/2"});
    CHECK(hook_schur_basis(3, 2).tableaux.empty());
  }

  TEST_CASE("enumeration agrees with the hook-content formula") {
    for (const auto& shape : std::vector<std::vector<int>>{{1}, {2}, {2, 1}, {2, 1, 1}, {3, 2}, {2, 2}, {3, 1, 1}})
      for (int m = 1; m <= 4; ++m) {
        auto all = semistandard_tableaux(shape, m);
        CHECK(static_cast<long>(all.size()) == hook_content_count(shape, m));
        for (const auto& t : all) CHECK(is_semistandard(t, m));
      }
  }

  TEST_CASE("semistandard predicate") {
    CHECK(is_semistandard({{1, 1}, {2}}, 2));
    CHECK_FALSE(is_semistandard({{1, 1}, {1}}, 2));
    CHECK_FALSE(is_semistandard({{2, 1}, {3}}, 3));
    CHECK_FALSE(is_semistandard({{1, 1}, {3}}, 2));
  }

  TEST_CASE("straightening agrees with the tensor embedding") {
    for (int k : {2, 3})
      for (int m : {2, 3, 4}) {
        HookSchurModule M(k, m);
        std::vector<int> shape(static_cast<std::size_t>(k), 1);
        shape[0] = 2;
        CHECK(static_cast<long>(M.dim()) == hook_content_count(shape, m));
        for (const auto& col : subsets(static_cast<std::size_t>(m), static_cast<std::size_t>(k)))
          for (int arm = 1; arm <= m; ++arm) {
            std::vector<int> c;
            for (auto x : col) c.push_back(static_cast<int>(x) + 1);
            const auto& coords = M.coordinates(c, arm);
            SparseVector<Q> sum;
            for (std::size_t i = 0; i < coords.size(); ++i) {
              if (coords[i].is_zero()) continue;
              const auto& t = M.basis().tableaux[i];
              for (const auto& [key, v] : hook_embedding(t.column, t.arm, m)) sum[key] += coords[i] * v;
            }
            std::erase_if(sum, [](const auto& kv) { return kv.second.is_zero(); });
            CHECK(sum == hook_embedding(c, arm, m));
          }
      }
  }
}

TEST_SUITE("resolution pieces") {
  TEST_CASE("ranks of F follow the exterior-power count") {
    for (int p : {3, 4, 5}) {
      Ring R = resolution_ring(p, kQ);
      auto F = build_F<Q>(p, R);
      const long m = p - 1;
      auto ranks = nonzero_ranks(F.total);
      CHECK(static_cast<long>(ranks.size()) - 1 == 2 * p - 4);
      for (std::size_t n = 0; n < ranks.size(); ++n) {
        long want = 0;
        for (long a = 0; a <= static_cast<long>(n); ++a) want += binom(m, a + 2) * binom(m, static_cast<long>(n) - a);
        CHECK(static_cast<long>(ranks[n]) == want);
      }
    }
    CHECK(nonzero_ranks(build_F<Q>(3, resolution_ring(3, kQ)).total) == std::vector<std::size_t>{1, 2, 1});
    CHECK(build_F<Q>(4, resolution_ring(4, kQ)).total.terms[0].rank() == 3);
  }

  TEST_CASE("ranks of G are hook tableau counts") {
    Ring R3 = resolution_ring(3, kQ);
    CHECK(nonzero_ranks(build_G<Q>(3, R3)) == std::vector<std::size_t>{1, 3, 2});
    for (int p : {4, 5}) {
      auto G = build_G<Q>(p, resolution_ring(p, kQ));
      CHECK(G.terms[0].rank() == 1);
      for (std::size_t i = 1; i < G.terms.size(); ++i) {
        std::vector<int> shape(i, 1);
        shape[0] = 2;
        CHECK(static_cast<long>(G.terms[i].rank()) == hook_content_count(shape, p - 1));
      }
    }
  }

  TEST_CASE("H_0 of G is S / n^2") {
    const int p = 3;
    Ring R = resolution_ring(p, kQ);
    auto G = build_G<Q>(p, R);
    CHECK(G.d_squared_failures().empty());
    // n = <e4, e5>; count standard monomials of S / n^2 by weight directly.
    for (const auto& b : homology_by_weight(G, 6)) {
      long want = 0;
      for (const auto& m : monomials_of_weight(R, b.weight)) want += (m[2] + m[3] <= 1);
      CHECK(b.homology[0] == want);
      for (std::size_t i = 1; i < b.homology.size(); ++i) CHECK(b.homology[i] == 0);
    }
  }

  TEST_CASE("phi_0 sends a ^ b to the 2 x 2 minors") {
    for (int p : {3, 4}) {
      const Ring R = resolution_ring(p, kQ);
      const auto res = build_resolution<Q>(p, kQ);
      const auto& phi0 = res.phi[0];
      REQUIRE(phi0.target().rank() == 1);
      Ring S = matrix_ring(p, 2, kQ);
      std::set<std::string> minors, images;
      for (const auto& f : type_one_minors<Q>(p, S)) {
        auto g = map_by_name(f, res.ring);
        minors.insert(to_string(g.monic()));
      }
      for (std::size_t j = 0; j < phi0.source().rank(); ++j) {
        const auto& e = phi0.at(0, j);
        if (!e.is_zero()) images.insert(to_string(e.monic()));
      }
      CHECK(images == minors);
      CHECK(images.size() == static_cast<std::size_t>(binom(p - 1, 2)));
    }
    // Exact form for p = 3: e1 e5 - e2 e4 up to sign.
    const auto res = build_resolution<Q>(3, kQ);
    auto e = res.phi[0].at(0, 0);
    auto want = poly(res.ring, "e1*e5 - e2*e4");
    CHECK((e == want || e == -want));
  }

  TEST_CASE("phi commutes with the differentials at the first step for p = 3") {
    const auto res = build_resolution<Q>(3, kQ);
    auto lhs = compose(res.G.d[0], res.phi[1]);
    auto rhs = compose(res.phi[0], res.F.total.d[0]);
    CHECK((lhs - rhs).is_zero());
    CHECK_FALSE(lhs.is_zero());
  }

  TEST_CASE("phi has no unit entries") {
    for (int p : {3, 4, 5}) {
      const auto res = build_resolution<Q>(p, kQ);
      for (const auto& f : res.phi) {
        CHECK(f.unit_entries().empty());
        for (std::size_t i = 0; i < f.target().rank(); ++i)
          for (std::size_t j = 0; j < f.source().rank(); ++j) CHECK(f.at(i, j).constant_term().is_zero());
      }
    }
  }

  TEST_CASE("double complex identities and d^2 = 0") {
    for (int p : {3, 4}) {
      const auto res = build_resolution<Q>(p, kQ);
      CHECK(res.F.total.d_squared_failures().empty());
      CHECK(res.G.d_squared_failures().empty());
      CHECK(res.cone.d_squared_failures().empty());
      for (std::size_t i = 1; i < res.F.vertical.size(); ++i) {
        CHECK(compose(res.F.vertical[i - 1], res.F.vertical[i]).is_zero());
        CHECK(compose(res.F.horizontal[i - 1], res.F.horizontal[i]).is_zero());
        CHECK((compose(res.F.vertical[i - 1], res.F.horizontal[i]) + compose(res.F.horizontal[i - 1], res.F.vertical[i])).is_zero());
      }
    }
  }

  TEST_CASE("cone differentials are minimal and linear after the first") {
    for (int p : {3, 4}) {
      const auto res = build_resolution<Q>(p, kQ);
      for (std::size_t i = 0; i < res.cone.d.size(); ++i) {
        const auto& d = res.cone.d[i];
        CHECK(d.unit_entries().empty());
        CHECK(d.degree_violations().empty());
        if (d.is_zero()) continue;
        auto [lo, hi] = d.entry_degree_range();
        CHECK(lo == (i == 0 ? 2 : 1));
        CHECK(hi == lo);
      }
    }
  }
}

TEST_SUITE("associated graded ideal") {
  TEST_CASE("p = 3 gives four quadrics") {
    auto I = associated_graded_ideal<Q>(3, kQ);
    std::vector<std::string> g;
    for (const auto& f : I.gens()) g.push_back(to_string(f));
    CHECK(g == std::vector<std::string>{"-e2*e4 + e1*e5", "e4^2", "e4*e5", "e5^2"});
    CHECK(ideal_equal(I, associated_graded_ideal_from_minors<Q>(3, kQ)));
  }

  TEST_CASE("generator count is C(p-1,2) + C(p,2)") {
    for (int p : {3, 4, 5, 6}) {
      auto I = associated_graded_ideal<Q>(p, kQ);
      CHECK(static_cast<long>(I.size()) == binom(p - 1, 2) + binom(p, 2));
      for (const auto& f : I.gens()) CHECK(f.is_homogeneous());
    }
  }

  TEST_CASE("the Groebner route agrees for p = 4") {
    CHECK(ideal_equal(associated_graded_ideal<Q>(4, kQ), associated_graded_ideal_from_minors<Q>(4, kQ)));
  }
}

TEST_SUITE("betti numbers") {
  TEST_CASE("p = 3: (1,4,4,1) from the cone and from Koszul homology") {
    const auto res = build_resolution<Q>(3, kQ);
    CHECK(nonzero_ranks(res.cone) == std::vector<std::size_t>{1, 4, 4, 1});
    CHECK(res.cone.length() == 3);
    IdealBasis<Q> I(res.ring);
    const auto Ip = associated_graded_ideal<Q>(3, kQ);
    for (const auto& g : Ip.gens()) I.add(map_by_name(g, res.ring));
    auto kos = koszul_betti(I, 6);
    auto cone = betti_of_free_complex(res.cone.terms);
    for (auto& [ij, v] : cone) CHECK(kos[ij] == v);
    long total = 0;
    for (auto& [ij, v] : kos) total += v;
    CHECK(total == 10);
  }

  TEST_CASE("pdim is 2p - 3 and nothing lives beyond it") {
    for (int p : {3, 4, 5}) {
      const auto res = build_resolution<Q>(p, kQ);
      CHECK(res.cone.length() == 2 * p - 3);
      for (const auto& [ij, v] : betti_of_free_complex(res.cone.terms))
        if (ij.first > 2 * p - 3) CHECK(v == 0);
      CHECK(static_cast<long>(res.cone.terms[1].rank()) == binom(p - 1, 2) + binom(p, 2));
      CHECK(res.cone.terms[0].rank() == 1);
    }
  }

  TEST_CASE("text and JSON display") {
    BettiTable b{{{0, 0}, 1}, {{1, 2}, 4}, {{2, 3}, 4}, {{3, 4}, 1}};
    CHECK(betti_table_text(b) ==
          "       0 1 2 3\n"
          "    0: 1 . . .\n"
          "    1: . 4 4 1\n"
          "total: 1 4 4 1\n");
    auto j = betti_table_json(b);
    CHECK(j["total"] == nlohmann::json::array({1, 4, 4, 1}));
    CHECK(j["graded"].size() == 4);
  }

  TEST_CASE("full verification reports") {
    for (int p : {3, 4}) {
      Report r = verify_resolution(p, 6, kQ);
      CHECK_MESSAGE(r.pass, r.to_json().dump());
      CHECK(r.details["pdim"] == 2 * p - 3);
      Report b = betti_crosscheck(p, 6, kQ);
      CHECK_MESSAGE(b.pass, b.to_json().dump());
    }
  }

  TEST_CASE("the same resolution works over F_7") {
    Report r = verify_resolution(3, 5, Field::prime(7));
    CHECK(r.pass);
  }
}
