#include <map>

#include "doctest.h"
#include "test_support.hpp"

#include "til/algebra.hpp"
#include "til/param.hpp"
#include "til/resolution.hpp"
#include "til/transfer.hpp"

using namespace til;
using namespace til::test;

TEST_SUITE("field") {
  TEST_CASE("rationals are kept in lowest terms with positive denominator") {
    const Field F = Field::rationals();
    CHECK(Rational::parse("6/4", F).to_string() == "3/2");
    CHECK(Rational::parse("3/-6", F).to_string() == "-1/2");
    CHECK((Rational::parse("1/3", F) + Rational::parse("2/3", F)).is_one());
    CHECK_THROWS_AS(Rational::parse("1/0", F), std::invalid_argument);
  }

  TEST_CASE("prime field residues stay in range") {
    const Field F = Field::prime(7);
    CHECK(Fp::from_int(-1, F).value() == 6);
    CHECK(Fp::from_int(15, F).value() == 1);
    CHECK((Fp::from_int(3, F) * Fp::from_int(5, F)).value() == 1);
    CHECK((Fp::from_int(3, F).inverse() * Fp::from_int(3, F)).is_one());
    CHECK(Field::parse("F3") == Field::prime(3));
    CHECK(Field::parse("Q") == Field::rationals());
    CHECK_THROWS_AS(Field::prime(4), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
    CHECK_THROWS_AS(Field::parse("F9"), std::invalid_argument);
  }
}

TEST_SUITE("ring") {
  TEST_CASE("ring for p = 3, q = 2 over F_3") {
    Ring R = symmetric_ring(6, Field::prime(3), 3);
    CHECK(R.nvars() == 6);
    CHECK(R.var(0) == "e1");
    CHECK(R.var(5) == "e6");
    CHECK(R.field().name() == "F3");
    // f_0 = t^2 + e3 t + e6 lives over this coefficient ring.
    auto fam = build_transfer_family<Fp>(3, 2, 0, Field::prime(3));
    CHECK(to_string(fam.f[0]) == "e3*t + t^2 + e6");
  }

  TEST_CASE("ring without variables") {
    Ring R({}, Field::rationals());
    CHECK(R.nvars() == 0);
    CHECK(Polynomial<Q>::constant(R, 5).is_constant());
  }

  TEST_CASE("target ring of the parametrization carries deg u_i = eps_i, deg alpha = eps_p") {
    Ring T = param_target(3, Field::rationals());
    REQUIRE(T.grading());
    CHECK(T.vars() == std::vector<std::string>{"u1", "u2", "u3", "alpha"});
    const auto& g = *T.grading();
    CHECK(g[0] == MultiDegree({1, 0, 0}));
    CHECK(g[1] == MultiDegree({0, 1, 0}));
    CHECK(g[2] == MultiDegree({0, 0, 1}));
    CHECK(g[3] == MultiDegree({0, 0, 1}));
  }

  TEST_CASE("malformed rings are rejected") {
    CHECK_THROWS_AS(Ring({"x", "x"}, Field::rationals()), std::invalid_argument);
    CHECK_THROWS_AS(Ring({"x"}, Field::rationals(), MonomialOrder::grevlex(), Ring::Grading{}),
                    std::invalid_argument);
  }
}

TEST_SUITE("polynomial") {
  TEST_CASE("(t + alpha)(t + u_p) expands to t^2 + (alpha + u_p) t + u_p alpha") {
    Ring R = qring({"t", "u3", "alpha"});
    auto lhs = (poly(R, "t + alpha")) * poly(R, "t + u3");
    CHECK(lhs == poly(R, "t^2 + alpha*t + u3*t + u3*alpha"));
  }

  TEST_CASE("adding zero is the identity") {
    Ring R = qring({"x", "y"});
    auto f = poly(R, "3*x^2 - 1/2*y + 1");
    CHECK(f + Polynomial<Q>(R) == f);
  }

  TEST_CASE("Frobenius over F_3 agrees with reducing the rational expansion") {
    const Field F3 = Field::prime(3);
    Ring R3({"e1", "e2"}, F3);
    Ring RQ({"e1", "e2"}, Field::rationals());
    auto cube = poly<Fp>(R3, "e1 + e2").pow(3);
    // Oracle: expand over Q, then reduce each coefficient modulo 3.
    auto expanded = poly(RQ, "e1 + e2").pow(3);
    std::vector<Term<Fp>> reduced;
    for (const auto& t : expanded.terms()) {
      long c = t.coeff.value().get_num().get_si();
      reduced.push_back({t.mono, Fp::from_int(c, F3)});
    }
    CHECK(cube == Polynomial<Fp>(R3, reduced));
    CHECK(cube == poly<Fp>(R3, "e1^3 + e2^3"));
  }

  TEST_CASE("canonical form drops zero terms and merges duplicates") {
    Ring R = qring({"x", "y"});
    std::vector<Term<Q>> t{{ExponentVector{1, 0}, Q(2)}, {ExponentVector{0, 1}, Q(0)}, {ExponentVector{1, 0}, Q(-2)},
                           {ExponentVector{0, 2}, Q(1)}};
    Polynomial<Q> f(R, t);
    CHECK(f.size() == 1);
    CHECK(to_string(f) == "y^2");
  }

  TEST_CASE("mixing coefficient types or rings is rejected") {
    Ring R = qring({"x"});
    Ring S = qring({"y"});
    CHECK_THROWS_AS(Polynomial<Fp>{R}, std::invalid_argument);
    CHECK_THROWS_AS(poly(R, "x") + poly(S, "y"), std::invalid_argument);
  }
}

TEST_SUITE("order") {
  // Textbook grevlex, written independently of MonomialOrder.
  int naive_grevlex(const ExponentVector& a, const ExponentVector& b) {
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  TEST_CASE("grevlex: e3 e4 beats e1 e6") {
    const MonomialOrder g = MonomialOrder::grevlex();
    ExponentVector e3e4{0, 0, 1, 1, 0, 0}, e1e6{1, 0, 0, 0, 0, 1};
    CHECK(g.compare(e3e4, e1e6) == std::strong_ordering::greater);
    CHECK(naive_grevlex(e3e4, e1e6) == 1);
  }

  TEST_CASE("every order compares a monomial equal to itself") {
    ExponentVector m{2, 0, 1};
    for (const auto& o : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block({true, false, false}),
                          MonomialOrder::weight({0, 0, 1})})
      CHECK(o.compare(m, m) == std::strong_ordering::equal);
  }

  TEST_CASE("t-degree first: t e1 beats e1 e2") {
    Ring T = t_graded_ring(3, Field::rationals());
    CHECK(poly(T, "t*e1 + e1*e2").lead_monomial() == poly(T, "t*e1").lead_monomial());
    CHECK(poly(T, "t*e6 + e1^3").lead_monomial() == poly(T, "t*e6").lead_monomial());
  }

  TEST_CASE("order text round trip") {
    for (const auto& o : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block({true, true, false}),
                          MonomialOrder::weight({0, 0, 1}, MonomialOrder::Kind::grevlex)})
      CHECK(MonomialOrder::parse(o.to_string()) == o);
  }

  TEST_CASE("block order eliminates the first block") {
    const MonomialOrder b = MonomialOrder::block({true, false, false});
    CHECK(b.less(ExponentVector{0, 5, 5}, ExponentVector{1, 0, 0}));
    CHECK(b.less(ExponentVector{1, 0, 0}, ExponentVector{1, 0, 1}));
  }
}

TEST_SUITE("homomorphism") {
  TEST_CASE("iota_2 sends e'5 to e8 - e2 e6 for p = 3, q = 2") {
    const Field F = Field::rationals();
    Ring A = iota_source(3, 2, F);
    Ring T = symmetric_ring(8, F, 3);
    auto img = iota_map<Q>(3, 2, 2, A, T);
    REQUIRE(img[4]);
    CHECK(*img[4] == poly(T, "e8 - e2*e6"));
  }

  TEST_CASE("identity images leave f unchanged") {
    Ring R = qring({"x", "y", "z"});
    auto f = poly(R, "x^2*y - 3*z + 7/2");
    CHECK(substitute(f, R, inclusion_images<Q>(R, R)) == f);
  }

  TEST_CASE("the parametrization sends e_{p+1} to u1 alpha and e_p to u_p + alpha") {
    auto phi = param_hom<Q>(3, Field::rationals());
    CHECK(phi(Polynomial<Q>::variable(phi.source, "e4")) == poly(phi.target, "u1*alpha"));
    CHECK(phi(Polynomial<Q>::variable(phi.source, "e3")) == poly(phi.target, "u3 + alpha"));
  }

  TEST_CASE("missing images are reported") {
    Ring R = qring({"x", "y"});
    Images<Q> img(2);
    img[0] = poly(R, "y");
    CHECK_THROWS_AS(substitute(poly(R, "x*y"), R, img), std::invalid_argument);
    CHECK(substitute(poly(R, "x^2"), R, img) == poly(R, "y^2"));
  }
}

TEST_SUITE("multidegree") {
  TEST_CASE("deg e_{p+1} = eps_1 + eps_p for p = 3") {
    Ring S = param_source(3, Field::rationals());
    CHECK(multidegree_of(Polynomial<Q>::variable(S, "e4")) == MultiDegree({1, 0, 1}));
  }

  TEST_CASE("constants have the zero multidegree") {
    Ring S = param_source(3, Field::rationals());
    auto d = multidegree_of(Polynomial<Q>::one(S));
    REQUIRE(d);
    CHECK(d->is_zero());
  }

  TEST_CASE("e1 + e2 is not homogeneous in the fine grading") {
    Ring R({"e1", "e2"}, Field::rationals(), MonomialOrder::grevlex(), fine_grading(2));
    CHECK_FALSE(multidegree_of(poly(R, "e1 + e2")).has_value());
  }

  TEST_CASE("modular degrees reduce") {
    MultiDegree a(std::vector<long>{4}, 3), b(std::vector<long>{2}, 3);
    CHECK((a + b)[0] == 0);
    CHECK(MultiDegree(std::vector<long>{-1}, 3)[0] == 2);
  }
}

TEST_SUITE("io") {
  TEST_CASE("printing and parsing agree") {
    Ring R = qring({"e1", "e2", "e3"});
    auto f = poly(R, "-(e1 - 2*e2)^2*e3 + 1/3*e1");
    CHECK(parse_polynomial<Q>(R, to_string(f)) == f);
    CHECK(to_string(Polynomial<Q>(R)) == "0");
    CHECK_THROWS_AS(poly(R, "e1 + * e2"), std::invalid_argument);
    CHECK_THROWS_AS(poly(R, "e4"), std::invalid_argument);
  }

  TEST_CASE("JSON round trip keeps ring and order") {
    Ring R({"a", "b"}, Field::prime(5), MonomialOrder::lex());
    auto f = poly<Fp>(R, "3*a*b^2 + 4*b + 1");
    auto j = to_json(f);
    auto g = polynomial_from_json<Fp>(j);
    CHECK(g == f);
    CHECK(g.ring() == R);
  }
}
