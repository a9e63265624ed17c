#include <doctest.h>

#include <random>

#include "qdeform/errors.hpp"
#include "qdeform/exact/ratfunc.hpp"
#include "qdeform/exact/univariate.hpp"

using namespace qdeform;
using namespace qdeform::exact;

namespace {

const VarTablePtr& T() { return VarTable::standard(); }
MPoly V(const char* n) { return MPoly::variable(T(), n); }
MPoly C(long n, long d = 1) { return MPoly::constant(T(), rat(n, d)); }
RatFunc RV(const char* n) { return RatFunc::variable(n); }
RatFunc RC(long n, long d = 1) { return RatFunc::constant(rat(n, d)); }

// Small random polynomials in q, p, z1 with coefficients in [-3, 3].
struct Gen {
  std::mt19937_64 rng{12345};
  long small(long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)); }
  MPoly poly() {
    const char* names[] = {"q", "p", "z1"};
    std::vector<MPoly::Term> terms;
    const int n = static_cast<int>(small(1, 4));
    for (int i = 0; i < n; ++i) {
      Monomial m;
      for (int v = 0; v < 3; ++v) m.set_exponent(T()->index(names[v]), static_cast<std::uint32_t>(small(0, 2)));
      terms.push_back({m, BigRat(small(-3, 3))});
    }
    return MPoly::from_terms(T(), std::move(terms));
  }
  MPoly nonzero_poly() {
    for (;;) {
      auto p = poly();
      if (!p.is_zero()) return p;
    }
  }
  RatFunc ratfunc() { return RatFunc(poly(), nonzero_poly()); }
  BigRat rational() { return rat(small(-9, 9), small(1, 9)); }
};

}  // namespace

TEST_CASE("parse_rational accepts p/q and rejects floats") {
  CHECK(parse_rational("3/6") == BigRat(1, 2));
  CHECK(parse_rational("-7") == BigRat(-7));
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
}

TEST_CASE("poly_arithmetic examples") {
  auto q = V("q");
  CHECK((q + C(1)) * (q - C(1)) == q * q - C(1));
  auto p = V("p");
  CHECK(poly_arithmetic(p, -p, PolyOp::add).is_zero());
  // Schoolbook expansion of (1+q+q^2)(q-1) done term by term.
  MPoly expanded = C(0);
  for (unsigned i = 0; i <= 2; ++i) expanded += q.pow(i) * q - q.pow(i);
  CHECK(poly_arithmetic(C(1) + q + q * q, q - C(1), PolyOp::mul) == expanded);
  CHECK(expanded == q.pow(3) - C(1));
}

TEST_CASE("polynomials over different tables do not mix") {
  auto other = VarTable::make({"q", "t"});
  CHECK_THROWS_AS(V("q") + MPoly::variable(other, "t"), StructuralError);
  CHECK_THROWS_AS(VarTable::make({"q", "q"}), StructuralError);
}

TEST_CASE("MPoly prints in graded lex order") {
  auto q = V("q");
  CHECK((q * q - C(1)).to_string() == "q^2 - 1");
  CHECK((C(1, 2) * V("z1") * q - C(3)).to_string() == "1/2*q*z1 - 3");
}

TEST_CASE("divide_exact") {
  auto q = V("q");
  auto p = V("p");
  auto f = (q - p) * (q * q + p);
  auto quot = f.divide_exact(q - p);
  REQUIRE(quot);
  CHECK(*quot == q * q + p);
  CHECK_FALSE((q * q + C(1)).divide_exact(q + C(1)));
}

TEST_CASE("ratfunc_arithmetic examples") {
  auto q = RV("q");
  auto s = ratfunc_arithmetic(RC(1) / (q - RC(1)), RC(1) / (q + RC(1)), RatOp::add);
  CHECK(ratfunc_equal(s, RatFunc(C(2) * V("q"), V("q") * V("q") - C(1))));
  auto x = RV("z1");
  CHECK(ratfunc_equal(ratfunc_arithmetic(x, x, RatOp::div), RC(1)));
  // (2)_q = (q^2 - 1)/(q - 1) from the q-number definition.
  RatFunc two_q((V("q") * V("q") - C(1)), V("q") - C(1));
  CHECK(ratfunc_equal(two_q, q + RC(1)));
  CHECK_THROWS_AS(ratfunc_arithmetic(q, RC(0), RatOp::div), ArithmeticError);
}

TEST_CASE("ratfunc_equal examples") {
  auto z1 = V("z1");
  auto z2 = V("z2");
  CHECK(ratfunc_equal(RatFunc(z1 * z1 - z2 * z2, z1 - z2), RatFunc(z1 + z2)));
  CHECK_FALSE(ratfunc_equal(RatFunc(V("q"), V("q") - C(1)), RatFunc(C(1), V("q") - C(1))));
  // Cross-multiplication oracle done by hand on the expanded forms.
  auto p = V("p");
  auto q = V("q");
  MPoly lhs_num = p * q - p, lhs_den = p * (q - C(1));
  CHECK(lhs_num * C(1) == lhs_den * C(1));
  CHECK(ratfunc_equal(RatFunc(lhs_num, lhs_den), RC(1)));
}

TEST_CASE("substitute examples") {
  auto q = RV("q");
  auto expr = RV("u1") / q - q * RV("u2") - q * RV("eta");
  auto at_one = substitute(expr, bind(T(), {{"q", RC(1)}}));
  CHECK(ratfunc_equal(at_one, RV("u1") - RV("u2") - RV("eta")));
  CHECK(ratfunc_equal(substitute(expr, {}), expr));
  auto f = (RV("z1") - RV("z2")) / (RV("z1") / q - q * RV("z2"));
  auto v = substitute(f, bind(T(), {{"q", RC(2)}, {"z1", RC(3)}, {"z2", RC(1)}}));
  REQUIRE(v.constant_value());
  CHECK(*v.constant_value() == BigRat(-4));
  CHECK_THROWS_AS(substitute(RC(1) / (RV("z1") - RV("z2")), bind(T(), {{"z1", RV("z2")}})), SingularSubstitution);
}

TEST_CASE("derivative examples") {
  const auto z = T()->index("z");
  CHECK(ratfunc_equal(derivative(RV("z") * RV("z"), z), RC(2) * RV("z")));
  CHECK(derivative(RV("q") + RC(3), z).is_zero());
  // d/dz (z - z2)/(z/q - q z2), compared with the hand-applied quotient rule.
  auto q = RV("q");
  auto z2 = RV("z2");
  auto den = RV("z") / q - q * z2;
  auto f = (RV("z") - z2) / den;
  auto expected = (den - (RV("z") - z2) / q) / (den * den);
  CHECK(ratfunc_equal(derivative(f, z), expected));
}

TEST_CASE("univar_gcd examples") {
  const auto& vars = T();
  MPoly x = MPoly::variable(vars, "x");
  MPoly one = MPoly::constant(vars, 1);
  CHECK(univar_gcd(x * x - one, x - one) == x - one);
  CHECK(univar_gcd(x * x + one, x + MPoly::constant(vars, 2)) == one);
  MPoly m = (x - one) * (x - one) * (x - MPoly::constant(vars, 2));
  CHECK(univar_gcd(m, m.derivative(vars->index("x"))) == x - one);
  CHECK_THROWS_AS(univar_gcd(x * V("q"), x), StructuralError);
}

TEST_CASE("ring axioms on random polynomials") {
  Gen g;
  for (int i = 0; i < 200; ++i) {
    auto a = g.poly(), b = g.poly(), c = g.poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
  }
}

TEST_CASE("ratfunc_equal is an equivalence and a*b/b == a") {
  Gen g;
  for (int i = 0; i < 100; ++i) {
    auto a = g.ratfunc();
    auto b = g.ratfunc();
    CHECK(ratfunc_equal(a, a));
    // Same value, different representation.
    auto k = RatFunc(g.nonzero_poly());
    auto a2 = (a * k) / k;
    auto a3 = RatFunc::sum(std::vector<RatFunc>{a * RC(2), -a}, T());
    CHECK(ratfunc_equal(a, a2));
    CHECK(ratfunc_equal(a2, a));
    CHECK(ratfunc_equal(a2, a3));
    CHECK(ratfunc_equal(a, a3));
    if (!b.is_zero()) CHECK(ratfunc_equal((a * b) / b, a));
  }
}

TEST_CASE("derivative: Leibniz rule and central finite differences") {
  Gen g;
  const auto z1 = T()->index("z1");
  const auto h = T()->index("h");
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    auto a = g.ratfunc();
    auto b = g.ratfunc();
    CHECK(ratfunc_equal(derivative(a * b, z1), derivative(a, z1) * b + a * derivative(b, z1)));

    // (f(x+h) - f(x-h)) / 2h with every other variable fixed, then h -> 0 after the
    // symbolic cancellation of h: an oracle independent of the quotient rule.
    Bindings rest{{T()->index("q"), RatFunc::constant(g.rational())}, {T()->index("p"), RatFunc::constant(g.rational())}};
    const BigRat x0 = g.rational();
    try {
      auto fa = substitute(a, rest);
      auto plus = substitute(fa, {{z1, RC(0) + RatFunc::constant(x0) + RV("h")}});
      auto minus = substitute(fa, {{z1, RatFunc::constant(x0) - RV("h")}});
      auto fd = (plus - minus) / (RC(2) * RV("h"));
      auto fd0 = substitute(fd, {{h, RC(0)}});
      auto exact = substitute(substitute(derivative(a, z1), rest), {{z1, RatFunc::constant(x0)}});
      CHECK_MESSAGE(ratfunc_equal(fd0, exact), a.to_string() << " x0=" << x0.get_str() << " fd0=" << fd0.to_string() << " ex=" << exact.to_string());
      ++checked;
    } catch (const SingularSubstitution&) {
      // Random point hit a pole; skip it.
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("substitution composes for disjoint domains") {
  Gen g;
  const auto q = T()->index("q");
  const auto p = T()->index("p");
  for (int i = 0; i < 50; ++i) {
    auto f = g.ratfunc();
    Bindings sigma{{q, RatFunc(g.poly()) + RV("z2")}};
    Bindings tau{{p, RatFunc::constant(g.rational())}, {T()->index("z2"), RatFunc::constant(g.rational())}};
    try {
      auto lhs = substitute(substitute(f, sigma), tau);
      Bindings composed = tau;
      composed[q] = substitute(sigma.at(q), tau);
      auto rhs = substitute(f, composed);
      CHECK(ratfunc_equal(lhs, rhs));
    } catch (const SingularSubstitution&) {
    }
  }
}
