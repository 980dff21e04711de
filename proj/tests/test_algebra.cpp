#include "doctest.h"
#include "sbo/affine.hpp"
#include "sbo/weyl.hpp"

using namespace sbo;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("7") == Rational(7));
}

TEST_CASE("polynomial gcd and division") {
  Polynomial x = Polynomial::var("x"), y = Polynomial::var("y");
  Polynomial a = (x + y) * (x - y) * (x + Rational(2));
  Polynomial b = (x + y) * (y + Rational(3));
  CHECK(gcd(a, b) == (x + y).monic());
  auto q = divide_exact(a, x + y);
  REQUIRE(q);
  CHECK(*q == (x - y) * (x + Rational(2)));
  CHECK(!divide_exact(a, y + Rational(3)));
}

TEST_CASE("rational function reduction") {
  Polynomial x = Polynomial::var("x");
  RationalFunction f(x * x - Rational(1), x - Rational(1));
  CHECK(f.is_polynomial());
  CHECK(f.as_polynomial() == x + Rational(1));
  RationalFunction g = RationalFunction(1) / RationalFunction(x) + RationalFunction(1) / RationalFunction(x + Rational(1));
  CHECK(cross_equal(g, RationalFunction(Rational(2) * x + Rational(1), x * (x + Rational(1)))));
}

TEST_CASE("Weyl commutation") {
  auto s = WeylSpace::coords({var_id("x")});
  auto X = WeylElement::x(s, 0), D = WeylElement::d(s, 0);
  CHECK(commutator(D, X) == WeylElement::identity(s));
  auto lhs = D.pow(2) * X.pow(3);
  Polynomial f = Polynomial::var(var_id("x"), 5) + Polynomial::var("x");

  Polynomial xf = Polynomial::var(var_id("x"), 3) * f;
  CHECK(lhs.apply(f) == xf.derivative(var_id("x")).derivative(var_id("x")));
}

TEST_CASE("epsilon brackets") {
  int n = 2;
  auto e12 = epsilon(1, 2, n), e21 = epsilon(2, 1, n), e11 = epsilon(1, 1, n), e22 = epsilon(2, 2, n);
  CHECK(commutator(e12, e21) == e11 - e22);
}

#include "sbo/operators.hpp"

TEST_CASE("expanded forms of D3 and F1") {
  const int n = 2;
  AffineVec L = lambda_symbols(n);
  MatrixWeyl A(n);
  auto l = [&](int a, int b) { return A.scalar(lambda_ab(L, a, b)); };
  auto e = [&](int a, int b) { return A.eps(a, b); };
  WeylElement D3 = A.phi(1) * (e(2, 1) * e(3, 2) - l(3, 2) * e(3, 1)) - l(3, 1) * A.phi(2) * e(3, 2) +
                   l(3, 1) * l(3, 2) * A.phi(3);
  CHECK(build_D(3, L, n) == D3);
  WeylElement F1 = A.psi(3) * (e(3, 2) * e(2, 1) + l(2, 1) * e(3, 1)) - l(3, 1) * A.psi(2) * e(2, 1) +
                   l(3, 1) * l(2, 1) * A.psi(1);
  CHECK(build_F(1, L, n) == F1);
  CHECK(build_F(2, L, n) == A.psi(3) * e(3, 2) - l(3, 2) * A.psi(2));
  CHECK(build_D(2, L, n) == A.phi(1) * e(2, 1) - l(2, 1) * A.phi(2));
}

TEST_CASE("phi psi action") {
  const int n = 2;
  MatrixWeyl A(n);
  auto f = [&](const Polynomial& p) { return FunctionCombination::polynomial(n, p); };
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (int c = 1; c <= 3; ++c)
        CHECK(equivalent(apply_weyl(A.eps(a, b), f(phi(c, n))), f(b == c ? phi(a, n) : Polynomial(0))));
  MESSAGE("psi2 = " << psi(2, n).to_string() << "  eps21 psi2 = " << A.eps(2, 1).apply(psi(2, n)).to_string()
                    << "  psi1 = " << psi(1, n).to_string());
}
