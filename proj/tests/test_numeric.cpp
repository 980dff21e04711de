#include "doctest.h"

#include "sbo/numeric.hpp"

#include <cmath>

using namespace sbo;

TEST_CASE("gamma_numeric classical values") {
  const double sp = std::sqrt(M_PI);
  CHECK(gamma_numeric(frac(1, 2)) == doctest::Approx(sp).epsilon(1e-14));
  CHECK(gamma_numeric(Rational(5)) == doctest::Approx(24).epsilon(1e-14));
  CHECK(gamma_numeric(frac(-1, 2)) == doctest::Approx(-2 * sp).epsilon(1e-14));
  CHECK_THROWS_AS(gamma_numeric(Rational(0)), PoleError);
  CHECK_THROWS_AS(gamma_numeric(-3.0), PoleError);
  CHECK(gamma_numeric(50.0) == doctest::Approx(6.0828186403426e62).epsilon(1e-12));
}

TEST_CASE("numeric evaluation of Gamma expressions") {
  // Gamma(x+2)/Gamma(x) = x(x+1) before and after canonicalize
  const GammaExpr g = GammaExpr::gamma(lam(1) + AffineForm(2)) / GammaExpr::gamma(lam(1));
  const Assignment a = {{lambda_var(1), frac(7, 3)}};
  const double x = 7.0 / 3;
  CHECK(eval_numeric(g, a) == doctest::Approx(x * (x + 1)).epsilon(1e-12));
  CHECK(eval_numeric(g.canonicalize(), a) == doctest::Approx(x * (x + 1)).epsilon(1e-12));
  GammaExpr p = GammaExpr::gamma_half(AffineForm(1), 2);
  p.multiply_pi(-1);
  CHECK(eval_numeric(p, {}) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("Riesz residue probe") {
  const RieszProbe r = riesz_residue_probe(bump_test_function());
  CHECK(r.pass);
  CHECK(r.samples.size() == 10);
  CHECK(std::abs(r.extrapolated - 1) <= 1e-4);
  CHECK(riesz_residue_probe(zero_test_function()).extrapolated == 0.0);
  CHECK(riesz_normalized_integral(bump_test_function(), 0) == doctest::Approx(16.0 / 15 / std::sqrt(M_PI)).epsilon(1e-13));
  // exact value at s = 2: 2 int x^2 (1-x^2)^2 = 16/105, over Gamma(3/2)
  CHECK(riesz_normalized_integral(bump_test_function(), 2) == doctest::Approx(16.0 / 105 / (std::sqrt(M_PI) / 2)).epsilon(1e-12));
  CHECK_THROWS(riesz_normalized_integral(bump_test_function(), -1));
}
