#include "sbo/numeric.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <sstream>

namespace sbo {

double gamma_numeric(double z) {
  if (z <= 0 && std::floor(z) == z) throw PoleError("pole of Gamma at " + std::to_string(static_cast<long>(z)));
  return boost::math::tgamma(z);
}

double gamma_numeric(const Rational& z) {
  if (z <= 0 && z.get_den() == 1) throw PoleError("pole of Gamma at " + to_string(z));
  return gamma_numeric(z.get_d());
}

double eval_numeric(const GammaExpr& g, const Assignment& a) {
  double v = g.prefactor().eval(a).get_d() * g.sign() * std::pow(M_PI, g.pi_power());
  for (const auto& [A, e] : g.factors()) {
    const Rational z = A.eval(a) / 2;
    v *= std::pow(gamma_numeric(z), e);
  }
  return v;
}

TestFunction bump_test_function() {
  return {"(1-x^2)^2", [](double x) { return std::abs(x) < 1 ? (1 - x * x) * (1 - x * x) : 0.0; }, 1.0};
}

TestFunction zero_test_function() {
  return {"0", [](double) { return 0.0; }, 0.0};
}

double riesz_normalized_integral(const TestFunction& f, double s) {
  if (!(s > -1)) throw std::domain_error("s must exceed -1");
  const double e = s + 1;
  // x = u^{1/e} turns int_0^1 x^s phi dx into (1/e) int_0^1 phi(u^{1/e}) du.
  boost::math::quadrature::tanh_sinh<double> q;
  const double J = q.integrate([&](double u) { return f.phi(std::pow(u, 1 / e)); }, 0.0, 1.0);
  // 2 (1/e) J / Gamma(e/2) = J / Gamma(1 + e/2).
  return J / gamma_numeric(1 + e / 2);
}

RieszProbe riesz_residue_probe(const TestFunction& f, int levels, double tolerance) {
  RieszProbe r;
  r.target = f.phi0;
  std::vector<double> v;
  for (int j = 1; j <= levels; ++j) {
    const double e = std::ldexp(1.0, -j);
    const double val = riesz_normalized_integral(f, -1 + e);
    if (!std::isfinite(val)) {
      r.details = "quadrature did not converge at j = " + std::to_string(j);
      return r;
    }
    r.samples.emplace_back(-1 + e, val);
    v.push_back(val);
  }
  // Richardson in e with ratio 2, assuming an expansion in powers of e.
  std::vector<std::vector<double>> t(levels);
  for (int j = 0; j < levels; ++j) {
    t[j].push_back(v[j]);
    for (int k = 1; k <= j; ++k) {
      const double p = std::ldexp(1.0, k);
      t[j].push_back((p * t[j][k - 1] - t[j - 1][k - 1]) / (p - 1));
    }
  }
  r.extrapolated = t[levels - 1][std::min(levels - 1, 4)];
  const double err = std::abs(r.extrapolated - r.target);
  r.pass = err <= tolerance;
  std::ostringstream os;
  os.precision(12);
  os << "extrapolated " << r.extrapolated;
  os.precision(3);
  os << ", |error| = " << err;
  r.details = os.str();
  return r;
}

}  // namespace sbo
