#pragma once

#include "sbo/gamma.hpp"

#include <functional>

namespace sbo {

struct PoleError : std::domain_error {
  using std::domain_error::domain_error;
};

// Gamma(z) in double precision; PoleError at z in {0, -1, -2, ...}.
double gamma_numeric(double z);
double gamma_numeric(const Rational& z);

// Floating value of a GammaExpr at a rational point (arguments must avoid poles).
double eval_numeric(const GammaExpr& g, const Assignment& a);

struct TestFunction {
  std::string name;
  std::function<double(double)> phi;  // even, supported in [-1, 1]
  double phi0;                        // phi(0)
};
TestFunction bump_test_function();  // (1 - x^2)^2
TestFunction zero_test_function();

struct RieszProbe {
  bool pass = false;
  double extrapolated = 0;
  double target = 0;
  std::vector<std::pair<double, double>> samples;  // (s, value)
  std::string details;
};

// int |x|^s phi(x) dx / Gamma((s+1)/2) for s = -1 + 2^{-j}, j = 1..levels,
// Richardson-extrapolated to s = -1 and compared with phi(0).
RieszProbe riesz_residue_probe(const TestFunction& f, int levels = 10, double tolerance = 1e-4);
// The same normalized integral at one s > -1.
double riesz_normalized_integral(const TestFunction& f, double s);

}  // namespace sbo
