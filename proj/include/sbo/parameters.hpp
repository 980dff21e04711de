#pragma once

#include "sbo/affine.hpp"

namespace sbo {

using AffineVec = std::vector<AffineForm>;
using Parities = std::vector<int>;

inline int parity(long v) { return static_cast<int>(((v % 2) + 2) % 2); }

// (xi, lambda) on GL_{n+1}, (eta, nu) on GL_n.
struct InductionParams {
  int n = 0;
  Parities xi;
  AffineVec lambda;
  Parities eta;
  AffineVec nu;

  // lambda_i, nu_j indeterminates, all parities 0.
  static InductionParams symbolic(int n);
  static InductionParams numeric(const std::vector<Rational>& lambda, const std::vector<Rational>& nu,
                                 Parities xi = {}, Parities eta = {});
  void validate() const;  // throws std::invalid_argument("size mismatch")
  bool is_numeric() const;
  InductionParams substitute(const Assignment& a) const;
};

// Exponents of kappa_1..kappa_{n+1} (s) and theta_1..theta_n (t) with their parities.
struct Spectral {
  Parities delta, eps;
  AffineVec s, t;
};

Spectral to_spectral(const InductionParams& p);

AffineVec rho_G(int n);  // (n/2, n/2-1, ..., -n/2)
AffineVec rho_H(int n);  // ((n-1)/2, ..., -(n-1)/2)

struct HParams {
  Parities eta;
  AffineVec nu;
};

// (eta_k(xi), nu_k(lambda)) shifted by alpha.
HParams shift_params(const Parities& xi, const AffineVec& lambda, int k, const std::vector<unsigned>& alpha);
inline HParams shift_params(const InductionParams& p, int k, const std::vector<unsigned>& alpha) {
  return shift_params(p.xi, p.lambda, k, alpha);
}

struct ClassificationResult {
  bool member_of_L_k = false;
  int dimension_hint = 0;
  std::optional<std::vector<unsigned>> alpha;
  bool not_generic = false;  // some lambda_i - lambda_j is an integer
  std::vector<Rational> beta, beta_prime;  // beta_1.., beta'_1..
};

ClassificationResult classify_generic(const InductionParams& p, int k);

// Vector helpers.
AffineVec unit(int len, int i, const Rational& c = 1);      // c e_i, 1-based
AffineVec complement(int len, int i, const Rational& c = 1);  // c (1,...,1) - c e_i
AffineVec operator+(const AffineVec& a, const AffineVec& b);
AffineVec operator-(const AffineVec& a, const AffineVec& b);


}  // namespace sbo
