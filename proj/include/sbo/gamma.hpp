#pragma once

#include "sbo/parameters.hpp"

namespace sbo {

// prefactor * sign * pi^pi_power * prod Gamma(A/2)^e over affine arguments A.
class GammaExpr {
 public:
  using FactorMap = std::map<AffineForm, int>;

  GammaExpr() : prefactor_(1) {}
  GammaExpr(const RationalFunction& c) : prefactor_(c) {}  // NOLINT
  // Gamma(A/2)^e; note the argument is stored doubled.
  static GammaExpr gamma_half(const AffineForm& A, int e = 1);
  // Gamma(a)^e for an ordinary argument a.
  static GammaExpr gamma(const AffineForm& a, int e = 1) { return gamma_half(a * Rational(2), e); }

  const RationalFunction& prefactor() const { return prefactor_; }
  int sign() const { return sign_; }
  int pi_power() const { return pi_power_; }
  const FactorMap& factors() const { return factors_; }
  bool is_rational() const { return factors_.empty() && pi_power_ == 0; }

  GammaExpr& operator*=(const GammaExpr& o);
  GammaExpr& operator/=(const GammaExpr& o);
  friend GammaExpr operator*(GammaExpr a, const GammaExpr& b) { return a *= b; }
  friend GammaExpr operator/(GammaExpr a, const GammaExpr& b) { return a /= b; }
  GammaExpr inverse() const;
  void multiply_pi(int e) { pi_power_ += e; }
  void negate() { sign_ = -sign_; }

  // Gamma((A+2m)/2) = Gamma(A/2) (A/2)_m within each integer-shift class;
  // constant arguments merge only when equal.
  GammaExpr canonicalize() const;

  GammaExpr substitute(const std::map<int, AffineForm>& s) const;
  GammaExpr substitute(const Assignment& a) const;
  // Result as a rational function (sign folded in); requires is_rational().
  RationalFunction as_rational_function() const;

  // Structural equality (compare canonical forms for semantic equality).
  friend bool operator==(const GammaExpr& a, const GammaExpr& b) {
    return a.sign_ == b.sign_ && a.pi_power_ == b.pi_power_ && a.factors_ == b.factors_ &&
           a.prefactor_ == b.prefactor_;
  }
  // Same Gamma multiset and pi power after canonicalize; prefactors proportional.
  friend bool proportional(const GammaExpr& a, const GammaExpr& b);

  std::set<int> variables() const;
  std::string to_latex() const;
  std::string to_string() const;

 private:
  RationalFunction prefactor_;
  int sign_ = 1;
  int pi_power_ = 0;
  FactorMap factors_;
};

bool proportional(const GammaExpr& a, const GammaExpr& b);

// Weyl words: letters are simple transpositions w_i, applied left to right.
struct WeylWord {
  int n = 0;  // acts on length n+1 vectors
  std::vector<int> letters;
  bool valid() const;
  int length() const { return static_cast<int>(letters.size()); }
  bool is_reduced() const;
  // Permutation image of an index vector after applying the letters in order.
  std::vector<int> permutation() const;
};

template <class T>
std::vector<T> apply_transposition(std::vector<T> v, int i) {
  std::swap(v.at(i - 1), v.at(i));
  return v;
}

// c_i of a single transposition at (xi, lambda).
GammaExpr c_simple(int i, const Parities& xi, const AffineVec& lambda);
// Gindikin-Karpelevich product.
GammaExpr c_function(const WeylWord& w, const Parities& xi, const AffineVec& lambda);

// prod_{i+j<=n+1} Gamma((lambda_i-nu_j+1/2+[xi_i+eta_j])/2) prod_{i+j>=n+2} Gamma((nu_j-lambda_i+1/2+[..])/2)
GammaExpr gamma_normalizer(const InductionParams& p);

// prod_{i<j} Gamma((v_i - v_j + 1 + [par_i + par_j])/2)^{-1}
GammaExpr e_function(const Parities& par, const AffineVec& v);

enum class BsKind { P, Q };
// The Gamma-ratio form of p_i^{(alpha)} / q_i^{(alpha)}, constants set to 1.
GammaExpr bs_scalar(BsKind kind, int i, unsigned alpha, const InductionParams& p);

struct ResidueReport {
  bool pass = false;
  std::string details;
  GammaExpr remainder;
};

ResidueReport residue_scalar_check(int k, int n, const Parities& xi = {});

// lambda', nu' of the non-spherical evaluation (eta_0 = 0, xi_{n+2} = 0).
InductionParams primed_params(const InductionParams& p);
// gamma(0,lambda',0,nu') / gamma(xi,lambda,eta,nu), canonicalized.
GammaExpr gamma_ratio(const InductionParams& p);

}  // namespace sbo
