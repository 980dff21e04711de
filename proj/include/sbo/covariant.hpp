#pragma once

#include "sbo/parameters.hpp"
#include "sbo/weyl.hpp"

namespace sbo {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Commutative determinant by permutation expansion (sizes here are <= 4).
Polynomial det(const PolyMatrix& m);
// Symbolic (n+1)x(n+1) matrix of g-entries; h-entries for the n x n case.
PolyMatrix g_matrix(int n);
PolyMatrix h_matrix(int n);
PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b);

enum class MinorKind { Kappa, Theta };

// kappa_k: rows n+2-k..n+1, cols 1..k. theta_l: rows n+1-l..n, cols 1..l.
Polynomial minor(MinorKind kind, int index, int n);
// Phi_i = Phi_1(g w_1 ... w_{i-1}), Psi_i = Psi_{n+1}(g w_i ... w_n), w_i the 0/1 permutation matrix.
Polynomial phi(int i, int n);
Polynomial psi(int i, int n);

// Catalogue slot of a minor: kappa_1..kappa_{n+1} then theta_1..theta_n.
int catalogue_size(int n);
Polynomial catalogue_base(int slot, int n);
std::string catalogue_latex(int slot, int n);

// prefactor * prod_slot base_slot^{exponent_slot}
struct PowerProduct {
  Polynomial prefactor;
  AffineVec exponents;
};

// Sum of PowerProducts keyed by their exponent vectors.
class FunctionCombination {
 public:
  using TermMap = std::map<AffineVec, Polynomial>;

  FunctionCombination() = default;
  explicit FunctionCombination(int n) : n_(n) {}
  static FunctionCombination power_product(int n, const Polynomial& prefactor, const AffineVec& exps);
  static FunctionCombination polynomial(int n, const Polynomial& p);

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const AffineVec& e, const Polynomial& c);
  FunctionCombination& operator+=(const FunctionCombination& o);
  FunctionCombination& operator*=(const Polynomial& c);
  friend FunctionCombination operator+(FunctionCombination a, const FunctionCombination& b) { return a += b; }
  friend FunctionCombination operator-(FunctionCombination a, const FunctionCombination& b) {
    FunctionCombination nb = b;
    nb *= Polynomial(-1);
    return a += nb;
  }

  FunctionCombination derivative(int var) const;

  // Bring, per base, all exponents that differ by integers to the smallest
  // one, folding the difference into the prefactors. Canonical for equality.
  FunctionCombination normalized() const;
  // A single PowerProduct if normalized() has one term.
  std::optional<PowerProduct> as_single() const;
  // Expanded polynomial when all exponents are natural constants.
  std::optional<Polynomial> as_polynomial() const;

  // Exponent substitution and prefactor substitution.
  FunctionCombination substitute(const Assignment& a) const;
  Polynomial eval_prefactor_sum(const Assignment& a) const;

  std::string to_latex() const;

 private:
  int n_ = 0;
  TermMap terms_;
};

bool equivalent(const FunctionCombination& a, const FunctionCombination& b);

// Leibniz action of a matrix-space Weyl element.
FunctionCombination apply_weyl(const WeylElement& w, const FunctionCombination& f);

// K in formal-power mode: prod kappa_k^{s_k} prod theta_l^{t_l}.
FunctionCombination kernel_K(const InductionParams& p);

// rows of x_k: e_1..e_k, e_{k+2}..e_{n+1}, e_{k+1}
PolyMatrix x_matrix(int k, int n);
// g -> diag(h,1) x_k as a substitution map on g-variables.
std::map<int, Polynomial> restriction_map(int k, int n);
Polynomial restrict_k(const Polynomial& f, int k, int n);
// Throws "restriction defined on polynomial layer only" for fractional powers.
Polynomial restrict_k(const FunctionCombination& f, int k);

// rest_k o W as sum_b C_b(h) (d^b f)(h x_k): key is the d-exponent part.
std::map<std::vector<std::uint8_t>, RationalFunction> restrict_operator(const WeylElement& w, int k, int n);

}  // namespace sbo
