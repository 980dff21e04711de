#pragma once

#include "sbo/delta.hpp"
#include "sbo/expansion.hpp"
#include "sbo/gamma.hpp"

namespace sbo {

// One verified statement; serialized as {check, anchor, status, details, millis}.
struct CheckResult {
  std::string check;
  std::string anchor;
  bool pass = false;
  std::string details;
  double millis = 0;
};

// rest_k o D_i and rest_k o F_j for all i, j: the D_{k+1} / F_{k+1} scalars
// and the vanishing ones, decided on the restricted operator and (n = 2) on
// seeded polynomial jets.
std::vector<CheckResult> verify_restriction_identities(int n, int k, std::uint64_t seed = 1);

// image = b * target for a single PowerProduct image; nullopt details on failure.
struct BsFactor {
  bool single = false;
  std::optional<Polynomial> b;  // free of g-entries when present
  std::string details;
};
BsFactor bs_factor(const FunctionCombination& image, const FunctionCombination& target);

// Parameters of the kernel on the right-hand side of the identity.
InductionParams bs_shift(OpKind kind, int i, const InductionParams& p);
// The polynomial that the formal-power calculus must produce: the Gamma-ratio
// scalar of the normalized kernel times gamma(p) / gamma(shifted p).
RationalFunction bs_expected(OpKind kind, int i, unsigned alpha, const InductionParams& p);

enum class BsMode { Symbolic, Numeric };
// Symbolic: op(-lambda) K = b K' over Q(lambda, nu), b proportional to the
// Gamma-ratio scalar. Numeric: the same at `points` seeded rational
// parameter points, plus b recovered as a value ratio at random g-points.
CheckResult verify_bernstein_sato(OpKind kind, int i, const InductionParams& p, BsMode mode,
                                  std::uint64_t seed = 1, int points = 20);
// alpha-fold iteration: the product of step polynomials against bs_expected,
// and the step Gamma ratios (parities tracked) against bs_scalar(alpha).
CheckResult verify_iterated_bs(OpKind kind, int i, unsigned alpha, const InductionParams& p);
// F_a after D_b and D_b after F_a give the same scalar multiset.
CheckResult verify_composition_order(int f_index, int d_index, const InductionParams& p);

// eps_H^{2,1} o rest_1 = rest_1 o eps^{3,1} on seeded polynomial jets at n = 2.
CheckResult verify_rewrite_identity(std::uint64_t seed = 1, int jets = 8, unsigned degree = 3);

// Expansion formula for n_pow, m_pow <= max_pow: first and last coefficients
// and the m = 0 single term.
std::vector<CheckResult> verify_expansion_lemma(unsigned max_pow = 4);

struct MultiplicityTwoReport {
  CheckResult result;
  NormalFormExpansion b0, b1;
};
// The two extra operators at (lambda_0, n_1, n_2, k_0, l_0); lambda_0 may be symbolic.
MultiplicityTwoReport verify_multiplicity_two_basis(const AffineForm& lambda0, long n1, long n2, long k0, long l0);

}  // namespace sbo
