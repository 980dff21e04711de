#include "doctest.h"

#include "sbo/identities.hpp"

using namespace sbo;

namespace {

bool all_pass(const std::vector<CheckResult>& v) {
  for (const auto& r : v)
    if (!r.pass) return false;
  return !v.empty();
}

// b as recovered from one formal-power step, up to a constant.
Polynomial step_b(OpKind kind, int i, const InductionParams& p) {
  AffineVec neg;
  for (const auto& a : p.lambda) neg.push_back(a * Rational(-1));
  const BsFactor f = bs_factor(apply_weyl(build_op(kind, i, neg, p.n), kernel_K(p)), kernel_K(bs_shift(kind, i, p)));
  REQUIRE(f.b);
  return *f.b;
}

bool proportional_to(const Polynomial& a, const Polynomial& b) {
  const RationalFunction q = RationalFunction(a) / RationalFunction(b);
  return q.is_constant() && !q.is_zero();
}

}  // namespace

TEST_CASE("restriction identities") {
  std::size_t count2 = 0, count3 = 0;
  for (int k = 0; k <= 2; ++k) {
    const auto v = verify_restriction_identities(2, k, 3);
    CHECK(all_pass(v));
    count2 += v.size();
  }
  for (int k = 0; k <= 3; ++k) {
    const auto v = verify_restriction_identities(3, k, 3);
    CHECK(all_pass(v));
    count3 += v.size();
  }
  // n + 2 identities per k
  CHECK(count2 == 12);
  CHECK(count3 == 20);
}

TEST_CASE("one-step Bernstein-Sato polynomials") {
  const InductionParams p = InductionParams::symbolic(2);
  const AffineForm h(frac(1, 2));
  CHECK(proportional_to(step_b(OpKind::D, 1, p), Polynomial(1)));
  CHECK(proportional_to(step_b(OpKind::D, 2, p), (lam(2) - nuf(2) + h).to_polynomial()));
  CHECK(proportional_to(step_b(OpKind::F, 2, p), (lam(2) - nuf(1) - h).to_polynomial()));
  CHECK(proportional_to(step_b(OpKind::F, 3, p), Polynomial(1)));
  for (OpKind kind : {OpKind::D, OpKind::F})
    for (int i = 1; i <= 3; ++i) {
      const CheckResult s = verify_bernstein_sato(kind, i, p, BsMode::Symbolic);
      CHECK_MESSAGE(s.pass, s.check << ": " << s.details);
      const CheckResult n = verify_bernstein_sato(kind, i, p, BsMode::Numeric, 9, 20);
      CHECK_MESSAGE(n.pass, n.check << ": " << n.details);
    }
}

TEST_CASE("Bernstein-Sato with nonzero parities") {
  for (int mask = 1; mask < 32; mask += 6) {
    InductionParams p = InductionParams::symbolic(2);
    for (int i = 0; i < 3; ++i) p.xi[i] = (mask >> i) & 1;
    for (int j = 0; j < 2; ++j) p.eta[j] = (mask >> (3 + j)) & 1;
    for (OpKind kind : {OpKind::D, OpKind::F})
      for (int i = 1; i <= 3; ++i) {
        const CheckResult r = verify_bernstein_sato(kind, i, p, BsMode::Symbolic);
        CHECK_MESSAGE(r.pass, r.check << " mask " << mask << ": " << r.details);
      }
  }
}

TEST_CASE("bs_factor rejects images with several power products") {
  const InductionParams p = InductionParams::symbolic(2);
  const FunctionCombination K = kernel_K(p);
  FunctionCombination two = K;
  two += FunctionCombination::polynomial(2, Polynomial(1));
  const BsFactor f = bs_factor(two, K);
  CHECK_FALSE(f.single);
  CHECK_FALSE(f.b);
  CHECK(f.details == "non-monomial output");
}

TEST_CASE("iterated Bernstein-Sato and composition order") {
  const InductionParams p = InductionParams::symbolic(2);
  for (OpKind kind : {OpKind::D, OpKind::F})
    for (int i = 1; i <= 3; ++i)
      for (unsigned a : {2u, 3u}) {
        const CheckResult r = verify_iterated_bs(kind, i, a, p);
        CHECK_MESSAGE(r.pass, r.check << ": " << r.details);
      }
  for (int f = 1; f <= 3; ++f)
    for (int d = 1; d <= 3; ++d) CHECK(verify_composition_order(f, d, p).pass == (f != d));
}

TEST_CASE("PBW engine realizes the Weyl operators") {
  const AffineVec L = lambda_symbols(2);
  for (unsigned a = 0; a <= 2; ++a)
    for (unsigned b = 0; b <= 2; ++b)
      CHECK(build_L_with(PbwAlg{}, {a, b}, 1, L, 2).to_weyl() == build_L({a, b}, 1, L, 2));
  for (int i = 1; i <= 3; ++i) {
    CHECK(build_D_with(PbwAlg{}, i, L, 2).to_weyl() == build_D(i, L, 2));
    CHECK(build_F_with(PbwAlg{}, i, L, 2).to_weyl() == build_F(i, L, 2));
  }
}

TEST_CASE("expansion coefficients and multiplicity-two basis") {
  const auto v = verify_expansion_lemma(3);
  CHECK(all_pass(v));
  CHECK(verify_rewrite_identity(4, 6, 3).pass);
  for (const auto& t : std::vector<std::array<long, 4>>{{2, 2, 0, 1}, {3, 2, 1, 1}, {2, 3, 0, 1}}) {
    const auto rep = verify_multiplicity_two_basis(AffineForm(0), t[0], t[1], t[2], t[3]);
    CHECK_MESSAGE(rep.result.pass, rep.result.details);
    CHECK_FALSE(rep.b0.is_zero());
    CHECK_FALSE(rep.b1.is_zero());
  }
  CHECK(verify_multiplicity_two_basis(lam(0), 2, 2, 0, 1).result.pass);
}
