#include "doctest.h"

#include "sbo/delta.hpp"
#include "sbo/operators.hpp"
#include "sbo/random.hpp"

using namespace sbo;

namespace {

const SpacePtr& S() { return delta_space(); }
WeylElement X(int i) { return WeylElement::x(S(), i); }
WeylElement D(int i) { return WeylElement::d(S(), i); }
WeylElement C(const AffineForm& a) { return WeylElement::scalar(S(), RationalFunction(a.to_polynomial())); }
RationalFunction R(const AffineForm& a) { return RationalFunction(a.to_polynomial()); }
RationalFunction R(const Polynomial& a) { return RationalFunction(a); }

// k = 1 parameters with support orders (n1, n2) and matching parities.
InductionParams k1_params(const AffineVec& lambda, long n1, long n2, const Parities& xi = {0, 0, 0}) {
  InductionParams p;
  p.n = 2;
  p.xi = xi;
  p.lambda = lambda;
  p.nu = {lambda[0] + AffineForm(frac(2 * n1 + 1, 2)), lambda[2] - AffineForm(frac(2 * n2 + 1, 2))};
  p.eta = {parity(xi[0] + n1), parity(xi[2] + n2)};
  return p;
}

std::map<int, Polynomial> at(const InductionParams& p) {
  std::map<int, Polynomial> m;
  for (int i = 1; i <= 3; ++i) m[lambda_var(i)] = p.lambda[i - 1].to_polynomial();
  for (int j = 1; j <= 2; ++j) m[nu_var(j)] = p.nu[j - 1].to_polynomial();
  return m;
}

}  // namespace

TEST_CASE("delta calculus") {
  for (unsigned m = 0; m <= 4; ++m) {
    const DeltaKernel K = DeltaKernel::delta({m, 0, 0});
    CHECK(act(X(0) * D(0), K) == DeltaKernel::delta({m, 0, 0}, RationalFunction(-static_cast<long>(m) - 1)));
  }
  CHECK(act(X(0), DeltaKernel::delta({0, 0, 0})).is_zero());
  CHECK(act(D(1), DeltaKernel::delta({0, 2, 0})) == DeltaKernel::delta({0, 3, 0}));
  RationalSampler rng(5);
  for (int t = 0; t < 20; ++t) {
    DeltaKernel K;
    for (int j = 0; j < 3; ++j)
      K.add({static_cast<unsigned>(rng.integer(0, 3)), static_cast<unsigned>(rng.integer(0, 3)), static_cast<unsigned>(rng.integer(0, 3))},
            RationalFunction(rng.next()));
    for (int i = 0; i < 3; ++i) CHECK(act(D(i) * X(i) - X(i) * D(i), K) == K);
  }
  CHECK_THROWS_WITH(DeltaKernel({1, 2}) + DeltaKernel(), "coordinate mismatch");
}

TEST_CASE("derived equations at k = 1 against the displayed system") {
  const PdeOperator g1{X(0) * D(0) + X(2) * D(2), R(lam(1) - nuf(1) - AffineForm(frac(3, 2)))};
  const PdeOperator d1{X(1) * D(1) + X(2) * D(2), R(nuf(2) - lam(3) - AffineForm(frac(3, 2)))};
  const PdeOperator e13{X(2) * (C(lam(1) - lam(3) - AffineForm(2)) - X(0) * D(0) - X(2) * D(2) - X(1) * D(1)) -
                            X(0) * X(1) * (C(lam(2) - lam(3) - AffineForm(1)) - X(1) * D(1)),
                        RationalFunction(0)};
  CHECK(derive_pde(1, "gamma1") == g1);
  CHECK(derive_pde(1, "delta1") == d1);
  CHECK(derive_pde(1, "E12") == e13);
  CHECK(derive_pde(1, "gamma1").is_euler());
  CHECK_THROWS_AS(derive_pde(1, "nonsense"), std::invalid_argument);
  CHECK_THROWS_WITH(derive_pde(1, "a1", 3), "unsupported n");
  for (int k = 0; k <= 2; ++k)
    for (const auto& tag : generator_tags()) CHECK_NOTHROW(derive_pde(k, tag));
}

TEST_CASE("generic k = 1 kernel") {
  const AffineVec L = lambda_symbols(2);
  for (auto [n1, n2] : {std::pair{2L, 3L}, {3L, 1L}, {1L, 1L}}) {
    const InductionParams p = k1_params(L, n1, n2);
    const KernelSpace ks = solve_kernels(p, 1);
    REQUIRE(ks.dimension == 1);
    const DeltaKernel K = ks.basis[0].normalized();
    // c_j = (-1)^j (-n1)_j (-n2)_j (l3-l2-n2)_j / ((l3-l1-n1-n2)_j j!)
    for (long j = 0; j <= std::min(n1, n2); ++j) {
      RationalFunction c = RationalFunction(pochhammer(AffineForm(-n1), j) * pochhammer(AffineForm(-n2), j) *
                                            pochhammer(L[2] - L[1] - AffineForm(n2), j)) /
                           R(pochhammer(L[2] - L[0] - AffineForm(n1 + n2), j));
      Rational fj = 1;
      for (long i = 2; i <= j; ++i) fj *= i;
      c *= RationalFunction(Rational((j % 2 ? -1 : 1)) / fj);
      CHECK(K.coefficient({static_cast<unsigned>(n1 - j), static_cast<unsigned>(n2 - j), static_cast<unsigned>(j)}) == c);
    }
    CHECK(same_span(ks.basis, {closed_form_kernel(1, KernelCase::Full, p)}));
    // recurrence
    for (long j = 0; j < std::min(n1, n2); ++j) {
      auto cj = [&](long i) {
        return K.coefficient({static_cast<unsigned>(n1 - i), static_cast<unsigned>(n2 - i), static_cast<unsigned>(i)});
      };
      CHECK(R(L[0] - L[2] + AffineForm(n1 + n2 - j)) * RationalFunction(Rational(j + 1)) * cj(j + 1) ==
            -R(L[1] - L[2] + AffineForm(n2 - j)) * RationalFunction(Rational((n1 - j) * (n2 - j))) * cj(j));
    }
  }
}

TEST_CASE("multiplicity two and empty cases") {
  const InductionParams p = multiplicity_two_params(AffineForm(0), 2, 2, 0, 1);
  CHECK(p.lambda == AffineVec{AffineForm(0), AffineForm(1), AffineForm(3)});
  const KernelSpace ks = solve_kernels(p, 1);
  CHECK(ks.dimension == 2);
  CHECK(same_span(ks.basis, {closed_form_kernel(1, KernelCase::Head, p, 0), closed_form_kernel(1, KernelCase::Truncated, p, 1)}));
  // symbolic lambda_0
  const InductionParams q = multiplicity_two_params(lam(0), 3, 4, 1, 2);
  CHECK(solve_kernels(q, 1).dimension == 2);
  const DeltaKernel tr = closed_form_kernel(1, KernelCase::Truncated, q, 2);
  CHECK(tr.coefficient({0, 1, 3}) == RationalFunction(1));
  for (const auto& [m, c] : tr.terms()) CHECK(m[2] >= 3);

  InductionParams bad = k1_params(lambda_symbols(2), 2, 2);
  bad.nu[0] = bad.nu[0] + AffineForm(frac(1, 3));
  CHECK(solve_kernels(bad, 1).dimension == 0);
  CHECK_THROWS_WITH(closed_form_kernel(1, KernelCase::Full, bad), "case preconditions violated");
  CHECK_THROWS_WITH(solve_kernels(InductionParams::symbolic(3), 1), "unsupported n");
}

TEST_CASE("closed forms satisfy every derived equation") {
  const AffineVec L = lambda_symbols(2);
  for (long n1 = 0; n1 <= 3; ++n1)
    for (long n2 = 0; n2 <= 3; ++n2) {
      const InductionParams p = k1_params(L, n1, n2);
      const DeltaKernel K = closed_form_kernel(1, KernelCase::Full, p);
      CHECK(K.coefficient({static_cast<unsigned>(n1), static_cast<unsigned>(n2), 0}) == RationalFunction(1));
      for (const auto& op : pde_system(1)) CHECK(act(op.substitute(at(p)), K).is_zero());
    }
}

TEST_CASE("k = 0 and k = 2 printed against amended forms") {
  // n1 <= n2 with generic lambda: dimension 1, only the amended sum solves the system.
  const AffineVec L = lambda_symbols(2);
  const long n1 = 2, n2 = 3;
  InductionParams h = InductionParams::symbolic(2);
  h.nu = {L[0] + AffineForm(frac(2 * n1 + 1, 2)), AffineForm(0)};
  h.nu[1] = L[0] + L[1] + AffineForm(n2 + 1) - h.nu[0];
  h.eta = {parity(n1), parity(n1 + n2)};
  const KernelSpace k2 = solve_kernels(h, 2);
  REQUIRE(k2.dimension == 1);
  CHECK(same_span(k2.basis, {closed_form_kernel(2, KernelCase::Full, h)}));
  CHECK_FALSE(same_span(k2.basis, {closed_form_kernel(2, KernelCase::Full, h, 0, KernelForm::Printed)}));

  InductionParams z = InductionParams::symbolic(2);
  z.nu = {AffineForm(0), L[2] - AffineForm(frac(2 * n1 + 1, 2))};
  z.nu[0] = L[1] + L[2] - AffineForm(n2 + 1) - z.nu[1];
  z.eta = {parity(n1 + n2), parity(n1)};
  const KernelSpace k0 = solve_kernels(z, 0);
  REQUIRE(k0.dimension == 1);
  CHECK(same_span(k0.basis, {closed_form_kernel(0, KernelCase::Full, z)}));
  CHECK_FALSE(same_span(k0.basis, {closed_form_kernel(0, KernelCase::Full, z, 0, KernelForm::Printed)}));
  // delta orders (n2 - j, n1 - j, j) at k = 0
  const DeltaKernel K0 = closed_form_kernel(0, KernelCase::Full, z);
  for (const auto& [m, c] : K0.terms()) CHECK(m[0] + m[2] == static_cast<unsigned>(n2));
}

TEST_CASE("solver dimension against the generic classification") {
  RationalSampler rng(17);
  for (int t = 0; t < 20; ++t) {
    const int k = static_cast<int>(rng.integer(0, 2));
    const std::vector<Rational> lam = {frac(3 * rng.integer(-4, 4) + 1, 3), frac(5 * rng.integer(-4, 4) + 2, 5),
                                       frac(7 * rng.integer(-4, 4) + 3, 7)};
    const Parities xi = {rng.bit(), rng.bit(), rng.bit()};
    const std::vector<unsigned> alpha = {static_cast<unsigned>(rng.integer(0, 3)), static_cast<unsigned>(rng.integer(0, 3))};
    AffineVec lv;
    for (const auto& q : lam) lv.push_back(AffineForm(q));
    HParams hp = shift_params(xi, lv, k, alpha);
    if (rng.bit()) hp.eta[0] ^= 1;
    std::vector<Rational> nu;
    for (const auto& a : hp.nu) nu.push_back(a.constant());
    const InductionParams p = InductionParams::numeric(lam, nu, xi, hp.eta);
    const ClassificationResult c = classify_generic(p, k);
    REQUIRE_FALSE(c.not_generic);
    CHECK(solve_kernels(p, k).dimension == c.dimension_hint);
  }
}
