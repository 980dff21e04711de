#include "doctest.h"

#include "sbo/gamma.hpp"
#include "sbo/operators.hpp"
#include "sbo/random.hpp"

using namespace sbo;

namespace {

Polynomial g(int i, int j) { return Polynomial::var(g_var(i, j)); }
AffineForm half(long a) { return AffineForm(frac(a, 2)); }

}  // namespace

TEST_CASE("epsilon on the matrix entries") {
  const SpacePtr s = WeylSpace::matrix(3);
  WeylElement expect(s);
  for (int r = 1; r <= 3; ++r) expect += WeylElement::x(s, s->index_of(g_var(r, 2))) * WeylElement::d(s, s->index_of(g_var(r, 1)));
  CHECK(epsilon(2, 1, 2) == expect);
  CHECK_THROWS_AS(epsilon(4, 1, 2), std::out_of_range);
}

TEST_CASE("epsilon commutators against the gl bracket") {
  for (int size : {3, 4}) {
    const SpacePtr s = WeylSpace::matrix(size);
    for (int i = 1; i <= size; ++i)
      for (int j = 1; j <= size; ++j)
        for (int k = 1; k <= size; ++k)
          for (int l = 1; l <= size; ++l) {
            WeylElement rhs(s);
            if (j == k) rhs += epsilon(s, i, l);
            if (i == l) rhs -= epsilon(s, k, j);
            CHECK(commutator(epsilon(s, i, j), epsilon(s, k, l)) == rhs);
          }
  }
}

TEST_CASE("ordered determinants") {
  const int n = 2;
  const MatrixWeyl A(n);
  const AffineVec L = lambda_symbols(n);
  const WeylElement l21 = A.scalar(lambda_ab(L, 2, 1));
  CHECK(ordered_det({{A.phi(1), l21}, {A.phi(2), A.eps(2, 1)}}) == A.phi(1) * A.eps(2, 1) - l21 * A.phi(2));
  const WeylElement one = A.one(), zero = one - one;
  CHECK(ordered_det({{one, zero, zero}, {zero, one, zero}, {zero, zero, one}}) == one);
  CHECK_THROWS(ordered_det({{one, zero}}));
}

TEST_CASE("constructor edge cases") {
  const int n = 2;
  const MatrixWeyl A(n);
  const AffineVec L = lambda_symbols(n);
  CHECK(build_D(1, L, n) == WeylElement::multiplication(A.space, g(3, 1)));
  CHECK(build_F(3, L, n) == WeylElement::multiplication(A.space, g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1)));
  CHECK_THROWS_AS(build_D(4, L, n), std::out_of_range);
  CHECK_THROWS_AS(build_F(0, L, n), std::out_of_range);
  CHECK(build_L({0, 0}, 1, L, n) == A.one());
  // F_1^a o D_3^b with lambda threaded through the factors
  // the rightmost factor sees lambda, the next one lambda minus its shift
  const AffineVec mid = L - factor_shift({OpKind::D, 3}, n);
  CHECK(build_L({1, 1}, 1, L, n) == build_F(1, mid, n) * build_D(3, L, n));
  for (const auto& f : L_factors({0, 1}, 0, n)) CHECK(f.kind == OpKind::D);
  CHECK_THROWS(build_L({1}, 1, L, n));
}

TEST_CASE("minors and the Phi Psi family") {
  const int n = 2;
  CHECK(minor(MinorKind::Kappa, 1, n) == g(3, 1));
  CHECK(minor(MinorKind::Theta, 1, n) == g(2, 1));
  CHECK(minor(MinorKind::Kappa, 3, n) == det(g_matrix(n)));
  CHECK_THROWS_AS(minor(MinorKind::Kappa, 4, n), std::out_of_range);
  CHECK(phi(1, n) == g(3, 1));
  CHECK(phi(2, n) == g(3, 2));
  // g -> g w_2 on Psi_3 (rows 1..2, columns 1 and 3)
  CHECK(psi(2, n) == g(1, 1) * g(2, 3) - g(1, 3) * g(2, 1));
}

TEST_CASE("derivative of a power product against an expanded oracle") {
  const int n = 2;
  RationalSampler rng(3);
  const Polynomial k2 = minor(MinorKind::Kappa, 2, n);
  for (long s = 2; s <= 4; ++s) {
    FunctionCombination f = FunctionCombination::power_product(n, Polynomial(1), {AffineForm(0), AffineForm(s), AffineForm(0), AffineForm(0), AffineForm(0)});
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) {
        const auto got = f.derivative(g_var(i, j)).as_polynomial();
        REQUIRE(got);
        CHECK(*got == k2.pow(static_cast<unsigned>(s)).derivative(g_var(i, j)));
      }
  }
}

TEST_CASE("spectral parameters") {
  auto sp = to_spectral(InductionParams::numeric({frac(1, 2), 0, -1}, {0, 0}));
  CHECK(sp.s == AffineVec{AffineForm(0), half(-1), AffineForm(0)});
  CHECK(sp.t == AffineVec{half(-1), half(1)});
  // s_i = lambda_i - nu_{n+1-i} - 1/2, t_i = nu_{n+1-i} - lambda_{i+1} - 1/2, s_{n+1} = lambda_{n+1} + n/2
  sp = to_spectral(InductionParams::numeric({1, 0, -1}, {frac(1, 2), frac(-1, 2)}));
  CHECK(sp.s == AffineVec{AffineForm(1), AffineForm(-1), AffineForm(0)});
  CHECK(sp.t == AffineVec{AffineForm(-1), AffineForm(1)});
  for (int d : sp.delta) CHECK(d == 0);
  // lambda = (1, 0, -1), nu = (-1/2, 1/2) has all exponents zero at n = 2
  const auto zero = InductionParams::numeric({1, 0, -1}, {frac(-1, 2), frac(1, 2)});
  for (const auto& a : to_spectral(zero).s) CHECK(a == AffineForm(0));
  for (const auto& a : to_spectral(zero).t) CHECK(a == AffineForm(0));
  CHECK(kernel_K(zero).as_polynomial() == std::optional<Polynomial>(Polynomial(1)));
}

TEST_CASE("restriction of the Phi Psi family") {
  for (int n : {2, 3})
    for (int k = 0; k <= n; ++k) {
      const Polynomial dh = det(h_matrix(n));
      for (int i = 1; i <= n + 1; ++i) {
        const Polynomial rp = restrict_k(phi(i, n), k, n), rs = restrict_k(psi(i, n), k, n);
        if (i == k + 1) {
          CHECK((rp == Polynomial(1) || rp == Polynomial(-1)));
          CHECK((rs == dh || rs == -dh));
        } else {
          CHECK(rp.is_zero());
          CHECK(rs.is_zero());
        }
      }
    }
  CHECK(restrict_k(psi(3, 2), 2, 2) == det(h_matrix(2)));
  auto frac_power = FunctionCombination::power_product(2, Polynomial(1), {half(1), AffineForm(0), AffineForm(0), AffineForm(0), AffineForm(0)});
  CHECK_THROWS_WITH(restrict_k(frac_power, 1), "restriction defined on polynomial layer only");
}

TEST_CASE("gamma functional equation") {
  const AffineForm x = lam(1);
  CHECK((GammaExpr::gamma(x + AffineForm(1)) / GammaExpr::gamma(x)).canonicalize().as_rational_function() ==
        RationalFunction(x.to_polynomial()));
  CHECK((GammaExpr::gamma(x + AffineForm(2)) / GammaExpr::gamma(x)).canonicalize().as_rational_function() ==
        RationalFunction(x.to_polynomial() * (x + AffineForm(1)).to_polynomial()));
}

TEST_CASE("c-functions") {
  const AffineVec L = lambda_symbols(2);
  CHECK(c_function(WeylWord{2, {}}, {0, 0, 0}, L).canonicalize() == GammaExpr(RationalFunction(1)));
  const AffineForm d = L[0] - L[1];
  GammaExpr expect = GammaExpr::gamma_half(d) * GammaExpr::gamma_half(-d) / GammaExpr::gamma_half(d + AffineForm(1)) /
                     GammaExpr::gamma_half(AffineForm(1) - d);
  expect.multiply_pi(1);
  CHECK(c_simple(1, {0, 0, 0}, L).canonicalize() == expect.canonicalize());
  CHECK(WeylWord{2, {1, 2, 1}}.is_reduced());
  CHECK_FALSE(WeylWord{2, {1, 1}}.is_reduced());
}

TEST_CASE("gamma normalizer and e-functions") {
  const auto p = InductionParams::symbolic(2);
  const GammaExpr gn = gamma_normalizer(p);
  int count = 0;
  for (const auto& [A, e] : gn.factors()) count += e;
  CHECK(count == 6);
  const GammaExpr e2 = e_function({0, 0}, {lam(1), lam(2)});
  CHECK(e2 == GammaExpr::gamma_half(lam(1) - lam(2) + AffineForm(1), -1));
  int inv = 0;
  const GammaExpr e3 = e_function({0, 0, 0}, lambda_symbols(2));
  for (const auto& [A, e] : e3.factors()) inv -= e;
  CHECK(inv == 3);
}

TEST_CASE("Bernstein-Sato scalars") {
  const auto p = InductionParams::symbolic(2);
  CHECK(bs_scalar(BsKind::P, 1, 0, p).canonicalize() == GammaExpr(RationalFunction(1)));
  Polynomial expect(1);
  for (int j = 1; j <= 2; ++j) expect *= ((nuf(j) - lam(1) + half(1)) * frac(1, 2)).to_polynomial();
  const GammaExpr s = bs_scalar(BsKind::P, 1, 1, p).canonicalize();
  REQUIRE(s.is_rational());
  CHECK(s.as_rational_function() == RationalFunction(expect));
}

TEST_CASE("residue scalar bookkeeping") {
  for (auto [n, k] : {std::pair{2, 2}, {2, 0}, {1, 1}, {1, 0}, {2, 1}}) {
    const ResidueReport r = residue_scalar_check(k, n);
    CHECK_MESSAGE(r.pass, r.details);
    for (int v : r.remainder.variables()) CHECK(v < 0);
  }
}

TEST_CASE("shift_params and classify_generic") {
  const AffineVec L = lambda_symbols(2);
  const HParams h0 = shift_params({0, 0, 0}, L, 1, {0, 0});
  CHECK(h0.nu == AffineVec{L[0] + half(1), L[2] - half(1)});
  CHECK_THROWS_WITH(shift_params({0, 0, 0}, L, 1, {0}), "size mismatch");
  RationalSampler rng(11);
  for (int t = 0; t < 30; ++t) {
    const int k = static_cast<int>(rng.integer(0, 2));
    const std::vector<Rational> lam = {frac(3 * rng.integer(-5, 5) + 1, 3), frac(5 * rng.integer(-5, 5) + 2, 5), frac(7 * rng.integer(-5, 5) + 3, 7)};
    const Parities xi = {rng.bit(), rng.bit(), rng.bit()};
    const std::vector<unsigned> alpha = {static_cast<unsigned>(rng.integer(0, 3)), static_cast<unsigned>(rng.integer(0, 3))};
    AffineVec lv;
    for (const auto& q : lam) lv.push_back(AffineForm(q));
    const HParams h = shift_params(xi, lv, k, alpha);
    std::vector<Rational> nu;
    for (const auto& a : h.nu) nu.push_back(a.constant());
    const ClassificationResult c = classify_generic(InductionParams::numeric(lam, nu, xi, h.eta), k);
    CHECK(c.member_of_L_k);
    CHECK_FALSE(c.not_generic);
    REQUIRE(c.alpha);
    CHECK(*c.alpha == alpha);
    // beta telescopes alpha
    Rational acc = 0;
    for (int l = 0; l < k; ++l) {
      acc += alpha[l];
      CHECK(c.beta[l] == acc);
    }
  }
  const ClassificationResult c =
      classify_generic(InductionParams::numeric({frac(1, 7), frac(2, 5), frac(3, 11)}, {frac(1, 7) + frac(1, 2) + frac(1, 3), 0}), 1);
  CHECK_FALSE(c.member_of_L_k);
  CHECK(c.dimension_hint == 0);
  CHECK(c.beta.at(0) == frac(1, 3));
  CHECK(classify_generic(InductionParams::numeric({1, 0, -1}, {0, 0}), 1).not_generic);
}
