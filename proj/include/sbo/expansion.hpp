#pragma once

#include "sbo/operators.hpp"

#include <array>

namespace sbo {

// n = 2 operators in Q(lambda)[Phi, Psi] (x) U(nbar), nbar spanned by
// e21 = eps^{2,1}, e32 = eps^{3,2}, e31 = eps^{3,1} with [e32, e21] = e31
// and e31 central. PBW words are e21^a e32^b e31^c, functions on the left.
struct PbwKey {
  std::array<std::uint8_t, 6> f{};    // exponents of Phi_1..3, Psi_1..3
  std::array<std::uint16_t, 3> w{};   // (a, b, c)
  friend bool operator<(const PbwKey& x, const PbwKey& y) {
    return x.f != y.f ? x.f < y.f : x.w < y.w;
  }
  friend bool operator==(const PbwKey& x, const PbwKey& y) { return x.f == y.f && x.w == y.w; }
};

class PbwElement {
 public:
  using TermMap = std::map<PbwKey, RationalFunction>;

  static PbwElement scalar(const RationalFunction& c);
  static PbwElement function(int slot);      // slot 0..2 Phi_{slot+1}, 3..5 Psi_{slot-2}
  static PbwElement generator(int a, int b);  // eps^{a,b} for (2,1), (3,2), (3,1)
  static PbwElement word(unsigned a, unsigned b, unsigned c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const PbwKey& k, const RationalFunction& c);

  PbwElement& operator+=(const PbwElement& o);
  PbwElement& operator-=(const PbwElement& o);
  PbwElement& operator*=(const RationalFunction& c);
  friend PbwElement operator+(PbwElement x, const PbwElement& y) { return x += y; }
  friend PbwElement operator-(PbwElement x, const PbwElement& y) { return x -= y; }
  friend PbwElement operator*(const PbwElement& x, const PbwElement& y);
  friend bool operator==(const PbwElement& x, const PbwElement& y) { return x.terms_ == y.terms_; }

  // Realization as a Weyl element on the 3x3 matrix entries.
  WeylElement to_weyl() const;

 private:
  TermMap terms_;
};

PbwElement operator*(const PbwElement& x, const PbwElement& y);

// eps^{a,b} applied to Phi_c / Psi_c, read off the actual polynomials:
// returns (coefficient, slot) or nullopt when the image is zero.
std::optional<std::pair<int, int>> eps_on_function(int a, int b, int slot);

struct PbwAlg {
  using Elem = PbwElement;
  Elem one() const { return PbwElement::scalar(RationalFunction(1)); }
  Elem phi(int r) const { return PbwElement::function(r - 1); }
  Elem psi(int r) const { return PbwElement::function(r + 2); }
  Elem eps(int a, int b) const { return PbwElement::generator(a, b); }
  Elem scalar(const Polynomial& p) const { return PbwElement::scalar(RationalFunction(p)); }
};

// sum coeff(a,b,c) rest_1 o e21^a e32^b e31^c, times det_H^{det_power}.
struct NormalFormExpansion {
  std::map<std::array<unsigned, 3>, RationalFunction> terms;
  unsigned det_power = 0;

  RationalFunction coefficient(unsigned a, unsigned b, unsigned c) const;
  bool is_zero() const { return terms.empty(); }
  std::string to_latex() const;
};

// rest_1 applied to a PBW element: functions restricted (Phi_2 -> 1,
// Psi_2 -> +-det_H, others 0), coefficients divided by det_H^{det_power}.
NormalFormExpansion restrict_rest1(const PbwElement& w, unsigned det_power);

// rest_1 o F_1^{n_pow} o D_3^{m_pow} with lambda threaded through the factors.
NormalFormExpansion expand_rest1_FD(unsigned n_pow, unsigned m_pow, const AffineVec& lambda);
// The same divided by (lambda_1-lambda_3+1+m_pow)_{n_pow} over symbolic lambda,
// then specialized to `lambda`; nonzero where that prefactor vanishes.
NormalFormExpansion expand_rest1_FD_renormalized(unsigned n_pow, unsigned m_pow, const AffineVec& lambda);

// Composition on the right by e32^q and on the left by (eps_H^{2,1})^l
// (= rest_1 o e31^l, e31 central).
NormalFormExpansion right_e32(const NormalFormExpansion& e, unsigned q);
NormalFormExpansion left_epsH21(const NormalFormExpansion& e, unsigned l);

}  // namespace sbo
