#pragma once

#include "sbo/rational_function.hpp"

#include <optional>

namespace sbo {

// c_0 + sum_v c_v * v over the global indeterminates.
class AffineForm {
 public:
  AffineForm() = default;
  AffineForm(const Rational& c) : c0_(c) {}  // NOLINT
  AffineForm(long c) : c0_(c) {}             // NOLINT
  AffineForm(int c) : c0_(c) {}              // NOLINT
  static AffineForm var(int id, const Rational& coeff = 1);
  // Throws if p is not of degree <= 1.
  static AffineForm from_polynomial(const Polynomial& p);

  const std::map<int, Rational>& coefficients() const { return lin_; }
  const Rational& constant() const { return c0_; }
  Rational coefficient(int var) const;
  bool is_constant() const { return lin_.empty(); }
  bool depends_on(int var) const { return lin_.count(var) > 0; }

  AffineForm& operator+=(const AffineForm& o);
  AffineForm& operator-=(const AffineForm& o);
  AffineForm& operator*=(const Rational& c);
  AffineForm operator-() const;
  friend AffineForm operator+(AffineForm a, const AffineForm& b) { return a += b; }
  friend AffineForm operator-(AffineForm a, const AffineForm& b) { return a -= b; }
  friend AffineForm operator*(AffineForm a, const Rational& c) { return a *= c; }
  friend AffineForm operator*(const Rational& c, AffineForm a) { return a *= c; }
  friend bool operator==(const AffineForm& a, const AffineForm& b) { return a.c0_ == b.c0_ && a.lin_ == b.lin_; }
  friend bool operator!=(const AffineForm& a, const AffineForm& b) { return !(a == b); }
  friend bool operator<(const AffineForm& a, const AffineForm& b) {
    if (a.lin_ != b.lin_) return a.lin_ < b.lin_;
    return a.c0_ < b.c0_;
  }

  // The same linear part, constant dropped.
  AffineForm linear_part() const;
  // a - b when it is an integer constant.
  friend std::optional<Integer> integer_difference(const AffineForm& a, const AffineForm& b);

  Polynomial to_polynomial() const;
  Rational eval(const Assignment& a) const;
  AffineForm substitute(const std::map<int, AffineForm>& s) const;
  AffineForm substitute(const Assignment& a) const;

  std::string to_string() const { return to_polynomial().to_string(); }
  std::string to_latex() const { return to_polynomial().to_latex(); }

 private:
  std::map<int, Rational> lin_;
  Rational c0_ = 0;
};

std::optional<Integer> integer_difference(const AffineForm& a, const AffineForm& b);

// Rising factorial on an affine argument, as a polynomial.
Polynomial pochhammer(const AffineForm& a, unsigned j);

inline AffineForm lam(int i) { return AffineForm::var(lambda_var(i)); }
inline AffineForm nuf(int j) { return AffineForm::var(nu_var(j)); }

}  // namespace sbo
