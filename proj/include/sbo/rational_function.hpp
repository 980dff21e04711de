#pragma once

#include "sbo/polynomial.hpp"

namespace sbo {

// Quotient of polynomials, kept gcd-reduced with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(const Rational& c) : num_(c), den_(1) {}    // NOLINT
  RationalFunction(long c) : num_(c), den_(1) {}               // NOLINT
  RationalFunction(int c) : num_(c), den_(1) {}                // NOLINT
  RationalFunction(const Polynomial& n, const Polynomial& d);

  // Unreduced construction (keeps the given representative), for oracles.
  static RationalFunction unreduced(const Polynomial& n, const Polynomial& d);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;
  Polynomial as_polynomial() const;
  std::set<int> variables() const;
  bool depends_on(int var) const { return num_.depends_on(var) || den_.depends_on(var); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  RationalFunction operator-() const;

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }
  friend bool operator<(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ < b.num_ || (a.num_ == b.num_ && a.den_ < b.den_);
  }

  RationalFunction pow(int e) const;
  RationalFunction derivative(int var) const;
  RationalFunction substitute(const std::map<int, Polynomial>& s) const;
  RationalFunction substitute(const Assignment& a) const;
  // Throws EvalError on unbound names or a vanishing denominator.
  Rational eval(const Assignment& a) const;
  // Value of f at var = 0 where f is regular there.
  RationalFunction at_zero(int var) const;

  std::string to_string() const;
  std::string to_latex() const;

 private:
  void normalize();
  Polynomial num_, den_;
};

// Exact equality of two rational functions without relying on reduction.
bool cross_equal(const RationalFunction& a, const RationalFunction& b);

// True iff a = c * b for a nonzero constant c (both nonzero), or both zero.
bool proportional(const RationalFunction& a, const RationalFunction& b);
bool proportional(const Polynomial& a, const Polynomial& b);

}  // namespace sbo
