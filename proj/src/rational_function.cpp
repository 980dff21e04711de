#include "sbo/rational_function.hpp"

namespace sbo {

RationalFunction::RationalFunction(const Polynomial& n, const Polynomial& d) : num_(n), den_(d) {
  if (d.is_zero()) throw std::domain_error("zero denominator");
  normalize();
}

RationalFunction RationalFunction::unreduced(const Polynomial& n, const Polynomial& d) {
  if (d.is_zero()) throw std::domain_error("zero denominator");
  RationalFunction r;
  r.num_ = n;
  r.den_ = d;
  return r;
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (den_.is_constant()) {
    Rational c = den_.constant_term();
    if (c != 1) {
      num_ *= Rational(1) / c;
      den_ = Polynomial(1);
    }
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = *divide_exact(num_, g);
    den_ = *divide_exact(den_, g);
  }
  Rational lc = den_.leading_coefficient();
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw std::logic_error("not a constant: " + to_string());
  return num_.constant_term() / den_.constant_term();
}

Polynomial RationalFunction::as_polynomial() const {
  if (!is_polynomial()) throw std::logic_error("not a polynomial: " + to_string());
  return num_;
}

std::set<int> RationalFunction::variables() const {
  auto v = num_.variables();
  auto w = den_.variables();
  v.insert(w.begin(), w.end());
  return v;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  if (o.is_constant()) {
    num_ *= Rational(1) / o.constant_value();
    return *this;
  }
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::pow(int e) const {
  if (e >= 0) return RationalFunction(num_.pow(e), den_.pow(e));
  if (is_zero()) throw std::domain_error("negative power of zero");
  return RationalFunction(den_.pow(-e), num_.pow(-e));
}

RationalFunction RationalFunction::derivative(int var) const {
  if (is_polynomial()) return RationalFunction(num_.derivative(var) * (Rational(1) / den_.constant_term()));
  return RationalFunction(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RationalFunction RationalFunction::substitute(const std::map<int, Polynomial>& s) const {
  Polynomial d = den_.substitute(s);
  if (d.is_zero()) throw EvalError("division-by-zero at point");
  return RationalFunction(num_.substitute(s), d);
}

RationalFunction RationalFunction::substitute(const Assignment& a) const {
  Polynomial d = den_.substitute(a);
  if (d.is_zero()) throw EvalError("division-by-zero at point");
  return RationalFunction(num_.substitute(a), d);
}

Rational RationalFunction::eval(const Assignment& a) const {
  Rational d = den_.eval(a);
  if (d == 0) throw EvalError("division-by-zero at point");
  return num_.eval(a) / d;
}

RationalFunction RationalFunction::at_zero(int var) const {
  return substitute(Assignment{{var, Rational(0)}});
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string RationalFunction::to_latex() const {
  if (den_.is_constant()) return num_.to_latex();
  return "\\frac{" + num_.to_latex() + "}{" + den_.to_latex() + "}";
}

bool cross_equal(const RationalFunction& a, const RationalFunction& b) {
  return a.num() * b.den() == b.num() * a.den();
}

bool proportional(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  Rational c = a.leading_coefficient() / b.leading_coefficient();
  return a == b * c;
}

bool proportional(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return proportional(a.num() * b.den(), b.num() * a.den());
}

}  // namespace sbo
