#include "sbo/affine.hpp"

namespace sbo {

AffineForm AffineForm::var(int id, const Rational& coeff) {
  AffineForm a;
  if (coeff != 0) a.lin_[id] = coeff;
  return a;
}

AffineForm AffineForm::from_polynomial(const Polynomial& p) {
  AffineForm a;
  for (const auto& [e, c] : p.terms()) {
    int var = -1;
    unsigned deg = 0;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      deg += e[i];
      var = static_cast<int>(i);
    }
    if (deg == 0)
      a.c0_ += c;
    else if (deg == 1)
      a.lin_[var] += c;
    else
      throw std::invalid_argument("polynomial is not affine: " + p.to_string());
  }
  return a;
}

Rational AffineForm::coefficient(int var) const {
  auto it = lin_.find(var);
  return it == lin_.end() ? Rational(0) : it->second;
}

AffineForm& AffineForm::operator+=(const AffineForm& o) {
  c0_ += o.c0_;
  for (const auto& [v, c] : o.lin_) {
    Rational& x = lin_[v];
    x += c;
    if (x == 0) lin_.erase(v);
  }
  return *this;
}

AffineForm& AffineForm::operator-=(const AffineForm& o) { return *this += -o; }

AffineForm& AffineForm::operator*=(const Rational& c) {
  if (c == 0) {
    lin_.clear();
    c0_ = 0;
    return *this;
  }
  c0_ *= c;
  for (auto& [v, x] : lin_) x *= c;
  return *this;
}

AffineForm AffineForm::operator-() const {
  AffineForm r = *this;
  r *= Rational(-1);
  return r;
}

AffineForm AffineForm::linear_part() const {
  AffineForm r = *this;
  r.c0_ = 0;
  return r;
}

std::optional<Integer> integer_difference(const AffineForm& a, const AffineForm& b) {
  if (a.lin_ != b.lin_) return std::nullopt;
  Rational d = a.c0_ - b.c0_;
  if (d.get_den() != 1) return std::nullopt;
  return d.get_num();
}

Polynomial AffineForm::to_polynomial() const {
  Polynomial p(c0_);
  for (const auto& [v, c] : lin_) p += Polynomial::var(v) * c;
  return p;
}

Rational AffineForm::eval(const Assignment& a) const {
  Rational r = c0_;
  for (const auto& [v, c] : lin_) {
    auto it = a.find(v);
    if (it == a.end()) throw EvalError("unbound name: " + var_name(v));
    r += c * it->second;
  }
  return r;
}

AffineForm AffineForm::substitute(const std::map<int, AffineForm>& s) const {
  AffineForm r(c0_);
  for (const auto& [v, c] : lin_) {
    auto it = s.find(v);
    if (it == s.end())
      r += AffineForm::var(v, c);
    else
      r += it->second * c;
  }
  return r;
}

AffineForm AffineForm::substitute(const Assignment& a) const {
  AffineForm r(c0_);
  for (const auto& [v, c] : lin_) {
    auto it = a.find(v);
    if (it == a.end())
      r += AffineForm::var(v, c);
    else
      r += AffineForm(Rational(c * it->second));
  }
  return r;
}

Polynomial pochhammer(const AffineForm& a, unsigned j) { return pochhammer(a.to_polynomial(), j); }

}  // namespace sbo
