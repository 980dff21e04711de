#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sbo {

using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(std::string_view s);
// a / b in canonical form (the two-argument mpq constructor does not reduce).
inline Rational frac(long a, long b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}
std::string to_string(const Rational& q);
// LaTeX form: \tfrac{a}{b} for non-integers.
std::string to_latex(const Rational& q);

// Global indeterminate registry. Standard names are registered up front in a
// fixed order so variable ids (and hence term order) never depend on call order.
int var_id(std::string_view name);
const std::string& var_name(int id);
std::string var_latex(int id);
int var_count();

int lambda_var(int i);           // lambda_i, i = 0 .. 8
int nu_var(int j);               // nu_j,     j = 1 .. 8
int g_var(int i, int j);         // g_{ij},   1-based
int h_var(int i, int j);         // h_{ij},   1-based

// Dense exponent vector indexed by variable id, trailing zeros trimmed.
using Exponents = std::vector<std::uint16_t>;

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Assignment = std::map<int, Rational>;

class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  Polynomial(int c) : Polynomial(Rational(c)) {}   // NOLINT

  static Polynomial var(int id, unsigned power = 1);
  static Polynomial var(std::string_view name) { return var(var_id(name)); }
  static Polynomial monomial(const Exponents& e, const Rational& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  // Constant value; throws if not constant.
  Rational constant_value() const;
  std::size_t size() const { return terms_.size(); }

  unsigned degree(int var) const;
  unsigned total_degree() const;
  std::set<int> variables() const;
  bool depends_on(int var) const;

  // Largest term in lex order (variable 0 most significant).
  const std::pair<const Exponents, Rational>& leading_term() const;
  Rational leading_coefficient() const { return leading_term().second; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  Polynomial operator-() const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  friend bool operator<(const Polynomial& a, const Polynomial& b) { return a.terms_ < b.terms_; }

  Polynomial pow(unsigned e) const;
  Polynomial derivative(int var) const;

  // Simultaneous substitution of variables by polynomials.
  Polynomial substitute(const std::map<int, Polynomial>& s) const;
  Polynomial substitute(const Assignment& a) const;
  Rational eval(const Assignment& a) const;

  // Coefficients as a polynomial in `var`: degree -> coefficient (var-free).
  std::map<unsigned, Polynomial> coefficients_in(int var) const;
  // Coefficient polynomial of a monomial in the given variables only.
  std::map<Exponents, Polynomial> split(const std::set<int>& vars) const;

  Polynomial monic() const;

  std::string to_string() const;
  std::string to_latex() const;

  void add_term(const Exponents& e, const Rational& c);

 private:
  TermMap terms_;
};

Exponents exp_mul(const Exponents& a, const Exponents& b);
bool exp_divides(const Exponents& a, const Exponents& b);
Exponents exp_div(const Exponents& b, const Exponents& a);
void exp_trim(Exponents& e);
unsigned exp_get(const Exponents& e, int var);

// Exact division; nullopt when b does not divide a.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);
// Monic gcd over Q (recursive primitive remainder sequences); gcd(0,0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Rising factorial (a)_j = a (a+1) ... (a+j-1).
Polynomial pochhammer(const Polynomial& a, unsigned j);

}  // namespace sbo
