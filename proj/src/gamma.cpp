#include "sbo/gamma.hpp"

#include <algorithm>

namespace sbo {

GammaExpr GammaExpr::gamma_half(const AffineForm& A, int e) {
  GammaExpr g;
  if (e != 0) g.factors_[A] = e;
  return g;
}

GammaExpr& GammaExpr::operator*=(const GammaExpr& o) {
  prefactor_ *= o.prefactor_;
  sign_ *= o.sign_;
  pi_power_ += o.pi_power_;
  for (const auto& [a, e] : o.factors_) {
    int& x = factors_[a];
    x += e;
    if (x == 0) factors_.erase(a);
  }
  return *this;
}

GammaExpr GammaExpr::inverse() const {
  GammaExpr r;
  r.prefactor_ = RationalFunction(1) / prefactor_;
  r.sign_ = sign_;
  r.pi_power_ = -pi_power_;
  for (const auto& [a, e] : factors_) r.factors_[a] = -e;
  return r;
}

GammaExpr& GammaExpr::operator/=(const GammaExpr& o) { return *this *= o.inverse(); }

namespace {

Integer floor_div2(const Rational& c) {
  // floor(c / 2) for the class representative bookkeeping
  Rational h = c / 2;
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return f;
}

// Key of the integer-shift class of a doubled argument: shifts by 2 preserve it.
AffineForm shift_class(const AffineForm& A) {
  return A - AffineForm(Rational(2 * floor_div2(A.constant())));
}

bool is_pole(const AffineForm& A) {
  if (!A.is_constant()) return false;
  const Rational& c = A.constant();
  return c.get_den() == 1 && c <= 0 && c.get_num() % 2 == 0;
}

}  // namespace

GammaExpr GammaExpr::canonicalize() const {
  GammaExpr r;
  r.prefactor_ = prefactor_;
  r.sign_ = sign_;
  r.pi_power_ = pi_power_;
  // class -> list of (constant, exponent)
  std::map<AffineForm, std::vector<std::pair<Rational, int>>> classes;
  for (const auto& [A, e] : factors_) {
    if (e == 0) continue;
    if (is_pole(A)) {
      r.factors_[A] += e;
      continue;
    }
    classes[shift_class(A)].push_back({A.constant(), e});
  }
  for (const auto& [cls, members] : classes) {
    Rational lo = members.front().first;
    for (const auto& m : members) lo = std::min(lo, m.first);
    AffineForm base = cls.linear_part() + AffineForm(lo);
    int total = 0;
    for (const auto& [c, e] : members) {
      total += e;
      Rational steps = (c - lo) / 2;
      if (steps == 0) continue;
      unsigned m = static_cast<unsigned>(steps.get_num().get_ui());
      Polynomial poch = pochhammer(base * Rational(1, 2), m);
      RationalFunction pr = RationalFunction(poch).pow(e);
      r.prefactor_ *= pr;
    }
    if (total == 0) continue;
    // Gamma(m) for a positive integer m is (m-1)!
    if (base.is_constant() && base.constant().get_den() == 1 && base.constant() > 0 && base.constant().get_num() % 2 == 0) {
      unsigned m = static_cast<unsigned>(base.constant().get_num().get_ui() / 2);
      Integer f;
      mpz_fac_ui(f.get_mpz_t(), m - 1);
      r.prefactor_ *= RationalFunction(Rational(f)).pow(total);
      continue;
    }
    r.factors_[base] += total;
  }
  for (auto it = r.factors_.begin(); it != r.factors_.end();)
    it = it->second == 0 ? r.factors_.erase(it) : std::next(it);
  return r;
}

GammaExpr GammaExpr::substitute(const std::map<int, AffineForm>& s) const {
  GammaExpr r;
  std::map<int, Polynomial> ps;
  for (const auto& [v, a] : s) ps[v] = a.to_polynomial();
  r.prefactor_ = prefactor_.substitute(ps);
  r.sign_ = sign_;
  r.pi_power_ = pi_power_;
  for (const auto& [A, e] : factors_) {
    int& x = r.factors_[A.substitute(s)];
    x += e;
  }
  for (auto it = r.factors_.begin(); it != r.factors_.end();)
    it = it->second == 0 ? r.factors_.erase(it) : std::next(it);
  return r;
}

GammaExpr GammaExpr::substitute(const Assignment& a) const {
  std::map<int, AffineForm> s;
  for (const auto& [v, q] : a) s[v] = AffineForm(q);
  return substitute(s);
}

RationalFunction GammaExpr::as_rational_function() const {
  if (!is_rational()) throw std::logic_error("Gamma expression is not rational: " + to_string());
  return sign_ < 0 ? -prefactor_ : prefactor_;
}

bool proportional(const GammaExpr& a, const GammaExpr& b) {
  GammaExpr q = (a / b).canonicalize();
  if (!q.is_rational()) return false;
  RationalFunction r = q.as_rational_function();
  return r.is_constant() && r.constant_value() != 0;
}

std::set<int> GammaExpr::variables() const {
  std::set<int> v = prefactor_.variables();
  for (const auto& [A, e] : factors_)
    for (const auto& [id, c] : A.coefficients()) v.insert(id);
  return v;
}

std::string GammaExpr::to_latex() const {
  std::string num, den;
  for (const auto& [A, e] : factors_) {
    std::string g = "\\Gamma\\left(\\tfrac{" + A.to_latex() + "}{2}\\right)";
    int k = std::abs(e);
    if (k > 1) g += "^{" + std::to_string(k) + "}";
    (e > 0 ? num : den) += g;
  }
  std::string s = sign_ < 0 ? "-" : "";
  if (!(prefactor_.is_constant() && prefactor_.constant_value() == 1)) s += "\\left(" + prefactor_.to_latex() + "\\right)";
  if (pi_power_ != 0) s += "\\pi^{" + std::to_string(pi_power_) + "}";
  if (den.empty()) return s + (num.empty() && (s.empty() || s == "-") ? "1" : num);
  return s + "\\frac{" + (num.empty() ? "1" : num) + "}{" + den + "}";
}

std::string GammaExpr::to_string() const {
  std::string s = sign_ < 0 ? "-" : "";
  s += "(" + prefactor_.to_string() + ")";
  if (pi_power_ != 0) s += "*pi^" + std::to_string(pi_power_);
  for (const auto& [A, e] : factors_) s += "*G((" + A.to_string() + ")/2)^" + std::to_string(e);
  return s;
}

bool WeylWord::valid() const {
  for (int l : letters)
    if (l < 1 || l > n) return false;
  return true;
}

std::vector<int> WeylWord::permutation() const {
  std::vector<int> v(n + 1);
  for (int i = 0; i <= n; ++i) v[i] = i + 1;
  for (int l : letters) v = apply_transposition(v, l);
  return v;
}

bool WeylWord::is_reduced() const {
  auto p = permutation();
  int inv = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (p[i] > p[j]) ++inv;
  return inv == length();
}

namespace {

AffineForm par(int a) { return AffineForm(parity(a)); }

}  // namespace

GammaExpr c_simple(int i, const Parities& xi, const AffineVec& lambda) {
  const int n = static_cast<int>(lambda.size()) - 1;
  if (i < 1 || i > n) throw std::out_of_range("letter out of range");
  int e = parity(xi[i - 1] + xi[i]);
  AffineForm d = lambda[i - 1] - lambda[i];
  GammaExpr c;
  if (e) c.negate();
  c.multiply_pi(1);
  c *= GammaExpr::gamma_half(d + par(e));
  c *= GammaExpr::gamma_half(-d + par(e));
  c /= GammaExpr::gamma_half(d + AffineForm(1) + par(e));
  c /= GammaExpr::gamma_half(-d + AffineForm(1) + par(e));
  return c;
}

GammaExpr c_function(const WeylWord& w, const Parities& xi, const AffineVec& lambda) {
  if (!w.valid()) throw std::out_of_range("letter out of range");
  GammaExpr c;
  Parities x = xi;
  AffineVec l = lambda;
  for (int letter : w.letters) {
    c *= c_simple(letter, x, l);
    x = apply_transposition(x, letter);
    l = apply_transposition(l, letter);
  }
  return c;
}

GammaExpr gamma_normalizer(const InductionParams& p) {
  p.validate();
  const int n = p.n;
  const AffineForm half(Rational(1, 2));
  GammaExpr g;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n; ++j) {
      AffineForm pr = par(p.xi[i - 1] + p.eta[j - 1]);
      if (i + j <= n + 1)
        g *= GammaExpr::gamma_half(p.lambda[i - 1] - p.nu[j - 1] + half + pr);
      else
        g *= GammaExpr::gamma_half(p.nu[j - 1] - p.lambda[i - 1] + half + pr);
    }
  return g;
}

GammaExpr e_function(const Parities& pr, const AffineVec& v) {
  if (pr.size() != v.size()) throw std::invalid_argument("size mismatch");
  GammaExpr g;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      g /= GammaExpr::gamma_half(v[i] - v[j] + AffineForm(1) + par(pr[i] + pr[j]));
  return g;
}

GammaExpr bs_scalar(BsKind kind, int i, unsigned alpha, const InductionParams& p) {
  p.validate();
  if (i < 1 || i > p.n + 1) throw std::out_of_range("index out of range");
  GammaExpr g;
  if (alpha == 0) return g;
  const AffineForm half(Rational(1, 2));
  const long a = static_cast<long>(alpha);
  for (int j = 1; j <= p.n; ++j) {
    AffineForm x = kind == BsKind::P ? p.nu[j - 1] - p.lambda[i - 1] : p.lambda[i - 1] - p.nu[j - 1];
    int pr = p.xi[i - 1] + p.eta[j - 1];
    g *= GammaExpr::gamma_half(x + half + AffineForm(Rational(a)) + par(pr + a));
    g /= GammaExpr::gamma_half(x + half + par(pr));
  }
  return g;
}

InductionParams primed_params(const InductionParams& p) {
  p.validate();
  const int n = p.n;
  // 1-based with eta_0 = 0 and xi_{n+2} = 0
  auto X = [&](int i) { return i >= 1 && i <= n + 1 ? p.xi[i - 1] : 0; };
  auto E = [&](int j) { return j >= 1 && j <= n ? p.eta[j - 1] : 0; };
  InductionParams q = p;
  q.xi.assign(n + 1, 0);
  q.eta.assign(n, 0);
  for (int i = 1; i <= n + 1; ++i) {
    long s = 0;
    for (int k = i; k <= n + 1; ++k) s += parity(X(k) + E(n + 1 - k)) + parity(E(n + 1 - k) + X(k + 1));
    q.lambda[i - 1] = p.lambda[i - 1] + AffineForm(Rational(s));
  }
  for (int i = 1; i <= n; ++i) {
    long s = 0;
    for (int k = n + 1 - i; k <= n; ++k) s += parity(E(n + 1 - k) + X(k + 1)) + parity(X(k + 1) + E(n - k));
    q.nu[i - 1] = p.nu[i - 1] + AffineForm(Rational(s));
  }
  return q;
}

GammaExpr gamma_ratio(const InductionParams& p) {
  return (gamma_normalizer(primed_params(p)) / gamma_normalizer(p)).canonicalize();
}

ResidueReport residue_scalar_check(int k, int n, const Parities& xi_in) {
  if (n < 1 || k < 0 || k > n) throw std::invalid_argument("index out of range");
  Parities xi = xi_in.empty() ? Parities(n + 1, 0) : xi_in;
  AffineVec L;
  for (int i = 1; i <= n + 1; ++i) L.push_back(lam(i));
  HParams h = shift_params(xi, L, k, std::vector<unsigned>(n, 0));
  const Parities& eta = h.eta;
  const AffineVec& nu = h.nu;
  auto pr = [](int a, int b) { return AffineForm(parity(a + b)); };
  const AffineForm one(1);

  GammaExpr ratio1, cH;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      AffineForm e = pr(eta[i - 1], eta[j - 1]);
      AffineForm d = nu[i - 1] - nu[j - 1];
      ratio1 *= GammaExpr::gamma_half(d + one + e);
      ratio1 /= GammaExpr::gamma_half(-d + e);
      cH *= GammaExpr::gamma_half(d + e) * GammaExpr::gamma_half(-d + e);
      cH /= GammaExpr::gamma_half(d + one + e) * GammaExpr::gamma_half(-d + one + e);
    }
  GammaExpr ratio2, cx;
  for (int i = k + 2; i <= n + 1; ++i) {
    AffineForm e = pr(xi[i - 1], xi[k]);
    AffineForm d = L[i - 1] - L[k];
    ratio2 *= GammaExpr::gamma_half(d + one + e);
    ratio2 /= GammaExpr::gamma_half(-d + e);
    cx *= GammaExpr::gamma_half(d + e) * GammaExpr::gamma_half(-d + e);
    cx /= GammaExpr::gamma_half(d + one + e) * GammaExpr::gamma_half(-d + one + e);
  }

  // gamma' at (x_k(xi,lambda), w_0^H(eta,nu)) without the residue factors.
  InductionParams q;
  q.n = n;
  for (int i = 1; i <= n + 1; ++i) {
    int src = i <= k ? i : (i <= n ? i + 1 : k + 1);
    q.xi.push_back(xi[src - 1]);
    q.lambda.push_back(L[src - 1]);
  }
  q.eta.assign(eta.rbegin(), eta.rend());
  q.nu.assign(nu.rbegin(), nu.rend());
  GammaExpr gp = gamma_normalizer(q);
  Spectral sp = to_spectral(q);
  for (int j = 1; j <= k; ++j) gp /= GammaExpr::gamma_half(sp.s[j - 1] + one + AffineForm(sp.delta[j - 1]));

  AffineVec negnu;
  for (const auto& v : nu) negnu.push_back(-v);
  GammaExpr denom = gp * e_function(xi, L) * e_function(eta, negnu);
  GammaExpr R = (ratio1 * ratio2 * cH * cx / denom).canonicalize();

  ResidueReport rep;
  rep.remainder = R;
  bool free = true;
  for (int v : R.variables())
    if (v >= lambda_var(0) && v <= lambda_var(8)) free = false;
  for (const auto& [A, e] : R.factors())
    if (!A.is_constant()) free = false;
  rep.pass = free;
  rep.details = "remainder = " + R.to_string();
  return rep;
}

}  // namespace sbo
