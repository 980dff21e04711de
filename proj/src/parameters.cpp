#include "sbo/parameters.hpp"

namespace sbo {

InductionParams InductionParams::symbolic(int n) {
  InductionParams p;
  p.n = n;
  p.xi.assign(n + 1, 0);
  p.eta.assign(n, 0);
  for (int i = 1; i <= n + 1; ++i) p.lambda.push_back(lam(i));
  for (int j = 1; j <= n; ++j) p.nu.push_back(nuf(j));
  return p;
}

InductionParams InductionParams::numeric(const std::vector<Rational>& lambda, const std::vector<Rational>& nu,
                                         Parities xi, Parities eta) {
  InductionParams p;
  p.n = static_cast<int>(nu.size());
  for (const auto& l : lambda) p.lambda.emplace_back(l);
  for (const auto& v : nu) p.nu.emplace_back(v);
  p.xi = xi.empty() ? Parities(p.n + 1, 0) : std::move(xi);
  p.eta = eta.empty() ? Parities(p.n, 0) : std::move(eta);
  p.validate();
  return p;
}

void InductionParams::validate() const {
  if (n < 1 || static_cast<int>(lambda.size()) != n + 1 || static_cast<int>(xi.size()) != n + 1 ||
      static_cast<int>(nu.size()) != n || static_cast<int>(eta.size()) != n)
    throw std::invalid_argument("size mismatch");
  for (int v : xi)
    if (v != 0 && v != 1) throw std::invalid_argument("parity must be 0 or 1");
  for (int v : eta)
    if (v != 0 && v != 1) throw std::invalid_argument("parity must be 0 or 1");
}

bool InductionParams::is_numeric() const {
  for (const auto& l : lambda)
    if (!l.is_constant()) return false;
  for (const auto& v : nu)
    if (!v.is_constant()) return false;
  return true;
}

InductionParams InductionParams::substitute(const Assignment& a) const {
  InductionParams r = *this;
  for (auto& l : r.lambda) l = l.substitute(a);
  for (auto& v : r.nu) v = v.substitute(a);
  return r;
}

Spectral to_spectral(const InductionParams& p) {
  p.validate();
  const int n = p.n;
  Spectral sp;
  const Rational half(1, 2);
  // 1-based helpers
  auto L = [&](int i) { return p.lambda[i - 1]; };
  auto N = [&](int j) { return p.nu[j - 1]; };
  for (int i = 1; i <= n; ++i) {
    sp.s.push_back(L(i) - N(n + 1 - i) - AffineForm(half));
    sp.delta.push_back(parity(p.xi[i - 1] + p.eta[n - i]));
  }
  sp.s.push_back(L(n + 1) + AffineForm(frac(n, 2)));
  sp.delta.push_back(p.xi[n]);
  for (int i = 1; i <= n; ++i) {
    sp.t.push_back(N(n + 1 - i) - L(i + 1) - AffineForm(half));
    sp.eps.push_back(parity(p.eta[n - i] + p.xi[i]));
  }
  return sp;
}

AffineVec rho_G(int n) {
  AffineVec r;
  for (int i = 1; i <= n + 1; ++i) r.emplace_back(frac(n + 2 - 2 * i, 2));
  return r;
}

AffineVec rho_H(int n) {
  AffineVec r;
  for (int i = 1; i <= n; ++i) r.emplace_back(frac(n + 1 - 2 * i, 2));
  return r;
}

HParams shift_params(const Parities& xi, const AffineVec& lambda, int k, const std::vector<unsigned>& alpha) {
  const int n = static_cast<int>(lambda.size()) - 1;
  if (static_cast<int>(xi.size()) != n + 1 || static_cast<int>(alpha.size()) != n || k < 0 || k > n)
    throw std::invalid_argument("size mismatch");
  HParams h;
  const Rational half(1, 2);
  for (int i = 1; i <= n; ++i) {
    Rational a(static_cast<long>(alpha[i - 1]));
    if (i <= k) {
      h.nu.push_back(lambda[i - 1] + AffineForm(half + a));
      h.eta.push_back(parity(xi[i - 1] + static_cast<long>(alpha[i - 1])));
    } else {
      h.nu.push_back(lambda[i] - AffineForm(half + a));
      h.eta.push_back(parity(xi[i] + static_cast<long>(alpha[i - 1])));
    }
  }
  return h;
}

namespace {

bool is_natural(const Rational& q) { return q.get_den() == 1 && q >= 0; }

}  // namespace

ClassificationResult classify_generic(const InductionParams& p, int k) {
  p.validate();
  if (!p.is_numeric()) throw std::invalid_argument("classification needs numeric parameters");
  const int n = p.n;
  if (k < 0 || k > n) throw std::invalid_argument("k out of range");
  auto L = [&](int i) { return p.lambda[i - 1].constant(); };
  auto N = [&](int j) { return p.nu[j - 1].constant(); };
  const Rational half(1, 2);
  ClassificationResult r;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) {
      Rational d = L(i) - L(j);
      if (d.get_den() == 1) r.not_generic = true;
    }
  bool member = true;
  Rational acc = 0;
  long par = 0;
  for (int l = 1; l <= k; ++l) {
    acc += N(l) - L(l) - half;
    par += p.eta[l - 1] + p.xi[l - 1];
    r.beta.push_back(acc);
    if (!is_natural(acc) || parity(par) != parity(acc.get_num().get_si())) member = false;
  }
  acc = 0;
  par = 0;
  for (int l = 1; l <= n - k; ++l) {
    int i = n + 1 - l;
    acc += L(i + 1) - N(i) - half;
    par += p.eta[i - 1] + p.xi[i];
    r.beta_prime.push_back(acc);
    if (!is_natural(acc) || parity(par) != parity(acc.get_num().get_si())) member = false;
  }
  r.member_of_L_k = member;
  r.dimension_hint = member ? 1 : 0;
  if (member) {
    std::vector<unsigned> a(n, 0);
    for (int i = 1; i <= k; ++i) {
      Rational d = r.beta[i - 1] - (i >= 2 ? r.beta[i - 2] : Rational(0));
      if (d < 0) {  // beta not monotone: no valid alpha
        member = false;
        break;
      }
      a[i - 1] = static_cast<unsigned>(d.get_num().get_ui());
    }
    for (int i = k + 1; i <= n && member; ++i) {
      Rational d = r.beta_prime[n - i] - (n - i >= 1 ? r.beta_prime[n - i - 1] : Rational(0));
      if (d < 0) {
        member = false;
        break;
      }
      a[i - 1] = static_cast<unsigned>(d.get_num().get_ui());
    }
    if (member)
      r.alpha = a;
    else {
      r.member_of_L_k = false;
      r.dimension_hint = 0;
    }
  }
  return r;
}

AffineVec unit(int len, int i, const Rational& c) {
  AffineVec v(len, AffineForm(0));
  v.at(i - 1) = AffineForm(c);
  return v;
}

AffineVec complement(int len, int i, const Rational& c) {
  AffineVec v(len, AffineForm(c));
  v.at(i - 1) = AffineForm(0);
  return v;
}

AffineVec operator+(const AffineVec& a, const AffineVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
  AffineVec r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

AffineVec operator-(const AffineVec& a, const AffineVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
  AffineVec r = a;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
  return r;
}

}  // namespace sbo
