#include "sbo/covariant.hpp"

#include <mutex>

namespace sbo {

Polynomial det(const PolyMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial(1);
  for (const auto& r : m)
    if (r.size() != n) throw std::invalid_argument("det: non-square matrix");
  if (n == 1) return m[0][0];
  Polynomial total;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t q = 0; q < n; ++q)
        if (q != c) row.push_back(m[r][q]);
      sub.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * det(sub);
    if (c % 2) total -= term;
    else total += term;
  }
  return total;
}

PolyMatrix g_matrix(int n) {
  PolyMatrix g(n + 1, std::vector<Polynomial>(n + 1));
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n + 1; ++j) g[i - 1][j - 1] = Polynomial::var(g_var(i, j));
  return g;
}

PolyMatrix h_matrix(int n) {
  PolyMatrix h(n, std::vector<Polynomial>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) h[i - 1][j - 1] = Polynomial::var(h_var(i, j));
  return h;
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.empty() || a[0].size() != b.size()) throw std::invalid_argument("matmul: shape mismatch");
  PolyMatrix r(a.size(), std::vector<Polynomial>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b[0].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        if (!a[i][k].is_zero() && !b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
  return r;
}

namespace {

PolyMatrix block(const PolyMatrix& m, int r0, int c0, int size) {
  PolyMatrix b(size, std::vector<Polynomial>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) b[i][j] = m[r0 + i][c0 + j];
  return b;
}

// Substitution g -> g w_i (w_i swaps columns i and i+1).
std::map<int, Polynomial> right_transposition(int i, int n) {
  PolyMatrix w(n + 1, std::vector<Polynomial>(n + 1));
  for (int a = 0; a <= n; ++a) w[a][a] = Polynomial(1);
  w[i - 1][i - 1] = w[i][i] = Polynomial(0);
  w[i - 1][i] = w[i][i - 1] = Polynomial(1);
  PolyMatrix gw = matmul(g_matrix(n), w);
  std::map<int, Polynomial> s;
  for (int a = 1; a <= n + 1; ++a)
    for (int b = 1; b <= n + 1; ++b) s[g_var(a, b)] = gw[a - 1][b - 1];
  return s;
}

std::mutex cache_mutex;

}  // namespace

Polynomial minor(MinorKind kind, int index, int n) {
  PolyMatrix g = g_matrix(n);
  if (kind == MinorKind::Kappa) {
    if (index < 1 || index > n + 1) throw std::out_of_range("index out of range");
    return det(block(g, n + 1 - index, 0, index));
  }
  if (index < 1 || index > n) throw std::out_of_range("index out of range");
  return det(block(g, n - index, 0, index));
}

Polynomial phi(int i, int n) {
  if (i < 1 || i > n + 1) throw std::out_of_range("index out of range");
  static std::map<std::pair<int, int>, Polynomial> cache;
  {
    std::lock_guard<std::mutex> lk(cache_mutex);
    auto it = cache.find({i, n});
    if (it != cache.end()) return it->second;
  }
  Polynomial r = i == 1 ? minor(MinorKind::Kappa, 1, n) : phi(i - 1, n).substitute(right_transposition(i - 1, n));
  std::lock_guard<std::mutex> lk(cache_mutex);
  cache[{i, n}] = r;
  return r;
}

Polynomial psi(int i, int n) {
  if (i < 1 || i > n + 1) throw std::out_of_range("index out of range");
  static std::map<std::pair<int, int>, Polynomial> cache;
  {
    std::lock_guard<std::mutex> lk(cache_mutex);
    auto it = cache.find({i, n});
    if (it != cache.end()) return it->second;
  }
  Polynomial r = i == n + 1 ? minor(MinorKind::Theta, n, n) : psi(i + 1, n).substitute(right_transposition(i, n));
  std::lock_guard<std::mutex> lk(cache_mutex);
  cache[{i, n}] = r;
  return r;
}

int catalogue_size(int n) { return 2 * n + 1; }

Polynomial catalogue_base(int slot, int n) {
  static std::map<std::pair<int, int>, Polynomial> cache;
  std::lock_guard<std::mutex> lk(cache_mutex);
  auto it = cache.find({slot, n});
  if (it != cache.end()) return it->second;
  Polynomial b = slot <= n ? minor(MinorKind::Kappa, slot + 1, n) : minor(MinorKind::Theta, slot - n, n);
  cache[{slot, n}] = b;
  return b;
}

std::string catalogue_latex(int slot, int n) {
  return slot <= n ? "\\kappa_{" + std::to_string(slot + 1) + "}" : "\\theta_{" + std::to_string(slot - n) + "}";
}

namespace {

const Polynomial& base_derivative(int slot, int n, int var) {
  static std::map<std::tuple<int, int, int>, Polynomial> cache;
  {
    std::lock_guard<std::mutex> lk(cache_mutex);
    auto it = cache.find({slot, n, var});
    if (it != cache.end()) return it->second;
  }
  Polynomial d = catalogue_base(slot, n).derivative(var);
  std::lock_guard<std::mutex> lk(cache_mutex);
  return cache.emplace(std::make_tuple(slot, n, var), std::move(d)).first->second;
}

// Class of an exponent under integer shifts: linear part plus fractional constant.
AffineForm shift_class(const AffineForm& e) {
  Rational c = e.constant();
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), c.get_num_mpz_t(), c.get_den_mpz_t());
  return e - AffineForm(Rational(fl));
}

}  // namespace

FunctionCombination FunctionCombination::power_product(int n, const Polynomial& prefactor, const AffineVec& exps) {
  if (static_cast<int>(exps.size()) != catalogue_size(n)) throw std::invalid_argument("size mismatch");
  FunctionCombination f(n);
  f.add(exps, prefactor);
  return f;
}

FunctionCombination FunctionCombination::polynomial(int n, const Polynomial& p) {
  return power_product(n, p, AffineVec(catalogue_size(n), AffineForm(0)));
}

void FunctionCombination::add(const AffineVec& e, const Polynomial& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FunctionCombination& FunctionCombination::operator+=(const FunctionCombination& o) {
  if (n_ == 0) n_ = o.n_;
  if (o.n_ != 0 && o.n_ != n_) throw std::invalid_argument("size mismatch");
  for (const auto& [e, c] : o.terms_) add(e, c);
  return *this;
}

FunctionCombination& FunctionCombination::operator*=(const Polynomial& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, p] : terms_) p *= c;
  return *this;
}

FunctionCombination FunctionCombination::derivative(int var) const {
  FunctionCombination r(n_);
  const int slots = catalogue_size(n_);
  for (const auto& [e, p] : terms_) {
    Polynomial dp = p.derivative(var);
    if (!dp.is_zero()) r.add(e, dp);
    for (int s = 0; s < slots; ++s) {
      if (e[s].is_constant() && e[s].constant() == 0) continue;
      const Polynomial& db = base_derivative(s, n_, var);
      if (db.is_zero()) continue;
      AffineVec e2 = e;
      e2[s] -= AffineForm(1);
      r.add(e2, e[s].to_polynomial() * p * db);
    }
  }
  return r;
}

FunctionCombination FunctionCombination::normalized() const {
  const int slots = catalogue_size(n_);
  std::vector<std::map<AffineForm, Rational>> lowest(slots);
  for (const auto& [e, p] : terms_)
    for (int s = 0; s < slots; ++s) {
      AffineForm cls = shift_class(e[s]);
      auto it = lowest[s].find(cls);
      if (it == lowest[s].end() || e[s].constant() < it->second) lowest[s][cls] = e[s].constant();
    }
  FunctionCombination r(n_);
  for (const auto& [e, p] : terms_) {
    AffineVec e2 = e;
    Polynomial q = p;
    for (int s = 0; s < slots; ++s) {
      AffineForm cls = shift_class(e[s]);
      Rational lo = lowest[s][cls];
      Rational d = e[s].constant() - lo;
      if (d != 0) {
        q *= catalogue_base(s, n_).pow(static_cast<unsigned>(d.get_num().get_ui()));
        e2[s] = cls + AffineForm(Rational(lo - cls.constant()));
      }
    }
    r.add(e2, q);
  }
  return r;
}

std::optional<PowerProduct> FunctionCombination::as_single() const {
  FunctionCombination f = normalized();
  if (f.terms_.size() != 1) return std::nullopt;
  const auto& [e, p] = *f.terms_.begin();
  return PowerProduct{p, e};
}

std::optional<Polynomial> FunctionCombination::as_polynomial() const {
  Polynomial total;
  for (const auto& [e, p] : terms_) {
    Polynomial t = p;
    for (int s = 0; s < catalogue_size(n_); ++s) {
      if (!e[s].is_constant()) return std::nullopt;
      const Rational& c = e[s].constant();
      if (c.get_den() != 1 || c < 0) return std::nullopt;
      if (c != 0) t *= catalogue_base(s, n_).pow(static_cast<unsigned>(c.get_num().get_ui()));
    }
    total += t;
  }
  return total;
}

FunctionCombination FunctionCombination::substitute(const Assignment& a) const {
  FunctionCombination r(n_);
  for (const auto& [e, p] : terms_) {
    AffineVec e2;
    for (const auto& x : e) e2.push_back(x.substitute(a));
    r.add(e2, p.substitute(a));
  }
  return r;
}

Polynomial FunctionCombination::eval_prefactor_sum(const Assignment& a) const {
  Polynomial r;
  for (const auto& [e, p] : terms_) r += p.substitute(a);
  return r;
}

std::string FunctionCombination::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, p] : terms_) {
    if (!out.empty()) out += " + ";
    out += "\\left(" + p.to_latex() + "\\right)";
    for (int s = 0; s < catalogue_size(n_); ++s) {
      if (e[s].is_constant() && e[s].constant() == 0) continue;
      out += " " + catalogue_latex(s, n_) + "^{" + e[s].to_latex() + "}";
    }
  }
  return out;
}

bool equivalent(const FunctionCombination& a, const FunctionCombination& b) { return (a - b).normalized().is_zero(); }

FunctionCombination apply_weyl(const WeylElement& w, const FunctionCombination& f) {
  FunctionCombination out(f.n());
  if (w.is_zero() || f.is_zero()) return out;
  const SpacePtr& s = w.space();
  if (s->matrix_size != f.n() + 1 || s->vars.front() != g_var(1, 1)) throw std::invalid_argument("size mismatch");
  const int nv = s->nv();
  std::map<std::vector<std::uint8_t>, FunctionCombination> memo;
  memo.emplace(std::vector<std::uint8_t>(nv, 0), f);
  std::function<const FunctionCombination&(const std::vector<std::uint8_t>&)> deriv =
      [&](const std::vector<std::uint8_t>& b) -> const FunctionCombination& {
    auto it = memo.find(b);
    if (it != memo.end()) return it->second;
    int v = nv - 1;
    while (b[v] == 0) --v;
    std::vector<std::uint8_t> prev = b;
    --prev[v];
    FunctionCombination d = deriv(prev).derivative(s->vars[v]);
    return memo.emplace(b, std::move(d)).first->second;
  };
  for (const auto& [k, c] : w.terms()) {
    std::vector<std::uint8_t> dk(k.begin() + nv, k.end());
    FunctionCombination g = deriv(dk);
    if (g.is_zero()) continue;
    if (!c.is_polynomial()) throw std::logic_error("apply_weyl: non-polynomial coefficient");
    Polynomial m = c.as_polynomial();
    for (int v = 0; v < nv; ++v)
      if (k[v]) m *= Polynomial::var(s->vars[v], k[v]);
    g *= m;
    out += g;
  }
  return out;
}

FunctionCombination kernel_K(const InductionParams& p) {
  Spectral sp = to_spectral(p);
  AffineVec e = sp.s;
  e.insert(e.end(), sp.t.begin(), sp.t.end());
  return FunctionCombination::power_product(p.n, Polynomial(1), e);
}

PolyMatrix x_matrix(int k, int n) {
  if (k < 0 || k > n) throw std::out_of_range("k out of range");
  PolyMatrix x(n + 1, std::vector<Polynomial>(n + 1));
  for (int r = 1; r <= n + 1; ++r) {
    int c = r <= k ? r : (r <= n ? r + 1 : k + 1);
    x[r - 1][c - 1] = Polynomial(1);
  }
  return x;
}

std::map<int, Polynomial> restriction_map(int k, int n) {
  PolyMatrix d(n + 1, std::vector<Polynomial>(n + 1));
  PolyMatrix h = h_matrix(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d[i][j] = h[i][j];
  d[n][n] = Polynomial(1);
  PolyMatrix hx = matmul(d, x_matrix(k, n));
  std::map<int, Polynomial> s;
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n + 1; ++j) s[g_var(i, j)] = hx[i - 1][j - 1];
  return s;
}

Polynomial restrict_k(const Polynomial& f, int k, int n) { return f.substitute(restriction_map(k, n)); }

Polynomial restrict_k(const FunctionCombination& f, int k) {
  auto p = f.as_polynomial();
  if (!p) throw std::invalid_argument("restriction defined on polynomial layer only");
  return restrict_k(*p, k, f.n());
}

std::map<std::vector<std::uint8_t>, RationalFunction> restrict_operator(const WeylElement& w, int k, int n) {
  std::map<std::vector<std::uint8_t>, RationalFunction> out;
  if (w.is_zero()) return out;
  const SpacePtr& s = w.space();
  const int nv = s->nv();
  auto rmap = restriction_map(k, n);
  for (const auto& [key, c] : w.terms()) {
    Polynomial m(1);
    for (int v = 0; v < nv; ++v)
      if (key[v]) m *= Polynomial::var(s->vars[v], key[v]);
    Polynomial r = m.substitute(rmap);
    if (r.is_zero()) continue;
    std::vector<std::uint8_t> dk(key.begin() + nv, key.end());
    RationalFunction& slot = out[dk];
    slot += c * RationalFunction(r);
    if (slot.is_zero()) out.erase(dk);
  }
  return out;
}

}  // namespace sbo
