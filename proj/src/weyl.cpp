#include "sbo/weyl.hpp"

#include <algorithm>
#include <mutex>

namespace sbo {

int WeylSpace::index_of(int var) const {
  auto it = std::find(vars.begin(), vars.end(), var);
  return it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
}

int WeylSpace::entry(int i, int j) const {
  if (matrix_size <= 0 || i < 1 || j < 1 || i > matrix_size || j > matrix_size)
    throw std::out_of_range("matrix entry out of range");
  return (i - 1) * matrix_size + (j - 1);
}

namespace {

std::shared_ptr<WeylSpace> make_matrix(int size, bool h) {
  auto s = std::make_shared<WeylSpace>();
  s->matrix_size = size;
  for (int i = 1; i <= size; ++i)
    for (int j = 1; j <= size; ++j) {
      int id = h ? h_var(i, j) : g_var(i, j);
      s->vars.push_back(id);
      s->x_latex.push_back(var_latex(id));
      s->d_latex.push_back("\\partial_{" + std::to_string(i) + std::to_string(j) + "}");
    }
  return s;
}

}  // namespace

SpacePtr WeylSpace::matrix(int size) {
  static std::map<int, SpacePtr> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lk(m);
  auto& p = cache[size];
  if (!p) p = make_matrix(size, false);
  return p;
}

SpacePtr WeylSpace::h_matrix(int size) {
  static std::map<int, SpacePtr> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lk(m);
  auto& p = cache[size];
  if (!p) p = make_matrix(size, true);
  return p;
}

SpacePtr WeylSpace::coords(const std::vector<int>& ids) {
  auto s = std::make_shared<WeylSpace>();
  s->vars = ids;
  for (int id : ids) {
    s->x_latex.push_back(var_latex(id));
    s->d_latex.push_back("\\partial_{" + var_latex(id) + "}");
  }
  return s;
}

WeylElement WeylElement::scalar(SpacePtr s, const RationalFunction& c) {
  WeylElement w(s);
  w.add_term(WeylKey(2 * w.space_->nv(), 0), c);
  return w;
}

WeylElement WeylElement::x(SpacePtr s, int i) {
  WeylElement w(s);
  WeylKey k(2 * w.space_->nv(), 0);
  k.at(i) = 1;
  w.add_term(k, RationalFunction(1));
  return w;
}

WeylElement WeylElement::d(SpacePtr s, int i) {
  WeylElement w(s);
  const int nv = w.space_->nv();
  WeylKey k(2 * nv, 0);
  k.at(nv + i) = 1;
  w.add_term(k, RationalFunction(1));
  return w;
}

WeylElement WeylElement::multiplication(SpacePtr s, const Polynomial& p) {
  WeylElement w(s);
  const int nv = w.space_->nv();
  std::set<int> coord(w.space_->vars.begin(), w.space_->vars.end());
  for (const auto& [e, c] : p.split(coord)) {
    WeylKey k(2 * nv, 0);
    for (int i = 0; i < nv; ++i) {
      unsigned v = exp_get(e, w.space_->vars[i]);
      if (v > 255) throw std::overflow_error("Weyl exponent overflow");
      k[i] = static_cast<std::uint8_t>(v);
    }
    w.add_term(k, RationalFunction(c));
  }
  return w;
}

unsigned WeylElement::order() const {
  unsigned o = 0;
  const int nv = space_ ? space_->nv() : 0;
  for (const auto& [k, c] : terms_) {
    unsigned s = 0;
    for (int i = 0; i < nv; ++i) s += k[nv + i];
    o = std::max(o, s);
  }
  return o;
}

void WeylElement::add_term(const WeylKey& k, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

WeylElement& WeylElement::operator+=(const WeylElement& o) {
  if (!space_) space_ = o.space_;
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

WeylElement& WeylElement::operator-=(const WeylElement& o) {
  if (!space_) space_ = o.space_;
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

WeylElement& WeylElement::operator*=(const RationalFunction& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

WeylElement WeylElement::operator-() const {
  WeylElement r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  SpacePtr s = a.space_ ? a.space_ : b.space_;
  WeylElement r(s);
  if (a.is_zero() || b.is_zero()) return r;
  if (a.space_ && b.space_ && a.space_ != b.space_ && a.space_->vars != b.space_->vars)
    throw std::invalid_argument("Weyl product across different spaces");
  const int nv = s->nv();
  std::vector<int> active;
  std::vector<unsigned> kmax(nv);
  WeylKey key(2 * nv);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      // d^{b} x^{c}: sum over k of prod_v C(b_v,k_v) c_v!/(c_v-k_v)! x^{c-k} d^{b-k}
      active.clear();
      for (int v = 0; v < nv; ++v) {
        kmax[v] = std::min<unsigned>(ka[nv + v], kb[v]);
        if (kmax[v]) active.push_back(v);
      }
      RationalFunction base = ca * cb;
      std::vector<unsigned> kk(nv, 0);
      while (true) {
        Integer weight = 1;
        for (int v : active) {
          unsigned bv = ka[nv + v], cv = kb[v], k = kk[v];
          Integer binom;
          mpz_bin_uiui(binom.get_mpz_t(), bv, k);
          weight *= binom;
          for (unsigned t = 0; t < k; ++t) weight *= (cv - t);
        }
        for (int v = 0; v < nv; ++v) {
          key[v] = static_cast<std::uint8_t>(ka[v] + kb[v] - kk[v]);
          key[nv + v] = static_cast<std::uint8_t>(ka[nv + v] - kk[v] + kb[nv + v]);
        }
        if (weight == 1)
          r.add_term(key, base);
        else
          r.add_term(key, base * RationalFunction(Rational(weight)));
        // next multi-index
        std::size_t p = 0;
        for (; p < active.size(); ++p) {
          int v = active[p];
          if (kk[v] < kmax[v]) {
            ++kk[v];
            break;
          }
          kk[v] = 0;
        }
        if (p == active.size()) break;
      }
    }
  return r;
}

WeylElement WeylElement::pow(unsigned e) const {
  WeylElement r = identity(space_);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

WeylElement WeylElement::substitute_coefficients(const Assignment& a) const {
  WeylElement r(space_);
  for (const auto& [k, c] : terms_) r.add_term(k, c.substitute(a));
  return r;
}

WeylElement WeylElement::substitute_coefficients(const std::map<int, Polynomial>& s) const {
  WeylElement r(space_);
  for (const auto& [k, c] : terms_) r.add_term(k, c.substitute(s));
  return r;
}

namespace {

template <class F>
F apply_impl(const WeylElement& w, const F& f) {
  const SpacePtr& s = w.space();
  const int nv = s->nv();
  F out = F(0);
  std::map<std::vector<std::uint8_t>, F> memo;
  for (const auto& [k, c] : w.terms()) {
    std::vector<std::uint8_t> dk(k.begin() + nv, k.end());
    auto it = memo.find(dk);
    if (it == memo.end()) {
      F g = f;
      for (int v = 0; v < nv && !g.is_zero(); ++v)
        for (unsigned t = 0; t < dk[v] && !g.is_zero(); ++t) g = g.derivative(s->vars[v]);
      it = memo.emplace(dk, g).first;
    }
    if (it->second.is_zero()) continue;
    Polynomial xm(1);
    for (int v = 0; v < nv; ++v)
      if (k[v]) xm *= Polynomial::var(s->vars[v], k[v]);
    if constexpr (std::is_same_v<F, Polynomial>) {
      if (!c.is_polynomial()) throw std::logic_error("apply: non-polynomial coefficient");
      out += c.as_polynomial() * xm * it->second;
    } else {
      out += c * RationalFunction(xm) * it->second;
    }
  }
  return out;
}

}  // namespace

Polynomial WeylElement::apply(const Polynomial& f) const {
  if (is_zero()) return Polynomial();
  return apply_impl<Polynomial>(*this, f);
}

RationalFunction WeylElement::apply(const RationalFunction& f) const {
  if (is_zero()) return RationalFunction();
  return apply_impl<RationalFunction>(*this, f);
}

namespace {

std::string render(const WeylElement& w, bool latex) {
  if (w.is_zero()) return "0";
  const SpacePtr& s = w.space();
  const int nv = s->nv();
  std::string out;
  bool first = true;
  for (const auto& [k, c] : w.terms()) {
    std::string mono;
    for (int v = 0; v < nv; ++v) {
      if (!k[v]) continue;
      if (!mono.empty()) mono += latex ? " " : "*";
      mono += latex ? s->x_latex[v] : var_name(s->vars[v]);
      if (k[v] > 1) mono += "^{" + std::to_string(k[v]) + "}";
    }
    for (int v = 0; v < nv; ++v) {
      if (!k[nv + v]) continue;
      if (!mono.empty()) mono += latex ? " " : "*";
      mono += latex ? s->d_latex[v] : "d" + var_name(s->vars[v]);
      if (k[nv + v] > 1) mono += "^{" + std::to_string(k[nv + v]) + "}";
    }
    std::string cs = latex ? c.to_latex() : c.to_string();
    bool neg = false;
    bool compound = !(c.is_polynomial() && c.num().size() == 1);
    if (!compound && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    if (compound) cs = latex ? "\\left(" + cs + "\\right)" : "(" + cs + ")";
    std::string term;
    if (mono.empty())
      term = cs;
    else if (cs == "1")
      term = mono;
    else
      term = cs + (latex ? " " : "*") + mono;
    if (first)
      out += neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

}  // namespace

std::string WeylElement::to_latex() const { return render(*this, true); }
std::string WeylElement::to_string() const { return render(*this, false); }

WeylElement commutator(const WeylElement& a, const WeylElement& b) { return a * b - b * a; }

WeylElement epsilon(const SpacePtr& s, int i, int j) {
  WeylElement r(s);
  const int nv = s->nv();
  for (int k = 1; k <= s->matrix_size; ++k) {
    WeylKey key(2 * nv, 0);
    key[s->entry(k, i)] = 1;
    key[nv + s->entry(k, j)] = 1;
    r.add_term(key, RationalFunction(1));
  }
  return r;
}

WeylElement epsilon(int i, int j, int n) { return epsilon(WeylSpace::matrix(n + 1), i, j); }

WeylElement epsilon_tilde(const SpacePtr& s, int i, int j) {
  WeylElement e = epsilon(s, i, j);
  return ((i + j + 1) % 2) ? -e : e;
}

WeylElement epsilon_tilde(int i, int j, int n) { return epsilon_tilde(WeylSpace::matrix(n + 1), i, j); }

WeylElement ordered_det(const OperatorMatrix& m) {
  if (m.empty()) throw std::invalid_argument("ordered_det: empty matrix");
  SpacePtr s;
  for (const auto& row : m)
    for (const auto& e : row)
      if (e.space()) s = e.space();
  if (!s) return WeylElement();
  return ordered_det(m, WeylElement::identity(s));
}

}  // namespace sbo
