#include "sbo/delta.hpp"

#include "sbo/covariant.hpp"
#include "sbo/linear.hpp"

#include <algorithm>
#include <numeric>

namespace sbo {

namespace {

constexpr int kN = 2;

using RFMat = std::vector<std::vector<RationalFunction>>;

const std::vector<std::pair<int, int>>& coord_entries() {
  static const std::vector<std::pair<int, int>> e = {{2, 1}, {3, 2}, {3, 1}};
  return e;
}

RFMat nbar() {
  const auto& s = delta_space();
  RFMat m(3, std::vector<RationalFunction>(3));
  for (int i = 0; i < 3; ++i) m[i][i] = RationalFunction(1);
  for (int c = 0; c < 3; ++c) {
    auto [i, j] = coord_entries()[c];
    m[i - 1][j - 1] = RationalFunction(Polynomial::var(s->vars[c]));
  }
  return m;
}

RFMat mul(const RFMat& a, const RFMat& b) {
  const std::size_t n = a.size();
  RFMat r(n, std::vector<RationalFunction>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

RFMat from_poly(const PolyMatrix& p) {
  RFMat r(p.size(), std::vector<RationalFunction>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) r[i][j] = RationalFunction(p[i][j]);
  return r;
}

RFMat transpose(const RFMat& a) {
  RFMat r = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r[i][j] = a[j][i];
  return r;
}

// Doolittle M = L U with L unit lower triangular.
void gauss_lu(const RFMat& m, RFMat& L, RFMat& U) {
  const std::size_t n = m.size();
  L.assign(n, std::vector<RationalFunction>(n));
  U.assign(n, std::vector<RationalFunction>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      RationalFunction s = m[i][j];
      for (std::size_t k = 0; k < i; ++k) s -= L[i][k] * U[k][j];
      U[i][j] = s;
    }
    if (U[i][i].is_zero()) throw std::runtime_error("decomposition singular");
    L[i][i] = RationalFunction(1);
    for (std::size_t r = i + 1; r < n; ++r) {
      RationalFunction s = m[r][i];
      for (std::size_t k = 0; k < i; ++k) s -= L[r][k] * U[k][i];
      L[r][i] = s / U[i][i];
    }
  }
}

// d/dt at t = 0.
Polynomial tangent(const RationalFunction& f) {
  const int t = var_id("t");
  RationalFunction d = f.derivative(t).at_zero(t);
  if (!d.is_polynomial()) throw std::runtime_error("tangent is not polynomial");
  return d.as_polynomial();
}

struct Generator {
  std::vector<int> slots;  // diagonal slots of H scaled by 1+t
  bool unipotent = false;  // I + t E_{12} of H
};

Generator parse_generator(const std::string& tag, int n) {
  Generator g;
  auto index = [&](std::size_t pos) {
    if (tag.size() != pos + 1 || tag[pos] < '1' || tag[pos] > '0' + n)
      throw std::invalid_argument("unknown generator " + tag);
    return tag[pos] - '0';
  };
  if (tag == "E12") {
    g.unipotent = true;
  } else if (tag.rfind("gamma", 0) == 0) {
    const int l = index(5);
    for (int i = 1; i <= l; ++i) g.slots.push_back(i);
  } else if (tag.rfind("delta", 0) == 0) {
    const int l = index(5);
    for (int i = n + 1 - l; i <= n; ++i) g.slots.push_back(i);
  } else if (tag.rfind("a", 0) == 0) {
    g.slots.push_back(index(1));
  } else {
    throw std::invalid_argument("unknown generator " + tag);
  }
  return g;
}

bool is_diag_first_order(const WeylKey& key, int nv, int* coord) {
  int found = -1;
  for (int c = 0; c < nv; ++c) {
    if (key[c] != key[nv + c] || key[c] > 1) return false;
    if (key[c] == 1) {
      if (found >= 0) return false;
      found = c;
    }
  }
  if (coord) *coord = found;
  return found >= 0;
}

bool orders_before(const DeltaKernel::Orders& a, const DeltaKernel::Orders& b) {
  if (a.back() != b.back()) return a.back() < b.back();
  return a < b;
}

std::map<int, Polynomial> param_map(const InductionParams& p) {
  std::map<int, Polynomial> s;
  for (int i = 1; i <= p.n + 1; ++i) s[lambda_var(i)] = p.lambda.at(i - 1).to_polynomial();
  for (int j = 1; j <= p.n; ++j) s[nu_var(j)] = p.nu.at(j - 1).to_polynomial();
  return s;
}

Integer factorial_ratio(unsigned m, unsigned a) {  // m! / (m-a)!
  Integer r = 1;
  for (unsigned i = 0; i < a; ++i) r *= m - i;
  return r;
}

}  // namespace

const SpacePtr& delta_space() {
  static const SpacePtr s = WeylSpace::coords({var_id("x"), var_id("y"), var_id("z")});
  return s;
}

DeltaKernel DeltaKernel::delta(const Orders& m, const RationalFunction& c) {
  DeltaKernel k;
  if (m.size() != k.coords_.size()) throw std::invalid_argument("coordinate mismatch");
  k.add(m, c);
  return k;
}

RationalFunction DeltaKernel::coefficient(const Orders& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? RationalFunction(0) : it->second;
}

void DeltaKernel::add(const Orders& m, const RationalFunction& c) {
  if (c.is_zero()) return;
  if (m.size() != coords_.size()) throw std::invalid_argument("coordinate mismatch");
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

DeltaKernel& DeltaKernel::operator+=(const DeltaKernel& o) {
  if (o.coords_ != coords_) throw std::invalid_argument("coordinate mismatch");
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

DeltaKernel& DeltaKernel::operator*=(const RationalFunction& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

DeltaKernel DeltaKernel::substitute(const Assignment& a) const {
  DeltaKernel r(coords_);
  for (const auto& [m, c] : terms_) r.add(m, c.substitute(a));
  return r;
}

DeltaKernel DeltaKernel::normalized() const {
  if (terms_.empty()) return *this;
  auto first = terms_.begin();
  for (auto it = terms_.begin(); it != terms_.end(); ++it)
    if (orders_before(it->first, first->first)) first = it;
  DeltaKernel r = *this;
  r *= RationalFunction(1) / first->second;
  return r;
}

namespace {

std::string render_kernel(const DeltaKernel& K, bool latex) {
  if (K.is_zero()) return "0";
  std::vector<DeltaKernel::Orders> keys;
  for (const auto& [m, c] : K.terms()) keys.push_back(m);
  std::sort(keys.begin(), keys.end(), orders_before);
  std::string out;
  bool first = true;
  for (const auto& m : keys) {
    const RationalFunction& c = K.terms().at(m);
    std::string cs = latex ? c.to_latex() : c.to_string();
    bool neg = false;
    const bool compound = !(c.is_polynomial() && c.num().size() == 1);
    if (!compound && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    if (compound) cs = latex ? "\\left(" + cs + "\\right)" : "(" + cs + ")";
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      const std::string v = latex ? var_latex(K.coords()[i]) : var_name(K.coords()[i]);
      if (latex)
        mono += "\\delta^{(" + std::to_string(m[i]) + ")}(" + v + ")";
      else
        mono += (i ? "*" : "") + std::string("d") + std::to_string(m[i]) + "(" + v + ")";
    }
    std::string term = cs == "1" ? mono : cs + (latex ? " " : "*") + mono;
    if (first)
      out += neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

}  // namespace

std::string DeltaKernel::to_latex() const { return render_kernel(*this, true); }
std::string DeltaKernel::to_string() const { return render_kernel(*this, false); }

DeltaKernel act(const WeylElement& op, const DeltaKernel& K) {
  const int nv = op.space()->nv();
  if (nv != static_cast<int>(K.coords().size()) || op.space()->vars != K.coords())
    throw std::invalid_argument("coordinate mismatch");
  DeltaKernel out(K.coords());
  for (const auto& [key, c] : op.terms()) {
    for (const auto& [m, v] : K.terms()) {
      DeltaKernel::Orders r = m;
      Integer f = 1;
      bool zero = false;
      for (int i = 0; i < nv && !zero; ++i) {
        r[i] += key[nv + i];
        const unsigned a = key[i];
        if (a > r[i]) {
          zero = true;
          break;
        }
        f *= factorial_ratio(r[i], a);
        if (a % 2) f = -f;
        r[i] -= a;
      }
      if (zero) continue;
      out.add(r, c * v * RationalFunction(Rational(f)));
    }
  }
  return out;
}

WeylElement PdeOperator::annihilator() const {
  return lhs - WeylElement::scalar(lhs.space(), rhs);
}

bool PdeOperator::is_euler() const {
  const int nv = lhs.space()->nv();
  if (lhs.is_zero()) return false;
  for (const auto& [key, c] : lhs.terms()) {
    if (!is_diag_first_order(key, nv, nullptr)) return false;
    if (!c.is_constant()) return false;
  }
  return true;
}

PdeOperator PdeOperator::substitute(const std::map<int, Polynomial>& s) const {
  return {lhs.substitute_coefficients(s), rhs.substitute(s)};
}

DeltaKernel act(const PdeOperator& op, const DeltaKernel& K) { return act(op.annihilator(), K); }

std::string PdeOperator::to_latex() const {
  const SpacePtr& s = lhs.space();
  const int nv = s->nv();
  // Group c x^a d^b as x^{a-b} (c x^b d^b) by the leftover monomial.
  struct Group {
    RationalFunction constant;
    std::vector<std::pair<RationalFunction, std::string>> pieces;
  };
  auto mono = [&](const std::vector<unsigned>& e) {
    std::string out;
    for (int i = 0; i < nv; ++i) {
      if (!e[i]) continue;
      out += s->x_latex[i];
      if (e[i] > 1) out += "^{" + std::to_string(e[i]) + "}";
    }
    return out;
  };
  auto degree_then_lex = [](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    const auto sa = std::accumulate(a.begin(), a.end(), 0u), sb = std::accumulate(b.begin(), b.end(), 0u);
    if (sa != sb) return sa < sb;
    return a > b;
  };
  std::map<std::vector<unsigned>, Group, decltype(degree_then_lex)> groups(degree_then_lex);
  for (const auto& [key, c] : lhs.terms()) {
    std::vector<unsigned> left(nv), inner(nv);
    bool fits = true;
    for (int i = 0; i < nv; ++i) {
      if (key[nv + i] > key[i]) fits = false;
      inner[i] = key[nv + i];
    }
    if (!fits) {
      for (int i = 0; i < nv; ++i) left[i] = 0;
      std::string piece;
      for (int i = 0; i < nv; ++i)
        if (key[i]) piece += s->x_latex[i] + (key[i] > 1 ? "^{" + std::to_string(key[i]) + "}" : "");
      for (int i = 0; i < nv; ++i)
        if (key[nv + i]) piece += s->d_latex[i] + (key[nv + i] > 1 ? "^{" + std::to_string(key[nv + i]) + "}" : "");
      groups[left].pieces.emplace_back(c, piece);
      continue;
    }
    for (int i = 0; i < nv; ++i) left[i] = key[i] - key[nv + i];
    bool constant = true;
    std::string piece;
    for (int i = 0; i < nv; ++i) {
      if (!inner[i]) continue;
      constant = false;
      for (unsigned r = 0; r < inner[i]; ++r) piece += s->x_latex[i];
      if (inner[i] > 1) piece = s->x_latex[i] + "^{" + std::to_string(inner[i]) + "}";
      piece += s->d_latex[i];
      if (inner[i] > 1) piece += "^{" + std::to_string(inner[i]) + "}";
    }
    if (constant)
      groups[left].constant += c;
    else
      groups[left].pieces.emplace_back(c, piece);
  }
  auto signed_term = [](const RationalFunction& c, const std::string& body, bool first) {
    std::string cs = c.to_latex();
    const bool compound = !(c.is_polynomial() && c.num().size() == 1);
    bool neg = false;
    if (!compound && cs[0] == '-') {
      neg = true;
      cs = cs.substr(1);
    }
    if (compound) cs = "\\left(" + cs + "\\right)";
    std::string t = body.empty() ? cs : (cs == "1" ? body : cs + body);
    if (first) return neg ? "-" + t : t;
    return (neg ? "-" : "+") + t;
  };
  std::string out;
  bool first_group = true;
  for (auto& [left, g] : groups) {
    const bool plain = std::all_of(left.begin(), left.end(), [](unsigned e) { return e == 0; });
    // Pull out -1 when the constant (or first piece) leads negatively.
    int sign = 1;
    if (!plain) {
      const RationalFunction& lead = !g.constant.is_zero() ? g.constant : g.pieces.front().first;
      if (lead.num().leading_coefficient() < 0) sign = -1;
    }
    std::string inner;
    bool first = true;
    if (!g.constant.is_zero()) {
      inner += signed_term(g.constant * RationalFunction(sign), "", first);
      first = false;
    }
    for (const auto& [c, piece] : g.pieces) {
      inner += signed_term(c * RationalFunction(sign), piece, first);
      first = false;
    }
    if (plain) {
      if (!first_group && inner[0] != '-') out += "+";
      out += inner;
    } else {
      const std::size_t count = g.pieces.size() + (g.constant.is_zero() ? 0 : 1);
      if (sign < 0)
        out += "-";
      else if (!first_group)
        out += "+";
      out += mono(left) + (count > 1 ? "(" + inner + ")" : inner);
    }
    first_group = false;
  }
  if (out.empty()) out = "0";
  return out + "=" + (rhs.is_zero() ? std::string("0") : rhs.to_latex());
}

std::vector<std::string> generator_tags() {
  return {"a1", "a2", "gamma1", "gamma2", "delta1", "delta2", "E12"};
}

PdeOperator derive_pde(int k, const std::string& generator, int n) {
  if (n != kN) throw std::invalid_argument("unsupported n");
  if (k < 0 || k > n) throw std::out_of_range("k out of range");
  const Generator g = parse_generator(generator, n);
  const Polynomial t = Polynomial::var(var_id("t"));

  RFMat h(n + 1, std::vector<RationalFunction>(n + 1));
  for (int i = 0; i <= n; ++i) h[i][i] = RationalFunction(1);
  for (int s : g.slots) h[s - 1][s - 1] = RationalFunction(Polynomial(1) + t);
  if (g.unipotent) h[0][1] = RationalFunction(t);

  const RFMat x = from_poly(x_matrix(k, n));
  const RFMat u = mul(mul(transpose(x), h), x);
  RFMat L, U;
  gauss_lu(mul(u, nbar()), L, U);

  const SpacePtr& sp = delta_space();
  WeylElement total(sp);
  for (int c = 0; c < 3; ++c) {
    auto [i, j] = coord_entries()[c];
    Polynomial v = tangent(L[i - 1][j - 1]);
    if (!v.is_zero()) total += WeylElement::multiplication(sp, v) * WeylElement::d(sp, c);
  }
  const AffineVec rg = rho_G(n), rh = rho_H(n);
  Polynomial m;
  for (int i = 1; i <= n + 1; ++i)
    m += (lam(i) - rg[i - 1]).to_polynomial() * tangent(U[i - 1][i - 1]);
  for (int s : g.slots) m -= (nuf(s) + rh[s - 1]).to_polynomial();
  total += WeylElement::multiplication(sp, m);

  PdeOperator op{WeylElement(sp), RationalFunction(0)};
  const WeylKey zero_key(2 * sp->nv(), 0);
  RationalFunction constant;
  WeylElement rest(sp);
  bool euler = true;
  for (const auto& [key, c] : total.terms()) {
    if (key == zero_key) {
      constant = c;
      continue;
    }
    rest.add_term(key, c);
    if (!is_diag_first_order(key, sp->nv(), nullptr)) euler = false;
  }
  if (!euler) {
    op.lhs = total;
    return op;
  }
  // Homogeneity equation: leading coordinate coefficient made positive.
  int lead_sign = 1;
  for (int c = 0; c < sp->nv(); ++c) {
    WeylKey key(2 * sp->nv(), 0);
    key[c] = key[sp->nv() + c] = 1;
    auto it = rest.terms().find(key);
    if (it != rest.terms().end()) {
      lead_sign = it->second.num().leading_coefficient() < 0 ? -1 : 1;
      break;
    }
  }
  op.lhs = rest * RationalFunction(lead_sign);
  op.rhs = -constant * RationalFunction(lead_sign);
  return op;
}

std::vector<PdeOperator> pde_system(int k, int n) {
  if (n != kN) throw std::invalid_argument("unsupported n");
  std::vector<PdeOperator> ops;
  for (int s = 1; s <= n; ++s) ops.push_back(derive_pde(k, "a" + std::to_string(s), n));
  ops.push_back(derive_pde(k, "E12", n));
  return ops;
}

std::vector<ParityRule> parity_rules(const InductionParams& p, int k) {
  const int n = p.n;
  if (n != kN) throw std::invalid_argument("unsupported n");
  const PolyMatrix x = x_matrix(k, n);
  std::vector<ParityRule> rules;
  for (int slot = 1; slot <= n; ++slot) {
    // s_i = D_{r} where row r of x_k has its 1 in column i.
    std::vector<int> s(n + 1, 1);
    for (int i = 0; i <= n; ++i)
      if (!x[slot - 1][i].is_zero()) s[i] = -1;
    ParityRule rule;
    for (int c = 0; c < 3; ++c) {
      auto [i, j] = coord_entries()[c];
      if (s[i - 1] != s[j - 1]) rule.flipped.push_back(c);
    }
    int par = p.eta.empty() ? 0 : p.eta[slot - 1];
    for (int i = 0; i <= n; ++i)
      if (s[i] < 0 && !p.xi.empty()) par += p.xi[i];
    rule.parity = parity(par);
    rules.push_back(rule);
  }
  return rules;
}

KernelSpace solve_kernels(const InductionParams& p, int k) {
  if (p.n != kN) throw std::invalid_argument("unsupported n");
  p.validate();
  const auto sub = param_map(p);
  std::vector<PdeOperator> ops;
  for (const auto& op : pde_system(k, p.n)) ops.push_back(op.substitute(sub));

  KernelSpace space;
  // Homogeneity: sum_c w_c (m_c + 1) = -rhs on each delta^{(m)}.
  const SpacePtr& sp = delta_space();
  const int nv = sp->nv();
  std::vector<std::pair<std::vector<long>, Rational>> euler;
  Rational bound = 3;
  for (const auto& op : ops) {
    if (!op.is_euler()) continue;
    if (!op.rhs.is_constant()) return space;  // no natural solution over the field
    std::vector<long> w(nv, 0);
    for (const auto& [key, c] : op.lhs.terms()) {
      int coord = -1;
      is_diag_first_order(key, nv, &coord);
      const Rational v = c.constant_value();
      if (v.get_den() != 1) throw std::runtime_error("non-integral homogeneity weight");
      w[coord] = v.get_num().get_si();
    }
    euler.emplace_back(w, -op.rhs.constant_value());
    bound += abs(op.rhs.constant_value());
  }
  const unsigned B = static_cast<unsigned>(mpz_class(bound.get_num() / bound.get_den()).get_ui()) + 1;
  const auto rules = parity_rules(p, k);
  DeltaKernel::Orders m(nv, 0);
  std::function<void(int)> enumerate = [&](int c) {
    if (c == nv) {
      for (const auto& [w, rhs] : euler) {
        long s = 0;
        for (int i = 0; i < nv; ++i) s += w[i] * static_cast<long>(m[i] + 1);
        if (Rational(s) != rhs) return;
      }
      for (const auto& r : rules) {
        unsigned s = 0;
        for (int i : r.flipped) s += m[i];
        if (static_cast<int>(s % 2) != r.parity) return;
      }
      space.support.push_back(m);
      return;
    }
    for (unsigned v = 0; v <= B; ++v) {
      m[c] = v;
      enumerate(c + 1);
    }
  };
  enumerate(0);
  std::sort(space.support.begin(), space.support.end(), orders_before);
  if (space.support.empty()) return space;

  // Linear system on the coefficients of the admissible orders.
  const std::size_t cols = space.support.size();
  std::map<DeltaKernel::Orders, std::size_t> row_of;
  RFMatrix A;
  for (std::size_t col = 0; col < cols; ++col) {
    const DeltaKernel basis = DeltaKernel::delta(space.support[col]);
    for (const auto& op : ops) {
      const DeltaKernel img = act(op, basis);
      for (const auto& [ord, c] : img.terms()) {
        auto [it, fresh] = row_of.emplace(ord, A.size());
        if (fresh) A.emplace_back(cols);
        (void)it;
        A[row_of.at(ord)][col] += c;
      }
    }
  }
  // Rows are keyed per image order; the Euler images are multiples of the
  // column order itself and vanish on the admissible support.
  std::vector<int> order(cols);
  std::iota(order.rbegin(), order.rend(), 0);
  auto null = nullspace(A, cols, order);
  for (const auto& v : null) {
    DeltaKernel K;
    for (std::size_t c = 0; c < cols; ++c) K.add(space.support[c], v[c]);
    space.basis.push_back(K.normalized());
  }
  space.dimension = static_cast<int>(space.basis.size());
  return space;
}

std::optional<std::pair<long, long>> support_orders(const InductionParams& p, int k) {
  const AffineForm half(Rational(1, 2));
  AffineForm n1, n2;
  const auto& l = p.lambda;
  const auto& v = p.nu;
  switch (k) {
    case 0:
      n1 = l[2] - v[1] - half;
      n2 = l[1] + l[2] - v[0] - v[1] - AffineForm(1);
      break;
    case 1:
      n1 = v[0] - l[0] - half;
      n2 = l[2] - v[1] - half;
      break;
    case 2:
      n1 = v[0] - l[0] - half;
      n2 = v[0] + v[1] - l[0] - l[1] - AffineForm(1);
      break;
    default:
      throw std::out_of_range("k out of range");
  }
  auto nat = [](const AffineForm& a) -> std::optional<long> {
    if (!a.is_constant() || a.constant().get_den() != 1 || a.constant() < 0) return std::nullopt;
    return a.constant().get_num().get_si();
  };
  auto a = nat(n1), b = nat(n2);
  if (!a || !b) return std::nullopt;
  return std::make_pair(*a, *b);
}

DeltaKernel closed_form_kernel(int k, KernelCase c, const InductionParams& p, int index, KernelForm form) {
  if (p.n != kN) throw std::invalid_argument("unsupported n");
  auto orders = support_orders(p, k);
  if (!orders) throw std::invalid_argument("case preconditions violated");
  const auto [n1, n2] = *orders;
  const long N = std::min(n1, n2);
  const auto& l = p.lambda;
  const bool amended = form == KernelForm::Amended;
  // Ratio c_{j+1}/c_j of the summand, split as num/den.
  auto ratio = [&](long j) -> std::pair<Polynomial, Polynomial> {
    const Polynomial jn1(Rational(j - n1)), next(Rational(j + 1));
    switch (k) {
      case 1: {
        AffineForm a = l[2] - l[1] - AffineForm(n2) + AffineForm(j);
        AffineForm d = l[2] - l[0] - AffineForm(n1 + n2) + AffineForm(j);
        return {-(jn1 * Polynomial(Rational(j - n2)) * a.to_polynomial()), d.to_polynomial() * next};
      }
      case 2: {
        // printed (l1 - l2 + n1 - n2 + 1)_j; the recurrence gives (l1 - l2 + n1 - n2)_j
        AffineForm a = l[0] - l[1] + AffineForm(n1 - n2 + (amended ? 0 : 1)) + AffineForm(j);
        return {-(jn1 * a.to_polynomial()), next};
      }
      default: {
        // printed without (-1)^j; the recurrence carries it
        AffineForm a = l[2] - l[1] - AffineForm(n1) + AffineForm(j);
        Polynomial num = jn1 * a.to_polynomial();
        return {amended ? -num : num, next};
      }
    }
  };
  auto vanishes = [](const AffineForm& a) { return a == AffineForm(0); };
  long start = 0, stop = N;
  const AffineForm pole = l[0] - l[2] + AffineForm(n1 + n2);  // k = 1 denominator factor at j: pole - j
  const AffineForm zero = l[1] - l[2] + AffineForm(n2);       // k = 1 numerator factor at j: zero - j
  auto violated = [] { throw std::invalid_argument("case preconditions violated"); };
  switch (c) {
    case KernelCase::Full:
      if (k == 1) {
        for (long j = 0; j < N; ++j)
          if (vanishes(pole - AffineForm(j))) violated();
      } else if (n1 > n2) {
        // needs a k_0 <= n_2 at which the sum terminates
        const AffineForm t = k == 2 ? l[0] - l[1] + AffineForm(n1 - n2) : l[2] - l[1] - AffineForm(n1);
        bool found = false;
        for (long k0 = 0; k0 <= n2; ++k0) found = found || vanishes(t + AffineForm(k0));
        if (!found) violated();
      }
      break;
    case KernelCase::Truncated:
      if (k != 1 || index < 0 || index > N - 1 || !vanishes(pole - AffineForm(index))) violated();
      start = index + 1;
      break;
    case KernelCase::Head:
      if (k != 1 || index < 0 || index > N - 1 || !vanishes(zero - AffineForm(index))) violated();
      for (long j = 0; j < index; ++j)
        if (vanishes(pole - AffineForm(j))) violated();
      stop = index;
      break;
  }
  auto ord = [&](long j) -> DeltaKernel::Orders {
    const auto a = static_cast<unsigned>(n1 - j), b = static_cast<unsigned>(n2 - j);
    if (k == 0) return {b, a, static_cast<unsigned>(j)};
    return {a, b, static_cast<unsigned>(j)};
  };
  DeltaKernel K;
  RationalFunction coeff(1);
  for (long j = start; j <= stop && !coeff.is_zero(); ++j) {
    K.add(ord(j), coeff);
    if (j == stop) break;
    auto [num, den] = ratio(j);
    if (den.is_zero()) violated();
    coeff *= RationalFunction(num, den);
  }
  return K;
}

std::size_t kernel_rank(const std::vector<DeltaKernel>& ks) {
  std::map<DeltaKernel::Orders, std::size_t> col;
  for (const auto& K : ks)
    for (const auto& [m, c] : K.terms()) col.emplace(m, col.size());
  RFMatrix A(ks.size(), std::vector<RationalFunction>(col.size()));
  for (std::size_t r = 0; r < ks.size(); ++r)
    for (const auto& [m, c] : ks[r].terms()) A[r][col.at(m)] = c;
  return rank(A, col.size());
}

bool same_span(const std::vector<DeltaKernel>& a, const std::vector<DeltaKernel>& b) {
  std::vector<DeltaKernel> both = a;
  both.insert(both.end(), b.begin(), b.end());
  const std::size_t r = kernel_rank(both);
  return kernel_rank(a) == r && kernel_rank(b) == r;
}

CaseAnalysis case_analysis(const InductionParams& p, int k) {
  if (p.n != kN) throw std::invalid_argument("unsupported n");
  CaseAnalysis r;
  auto orders = support_orders(p, k);
  if (!orders) {
    r.label = "orders not natural";
    return r;
  }
  const auto [n1, n2] = *orders;
  const long N = std::min(n1, n2);
  auto xi = [&](int i) { return p.xi.empty() ? 0 : p.xi[i - 1]; };
  auto eta = [&](int i) { return p.eta.empty() ? 0 : p.eta[i - 1]; };
  int e1 = 0, e2 = 0;
  switch (k) {
    case 0:
      e1 = parity(xi(2) + n1 + n2);
      e2 = parity(xi(3) + n1);
      break;
    case 1:
      e1 = parity(xi(1) + n1);
      e2 = parity(xi(3) + n2);
      break;
    default:
      e1 = parity(xi(1) + n1);
      e2 = parity(xi(2) + n1 + n2);
      break;
  }
  if (eta(1) != e1 || eta(2) != e2) {
    r.label = "parity mismatch";
    return r;
  }
  const auto& l = p.lambda;
  auto vanishes = [](const AffineForm& a) { return a == AffineForm(0); };
  if (k == 1) {
    std::optional<long> l0, k0;
    for (long j = 0; j <= N - 1; ++j) {
      if (vanishes(l[0] - l[2] + AffineForm(n1 + n2 - j))) l0 = j;
      if (vanishes(l[1] - l[2] + AffineForm(n2 - j))) k0 = j;
    }
    if (l0 && k0 && *k0 <= *l0) {
      r.dimension = 2;
      r.label = "multiplicity two";
      r.kernels = {closed_form_kernel(1, KernelCase::Head, p, static_cast<int>(*k0)),
                   closed_form_kernel(1, KernelCase::Truncated, p, static_cast<int>(*l0))};
    } else if (l0) {
      r.dimension = 1;
      r.label = "truncated";
      r.kernels = {closed_form_kernel(1, KernelCase::Truncated, p, static_cast<int>(*l0))};
    } else {
      r.dimension = 1;
      r.label = "full";
      r.kernels = {closed_form_kernel(1, KernelCase::Full, p)};
    }
    return r;
  }
  bool ok = n1 <= n2;
  const AffineForm t = k == 2 ? l[0] - l[1] + AffineForm(n1 - n2) : l[2] - l[1] - AffineForm(n1);
  for (long k0 = 0; k0 <= n2 && !ok; ++k0) ok = vanishes(t + AffineForm(k0));
  if (!ok) {
    r.label = "no termination";
    return r;
  }
  r.dimension = 1;
  r.label = n1 <= n2 ? "n1 <= n2" : "terminating";
  r.kernels = {closed_form_kernel(k, KernelCase::Full, p)};
  return r;
}

InductionParams multiplicity_two_params(const AffineForm& lambda0, long n1, long n2, long k0, long l0,
                                        const Parities& xi) {
  const long N = std::min(n1, n2);
  if (n1 < 1 || n2 < 1 || k0 < 0 || k0 > l0 || l0 > N - 1) throw std::invalid_argument("precondition violated");
  InductionParams p;
  p.n = 2;
  p.xi = xi;
  p.lambda = {lambda0, lambda0 + AffineForm(n1 + k0 - l0), lambda0 + AffineForm(n1 + n2 - l0)};
  p.nu = {lambda0 + AffineForm(frac(2 * n1 + 1, 2)), lambda0 + AffineForm(frac(2 * (n1 - l0) - 1, 2))};
  p.eta = {parity(xi.at(0) + n1), parity(xi.at(2) + n2)};
  return p;
}

}  // namespace sbo
