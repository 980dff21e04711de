#include "sbo/expansion.hpp"

namespace sbo {

namespace {

constexpr int kN = 2;

int gen_index(int a, int b) {
  if (a == 2 && b == 1) return 0;
  if (a == 3 && b == 2) return 1;
  if (a == 3 && b == 1) return 2;
  throw std::invalid_argument("generator outside nbar");
}

const std::pair<int, int> kGen[3] = {{2, 1}, {3, 2}, {3, 1}};

Polynomial slot_polynomial(int slot) { return slot < 3 ? phi(slot + 1, kN) : psi(slot - 2, kN); }

// eps action table [generator][slot] -> (coefficient, image slot), slot -1 for zero.
struct ActionTable {
  std::array<std::array<std::pair<int, int>, 6>, 3> t;
};

const ActionTable& action_table() {
  static const ActionTable table = [] {
    ActionTable tab;
    for (int g = 0; g < 3; ++g)
      for (int s = 0; s < 6; ++s) {
        auto r = eps_on_function(kGen[g].first, kGen[g].second, s);
        tab.t[g][s] = r ? *r : std::make_pair(0, -1);
      }
    return tab;
  }();
  return table;
}

// g . (f w) with the result in PBW order.
void lmul_generator(int g, const PbwKey& key, const RationalFunction& c, PbwElement& out) {
  const auto& tab = action_table();
  // derivation on the function monomial
  for (int s = 0; s < 6; ++s) {
    if (!key.f[s]) continue;
    auto [coef, img] = tab.t[g][s];
    if (img < 0) continue;
    PbwKey k = key;
    --k.f[s];
    ++k.f[img];
    out.add(k, c * RationalFunction(Rational(coef * key.f[s])));
  }
  PbwKey k = key;
  switch (g) {
    case 0:
      ++k.w[0];
      out.add(k, c);
      break;
    case 2:
      ++k.w[2];
      out.add(k, c);
      break;
    default: {
      // e32 e21^a = e21^a e32 + a e21^{a-1} e31
      ++k.w[1];
      out.add(k, c);
      if (key.w[0]) {
        PbwKey k2 = key;
        --k2.w[0];
        ++k2.w[2];
        out.add(k2, c * RationalFunction(Rational(key.w[0])));
      }
    }
  }
}

PbwElement lmul_generator(int g, const PbwElement& y) {
  PbwElement out;
  for (const auto& [k, c] : y.terms()) lmul_generator(g, k, c, out);
  return out;
}

}  // namespace

std::optional<std::pair<int, int>> eps_on_function(int a, int b, int slot) {
  const Polynomial img = epsilon(a, b, kN).apply(slot_polynomial(slot));
  if (img.is_zero()) return std::nullopt;
  for (int s = 0; s < 6; ++s) {
    const Polynomial base = slot_polynomial(s);
    if (img == base) return std::make_pair(1, s);
    if (img == -base) return std::make_pair(-1, s);
  }
  throw std::runtime_error("eps image outside the Phi/Psi family");
}

PbwElement PbwElement::scalar(const RationalFunction& c) {
  PbwElement e;
  e.add(PbwKey{}, c);
  return e;
}

PbwElement PbwElement::function(int slot) {
  if (slot < 0 || slot >= 6) throw std::out_of_range("function slot");
  PbwKey k;
  k.f[slot] = 1;
  PbwElement e;
  e.add(k, RationalFunction(1));
  return e;
}

PbwElement PbwElement::generator(int a, int b) {
  PbwKey k;
  k.w[gen_index(a, b)] = 1;
  PbwElement e;
  e.add(k, RationalFunction(1));
  return e;
}

PbwElement PbwElement::word(unsigned a, unsigned b, unsigned c) {
  PbwKey k;
  k.w = {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c)};
  PbwElement e;
  e.add(k, RationalFunction(1));
  return e;
}

void PbwElement::add(const PbwKey& k, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PbwElement& PbwElement::operator+=(const PbwElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

PbwElement& PbwElement::operator-=(const PbwElement& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

PbwElement& PbwElement::operator*=(const RationalFunction& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

PbwElement operator*(const PbwElement& x, const PbwElement& y) {
  PbwElement out;
  // Group x by word so each word acts on y once.
  std::map<std::array<std::uint16_t, 3>, std::vector<std::pair<std::array<std::uint8_t, 6>, RationalFunction>>> by_word;
  for (const auto& [k, c] : x.terms()) by_word[k.w].emplace_back(k.f, c);
  for (const auto& [w, fs] : by_word) {
    PbwElement z = y;
    for (unsigned i = 0; i < w[2]; ++i) z = lmul_generator(2, z);
    for (unsigned i = 0; i < w[1]; ++i) z = lmul_generator(1, z);
    for (unsigned i = 0; i < w[0]; ++i) z = lmul_generator(0, z);
    for (const auto& [f, c] : fs)
      for (const auto& [k, v] : z.terms()) {
        PbwKey kk = k;
        for (int s = 0; s < 6; ++s) kk.f[s] += f[s];
        out.add(kk, c * v);
      }
  }
  return out;
}

WeylElement PbwElement::to_weyl() const {
  const SpacePtr s = WeylSpace::matrix(kN + 1);
  WeylElement out(s);
  const WeylElement e[3] = {epsilon(s, 2, 1), epsilon(s, 3, 2), epsilon(s, 3, 1)};
  for (const auto& [k, c] : terms_) {
    Polynomial f(1);
    for (int slot = 0; slot < 6; ++slot)
      if (k.f[slot]) f *= slot_polynomial(slot).pow(k.f[slot]);
    WeylElement w = WeylElement::multiplication(s, f) * c;
    for (int g = 0; g < 3; ++g)
      if (k.w[g]) w = w * e[g].pow(k.w[g]);
    out += w;
  }
  return out;
}

RationalFunction NormalFormExpansion::coefficient(unsigned a, unsigned b, unsigned c) const {
  auto it = terms.find({a, b, c});
  return it == terms.end() ? RationalFunction(0) : it->second;
}

std::string NormalFormExpansion::to_latex() const {
  if (terms.empty()) return "0";
  std::string out = det_power ? "{\\det}_H^{" + std::to_string(det_power) + "}\\left(" : "";
  bool first = true;
  auto power = [](const std::string& base, unsigned e) {
    if (!e) return std::string();
    return "\\left(" + base + "\\right)" + (e > 1 ? "^{" + std::to_string(e) + "}" : "");
  };
  for (const auto& [w, c] : terms) {
    if (!first) out += " + ";
    first = false;
    out += "\\left(" + c.to_latex() + "\\right)\\rest_1";
    const std::string word =
        power("\\varepsilon^{2,1}", w[0]) + power("\\varepsilon^{3,2}", w[1]) + power("\\varepsilon^{3,1}", w[2]);
    if (!word.empty()) out += "\\circ " + word;
  }
  if (det_power) out += "\\right)";
  return out;
}

NormalFormExpansion restrict_rest1(const PbwElement& w, unsigned det_power) {
  static const std::array<Polynomial, 6> rest = [] {
    std::array<Polynomial, 6> r;
    for (int s = 0; s < 6; ++s) r[s] = restrict_k(slot_polynomial(s), 1, kN);
    return r;
  }();
  const Polynomial det_h = det(h_matrix(kN)).pow(det_power);
  NormalFormExpansion out;
  out.det_power = det_power;
  for (const auto& [k, c] : w.terms()) {
    Polynomial f(1);
    for (int s = 0; s < 6 && !f.is_zero(); ++s)
      if (k.f[s]) f *= rest[s].pow(k.f[s]);
    if (f.is_zero()) continue;
    auto q = divide_exact(f, det_h);
    if (!q || !q->is_constant()) throw std::runtime_error("restricted coefficient is not a det_H power");
    const std::array<unsigned, 3> word = {k.w[0], k.w[1], k.w[2]};
    RationalFunction v = c * RationalFunction(q->constant_value());
    auto [it, fresh] = out.terms.emplace(word, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

NormalFormExpansion expand_rest1_FD(unsigned n_pow, unsigned m_pow, const AffineVec& lambda) {
  const PbwElement op = build_L_with(PbwAlg{}, {n_pow, m_pow}, 1, lambda, kN);
  return restrict_rest1(op, n_pow);
}

NormalFormExpansion expand_rest1_FD_renormalized(unsigned n_pow, unsigned m_pow, const AffineVec& lambda) {
  const AffineVec L = lambda_symbols(kN);
  const NormalFormExpansion e = expand_rest1_FD(n_pow, m_pow, L);
  const Polynomial pre =
      pochhammer(L[0] - L[2] + AffineForm(static_cast<long>(m_pow) + 1), n_pow);
  std::map<int, Polynomial> at;
  for (int i = 0; i <= kN; ++i) at[lambda_var(i + 1)] = lambda.at(i).to_polynomial();
  NormalFormExpansion out;
  out.det_power = e.det_power;
  for (const auto& [w, c] : e.terms) {
    auto q = divide_exact(c.as_polynomial(), pre);
    if (!q) throw std::logic_error("prefactor does not divide the expansion");
    Polynomial v = q->substitute(at);
    if (!v.is_zero()) out.terms[w] = RationalFunction(v);
  }
  return out;
}

NormalFormExpansion right_e32(const NormalFormExpansion& e, unsigned q) {
  NormalFormExpansion out;
  out.det_power = e.det_power;
  for (const auto& [w, c] : e.terms) out.terms[{w[0], w[1] + q, w[2]}] = c;
  return out;
}

NormalFormExpansion left_epsH21(const NormalFormExpansion& e, unsigned l) {
  NormalFormExpansion out;
  out.det_power = e.det_power;
  for (const auto& [w, c] : e.terms) out.terms[{w[0], w[1], w[2] + l}] = c;
  return out;
}

}  // namespace sbo
