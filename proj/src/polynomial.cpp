#include "sbo/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace sbo {

Rational parse_rational(std::string_view s) {
  std::string t(s);
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
  if (t.empty()) throw std::invalid_argument("empty rational");
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    // decimal literal, exact
    bool neg = t[0] == '-';
    std::string digits = t.substr(neg || t[0] == '+' ? 1 : 0);
    dot = digits.find('.');
    std::string ip = digits.substr(0, dot), fp = digits.substr(dot + 1);
    if (ip.empty()) ip = "0";
    for (char c : ip + fp)
      if (!std::isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad rational: " + t);
    Integer num(ip + fp, 10), den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    char c = t[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' || ((c == '-' || c == '+') && i == 0);
    if (!ok) throw std::invalid_argument("bad rational: " + t);
  }
  if (t[0] == '+') t.erase(0, 1);
  Rational q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + t);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + t);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_latex(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  std::string s = q < 0 ? "-" : "";
  Integer a = abs(q.get_num());
  return s + "\\tfrac{" + a.get_str() + "}{" + q.get_den().get_str() + "}";
}

namespace {

struct Registry {
  std::mutex m;
  std::vector<std::string> names;
  std::unordered_map<std::string, int> ids;

  Registry() {
    for (int i = 0; i <= 8; ++i) add("lambda" + std::to_string(i));
    for (int j = 1; j <= 8; ++j) add("nu" + std::to_string(j));
    for (const char* s : {"x", "y", "z", "t"}) add(s);
    for (int i = 1; i <= 9; ++i)
      for (int j = 1; j <= 9; ++j) add("g" + std::to_string(i) + std::to_string(j));
    for (int i = 1; i <= 8; ++i)
      for (int j = 1; j <= 8; ++j) add("h" + std::to_string(i) + std::to_string(j));
  }
  int add(const std::string& s) {
    auto it = ids.find(s);
    if (it != ids.end()) return it->second;
    int id = static_cast<int>(names.size());
    names.push_back(s);
    ids.emplace(s, id);
    return id;
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

int var_id(std::string_view name) {
  auto& r = registry();
  std::lock_guard<std::mutex> lk(r.m);
  return r.add(std::string(name));
}

const std::string& var_name(int id) {
  auto& r = registry();
  std::lock_guard<std::mutex> lk(r.m);
  if (id < 0 || id >= static_cast<int>(r.names.size())) throw std::out_of_range("variable id");
  return r.names[id];
}

int var_count() {
  auto& r = registry();
  std::lock_guard<std::mutex> lk(r.m);
  return static_cast<int>(r.names.size());
}

std::string var_latex(int id) {
  const std::string& n = var_name(id);
  auto starts = [&](const char* p) { return n.rfind(p, 0) == 0; };
  if (starts("lambda") && n.size() > 6) return "\\lambda_{" + n.substr(6) + "}";
  if (starts("nu") && n.size() > 2 && std::isdigit(static_cast<unsigned char>(n[2]))) return "\\nu_{" + n.substr(2) + "}";
  if ((n[0] == 'g' || n[0] == 'h') && n.size() == 3 && std::isdigit(static_cast<unsigned char>(n[1])))
    return std::string(1, n[0]) + "_{" + n.substr(1) + "}";
  return n;
}

int lambda_var(int i) {
  if (i < 0 || i > 8) throw std::out_of_range("lambda index");
  return i;
}
int nu_var(int j) {
  if (j < 1 || j > 8) throw std::out_of_range("nu index");
  return 8 + j;
}
int g_var(int i, int j) {
  if (i < 1 || i > 9 || j < 1 || j > 9) throw std::out_of_range("g index");
  return 21 + (i - 1) * 9 + (j - 1);
}
int h_var(int i, int j) {
  if (i < 1 || i > 8 || j < 1 || j > 8) throw std::out_of_range("h index");
  return 102 + (i - 1) * 8 + (j - 1);
}

void exp_trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

unsigned exp_get(const Exponents& e, int var) {
  return var < static_cast<int>(e.size()) ? e[var] : 0u;
}

Exponents exp_mul(const Exponents& a, const Exponents& b) {
  const Exponents& lo = a.size() < b.size() ? a : b;
  Exponents r = a.size() < b.size() ? b : a;
  for (std::size_t i = 0; i < lo.size(); ++i) r[i] = static_cast<std::uint16_t>(r[i] + lo[i]);
  return r;
}

bool exp_divides(const Exponents& a, const Exponents& b) {
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents exp_div(const Exponents& b, const Exponents& a) {
  Exponents r = b;
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<std::uint16_t>(r[i] - a[i]);
  exp_trim(r);
  return r;
}

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

Polynomial Polynomial::var(int id, unsigned power) {
  Polynomial p;
  Exponents e(id + 1, 0);
  e[id] = static_cast<std::uint16_t>(power);
  exp_trim(e);
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
  Polynomial p;
  p.add_term(e, c);
  return p;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw std::logic_error("polynomial is not constant: " + to_string());
  return constant_term();
}

unsigned Polynomial::degree(int var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, exp_get(e, var));
  return d;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto x : e) s += x;
    d = std::max(d, s);
  }
  return d;
}

std::set<int> Polynomial::variables() const {
  std::set<int> v;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) v.insert(static_cast<int>(i));
  return v;
}

bool Polynomial::depends_on(int var) const {
  for (const auto& [e, c] : terms_)
    if (exp_get(e, var)) return true;
  return false;
}

const std::pair<const Exponents, Rational>& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  if (a.is_zero() || b.is_zero()) return r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(exp_mul(ea, eb), ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r(1), b = *this;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    unsigned k = exp_get(e, var);
    if (!k) continue;
    Exponents f = e;
    f[var] = static_cast<std::uint16_t>(k - 1);
    exp_trim(f);
    r.add_term(f, c * k);
  }
  return r;
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& s) const {
  Polynomial r;
  std::map<std::pair<int, unsigned>, Polynomial> cache;
  auto power = [&](int v, unsigned k) -> const Polynomial& {
    auto key = std::make_pair(v, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, s.at(v).pow(k)).first->second;
  };
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    Polynomial part(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i] || !s.count(static_cast<int>(i))) continue;
      part *= power(static_cast<int>(i), e[i]);
      rest[i] = 0;
      if (part.is_zero()) break;
    }
    if (part.is_zero()) continue;
    exp_trim(rest);
    for (const auto& [pe, pc] : part.terms_) r.add_term(exp_mul(pe, rest), pc);
  }
  return r;
}

Polynomial Polynomial::substitute(const Assignment& a) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) {
    Exponents rest = e;
    Rational v = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      auto it = a.find(static_cast<int>(i));
      if (it == a.end()) continue;
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), e[i]);
      mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), e[i]);
      v *= p;
      rest[i] = 0;
    }
    exp_trim(rest);
    r.add_term(rest, v);
  }
  return r;
}

Rational Polynomial::eval(const Assignment& a) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      auto it = a.find(static_cast<int>(i));
      if (it == a.end()) throw EvalError("unbound name: " + var_name(static_cast<int>(i)));
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), e[i]);
      mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), e[i]);
      v *= p;
    }
    total += v;
  }
  return total;
}

std::map<unsigned, Polynomial> Polynomial::coefficients_in(int var) const {
  std::map<unsigned, Polynomial> r;
  for (const auto& [e, c] : terms_) {
    unsigned k = exp_get(e, var);
    Exponents f = e;
    if (k) {
      f[var] = 0;
      exp_trim(f);
    }
    r[k].add_term(f, c);
  }
  return r;
}

std::map<Exponents, Polynomial> Polynomial::split(const std::set<int>& vars) const {
  std::map<Exponents, Polynomial> r;
  for (const auto& [e, c] : terms_) {
    Exponents in, out = e;
    for (int v : vars) {
      unsigned k = exp_get(e, v);
      if (!k) continue;
      if (static_cast<int>(in.size()) <= v) in.resize(v + 1, 0);
      in[v] = static_cast<std::uint16_t>(k);
      out[v] = 0;
    }
    exp_trim(in);
    exp_trim(out);
    r[in].add_term(out, c);
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational lc = leading_coefficient();
  Polynomial r = *this;
  r *= Rational(1) / lc;
  return r;
}

namespace {

// Graded lex descending, used for printing only.
std::vector<std::pair<Exponents, Rational>> print_order(const Polynomial::TermMap& t) {
  std::vector<std::pair<Exponents, Rational>> v(t.begin(), t.end());
  auto deg = [](const Exponents& e) {
    unsigned s = 0;
    for (auto x : e) s += x;
    return s;
  };
  std::stable_sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
    unsigned da = deg(a.first), db = deg(b.first);
    if (da != db) return da > db;
    // smaller variable index first
    std::size_t n = std::max(a.first.size(), b.first.size());
    for (std::size_t i = 0; i < n; ++i) {
      unsigned x = exp_get(a.first, static_cast<int>(i)), y = exp_get(b.first, static_cast<int>(i));
      if (x != y) return x > y;
    }
    return false;
  });
  return v;
}

std::string monomial_string(const Exponents& e, bool latex) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!s.empty()) s += latex ? " " : "*";
    s += latex ? var_latex(static_cast<int>(i)) : var_name(static_cast<int>(i));
    if (e[i] > 1) s += latex ? "^{" + std::to_string(e[i]) + "}" : "^" + std::to_string(e[i]);
  }
  return s;
}

std::string render(const Polynomial::TermMap& t, bool latex) {
  if (t.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : print_order(t)) {
    Rational a = abs(c);
    bool neg = c < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string m = monomial_string(e, latex);
    std::string cs = latex ? to_latex(a) : a.get_str();
    if (m.empty())
      out += cs;
    else if (a == 1)
      out += m;
    else
      out += cs + (latex ? " " : "*") + m;
  }
  return out;
}

}  // namespace

std::string Polynomial::to_string() const { return render(terms_, false); }
std::string Polynomial::to_latex() const { return render(terms_, true); }

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (b.is_constant()) {
    Polynomial q = a;
    q *= Rational(1) / b.constant_term();
    return q;
  }
  Polynomial q, r = a;
  const auto& [lb, cb] = b.leading_term();
  while (!r.is_zero()) {
    const auto [lr, cr] = r.leading_term();
    if (!exp_divides(lb, lr)) return std::nullopt;
    Polynomial t = Polynomial::monomial(exp_div(lr, lb), cr / cb);
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

int main_variable(const Polynomial& a, const Polynomial& b) {
  int v = -1;
  for (const auto* p : {&a, &b})
    for (const auto& [e, c] : p->terms())
      v = std::max(v, static_cast<int>(e.size()) - 1);
  return v;
}

Polynomial content_in(const Polynomial& p, int v) {
  Polynomial g;
  for (const auto& [k, c] : p.coefficients_in(v)) {
    g = gcd(g, c);
    if (g.is_constant()) return Polynomial(1);
  }
  return g;
}

Polynomial lc_in(const Polynomial& p, int v, unsigned d) {
  return p.coefficients_in(v)[d];
}

Polynomial prem(Polynomial f, const Polynomial& g, int v) {
  unsigned dg = g.degree(v);
  Polynomial lg = lc_in(g, v, dg);
  while (!f.is_zero()) {
    unsigned df = f.degree(v);
    if (df < dg) break;
    Polynomial lf = lc_in(f, v, df);
    f = lg * f - lf * Polynomial::var(v, df - dg) * g;
  }
  return f;
}

Polynomial primpart_in(const Polynomial& p, int v) {
  Polynomial c = content_in(p, v);
  return *divide_exact(p, c);
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a == b) return a.monic();
  int v = main_variable(a, b);
  unsigned da = a.degree(v), db = b.degree(v);
  if (da == 0) return gcd(a, content_in(b, v));
  if (db == 0) return gcd(content_in(a, v), b);
  Polynomial ca = content_in(a, v), cb = content_in(b, v);
  Polynomial c = gcd(ca, cb);
  Polynomial f = *divide_exact(a, ca), g = *divide_exact(b, cb);
  if (f.degree(v) < g.degree(v)) std::swap(f, g);
  Polynomial res;
  while (true) {
    Polynomial r = prem(f, g, v);
    if (r.is_zero()) {
      res = g;
      break;
    }
    if (r.degree(v) == 0) {
      res = Polynomial(1);
      break;
    }
    f = g;
    g = primpart_in(r, v);
  }
  return (c * primpart_in(res, v)).monic();
}

Polynomial pochhammer(const Polynomial& a, unsigned j) {
  Polynomial r(1);
  for (unsigned i = 0; i < j; ++i) r *= a + Polynomial(static_cast<long>(i));
  return r;
}

}  // namespace sbo
