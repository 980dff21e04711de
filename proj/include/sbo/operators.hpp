#pragma once

#include "sbo/covariant.hpp"

namespace sbo {

// lambda_{a,b} = lambda_a - lambda_b - 1 (1-based).
inline Polynomial lambda_ab(const AffineVec& lam, int a, int b) {
  return (lam.at(a - 1) - lam.at(b - 1) - AffineForm(1)).to_polynomial();
}

// Entries an algebra must provide for the determinant constructors:
//   Elem one(); Elem phi(int r); Elem psi(int r); Elem eps(int a, int b); Elem scalar(const Polynomial&)
template <class Alg>
typename Alg::Elem build_D_with(const Alg& alg, int i, const AffineVec& lam, int n) {
  using Elem = typename Alg::Elem;
  if (i < 1 || i > n + 1) throw std::out_of_range("index out of range");
  if (static_cast<int>(lam.size()) != n + 1) throw std::invalid_argument("size mismatch");
  if (i == 1) return alg.phi(1);
  Elem zero = alg.one() - alg.one();
  std::vector<std::vector<Elem>> m(i, std::vector<Elem>(i, zero));
  for (int r = 1; r <= i; ++r) {
    m[r - 1][0] = alg.phi(r);
    for (int c = 2; c <= i; ++c) {
      if (c == r + 1)
        m[r - 1][c - 1] = alg.scalar(lambda_ab(lam, i, r));
      else if (c <= r)
        m[r - 1][c - 1] = alg.eps(r, c - 1);
    }
  }
  return ordered_det(m, alg.one());
}

template <class Alg>
typename Alg::Elem build_F_with(const Alg& alg, int i, const AffineVec& lam, int n) {
  using Elem = typename Alg::Elem;
  if (i < 1 || i > n + 1) throw std::out_of_range("index out of range");
  if (static_cast<int>(lam.size()) != n + 1) throw std::invalid_argument("size mismatch");
  if (i == n + 1) return alg.psi(n + 1);
  const int size = n + 2 - i;
  Elem zero = alg.one() - alg.one();
  std::vector<std::vector<Elem>> m(size, std::vector<Elem>(size, zero));
  for (int r = 1; r <= size; ++r) {
    const int R = n + 2 - r;  // Psi index of row r
    m[r - 1][0] = alg.psi(R);
    for (int c = 2; c <= size; ++c) {
      if (c == r + 1) {
        m[r - 1][c - 1] = alg.scalar(lambda_ab(lam, n + 2 - r, i));
      } else if (c <= r) {
        const int a = n + 3 - c;
        Elem e = alg.eps(a, R);
        m[r - 1][c - 1] = ((a + R + 1) % 2) ? zero - e : e;  // tilde sign
      }
    }
  }
  return ordered_det(m, alg.one());
}

enum class OpKind { D, F };

struct Factor {
  OpKind kind;
  int index;
};

// Factors of L_{alpha,k}, leftmost first, with powers expanded.
std::vector<Factor> L_factors(const std::vector<unsigned>& alpha, int k, int n);
// Parameter shift of one factor: e_i for D_i, hat e_i for F_i.
AffineVec factor_shift(const Factor& f, int n);

// Composition with lambda threaded right to left through the factors.
template <class Alg>
typename Alg::Elem build_L_with(const Alg& alg, const std::vector<unsigned>& alpha, int k, const AffineVec& lam, int n) {
  auto factors = L_factors(alpha, k, n);
  auto result = alg.one();
  AffineVec mu = lam;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    auto op = it->kind == OpKind::D ? build_D_with(alg, it->index, mu, n) : build_F_with(alg, it->index, mu, n);
    result = op * result;
    mu = mu - factor_shift(*it, n);
  }
  return result;
}

// The Weyl-algebra realisation on (n+1)x(n+1) matrix entries.
struct MatrixWeyl {
  using Elem = WeylElement;
  int n;
  SpacePtr space;
  explicit MatrixWeyl(int n_) : n(n_), space(WeylSpace::matrix(n_ + 1)) {}
  Elem one() const { return WeylElement::identity(space); }
  Elem phi(int r) const { return WeylElement::multiplication(space, sbo::phi(r, n)); }
  Elem psi(int r) const { return WeylElement::multiplication(space, sbo::psi(r, n)); }
  Elem eps(int a, int b) const { return epsilon(space, a, b); }
  Elem scalar(const Polynomial& p) const { return WeylElement::scalar(space, RationalFunction(p)); }
};

WeylElement build_D(int i, const AffineVec& lam, int n);
WeylElement build_F(int i, const AffineVec& lam, int n);
WeylElement build_L(const std::vector<unsigned>& alpha, int k, const AffineVec& lam, int n);
WeylElement build_op(OpKind kind, int i, const AffineVec& lam, int n);

// The symbolic lambda vector (lambda_1, ..., lambda_{n+1}).
AffineVec lambda_symbols(int n);

}  // namespace sbo
