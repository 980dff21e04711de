#include "sbo/operators.hpp"

namespace sbo {

std::vector<Factor> L_factors(const std::vector<unsigned>& alpha, int k, int n) {
  if (static_cast<int>(alpha.size()) != n) throw std::invalid_argument("dimension mismatch between alpha and n");
  if (k < 0 || k > n) throw std::out_of_range("index out of range");
  std::vector<Factor> f;
  for (int i = 1; i <= k; ++i)
    for (unsigned a = 0; a < alpha[i - 1]; ++a) f.push_back({OpKind::F, i});
  for (int i = k + 1; i <= n; ++i)
    for (unsigned a = 0; a < alpha[i - 1]; ++a) f.push_back({OpKind::D, i + 1});
  return f;
}

AffineVec factor_shift(const Factor& f, int n) {
  return f.kind == OpKind::D ? unit(n + 1, f.index) : complement(n + 1, f.index);
}

WeylElement build_D(int i, const AffineVec& lam, int n) { return build_D_with(MatrixWeyl(n), i, lam, n); }
WeylElement build_F(int i, const AffineVec& lam, int n) { return build_F_with(MatrixWeyl(n), i, lam, n); }

WeylElement build_L(const std::vector<unsigned>& alpha, int k, const AffineVec& lam, int n) {
  return build_L_with(MatrixWeyl(n), alpha, k, lam, n);
}

WeylElement build_op(OpKind kind, int i, const AffineVec& lam, int n) {
  return kind == OpKind::D ? build_D(i, lam, n) : build_F(i, lam, n);
}

AffineVec lambda_symbols(int n) {
  AffineVec v;
  for (int i = 1; i <= n + 1; ++i) v.push_back(lam(i));
  return v;
}

}  // namespace sbo
