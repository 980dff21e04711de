#pragma once

#include "sbo/rational_function.hpp"

#include <functional>
#include <memory>

namespace sbo {

// Coordinates of a Weyl algebra: polynomial-ring ids plus display names.
struct WeylSpace {
  std::vector<int> vars;
  std::vector<std::string> x_latex, d_latex;
  int matrix_size = 0;  // > 0 when the coordinates are the entries of a square matrix

  int nv() const { return static_cast<int>(vars.size()); }
  int index_of(int var) const;  // -1 if not a coordinate
  // Entry (i,j), 1-based, of a matrix space.
  int entry(int i, int j) const;

  static std::shared_ptr<const WeylSpace> matrix(int size);  // g_{ij}
  static std::shared_ptr<const WeylSpace> h_matrix(int size);
  static std::shared_ptr<const WeylSpace> coords(const std::vector<int>& ids);
};
using SpacePtr = std::shared_ptr<const WeylSpace>;

// Key: x-exponents followed by d-exponents, length 2*nv.
using WeylKey = std::vector<std::uint8_t>;

// Normal-ordered differential operator sum c * x^a d^b.
class WeylElement {
 public:
  using TermMap = std::map<WeylKey, RationalFunction>;

  WeylElement() = default;
  explicit WeylElement(SpacePtr s) : space_(std::move(s)) {}

  static WeylElement scalar(SpacePtr s, const RationalFunction& c);
  static WeylElement identity(SpacePtr s) { return scalar(std::move(s), RationalFunction(1)); }
  static WeylElement x(SpacePtr s, int i);
  static WeylElement d(SpacePtr s, int i);
  // Multiplication by a polynomial; coordinate variables go to the x-part,
  // everything else into the coefficient.
  static WeylElement multiplication(SpacePtr s, const Polynomial& p);

  const SpacePtr& space() const { return space_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  unsigned order() const;

  void add_term(const WeylKey& k, const RationalFunction& c);

  WeylElement& operator+=(const WeylElement& o);
  WeylElement& operator-=(const WeylElement& o);
  WeylElement& operator*=(const RationalFunction& c);
  WeylElement operator-() const;
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend WeylElement operator*(WeylElement a, const RationalFunction& c) { return a *= c; }
  friend WeylElement operator*(const RationalFunction& c, WeylElement a) { return a *= c; }
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

  WeylElement pow(unsigned e) const;
  WeylElement substitute_coefficients(const Assignment& a) const;
  WeylElement substitute_coefficients(const std::map<int, Polynomial>& s) const;

  // Action on functions. Coefficients must be polynomial.
  Polynomial apply(const Polynomial& f) const;
  RationalFunction apply(const RationalFunction& f) const;

  std::string to_latex() const;
  std::string to_string() const;

 private:
  SpacePtr space_;
  TermMap terms_;
};

WeylElement commutator(const WeylElement& a, const WeylElement& b);

// epsilon^{i,j} = sum_k g_{ki} d_{kj} on (n+1)x(n+1) matrices.
WeylElement epsilon(int i, int j, int n);
WeylElement epsilon(const SpacePtr& s, int i, int j);
// (-1)^{i+j+1} epsilon^{i,j}.
WeylElement epsilon_tilde(int i, int j, int n);
WeylElement epsilon_tilde(const SpacePtr& s, int i, int j);

using OperatorMatrix = std::vector<std::vector<WeylElement>>;

// Column-ordered determinant: sum_sigma sgn(sigma) M[s1,1] M[s2,2] ...
template <class Elem>
Elem ordered_det(const std::vector<std::vector<Elem>>& m, const Elem& one) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("ordered_det: non-square input");
  if (n == 0) return one;
  std::vector<bool> used(n, false);
  Elem total = one - one;
  // Left-to-right over columns, each partial product kept as prefix.
  std::function<void(std::size_t, const Elem&, int)> rec = [&](std::size_t col, const Elem& prefix, int sign) {
    if (col == n) {
      if (sign > 0)
        total += prefix;
      else
        total -= prefix;
      return;
    }
    int above = 0;  // unused rows above r: parity of the new inversions
    for (std::size_t r = 0; r < n; ++r) {
      if (used[r]) continue;
      if (m[r][col].is_zero()) {
        ++above;
        continue;
      }
      used[r] = true;
      rec(col + 1, prefix * m[r][col], (above % 2) ? -sign : sign);
      used[r] = false;
      ++above;
    }
  };
  rec(0, one, 1);
  return total;
}

WeylElement ordered_det(const OperatorMatrix& m);

}  // namespace sbo
