#pragma once

#include "sbo/parameters.hpp"
#include "sbo/weyl.hpp"

namespace sbo {

// Lower-unipotent coordinates at n = 2: nbar = [[1,0,0],[x,1,0],[z,y,1]].
const SpacePtr& delta_space();

// sum_m c_m prod_c delta^{(m_c)}(coord_c), one order per coordinate.
class DeltaKernel {
 public:
  using Orders = std::vector<unsigned>;
  using TermMap = std::map<Orders, RationalFunction>;

  DeltaKernel() : coords_(delta_space()->vars) {}
  explicit DeltaKernel(std::vector<int> coords) : coords_(std::move(coords)) {}
  static DeltaKernel delta(const Orders& m, const RationalFunction& c = RationalFunction(1));

  const std::vector<int>& coords() const { return coords_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFunction coefficient(const Orders& m) const;

  void add(const Orders& m, const RationalFunction& c);
  DeltaKernel& operator+=(const DeltaKernel& o);
  DeltaKernel& operator*=(const RationalFunction& c);
  friend DeltaKernel operator+(DeltaKernel a, const DeltaKernel& b) { return a += b; }
  friend DeltaKernel operator-(DeltaKernel a, const DeltaKernel& b) {
    DeltaKernel nb = b;
    nb *= RationalFunction(-1);
    return a += nb;
  }
  friend bool operator==(const DeltaKernel& a, const DeltaKernel& b) {
    return a.coords_ == b.coords_ && a.terms_ == b.terms_;
  }

  DeltaKernel substitute(const Assignment& a) const;
  // Scaled so the coefficient at the smallest order of the last coordinate,
  // then lexicographically, is 1.
  DeltaKernel normalized() const;

  std::string to_latex() const;
  std::string to_string() const;

 private:
  std::vector<int> coords_;
  TermMap terms_;
};

// Normal-ordered operator: x * delta^{(m)} = -m delta^{(m-1)}, d delta^{(m)} = delta^{(m+1)}.
DeltaKernel act(const WeylElement& op, const DeltaKernel& K);

// The equation lhs K = rhs K.
struct PdeOperator {
  WeylElement lhs;
  RationalFunction rhs;

  // lhs - rhs, which annihilates every solution.
  WeylElement annihilator() const;
  bool is_euler() const;  // lhs is sum w_c x_c d_c
  PdeOperator substitute(const std::map<int, Polynomial>& s) const;
  friend bool operator==(const PdeOperator& a, const PdeOperator& b) { return a.lhs == b.lhs && a.rhs == b.rhs; }
  std::string to_latex() const;
};

DeltaKernel act(const PdeOperator& op, const DeltaKernel& K);  // lhs K - rhs K

// One-parameter subgroups of P_H at n = 2: "a1", "a2" (diagonal slot),
// "gamma1", "gamma2", "delta1", "delta2", and the unipotent "E12".
std::vector<std::string> generator_tags();
// Derived from the Gauss decomposition of x_k^{-1} diag(h(t),1) x_k nbar,
// with symbolic lambda_1..3, nu_1..2.
PdeOperator derive_pde(int k, const std::string& generator, int n = 2);
// The system used by the solver: the diagonal slots and E12.
std::vector<PdeOperator> pde_system(int k, int n = 2);

// Sign rule for the diagonal -1 element in slot `slot` of H: kernel terms
// with sum of orders over flipped coordinates of parity `parity` survive.
struct ParityRule {
  std::vector<int> flipped;  // coordinate positions
  int parity = 0;
};
std::vector<ParityRule> parity_rules(const InductionParams& p, int k);

struct KernelSpace {
  std::vector<DeltaKernel> basis;
  int dimension = 0;
  std::vector<DeltaKernel::Orders> support;  // admissible orders after Euler + parity
};

// Exact kernel space over the parameter field of p.
KernelSpace solve_kernels(const InductionParams& p, int k);

// Full: j = 0..N. Truncated: j = index+1..N with index = l_0. Head: j = 0..index with index = k_0.
enum class KernelCase { Full, Truncated, Head };
// Printed: the sums in their displayed form. Amended: k = 0 with the sign
// (-1)^j and k = 2 with (lambda_1-lambda_2+n_1-n_2)_j, as forced by the
// recurrence and the termination conditions; k = 1 is unchanged.
enum class KernelForm { Printed, Amended };
// The Pochhammer sums, built from the summand ratio so that the truncated
// sum starts with coefficient 1.
DeltaKernel closed_form_kernel(int k, KernelCase c, const InductionParams& p, int index = 0,
                               KernelForm form = KernelForm::Amended);

// (n_1, n_2) per support index k; nullopt when not natural numbers.
std::optional<std::pair<long, long>> support_orders(const InductionParams& p, int k);

// Rank of a family of kernels over the coefficient field.
std::size_t kernel_rank(const std::vector<DeltaKernel>& ks);
bool same_span(const std::vector<DeltaKernel>& a, const std::vector<DeltaKernel>& b);

// Case analysis of the solution space: dimension and closed-form basis.
// Parities for k = 0 follow homogeneity, eta_1 = xi_2 + [n_1 + n_2]
// and eta_2 = xi_3 + [n_1].
struct CaseAnalysis {
  int dimension = 0;
  std::string label;
  std::vector<DeltaKernel> kernels;
};
CaseAnalysis case_analysis(const InductionParams& p, int k);

// The multiplicity-two parameter family with lambda_0 rational or symbolic.
InductionParams multiplicity_two_params(const AffineForm& lambda0, long n1, long n2, long k0, long l0, const Parities& xi = {0, 0, 0});

}  // namespace sbo
