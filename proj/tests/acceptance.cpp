// One PASS/FAIL line per acceptance criterion, with runtimes against their limits.
#include "suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace sbo;

namespace {

struct Criterion {
  int id;
  std::string what;
  double limit_ms;
  std::function<std::vector<CheckResult>()> run;
};

std::vector<CheckResult> concat(std::vector<CheckResult> a, const std::vector<CheckResult>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 1;
  const InductionParams p = InductionParams::symbolic(2);
  const std::vector<Criterion> criteria = {
      {1, "build_D(3), build_F(1) equal the expanded determinants", 1e3, [] { return std::vector{check_constructor_calibration()}; }},
      {2, "restriction identities at n = 2 (k = 0..2) and n = 3 (k = 0..3)", 30e3,
       [seed] {
         std::vector<CheckResult> v;
         for (int n : {2, 3})
           for (int k = 0; k <= n; ++k) v = concat(v, verify_restriction_identities(n, k, seed));
         return v;
       }},
      {3, "Bernstein-Sato for D_1..D_3, F_1..F_3, symbolic and at 20 seeded points", 120e3,
       [&p, seed] {
         std::vector<CheckResult> v;
         for (OpKind kind : {OpKind::D, OpKind::F})
           for (int i = 1; i <= 3; ++i) {
             v.push_back(verify_bernstein_sato(kind, i, p, BsMode::Symbolic));
             v.push_back(verify_bernstein_sato(kind, i, p, BsMode::Numeric, seed, 20));
           }
         return v;
       }},
      {4, "iterated Bernstein-Sato at alpha = 2, 3", 60e3,
       [&p] {
         std::vector<CheckResult> v;
         for (OpKind kind : {OpKind::D, OpKind::F})
           for (int i = 1; i <= 3; ++i)
             for (unsigned a : {2u, 3u}) v.push_back(verify_iterated_bs(kind, i, a, p));
         return v;
       }},
      {5, "n = 2 kernel classification sweep", 120e3, [seed] { return check_classification_sweep(seed); }},
      {6, "derived k = 1 equations equal the displayed system", 5e3, [] { return check_pde_calibration(); }},
      {7, "expansion formula for n, m <= 4 and the m = 0 term", 60e3, [] { return verify_expansion_lemma(4); }},
      {8, "residue scalar bookkeeping at n = 1, 2", 30e3, [] { return check_residue_scalars(2); }},
      {9, "gamma ratio is a polynomial for 10 parity patterns", 10e3, [seed] { return std::vector{check_gamma_ratio(seed, 10)}; }},
      {10, "gamma_numeric on 20 values and the Riesz probe", 30e3,
       [] { return concat({check_gamma_numeric()}, check_riesz_probe()); }},
      {11, "1000 seeded algebra property checks", 120e3, [seed] { return check_properties(seed, 200); }},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto results = c.run();
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::size_t passed = 0;
    std::string first_fail;
    for (const auto& r : results) {
      if (r.pass) ++passed;
      else if (first_fail.empty()) first_fail = r.check + ": " + r.details;
    }
    const bool ok = !results.empty() && passed == results.size() && ms <= c.limit_ms;
    all = all && ok;
    std::printf("criterion %2d: %s  %s  [%zu/%zu checks, %.0f ms of %.0f ms]\n", c.id, ok ? "PASS" : "FAIL", c.what.c_str(),
                passed, results.size(), ms, c.limit_ms);
    if (!first_fail.empty()) std::printf("              first failure: %s\n", first_fail.c_str());
    if (c.id == 5) {
      int printed_bad = 0, k02 = 0;
      for (const auto& r : results) {
        if (r.check == "classification sweep coverage") std::printf("              %s\n", r.details.c_str());
        if (r.check.rfind("classify k=1", 0) != 0 && r.details.find("dimension 1") == 0) ++k02;
        if (r.details.find("printed display form is not a solution") != std::string::npos) ++printed_bad;
      }
      std::printf("              note: the k = 0, 2 sums as printed fail the derived equations in %d of %d nonzero instances;"
                  " the amended sums are used\n",
                  printed_bad, k02);
    }
  }
  std::printf("acceptance: %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
