// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "lpm/combinatorics.hpp"
#include "lpm/series.hpp"
#include "lpm/verify.hpp"
#include "lpm/walks.hpp"
#include "oracles.hpp"

using namespace lpm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  int cases = 0;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void check(const VerificationReport& rep) {
    ++cases;
    if (!rep.pass) fail(to_json(rep, false, -1));
  }
};

Outcome identity_grid(bool subgraph) {
  Outcome o;
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; r * n <= 8; ++n) {
      for (int d = 0; d <= r * n; ++d) o.check(subgraph ? verify_plk(n, r, d) : verify_theorem1(n, r, d));
    }
  }
  return o;
}

Outcome permutation_reduction() {
  Outcome o;
  for (int n = 1; n <= 6; ++n) {
    for (int d = 0; d <= n; ++d) {
      ++o.cases;
      const Count want(static_cast<unsigned long>(oracle::permutations_with_lis_at_most(n, d)));
      if (count_g_brute(n, 1, d) != want || count_u(n, d) != want) {
        o.fail("n=" + std::to_string(n) + " d=" + std::to_string(d));
      }
    }
  }
  if (count_u(3, 2) != 5) o.fail("u_3(2) != 5");
  for (int m = 1; m <= 8; ++m) {
    if (count_u(m, 1) != 1) o.fail("u_m(1) != 1 at m=" + std::to_string(m));
    for (int d = m; d <= m + 2; ++d) {
      if (count_u(m, d) != factorial(static_cast<unsigned>(m))) o.fail("u_m(d) != m! at m=" + std::to_string(m));
    }
  }
  return o;
}

Outcome mot_grid() {
  Outcome o;
  for (int m = 1; m <= 5; ++m) {
    for (int d = 1; d <= 4; ++d) {
      const auto rep = verify_mot(m, d);
      o.check(rep);
      const Count want = binomial(static_cast<unsigned>(2 * m), static_cast<unsigned>(m)) * count_u(m, d);
      if (Count(std::to_string(oracle::midpoint_signed_walks(m, d))) != want) {
        o.fail("midpoint enumeration differs at m=" + std::to_string(m) + " d=" + std::to_string(d));
      }
      if (m == 1 && want != 2) o.fail("m=1 value is not 2 at d=" + std::to_string(d));
    }
  }
  return o;
}

Outcome gessel_grid() {
  Outcome o;
  for (int d = 1; d <= 3; ++d) {
    o.check(gessel_check(d, 10));
    std::vector<std::vector<RationalSeries>> mat;
    for (int i = 0; i < d; ++i) {
      auto& row = mat.emplace_back();
      for (int j = 0; j < d; ++j) row.push_back(bessel_I_series(std::abs(i - j), 10));
    }
    const auto det = determinant(mat);
    for (int m = 0; m <= 5; ++m) {
      const Count f = factorial(static_cast<unsigned>(m));
      Rational want(Count(static_cast<unsigned long>(oracle::permutations_with_lis_at_most(m, d))), f * f);
      want.canonicalize();
      if (det.coefficient(2 * m) != want) o.fail("d=" + std::to_string(d) + " m=" + std::to_string(m));
    }
    if (d == 2 && det.coefficient(4) != Rational(1, 2)) o.fail("d=2 x^4 coefficient is not 1/2");
  }
  return o;
}

Outcome bijection_grid() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    for (int r = 1; r * n <= 8; ++r) {
      for (int d = 0; d <= r * n; ++d) o.check(audit_bijections(n, r, d));
    }
  }
  return o;
}

Outcome involution_grid() {
  Outcome o;
  for (int n = 1; n <= 5; ++n) {
    for (int r = 1; r * n <= 5; ++r) {
      for (int d = 1; d <= 3; ++d) {
        for (auto which : {Involution::first, Involution::second}) {
          const auto rep = audit_involution(n, r, d, which);
          o.check(rep);
          if (rep.methods.at(1).second != "0") o.fail("nonzero signed total in " + to_json(rep, false, -1));
        }
      }
    }
  }
  return o;
}

Outcome worked_example() {
  Outcome o;
  o.cases = 1;
  const Multigraph g(3, 2, {0, 1, 1, 2, 0, 0, 0, 1, 1});
  const auto w = phi_map(bar_map(g));
  if (format_walk(w) != "111122|112121") o.fail("walk is " + format_walk(w));
  const auto kl = k_l_profile(w);
  if (kl.k != std::vector<int>{1, 2, 3, 4, 1, 2}) o.fail("k profile differs");
  if (kl.l != std::vector<int>{0, 0, 0, 0, 4, 4}) o.fail("l profile differs");
  return o;
}

Outcome sampling() {
  Outcome o;
  const std::uint64_t samples = 100000;
  const auto hist = sample_longest_distribution(2, 2, samples, 20240915);
  std::vector<double> exact(hist.size(), 0.0);
  for_each_permutation(4, [&](const Permutation& f) { exact[static_cast<std::size_t>(oracle::lis_subsets(f.values()))] += 1.0 / 24.0; });
  for (std::size_t l = 0; l < hist.size(); ++l) {
    ++o.cases;
    const double expect = exact[l] * samples;
    const double se = std::sqrt(samples * exact[l] * (1 - exact[l]));
    if (std::abs(static_cast<double>(hist[l]) - expect) > 3 * se) {
      o.fail("L=" + std::to_string(l) + " observed " + std::to_string(hist[l]) + ", expected " + std::to_string(expect));
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"g by brute force = (T) pairs = W' signed sums (enumerate, dp) on rn <= 8, r <= 3", [] { return identity_grid(false); }},
      {"g-hat by brute force = (T-hat) pairs = W-hat' signed sums on rn <= 8, r <= 3", [] { return identity_grid(true); }},
      {"r = 1 counts equal u_n(d) for n <= 6; u_3(2) = 5, u_m(1) = 1, u_m(d >= m) = m!", permutation_reduction},
      {"signed walks of length 2m = C(2m,m) u_m(d) for m <= 5, d <= 4; m = 1 gives 2", mot_grid},
      {"det(I_|r-s|(2x)) coefficients = u_m(d)/(m!)^2 for d <= 3, 2m <= 10; d = 2, x^4 gives 1/2", gessel_grid},
      {"RSK, tableau-pair/walk and Phi bijections, two-sided and round trips, rn <= 8", bijection_grid},
      {"both involutions sign-reversing, closed, self-inverse, zero total, rn <= 5, d <= 3", involution_grid},
      {"0,1,1;2,0,0;0,1,1 maps to 111122|112121 with k = 1,2,3,4,1,2 and l = 0,0,0,0,4,4", worked_example},
      {"10^5 sampled L at (n,r) = (2,2) within 3 standard errors of the exact distribution", sampling},
  };

  bool all = true;
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    const Outcome o = criteria[i].second();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.pass;
    std::printf("criterion %zu: %s  %s  [%d cases, %.2fs]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.cases, secs);
    if (!o.pass) std::printf("  first failure: %s\n", o.detail.c_str());
    std::fflush(stdout);
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s in %.1fs\n", all ? "all criteria pass" : "some criteria FAIL", total);
  return all ? 0 : 1;
}
