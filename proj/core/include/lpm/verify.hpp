#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lpm/numeric.hpp"
#include "lpm/walk.hpp"

namespace lpm {

/// Outcome of comparing several independent computations of one quantity.
struct VerificationReport {
  std::string identity;
  std::vector<std::pair<std::string, long long>> params;
  /// Method name and its value rendered as a decimal (or rational) string.
  std::vector<std::pair<std::string, std::string>> methods;
  bool pass = false;
  /// First discrepancy found, when the report fails.
  std::optional<std::string> witness;
  double elapsed_ms = 0;
};

/// Serializes to {identity, params, methods, pass, witness?, elapsed_ms} with
/// fixed key order. `with_timing = false` drops elapsed_ms for byte-stable output.
std::string to_json(const VerificationReport& report, bool with_timing = true, int indent = 2);

struct VerifyOptions {
  Budget budget{};
  unsigned threads = 1;
};

/// g(n;d) by brute force, condition-(T) tableau pairs, and the W' signed sum
/// under both counters.
VerificationReport verify_theorem1(int n, int r, int d, const VerifyOptions& opts = {});
/// g-hat(n;d) by brute force, condition-(T-hat) pairs, and the W-hat' signed sum.
VerificationReport verify_plk(int n, int r, int d, const VerifyOptions& opts = {});

/// Signed count of all length-2m walks from the origin to Toeplitz points,
/// by a lattice DP, against C(2m,m) u_m(d) and C(2m,m) times the signed
/// count of representative walks.
VerificationReport verify_mot(int m, int d, const VerifyOptions& opts = {});

/// Coefficients of det(I_|r-s|(2x)) (d x d, truncated at degree M) against
/// u_m(d)/(m!)^2 for every 2m <= M; odd coefficients must vanish.
VerificationReport gessel_check(int d, int max_degree, const VerifyOptions& opts = {});

enum class Involution { first, second };

/// Exhausts the involution's domain and checks it is a sign-reversing
/// involution closed on the domain with signed total 0.
VerificationReport audit_involution(int n, int r, int d, Involution which,
                                    const VerifyOptions& opts = {});
/// Same audit with a substitute map, used to confirm the audit catches faults.
VerificationReport audit_involution_with(int n, int r, int d, Involution which,
                                         const std::function<Walk(const Walk&)>& rho,
                                         const VerifyOptions& opts = {});

/// Two-sided inclusion checks and round trips for the three bijections:
/// bar configurations to (T) tableau pairs (RSK), tableau pairs to closed
/// region walks, and bar configurations to (C) walks (Phi and phi).
VerificationReport audit_bijections(int n, int r, int d, const VerifyOptions& opts = {});

}  // namespace lpm
