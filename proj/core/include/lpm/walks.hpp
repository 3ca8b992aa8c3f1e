#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lpm/combinatorics.hpp"
#include "lpm/numeric.hpp"
#include "lpm/walk.hpp"

namespace lpm {

/// T(pi) = (1 - pi(1), ..., d - pi(d)).
LatticePoint toeplitz_point(const Permutation& pi);
/// The permutation whose Toeplitz point is `p`, if any.
std::optional<Permutation> toeplitz_preimage(const LatticePoint& p);

/// Vector sum of the steps.
LatticePoint endpoint(const Walk& w);

/// Restricted representative families. Positions of each half are split into
/// n aligned blocks of r consecutive steps.
enum class Family {
  w_prime,      ///< W': step values weakly decreasing inside every block
  w_hat_prime,  ///< W-hat': step values strictly increasing inside every block
};

/// Does one half (positive or negative steps) obey the family's block rule?
bool half_in_family(std::span<const int> half, int r, Family family);
bool in_family(const Walk& w, int r, Family family);

/// Streams every walk of the family with rn positive and rn negative steps
/// ending at T(pi), in lexicographic order of (up, down).
void for_each_family_walk(int n, int r, int d, const Permutation& pi, Family family,
                          const std::function<void(const Walk&)>& visit);
std::vector<Walk> enumerate_W_prime(int n, int r, int d, const Permutation& pi);
std::vector<Walk> enumerate_W_hat_prime(int n, int r, int d, const Permutation& pi);

/// Streams the family walks over every Toeplitz endpoint, with the
/// permutation each one ends at.
void for_each_family_walk_toeplitz(
    int n, int r, int d, Family family,
    const std::function<void(const Walk&, const Permutation&)>& visit);

enum class Counter {
  /// Materializes every half-walk, tallies them by step-count vector and
  /// joins the two halves at each Toeplitz endpoint.
  enumerate,
  /// Dynamic program over blocks on step-count vectors; no walk is built.
  dp,
};

struct SumOptions {
  Budget budget{};
  unsigned threads = 1;
};

/// |family(d, 2rn; T(pi))|.
Count family_count(int n, int r, int d, const Permutation& pi, Family family, Counter counter,
                   const SumOptions& opts = {});

/// sum over pi in S_d of sgn(pi) |family(d, 2rn; T(pi))|. Permutations whose
/// Toeplitz point no half-walk pair can reach are pruned during the join.
Count signed_sum(int n, int r, int d, Family family, Counter counter, const SumOptions& opts = {});

/// Phi: the representative walk whose step values are the planar matching
/// sizes ending at each left node (positive half) and right node (negative
/// half). `d` sets the walk dimension and defaults to L(F).
Walk phi_map(const Permutation& f, int d = 0);

/// phi: for every value k, pairs A_k (positions of positive steps k) with
/// B_k (positions of negative steps k) in a crossing way, trimming the larger
/// set to its initial (A) or terminal (B) segment.
QuasiConfiguration crossing_quasi_config(const Walk& w);

/// k(u) and l(u): occurrences of a_u and a_u - 1 among a_1..a_u.
struct KLProfile {
  std::vector<int> k;
  std::vector<int> l;
  friend bool operator==(const KLProfile&, const KLProfile&) = default;
};
KLProfile k_l_profile(const Walk& w);

/// First left node u (1-based) at which condition (C) fails, or nullopt.
///
/// At u with a_u > 1 the condition asks that the l(u)-th-to-last a_u - 1 among
/// the negative steps comes before the k(u)-th-to-last a_u. Positions use the
/// conventions: the 0-th-to-last appearance sits at rn + 1 and a missing
/// appearance sits at 0. Hence l(u) = 0 fails, a missing a_u fails, and a
/// missing a_u - 1 (with a_u present) passes.
std::optional<int> first_condition_C_violation(const Walk& w);
bool check_condition_C(const Walk& w);

/// Position (1-based) of the `count`-th-to-last `value` in `half`, with the
/// conventions above (count = 0 gives size + 1, absent gives 0).
int position_from_end(std::span<const int> half, int value, int count);

/// Sign-reversing involution on W'(d, 2rn; Toeplitz) walks violating (C).
/// Throws std::invalid_argument outside that domain.
Walk involution_second(const Walk& w, int r);

/// Every prefix point satisfies x_1 >= x_2 >= ... >= x_d.
bool stays_in_dominance_region(const Walk& w);

/// First prefix length t (1-based) after which the walk translated to start at
/// (d-1, ..., 0) leaves x_1 > ... > x_d, and the coordinate j with p_j = p_{j+1}.
std::optional<std::pair<int, int>> first_strict_region_exit(const Walk& w);

/// Keeps the positive half and reverses the negative half (w <-> w-tilde).
Walk reverse_negative(const Walk& w);

/// Sign-reversing involution on W-tilde(d, 2rn; Toeplitz) walks that, started
/// at (d-1, ..., 0), leave x_1 > ... > x_d. W-tilde walks have weakly
/// decreasing positive blocks and weakly increasing negative blocks.
/// Throws std::invalid_argument outside that domain.
Walk involution_first(const Walk& w, int r);
/// Membership in the domain of involution_first.
bool in_first_involution_domain(const Walk& w, int r);

/// Exhaustive, pruned enumeration of W'(d, 2rn; Toeplitz) walks satisfying
/// condition (C). Prunes only on violations that are already certain.
void for_each_condition_C_walk(int n, int r, int d,
                               const std::function<void(const Walk&, const Permutation&)>& visit);

/// Exhaustive, pruned enumeration of closed W-tilde(d, 2rn; 0) walks staying in
/// x_1 >= ... >= x_d.
void for_each_region_closed_tilde_walk(int n, int r, int d,
                                       const std::function<void(const Walk&)>& visit);

}  // namespace lpm
