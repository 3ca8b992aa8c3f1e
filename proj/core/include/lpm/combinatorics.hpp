#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpm/numeric.hpp"

namespace lpm {

/// Bijection of [m] in one-line notation with 1-based values.
///
/// A Permutation of [rn] also encodes an r-configuration: the left node
/// u_i^s is position r(i-1)+s and it is paired with the right node whose
/// lexicographic index is the value at that position.
class Permutation {
public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `values` is a bijection of [size].
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int m);

  int size() const { return static_cast<int>(values_.size()); }
  /// Value at 1-based position `pos`.
  int operator()(int pos) const { return values_[static_cast<std::size_t>(pos - 1)]; }
  const std::vector<int>& values() const { return values_; }

  Permutation inverse() const;
  /// +1 for even permutations, -1 for odd.
  int sign() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> values_;
};

/// r-regular bipartite multigraph on u_1..u_n and v_1..v_n stored as its
/// n x n multiplicity matrix.
class Multigraph {
public:
  /// Throws std::invalid_argument unless every row and column sums to r.
  Multigraph(int n, int r, std::vector<int> row_major);

  int n() const { return n_; }
  int r() const { return r_; }
  /// Multiplicity of edge (u_i, v_j), 1-based.
  int operator()(int i, int j) const { return mult_[index(i, j)]; }
  const std::vector<int>& row_major() const { return mult_; }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;
  friend auto operator<=>(const Multigraph&, const Multigraph&) = default;

private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>((i - 1) * n_ + (j - 1));
  }

  int n_ = 0;
  int r_ = 0;
  std::vector<int> mult_;
};

/// Partial injective pairing of left nodes [m] with right nodes [m].
/// Obtained from a configuration by deleting some of its pairs.
class QuasiConfiguration {
public:
  explicit QuasiConfiguration(int m) : partner_(static_cast<std::size_t>(m), 0) {}

  int size() const { return static_cast<int>(partner_.size()); }
  /// Right partner of left node `left`, or nullopt when unmatched.
  std::optional<int> partner(int left) const;
  /// Throws std::invalid_argument if either endpoint is already used.
  void pair(int left, int right);

  bool is_full() const;
  /// Throws std::logic_error when the pairing is not full.
  Permutation to_permutation() const;
  /// (left, right) pairs ordered by left node.
  std::vector<std::pair<int, int>> pairs() const;
  std::vector<int> unmatched_left() const;
  std::vector<int> unmatched_right() const;

  friend bool operator==(const QuasiConfiguration&, const QuasiConfiguration&) = default;

private:
  std::vector<int> partner_;  // 0 = unmatched
};

/// Visits every n x n nonnegative matrix with all row and column sums equal
/// to r exactly once, in lexicographic order of the flattened matrix.
void for_each_multigraph(int n, int r, const std::function<void(const Multigraph&)>& visit);
std::vector<Multigraph> enumerate_multigraphs(int n, int r);

/// The canonical configuration G-bar lifting G, in which parallel copies of
/// an edge pairwise cross.
Permutation bar_map(const Multigraph& g);

/// Collapses a configuration of [rn] to its multigraph by block.
Multigraph project(const Permutation& f, int n, int r);

/// Per-node sizes of the largest planar matching ending at that node.
struct MatchingProfile {
  std::vector<int> left;   ///< indexed by left node 1..m (stored 0-based)
  std::vector<int> right;  ///< indexed by right node 1..m (stored 0-based)
  int longest = 0;         ///< L(F)
};

/// A planar matching of a configuration is an increasing subsequence of its
/// permutation, so this is the longest-increasing-subsequence DP recording
/// the length ending at every position.
MatchingProfile planar_matching_profile(const Permutation& f);

/// Length of the longest strictly increasing subsequence.
int longest_increasing_subsequence(std::span<const int> values);

/// Maximum total multiplicity over chains of cells weakly increasing in both
/// coordinates (largest planar subgraph; edges may share endpoints).
int largest_planar_subgraph_size(const Multigraph& g);

/// Options for the brute-force counters.
struct CountOptions {
  Budget budget{};
  unsigned threads = 1;
};

/// g(n;d): multigraphs whose bar-map configuration has L <= d.
Count count_g_brute(int n, int r, int d, const CountOptions& opts = {});
/// g-hat(n;d): multigraphs whose largest planar subgraph has size <= d.
Count count_g_hat_brute(int n, int r, int d, const CountOptions& opts = {});
/// u_m(d): permutations of [m] with no increasing subsequence longer than d.
Count count_u(int m, int d, const Budget& budget = {});

/// Uniform random r-configuration of [rn].
///
/// Generator: std::mt19937_64 seeded with `seed` (its output sequence is fixed
/// by the C++ standard). Fisher-Yates from the last position down; each index
/// in [0, i] is drawn by rejecting raw 64-bit outputs >= the largest multiple
/// of i+1 and reducing modulo i+1, so no implementation-defined distribution
/// is involved and sequences are reproducible across platforms.
Permutation sample_configuration(int n, int r, std::uint64_t seed);

/// Draws `samples` configurations from one generator stream and returns the
/// histogram of L, indexed 0..rn.
std::vector<std::uint64_t> sample_longest_distribution(int n, int r, std::uint64_t samples,
                                                       std::uint64_t seed);

/// Calls `visit` for every permutation of [m] in lexicographic order.
void for_each_permutation(int m, const std::function<void(const Permutation&)>& visit);

// Text forms. A permutation is its one-line values separated by commas
// (`4,2,3,1`); a multigraph is its rows separated by semicolons (`1,1;1,1`),
// with r read off the first row sum. Parsers throw std::invalid_argument.
Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& pi);
Multigraph parse_multigraph(std::string_view text);
std::string format_multigraph(const Multigraph& g);

}  // namespace lpm
