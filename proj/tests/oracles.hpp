#pragma once

// Slow, deliberately naive reference computations. None of these call into
// the library's own algorithms beyond its value types.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

/// Every n x n matrix over {0..r}, kept when all line sums equal r.
inline std::vector<Matrix> regular_matrices(int n, int r) {
  std::vector<Matrix> out;
  const int cells = n * n;
  std::vector<int> flat(static_cast<std::size_t>(cells), 0);
  while (true) {
    Matrix m(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int c = 0; c < cells; ++c) m[static_cast<std::size_t>(c / n)][static_cast<std::size_t>(c % n)] = flat[static_cast<std::size_t>(c)];
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      int row = 0;
      int col = 0;
      for (int j = 0; j < n; ++j) {
        row += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        col += m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      }
      ok = row == r && col == r;
    }
    if (ok) out.push_back(m);
    int c = cells - 1;
    while (c >= 0 && flat[static_cast<std::size_t>(c)] == r) flat[static_cast<std::size_t>(c--)] = 0;
    if (c < 0) break;
    ++flat[static_cast<std::size_t>(c)];
  }
  return out;
}

/// Lift of a multigraph: the edge (u_a, v_b) of multiplicity t, with i later
/// edges at u_a and j later edges at v_b, pairs u_a^(i+s) with v_b^(j+t-s+1).
inline std::vector<int> lift(const Matrix& m, int r) {
  const int n = static_cast<int>(m.size());
  std::vector<int> f(static_cast<std::size_t>(r * n), 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int t = m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      int i = 0;
      int j = 0;
      for (int b2 = b + 1; b2 < n; ++b2) i += m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b2)];
      for (int a2 = a + 1; a2 < n; ++a2) j += m[static_cast<std::size_t>(a2)][static_cast<std::size_t>(b)];
      for (int s = 1; s <= t; ++s) f[static_cast<std::size_t>(r * a + i + s - 1)] = r * b + j + t - s + 1;
    }
  }
  return f;
}

/// Longest increasing subsequence by trying every subset.
inline int lis_subsets(const std::vector<int>& v) {
  const int m = static_cast<int>(v.size());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    int last = 0;
    int len = 0;
    bool ok = true;
    for (int p = 0; p < m && ok; ++p) {
      if (!(mask >> p & 1u)) continue;
      ok = v[static_cast<std::size_t>(p)] > last;
      last = v[static_cast<std::size_t>(p)];
      ++len;
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

/// Longest increasing subsequence of v ending exactly at index `end`.
inline int lis_ending_at(const std::vector<int>& v, int end) {
  std::vector<int> prefix;
  for (int p = 0; p < end; ++p) {
    if (v[static_cast<std::size_t>(p)] < v[static_cast<std::size_t>(end)]) prefix.push_back(v[static_cast<std::size_t>(p)]);
  }
  return lis_subsets(prefix) + 1;
}

/// Heaviest set of cells that is a chain under the weak product order.
inline int planar_subgraph_subsets(const Matrix& m) {
  std::vector<std::pair<int, int>> cells;
  const int n = static_cast<int>(m.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] > 0) cells.emplace_back(i, j);
    }
  }
  int best = 0;
  const auto k = cells.size();
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    int weight = 0;
    bool chain = true;
    for (std::size_t x = 0; x < k && chain; ++x) {
      if (!(mask >> x & 1u)) continue;
      weight += m[static_cast<std::size_t>(cells[x].first)][static_cast<std::size_t>(cells[x].second)];
      for (std::size_t y = x + 1; y < k && chain; ++y) {
        if (!(mask >> y & 1u)) continue;
        const auto [a, b] = cells[x];
        const auto [c, d] = cells[y];
        chain = (a <= c && b <= d) || (c <= a && d <= b);
      }
    }
    if (chain) best = std::max(best, weight);
  }
  return best;
}

/// u_m(d) through std::next_permutation and an O(m^2) LIS.
inline std::uint64_t permutations_with_lis_at_most(int m, int d) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  std::uint64_t count = 0;
  do {
    std::vector<int> best(v.size(), 1);
    int top = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (v[j] < v[i]) best[i] = std::max(best[i], best[j] + 1);
      }
      top = std::max(top, best[i]);
    }
    if (top <= d) ++count;
  } while (std::next_permutation(v.begin(), v.end()));
  return count;
}

/// Standard tableaux of a shape by the hook length formula.
inline std::uint64_t hook_length(const std::vector<int>& shape) {
  int m = 0;
  for (int x : shape) m += x;
  // m! / prod hooks, computed on doubles then rounded; exact for m <= 15.
  long double value = 1;
  for (int i = 2; i <= m; ++i) value *= i;
  for (std::size_t row = 0; row < shape.size(); ++row) {
    for (int col = 0; col < shape[row]; ++col) {
      int below = 0;
      for (std::size_t r2 = row + 1; r2 < shape.size() && shape[r2] > col; ++r2) ++below;
      value /= static_cast<long double>(shape[row] - col + below);
    }
  }
  return static_cast<std::uint64_t>(value + 0.5L);
}

/// Every sequence of `len` values in [1, d], in lexicographic order.
inline std::vector<std::vector<int>> all_sequences(int len, int d) {
  std::vector<std::vector<int>> out;
  if (d == 0) {
    if (len == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(len), 1);
  while (true) {
    out.push_back(cur);
    int p = len - 1;
    while (p >= 0 && cur[static_cast<std::size_t>(p)] == d) cur[static_cast<std::size_t>(p--)] = 1;
    if (p < 0) break;
    ++cur[static_cast<std::size_t>(p)];
  }
  return out;
}

/// Block rule: blocks of r weakly decreasing (strict = false) or strictly increasing.
inline bool blocks_ok(const std::vector<int>& h, int r, bool strict_increasing) {
  for (std::size_t p = 0; p + 1 < h.size(); ++p) {
    if ((p + 1) % static_cast<std::size_t>(r) == 0) continue;
    if (strict_increasing ? h[p] >= h[p + 1] : h[p] < h[p + 1]) return false;
  }
  return true;
}

/// Sign of a permutation given in one-line form, by counting inversions.
inline int inversion_sign(const std::vector<int>& v) {
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) inv += v[i] > v[j] ? 1 : 0;
  }
  return inv % 2 == 0 ? 1 : -1;
}

/// Signed number of all length-2m walks in Z^d (any step order) from the
/// origin to Toeplitz points, by visiting every walk that can still reach one.
inline long long literal_signed_walks(int m, int d) {
  std::vector<std::vector<int>> targets;
  std::vector<int> signs;
  std::vector<int> pi(static_cast<std::size_t>(d));
  std::iota(pi.begin(), pi.end(), 1);
  do {
    std::vector<int> t(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) t[static_cast<std::size_t>(j)] = j + 1 - pi[static_cast<std::size_t>(j)];
    targets.push_back(t);
    signs.push_back(inversion_sign(pi));
  } while (std::next_permutation(pi.begin(), pi.end()));

  std::vector<int> p(static_cast<std::size_t>(d), 0);
  long long total = 0;
  std::function<void(int)> walk = [&](int left) {
    int nearest = 1 << 30;
    for (const auto& t : targets) {
      int dist = 0;
      for (int j = 0; j < d; ++j) dist += std::abs(t[static_cast<std::size_t>(j)] - p[static_cast<std::size_t>(j)]);
      nearest = std::min(nearest, dist);
    }
    if (nearest > left) return;
    if (left == 0) {
      for (std::size_t k = 0; k < targets.size(); ++k) {
        if (targets[k] == p) total += signs[k];
      }
      return;
    }
    for (int j = 0; j < d; ++j) {
      for (int delta : {1, -1}) {
        p[static_cast<std::size_t>(j)] += delta;
        walk(left - 1);
        p[static_cast<std::size_t>(j)] -= delta;
      }
    }
  };
  if (d > 0) walk(2 * m);
  return total;
}

/// Same signed count, but every walk is split at its midpoint: all (2d)^m
/// half-walks are listed by endpoint and each Toeplitz target t collects
/// sum over midpoints p of halves(p) * halves(t - p).
inline long long midpoint_signed_walks(int m, int d) {
  if (d == 0) return 0;
  std::map<std::vector<int>, long long> halves;
  std::vector<int> p(static_cast<std::size_t>(d), 0);
  std::function<void(int)> grow = [&](int left) {
    if (left == 0) {
      ++halves[p];
      return;
    }
    for (int j = 0; j < d; ++j) {
      for (int delta : {1, -1}) {
        p[static_cast<std::size_t>(j)] += delta;
        grow(left - 1);
        p[static_cast<std::size_t>(j)] -= delta;
      }
    }
  };
  grow(m);
  long long total = 0;
  std::vector<int> pi(static_cast<std::size_t>(d));
  std::iota(pi.begin(), pi.end(), 1);
  do {
    const int sign = inversion_sign(pi);
    for (const auto& [mid, ways] : halves) {
      std::vector<int> rest(static_cast<std::size_t>(d));
      for (int j = 0; j < d; ++j) {
        rest[static_cast<std::size_t>(j)] = j + 1 - pi[static_cast<std::size_t>(j)] - mid[static_cast<std::size_t>(j)];
      }
      auto it = halves.find(rest);
      if (it != halves.end()) total += sign * ways * it->second;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return total;
}

}  // namespace oracle
