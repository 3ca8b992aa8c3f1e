#include "lpm/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

namespace lpm {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int m = size();
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > m || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of [" + std::to_string(m) + "]");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(values_.size());
  for (int pos = 1; pos <= size(); ++pos) inv[static_cast<std::size_t>((*this)(pos) - 1)] = pos;
  return Permutation(std::move(inv));
}

int Permutation::sign() const {
  // Parity from the cycle decomposition: each cycle of length k has k-1 transpositions.
  std::vector<bool> seen(values_.size(), false);
  int transpositions = 0;
  for (std::size_t start = 0; start < values_.size(); ++start) {
    if (seen[start]) continue;
    std::size_t j = start;
    int len = 0;
    while (!seen[j]) {
      seen[j] = true;
      j = static_cast<std::size_t>(values_[j] - 1);
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0 ? 1 : -1;
}

Multigraph::Multigraph(int n, int r, std::vector<int> row_major)
    : n_(n), r_(r), mult_(std::move(row_major)) {
  if (n < 1 || r < 1) throw std::invalid_argument("multigraph needs n >= 1 and r >= 1");
  if (mult_.size() != static_cast<std::size_t>(n * n)) {
    throw std::invalid_argument("multiplicity matrix must be n x n");
  }
  for (int i = 1; i <= n; ++i) {
    int row = 0;
    int col = 0;
    for (int j = 1; j <= n; ++j) {
      if ((*this)(i, j) < 0 || (*this)(j, i) < 0) {
        throw std::invalid_argument("negative multiplicity");
      }
      row += (*this)(i, j);
      col += (*this)(j, i);
    }
    if (row != r || col != r) {
      throw std::invalid_argument("row and column sums must all equal r = " + std::to_string(r));
    }
  }
}

std::optional<int> QuasiConfiguration::partner(int left) const {
  const int p = partner_.at(static_cast<std::size_t>(left - 1));
  if (p == 0) return std::nullopt;
  return p;
}

void QuasiConfiguration::pair(int left, int right) {
  if (left < 1 || left > size() || right < 1 || right > size()) {
    throw std::invalid_argument("node out of range");
  }
  if (partner_[static_cast<std::size_t>(left - 1)] != 0 ||
      std::find(partner_.begin(), partner_.end(), right) != partner_.end()) {
    throw std::invalid_argument("node already paired");
  }
  partner_[static_cast<std::size_t>(left - 1)] = right;
}

bool QuasiConfiguration::is_full() const {
  return std::find(partner_.begin(), partner_.end(), 0) == partner_.end();
}

Permutation QuasiConfiguration::to_permutation() const {
  if (!is_full()) throw std::logic_error("quasi-configuration is not a full configuration");
  return Permutation(partner_);
}

std::vector<std::pair<int, int>> QuasiConfiguration::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 1; u <= size(); ++u) {
    if (auto v = partner(u)) out.emplace_back(u, *v);
  }
  return out;
}

std::vector<int> QuasiConfiguration::unmatched_left() const {
  std::vector<int> out;
  for (int u = 1; u <= size(); ++u) {
    if (!partner(u)) out.push_back(u);
  }
  return out;
}

std::vector<int> QuasiConfiguration::unmatched_right() const {
  std::vector<bool> used(partner_.size() + 1, false);
  for (int p : partner_) used[static_cast<std::size_t>(p)] = true;
  std::vector<int> out;
  for (int v = 1; v <= size(); ++v) {
    if (!used[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

namespace {

// Row-by-row fill, values ascending so the flattened order is lexicographic.
// The last cell of each row is forced by the row remainder and the last row
// is forced by the column remainders.
class MultigraphWalker {
public:
  MultigraphWalker(int n, int r, const std::function<void(const Multigraph&)>& visit)
      : n_(n), r_(r), visit_(visit), cells_(static_cast<std::size_t>(n * n), 0),
        col_left_(static_cast<std::size_t>(n), r) {}

  void run() { fill(0, 0, r_); }

private:
  void fill(int i, int j, int row_left) {
    if (i == n_ - 1) {
      // Forced: the last row takes whatever each column still needs.
      int total = 0;
      for (int c = 0; c < n_; ++c) total += col_left_[static_cast<std::size_t>(c)];
      if (total != r_) return;
      for (int c = 0; c < n_; ++c) cells_[cell(i, c)] = col_left_[static_cast<std::size_t>(c)];
      visit_(Multigraph(n_, r_, cells_));
      for (int c = 0; c < n_; ++c) cells_[cell(i, c)] = 0;
      return;
    }
    auto& col = col_left_[static_cast<std::size_t>(j)];
    if (j == n_ - 1) {
      if (row_left > col) return;
      cells_[cell(i, j)] = row_left;
      col -= row_left;
      fill(i + 1, 0, r_);
      col += row_left;
      cells_[cell(i, j)] = 0;
      return;
    }
    // Remaining columns of this row must be able to absorb what is left.
    int capacity_after = 0;
    for (int c = j + 1; c < n_; ++c) capacity_after += col_left_[static_cast<std::size_t>(c)];
    const int lo = std::max(0, row_left - capacity_after);
    const int hi = std::min(row_left, col);
    for (int v = lo; v <= hi; ++v) {
      cells_[cell(i, j)] = v;
      col -= v;
      fill(i, j + 1, row_left - v);
      col += v;
    }
    cells_[cell(i, j)] = 0;
  }

  std::size_t cell(int i, int j) const { return static_cast<std::size_t>(i * n_ + j); }

  int n_;
  int r_;
  const std::function<void(const Multigraph&)>& visit_;
  std::vector<int> cells_;
  std::vector<int> col_left_;
};

std::uint64_t multigraph_estimate(int n, int r) {
  // Every multigraph lifts injectively to a configuration of [rn].
  const auto by_configs = sat_factorial(static_cast<unsigned>(r * n));
  const auto by_cells = sat_pow(static_cast<std::uint64_t>(r) + 1,
                                static_cast<unsigned>((n - 1) * (n - 1)));
  return sat_mul(std::min(by_configs, by_cells), static_cast<std::uint64_t>(n * n));
}

template <typename Pred>
Count count_multigraphs_where(int n, int r, const CountOptions& opts, Pred pred) {
  if (n < 1 || r < 1) throw std::invalid_argument("n and r must be positive");
  opts.budget.require(multigraph_estimate(n, r), "multigraph enumeration");
  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    std::uint64_t hits = 0;
    for_each_multigraph(n, r, [&](const Multigraph& g) { hits += pred(g) ? 1 : 0; });
    return Count(static_cast<unsigned long>(hits));
  }
  const auto all = enumerate_multigraphs(n, r);
  std::vector<std::uint64_t> partial(threads, 0);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t k = t; k < all.size(); k += threads) partial[t] += pred(all[k]) ? 1 : 0;
      });
    }
  }
  Count total = 0;
  for (auto p : partial) total += static_cast<unsigned long>(p);
  return total;
}

}  // namespace

void for_each_multigraph(int n, int r, const std::function<void(const Multigraph&)>& visit) {
  if (n < 1 || r < 1) throw std::invalid_argument("n and r must be positive");
  MultigraphWalker(n, r, visit).run();
}

std::vector<Multigraph> enumerate_multigraphs(int n, int r) {
  std::vector<Multigraph> out;
  for_each_multigraph(n, r, [&](const Multigraph& g) { out.push_back(g); });
  return out;
}

Permutation bar_map(const Multigraph& g) {
  const int n = g.n();
  const int r = g.r();
  std::vector<int> values(static_cast<std::size_t>(r * n), 0);
  for (int u = 1; u <= n; ++u) {
    for (int v = 1; v <= n; ++v) {
      const int t = g(u, v);
      if (t == 0) continue;
      int later_right = 0;  // edges (u, v') with v < v'
      for (int v2 = v + 1; v2 <= n; ++v2) later_right += g(u, v2);
      int later_left = 0;  // edges (u', v) with u < u'
      for (int u2 = u + 1; u2 <= n; ++u2) later_left += g(u2, v);
      for (int s = 1; s <= t; ++s) {
        const int left = r * (u - 1) + later_right + s;
        const int right = r * (v - 1) + later_left + t - s + 1;
        values[static_cast<std::size_t>(left - 1)] = right;
      }
    }
  }
  return Permutation(std::move(values));
}

Multigraph project(const Permutation& f, int n, int r) {
  if (f.size() != r * n) throw std::invalid_argument("configuration size must be r*n");
  std::vector<int> mult(static_cast<std::size_t>(n * n), 0);
  for (int pos = 1; pos <= f.size(); ++pos) {
    const int u = (pos - 1) / r;
    const int v = (f(pos) - 1) / r;
    ++mult[static_cast<std::size_t>(u * n + v)];
  }
  return Multigraph(n, r, std::move(mult));
}

MatchingProfile planar_matching_profile(const Permutation& f) {
  // Patience sorting: tails[k] is the smallest value ending an increasing
  // run of length k+1; the insertion index is the run length ending here.
  MatchingProfile out;
  const auto m = static_cast<std::size_t>(f.size());
  out.left.resize(m);
  out.right.resize(m);
  std::vector<int> tails;
  for (std::size_t pos = 0; pos < m; ++pos) {
    const int x = f.values()[pos];
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    const auto len = static_cast<int>(it - tails.begin()) + 1;
    if (it == tails.end()) {
      tails.push_back(x);
    } else {
      *it = x;
    }
    out.left[pos] = len;
    out.right[static_cast<std::size_t>(x - 1)] = len;
  }
  out.longest = static_cast<int>(tails.size());
  return out;
}

int longest_increasing_subsequence(std::span<const int> values) {
  std::vector<int> tails;
  for (int x : values) {
    auto it = std::lower_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) {
      tails.push_back(x);
    } else {
      *it = x;
    }
  }
  return static_cast<int>(tails.size());
}

int largest_planar_subgraph_size(const Multigraph& g) {
  const int n = g.n();
  // best[i][j]: heaviest weakly increasing chain ending at cell (i, j).
  std::vector<int> best(static_cast<std::size_t>((n + 1) * (n + 1)), 0);
  auto at = [&](int i, int j) -> int& { return best[static_cast<std::size_t>(i * (n + 1) + j)]; };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) at(i, j) = g(i, j) + std::max(at(i - 1, j), at(i, j - 1));
  }
  return at(n, n);
}

Count count_g_brute(int n, int r, int d, const CountOptions& opts) {
  return count_multigraphs_where(n, r, opts, [d](const Multigraph& g) {
    return planar_matching_profile(bar_map(g)).longest <= d;
  });
}

Count count_g_hat_brute(int n, int r, int d, const CountOptions& opts) {
  return count_multigraphs_where(
      n, r, opts, [d](const Multigraph& g) { return largest_planar_subgraph_size(g) <= d; });
}

void for_each_permutation(int m, const std::function<void(const Permutation&)>& visit) {
  if (m < 0) throw std::invalid_argument("m must be nonnegative");
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  do {
    visit(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

Count count_u(int m, int d, const Budget& budget) {
  if (m < 0 || d < 0) throw std::invalid_argument("m and d must be nonnegative");
  budget.require(sat_factorial(static_cast<unsigned>(m)), "permutation enumeration");
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  std::uint64_t hits = 0;
  do {
    if (longest_increasing_subsequence(v) <= d) ++hits;
  } while (std::next_permutation(v.begin(), v.end()));
  return Count(static_cast<unsigned long>(hits));
}

namespace {

std::uint64_t bounded_draw(std::mt19937_64& gen, std::uint64_t bound) {
  // Uniform on [0, bound) by rejection of the incomplete top range.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = gen();
  while (x >= limit) x = gen();
  return x % bound;
}

Permutation shuffle_identity(int m, std::mt19937_64& gen) {
  std::vector<int> v(static_cast<std::size_t>(m));
  std::iota(v.begin(), v.end(), 1);
  for (std::size_t i = v.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(bounded_draw(gen, i));
    std::swap(v[i - 1], v[j]);
  }
  return Permutation(std::move(v));
}

}  // namespace

Permutation sample_configuration(int n, int r, std::uint64_t seed) {
  if (n < 1 || r < 1) throw std::invalid_argument("n and r must be positive");
  std::mt19937_64 gen(seed);
  return shuffle_identity(r * n, gen);
}

std::vector<std::uint64_t> sample_longest_distribution(int n, int r, std::uint64_t samples,
                                                       std::uint64_t seed) {
  if (n < 1 || r < 1) throw std::invalid_argument("n and r must be positive");
  std::mt19937_64 gen(seed);
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(r * n) + 1, 0);
  for (std::uint64_t s = 0; s < samples; ++s) {
    const auto f = shuffle_identity(r * n, gen);
    ++hist[static_cast<std::size_t>(longest_increasing_subsequence(f.values()))];
  }
  return hist;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, char sep) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = std::min(text.find(sep, pos), text.size());
    auto tok = text.substr(pos, next - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("bad integer '" + std::string(tok) + "'");
    }
    out.push_back(v);
    pos = next + 1;
  }
  return out;
}

}  // namespace

Permutation parse_permutation(std::string_view text) { return Permutation(parse_int_list(text, ',')); }

std::string format_permutation(const Permutation& pi) {
  std::string out;
  for (int i = 1; i <= pi.size(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(pi(i));
  }
  return out;
}

Multigraph parse_multigraph(std::string_view text) {
  std::vector<int> cells;
  std::size_t rows = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto next = std::min(text.find(';', pos), text.size());
    const auto row = parse_int_list(text.substr(pos, next - pos), ',');
    cells.insert(cells.end(), row.begin(), row.end());
    ++rows;
    pos = next + 1;
  }
  if (cells.size() != rows * rows) throw std::invalid_argument("multigraph rows must form a square");
  int r = 0;
  for (std::size_t j = 0; j < rows; ++j) r += cells[j];
  if (r < 1) throw std::invalid_argument("multigraph must have positive degree");
  return Multigraph(static_cast<int>(rows), r, std::move(cells));
}

std::string format_multigraph(const Multigraph& g) {
  std::string out;
  for (int i = 1; i <= g.n(); ++i) {
    if (i > 1) out += ';';
    for (int j = 1; j <= g.n(); ++j) {
      if (j > 1) out += ',';
      out += std::to_string(g(i, j));
    }
  }
  return out;
}

}  // namespace lpm
