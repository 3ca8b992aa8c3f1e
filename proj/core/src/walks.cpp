#include "lpm/walks.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

namespace lpm {

LatticePoint toeplitz_point(const Permutation& pi) {
  LatticePoint p;
  p.coords.resize(static_cast<std::size_t>(pi.size()));
  for (int j = 1; j <= pi.size(); ++j) p.coords[static_cast<std::size_t>(j - 1)] = j - pi(j);
  return p;
}

std::optional<Permutation> toeplitz_preimage(const LatticePoint& p) {
  const int d = p.dim();
  std::vector<int> values(static_cast<std::size_t>(d));
  std::vector<bool> seen(static_cast<std::size_t>(d) + 1, false);
  for (int j = 1; j <= d; ++j) {
    const int v = j - p.coords[static_cast<std::size_t>(j - 1)];
    if (v < 1 || v > d || seen[static_cast<std::size_t>(v)]) return std::nullopt;
    seen[static_cast<std::size_t>(v)] = true;
    values[static_cast<std::size_t>(j - 1)] = v;
  }
  return Permutation(std::move(values));
}

LatticePoint endpoint(const Walk& w) {
  w.validate();
  LatticePoint p;
  p.coords.assign(static_cast<std::size_t>(w.dim), 0);
  for (int s : w.up) ++p.coords[static_cast<std::size_t>(s - 1)];
  for (int s : w.down) --p.coords[static_cast<std::size_t>(s - 1)];
  return p;
}

bool half_in_family(std::span<const int> half, int r, Family family) {
  if (r < 1 || half.size() % static_cast<std::size_t>(r) != 0) return false;
  for (std::size_t p = 0; p + 1 < half.size(); ++p) {
    if ((p + 1) % static_cast<std::size_t>(r) == 0) continue;  // block boundary
    const bool ok = family == Family::w_prime ? half[p] >= half[p + 1] : half[p] < half[p + 1];
    if (!ok) return false;
  }
  return true;
}

bool in_family(const Walk& w, int r, Family family) {
  return w.up.size() == w.down.size() && half_in_family(w.up, r, family) &&
         half_in_family(w.down, r, family);
}

namespace {

using Half = std::vector<int>;

// Step-count vectors packed as mixed-radix integers with radix rn + 1. The
// packing is additive, so concatenating halves adds keys.
class CountKey {
public:
  CountKey(int d, int rn) : d_(d), base_(static_cast<std::uint64_t>(rn) + 1) {
    if (sat_pow(base_, static_cast<unsigned>(d)) == std::numeric_limits<std::uint64_t>::max()) {
      throw ResourceRefused("step-count vectors do not fit a 64-bit key");
    }
    weight_.resize(static_cast<std::size_t>(d));
    std::uint64_t w = 1;
    for (auto& x : weight_) {
      x = w;
      w *= base_;
    }
  }

  std::uint64_t unit(int direction) const { return weight_[static_cast<std::size_t>(direction - 1)]; }

  std::uint64_t of(std::span<const int> half) const {
    std::uint64_t key = 0;
    for (int s : half) key += unit(s);
    return key;
  }

  void decode(std::uint64_t key, std::vector<int>& counts) const {
    counts.resize(static_cast<std::size_t>(d_));
    for (auto& c : counts) {
      c = static_cast<int>(key % base_);
      key /= base_;
    }
  }

private:
  int d_;
  std::uint64_t base_;
  std::vector<std::uint64_t> weight_;
};

using HalfCounts = std::unordered_map<std::uint64_t, Count>;

// Calls visit(half) for every half obeying the family's block rule, in
// lexicographic order.
template <typename Visit>
void generate_halves(int n, int r, int d, Family family, Visit&& visit) {
  const int len = r * n;
  Half cur(static_cast<std::size_t>(len));
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == len) {
      visit(static_cast<const Half&>(cur));
      return;
    }
    for (int v = 1; v <= d; ++v) {
      if (pos % r != 0) {
        const int prev = cur[static_cast<std::size_t>(pos - 1)];
        if (family == Family::w_prime ? v > prev : v <= prev) continue;
      }
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
}

std::uint64_t blocks_per_position(int r, int d, Family family) {
  return family == Family::w_prime
             ? sat_binomial(static_cast<unsigned>(d + r - 1), static_cast<unsigned>(r))
             : sat_binomial(static_cast<unsigned>(d), static_cast<unsigned>(r));
}

HalfCounts half_counts_enumerate(int n, int r, int d, Family family, const CountKey& key,
                                 const Budget& budget) {
  budget.require(sat_pow(blocks_per_position(r, d, family), static_cast<unsigned>(n)),
                 "half-walk enumeration");
  std::unordered_map<std::uint64_t, std::uint64_t> tally;
  generate_halves(n, r, d, family, [&](const Half& h) { ++tally[key.of(h)]; });
  HalfCounts out;
  out.reserve(tally.size());
  for (const auto& [k, c] : tally) out.emplace(k, Count(static_cast<unsigned long>(c)));
  return out;
}

HalfCounts half_counts_dp(int n, int r, int d, Family family, const CountKey& key,
                          const Budget& budget) {
  const auto blocks = blocks_per_position(r, d, family);
  const auto states = sat_binomial(static_cast<unsigned>(r * n + d), static_cast<unsigned>(d));
  budget.require(sat_mul(sat_mul(states, blocks), static_cast<std::uint64_t>(n)), "block DP");

  // One block is a multiset (W') or a set (W-hat') of r directions; its order
  // inside the block is forced, so each contributes exactly one half-walk.
  std::vector<std::uint64_t> block_keys;
  auto rec = [&](auto&& self, int left, int min_dir, std::uint64_t acc) -> void {
    if (left == 0) {
      block_keys.push_back(acc);
      return;
    }
    for (int v = min_dir; v <= d; ++v) {
      self(self, left - 1, family == Family::w_prime ? v : v + 1, acc + key.unit(v));
    }
  };
  rec(rec, r, 1, 0);

  HalfCounts cur{{0, Count(1)}};
  for (int i = 0; i < n; ++i) {
    HalfCounts next;
    for (const auto& [k, ways] : cur) {
      for (auto b : block_keys) next[k + b] += ways;
    }
    cur = std::move(next);
  }
  return cur;
}

HalfCounts half_counts(int n, int r, int d, Family family, Counter counter, const CountKey& key,
                       const Budget& budget) {
  return counter == Counter::enumerate ? half_counts_enumerate(n, r, d, family, key, budget)
                                       : half_counts_dp(n, r, d, family, key, budget);
}

// sum over pi (or the single `only` pi) of sgn(pi) * sum over step-count
// vectors c of up[c + T(pi)] * down[c].
class EndpointJoin {
public:
  EndpointJoin(const HalfCounts& up, int d, int rn, const CountKey& key,
               const Permutation* only)
      : up_(up), d_(d), rn_(rn), key_(key), only_(only),
        used_(static_cast<std::size_t>(d) + 1, false) {}

  void add(std::uint64_t down_key, const Count& down_ways) {
    key_.decode(down_key, down_counts_);
    down_ways_ = &down_ways;
    descend(1, 0, 0);
  }

  Count total() const { return positive_ - negative_; }

private:
  void descend(int j, std::uint64_t up_key, int inversions) {
    if (j > d_) {
      auto it = up_.find(up_key);
      if (it == up_.end()) return;
      auto& acc = inversions % 2 == 0 ? positive_ : negative_;
      mpz_addmul(acc.get_mpz_t(), it->second.get_mpz_t(), down_ways_->get_mpz_t());
      return;
    }
    const int lo = only_ ? (*only_)(j) : 1;
    const int hi = only_ ? (*only_)(j) : d_;
    for (int v = lo; v <= hi; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      // T(pi)_j = j - v, so the positive half needs c_j + j - v steps in direction j.
      const int c = down_counts_[static_cast<std::size_t>(j - 1)] + j - v;
      if (c < 0 || c > rn_) continue;
      int above = 0;
      for (int u = v + 1; u <= d_; ++u) above += used_[static_cast<std::size_t>(u)] ? 1 : 0;
      used_[static_cast<std::size_t>(v)] = true;
      descend(j + 1, up_key + static_cast<std::uint64_t>(c) * key_.unit(j), inversions + above);
      used_[static_cast<std::size_t>(v)] = false;
    }
  }

  const HalfCounts& up_;
  int d_;
  int rn_;
  const CountKey& key_;
  const Permutation* only_;
  std::vector<bool> used_;
  std::vector<int> down_counts_;
  const Count* down_ways_ = nullptr;
  Count positive_ = 0;
  Count negative_ = 0;
};

Count join_halves(const HalfCounts& halves, int d, int rn, const CountKey& key,
                  const Permutation* only, unsigned threads) {
  // Both halves obey the same block rule, so one table serves both sides.
  std::vector<std::pair<std::uint64_t, const Count*>> downs;
  downs.reserve(halves.size());
  for (const auto& [k, ways] : halves) downs.emplace_back(k, &ways);
  std::sort(downs.begin(), downs.end());

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(downs.size() + 1)));
  std::vector<Count> partial(threads);
  auto work = [&](unsigned t) {
    EndpointJoin join(halves, d, rn, key, only);
    for (std::size_t i = t; i < downs.size(); i += threads) join.add(downs[i].first, *downs[i].second);
    partial[t] = join.total();
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  Count total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

void require_sizes(int n, int r, int d) {
  if (n < 1 || r < 1 || d < 0) throw std::invalid_argument("need n, r >= 1 and d >= 0");
}

}  // namespace

void for_each_family_walk(int n, int r, int d, const Permutation& pi, Family family,
                          const std::function<void(const Walk&)>& visit) {
  require_sizes(n, r, d);
  if (pi.size() != d) throw std::invalid_argument("pi must be a permutation of [d]");
  const CountKey key(d, r * n);
  std::vector<Half> halves;
  generate_halves(n, r, d, family, [&](const Half& h) { halves.push_back(h); });
  std::map<std::uint64_t, std::vector<const Half*>> by_counts;
  for (const auto& h : halves) by_counts[key.of(h)].push_back(&h);

  // The down half has c_up - T(pi) steps in each direction.
  const auto target = toeplitz_point(pi);
  for (const auto& up : halves) {
    std::vector<int> counts(static_cast<std::size_t>(d), 0);
    for (int s : up) ++counts[static_cast<std::size_t>(s - 1)];
    std::uint64_t down_key = 0;
    bool feasible = true;
    for (int j = 1; j <= d; ++j) {
      const int c = counts[static_cast<std::size_t>(j - 1)] - target.coords[static_cast<std::size_t>(j - 1)];
      if (c < 0 || c > r * n) {
        feasible = false;
        break;
      }
      down_key += static_cast<std::uint64_t>(c) * key.unit(j);
    }
    if (!feasible) continue;
    auto it = by_counts.find(down_key);
    if (it == by_counts.end()) continue;
    for (const Half* down : it->second) visit(Walk{d, up, *down});
  }
}

std::vector<Walk> enumerate_W_prime(int n, int r, int d, const Permutation& pi) {
  std::vector<Walk> out;
  for_each_family_walk(n, r, d, pi, Family::w_prime, [&](const Walk& w) { out.push_back(w); });
  return out;
}

std::vector<Walk> enumerate_W_hat_prime(int n, int r, int d, const Permutation& pi) {
  std::vector<Walk> out;
  for_each_family_walk(n, r, d, pi, Family::w_hat_prime, [&](const Walk& w) { out.push_back(w); });
  return out;
}

void for_each_family_walk_toeplitz(
    int n, int r, int d, Family family,
    const std::function<void(const Walk&, const Permutation&)>& visit) {
  require_sizes(n, r, d);
  std::vector<Half> halves;
  generate_halves(n, r, d, family, [&](const Half& h) { halves.push_back(h); });
  auto counts_of = [d](const Half& h) {
    std::vector<int> c(static_cast<std::size_t>(d), 0);
    for (int s : h) ++c[static_cast<std::size_t>(s - 1)];
    return c;
  };
  std::map<std::vector<int>, std::vector<const Half*>> by_counts;
  for (const auto& h : halves) by_counts[counts_of(h)].push_back(&h);

  for (const auto& up : halves) {
    const auto cu = counts_of(up);
    for (const auto& [cd, downs] : by_counts) {
      LatticePoint diff;
      diff.coords.resize(static_cast<std::size_t>(d));
      for (std::size_t j = 0; j < diff.coords.size(); ++j) diff.coords[j] = cu[j] - cd[j];
      const auto pi = toeplitz_preimage(diff);
      if (!pi) continue;
      for (const Half* down : downs) visit(Walk{d, up, *down}, *pi);
    }
  }
}

Count family_count(int n, int r, int d, const Permutation& pi, Family family, Counter counter,
                   const SumOptions& opts) {
  require_sizes(n, r, d);
  if (pi.size() != d) throw std::invalid_argument("pi must be a permutation of [d]");
  const CountKey key(d, r * n);
  const auto halves = half_counts(n, r, d, family, counter, key, opts.budget);
  // The join weights by sgn(pi); undo it for a plain count.
  const Count signed_count = join_halves(halves, d, r * n, key, &pi, opts.threads);
  return pi.sign() > 0 ? signed_count : Count(-signed_count);
}

Count signed_sum(int n, int r, int d, Family family, Counter counter, const SumOptions& opts) {
  require_sizes(n, r, d);
  const CountKey key(d, r * n);
  const auto halves = half_counts(n, r, d, family, counter, key, opts.budget);
  opts.budget.require(sat_mul(halves.size(), sat_factorial(static_cast<unsigned>(d))),
                      "endpoint join");
  return join_halves(halves, d, r * n, key, nullptr, opts.threads);
}

Walk phi_map(const Permutation& f, int d) {
  const auto profile = planar_matching_profile(f);
  if (d > 0 && profile.longest > d) {
    throw std::invalid_argument("configuration has a planar matching larger than d");
  }
  return Walk{d > 0 ? d : profile.longest, profile.left, profile.right};
}

QuasiConfiguration crossing_quasi_config(const Walk& w) {
  w.validate();
  if (w.up.size() != w.down.size()) {
    throw std::invalid_argument("walk needs as many positive as negative steps");
  }
  const int m = static_cast<int>(w.up.size());
  QuasiConfiguration out(m);
  for (int k = 1; k <= w.dim; ++k) {
    std::vector<int> a;
    std::vector<int> b;
    for (int u = 1; u <= m; ++u) {
      if (w.up[static_cast<std::size_t>(u - 1)] == k) a.push_back(u);
      if (w.down[static_cast<std::size_t>(u - 1)] == k) b.push_back(u);
    }
    // Initial segment of A against terminal segment of B, first with last.
    const std::size_t size = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < size; ++i) out.pair(a[i], b[b.size() - 1 - i]);
  }
  return out;
}

KLProfile k_l_profile(const Walk& w) {
  KLProfile out;
  std::vector<int> seen(static_cast<std::size_t>(w.dim) + 1, 0);
  for (int a : w.up) {
    ++seen[static_cast<std::size_t>(a)];
    out.k.push_back(seen[static_cast<std::size_t>(a)]);
    out.l.push_back(seen[static_cast<std::size_t>(a - 1)]);
  }
  return out;
}

int position_from_end(std::span<const int> half, int value, int count) {
  if (count <= 0) return static_cast<int>(half.size()) + 1;
  int seen = 0;
  for (std::size_t p = half.size(); p-- > 0;) {
    if (half[p] == value && ++seen == count) return static_cast<int>(p) + 1;
  }
  return 0;
}

std::optional<int> first_condition_C_violation(const Walk& w) {
  const auto kl = k_l_profile(w);
  for (std::size_t u = 0; u < w.up.size(); ++u) {
    const int a = w.up[u];
    if (a <= 1) continue;
    if (position_from_end(w.down, a - 1, kl.l[u]) >= position_from_end(w.down, a, kl.k[u])) {
      return static_cast<int>(u) + 1;
    }
  }
  return std::nullopt;
}

bool check_condition_C(const Walk& w) { return !first_condition_C_violation(w); }

namespace {

// Inside one block, rewrites the positions in `positions` holding `high` or
// `high - 1` so that the two counts are swapped; `high_first` puts the larger
// value at the leading positions, otherwise at the trailing ones.
void swap_block_counts(std::vector<int>& seq, const std::vector<std::size_t>& positions, int high,
                       bool high_first) {
  std::vector<std::size_t> sel;
  for (auto p : positions) {
    if (seq[p] == high || seq[p] == high - 1) sel.push_back(p);
  }
  const auto highs = static_cast<std::size_t>(
      std::count_if(sel.begin(), sel.end(), [&](std::size_t p) { return seq[p] == high; }));
  const std::size_t lows = sel.size() - highs;
  // After the swap there are `lows` copies of `high`.
  for (std::size_t i = 0; i < sel.size(); ++i) {
    const bool is_high = high_first ? i < lows : i >= sel.size() - lows;
    seq[sel[i]] = is_high ? high : high - 1;
  }
}

int blocks_of(const Walk& w, int r) {
  if (r < 1 || w.up.size() != w.down.size() || w.up.size() % static_cast<std::size_t>(r) != 0) {
    throw std::invalid_argument("walk halves must both have r*n steps");
  }
  return static_cast<int>(w.up.size()) / r;
}

}  // namespace

Walk involution_second(const Walk& w, int r) {
  w.validate();
  const int n = blocks_of(w, r);
  if (!in_family(w, r, Family::w_prime)) throw std::invalid_argument("walk is not in W'");
  if (!toeplitz_preimage(endpoint(w))) {
    throw std::invalid_argument("walk does not end at a Toeplitz point");
  }
  const auto violation = first_condition_C_violation(w);
  if (!violation) throw std::invalid_argument("walk satisfies condition (C)");

  const int u_bar = *violation;
  const int high = w.up[static_cast<std::size_t>(u_bar - 1)];
  const auto kl = k_l_profile(w);
  const int v_bar = position_from_end(w.down, high - 1, kl.l[static_cast<std::size_t>(u_bar - 1)]);

  Walk out = w;
  for (int i = 0; i < n; ++i) {
    std::vector<std::size_t> after_u;
    std::vector<std::size_t> before_v;
    for (int s = 0; s < r; ++s) {
      const int pos = r * i + s + 1;
      if (pos > u_bar) after_u.push_back(static_cast<std::size_t>(pos - 1));
      if (pos < v_bar) before_v.push_back(static_cast<std::size_t>(pos - 1));
    }
    swap_block_counts(out.up, after_u, high, true);
    swap_block_counts(out.down, before_v, high, true);
  }
  return out;
}

bool stays_in_dominance_region(const Walk& w) {
  w.validate();
  std::vector<int> p(static_cast<std::size_t>(w.dim), 0);
  auto ok = [&p] {
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
      if (p[j] < p[j + 1]) return false;
    }
    return true;
  };
  for (int s : w.up) {
    ++p[static_cast<std::size_t>(s - 1)];
    if (!ok()) return false;
  }
  for (int s : w.down) {
    --p[static_cast<std::size_t>(s - 1)];
    if (!ok()) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> first_strict_region_exit(const Walk& w) {
  w.validate();
  std::vector<int> p(static_cast<std::size_t>(w.dim));
  for (int j = 0; j < w.dim; ++j) p[static_cast<std::size_t>(j)] = w.dim - 1 - j;
  int t = 0;
  auto tie = [&p]() -> int {
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
      if (p[j] == p[j + 1]) return static_cast<int>(j) + 1;
    }
    return 0;
  };
  for (int s : w.up) {
    ++t;
    ++p[static_cast<std::size_t>(s - 1)];
    if (int j = tie()) return std::pair{t, j};
  }
  for (int s : w.down) {
    ++t;
    --p[static_cast<std::size_t>(s - 1)];
    if (int j = tie()) return std::pair{t, j};
  }
  return std::nullopt;
}

Walk reverse_negative(const Walk& w) {
  return Walk{w.dim, w.up, {w.down.rbegin(), w.down.rend()}};
}

bool in_first_involution_domain(const Walk& w, int r) {
  if (r < 1 || w.up.size() != w.down.size() || w.up.size() % static_cast<std::size_t>(r) != 0) {
    return false;
  }
  const Walk untilded = reverse_negative(w);
  return in_family(untilded, r, Family::w_prime) && toeplitz_preimage(endpoint(w)).has_value() &&
         first_strict_region_exit(w).has_value();
}

Walk involution_first(const Walk& w, int r) {
  w.validate();
  const int n = blocks_of(w, r);
  if (!in_first_involution_domain(w, r)) {
    throw std::invalid_argument("walk is not a W-tilde walk leaving the strict region");
  }
  const auto [t, j] = *first_strict_region_exit(w);
  const int m = r * n;

  std::vector<int> steps = w.up;
  steps.insert(steps.end(), w.down.begin(), w.down.end());
  for (int i = 0; i < 2 * n; ++i) {
    std::vector<std::size_t> changed;
    for (int s = 0; s < r; ++s) {
      const int pos = r * i + s + 1;
      if (pos > t) changed.push_back(static_cast<std::size_t>(pos - 1));
    }
    // Positive blocks keep j+1 leading, negative (reversed) blocks trailing.
    swap_block_counts(steps, changed, j + 1, i < n);
  }
  Walk out{w.dim, {}, {}};
  out.up.assign(steps.begin(), steps.begin() + m);
  out.down.assign(steps.begin() + m, steps.end());
  return out;
}

namespace {

class ConditionCSearch {
public:
  ConditionCSearch(int n, int r, int d,
                   const std::function<void(const Walk&, const Permutation&)>& visit)
      : r_(r), d_(d), m_(r * n), visit_(visit),
        up_(static_cast<std::size_t>(m_)), down_(static_cast<std::size_t>(m_)),
        up_counts_(static_cast<std::size_t>(d) + 2, 0), pi_(static_cast<std::size_t>(d)),
        used_(static_cast<std::size_t>(d) + 1, false) {}

  void run() { grow_up(0); }

private:
  void grow_up(int pos) {
    if (pos == m_) {
      prepare_down();
      choose_pi(1);
      return;
    }
    for (int v = 1; v <= d_; ++v) {
      if (pos % r_ != 0 && v > up_[static_cast<std::size_t>(pos - 1)]) continue;
      // (C) needs l(u) > 0 whenever a_u > 1.
      if (v > 1 && up_counts_[static_cast<std::size_t>(v - 1)] == 0) continue;
      up_[static_cast<std::size_t>(pos)] = v;
      ++up_counts_[static_cast<std::size_t>(v)];
      grow_up(pos + 1);
      --up_counts_[static_cast<std::size_t>(v)];
    }
  }

  void prepare_down() {
    // need_[v][c]: the c-th-to-last v-1 may only be placed once at least
    // need_[v][c] copies of v already sit after it.
    need_.assign(static_cast<std::size_t>(d_) + 2, std::vector<int>(static_cast<std::size_t>(m_) + 2, 0));
    const auto kl = k_l_profile(Walk{d_, up_, {}});
    for (std::size_t u = 0; u < up_.size(); ++u) {
      const int a = up_[u];
      if (a > 1) {
        auto& slot = need_[static_cast<std::size_t>(a)][static_cast<std::size_t>(kl.l[u])];
        slot = std::max(slot, kl.k[u]);
      }
    }
    for (auto& row : need_) {
      for (std::size_t c = 1; c < row.size(); ++c) row[c] = std::max(row[c], row[c - 1]);
    }
  }

  void choose_pi(int j) {
    if (j > d_) {
      down_left_.assign(static_cast<std::size_t>(d_) + 2, 0);
      for (int i = 1; i <= d_; ++i) {
        down_left_[static_cast<std::size_t>(i)] =
            up_counts_[static_cast<std::size_t>(i)] - i + pi_[static_cast<std::size_t>(i - 1)];
      }
      placed_.assign(static_cast<std::size_t>(d_) + 2, 0);
      grow_down(m_ - 1);
      return;
    }
    for (int v = 1; v <= d_; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      const int c = up_counts_[static_cast<std::size_t>(j)] - j + v;
      if (c < 0) continue;
      // The k(u)-th-to-last a_u must exist for the largest k(u), i.e. every copy.
      if (j > 1 && c < up_counts_[static_cast<std::size_t>(j)]) continue;
      used_[static_cast<std::size_t>(v)] = true;
      pi_[static_cast<std::size_t>(j - 1)] = v;
      choose_pi(j + 1);
      used_[static_cast<std::size_t>(v)] = false;
    }
  }

  // Negative steps are placed from the last position backwards so the
  // "c-th-to-last" counts are known when each step is chosen.
  void grow_down(int pos) {
    if (pos < 0) {
      visit_(Walk{d_, up_, down_}, Permutation(pi_));
      return;
    }
    for (int v = 1; v <= d_; ++v) {
      if (down_left_[static_cast<std::size_t>(v)] == 0) continue;
      if ((pos + 1) % r_ != 0 && v < down_[static_cast<std::size_t>(pos + 1)]) continue;
      if (v + 1 <= d_ &&
          placed_[static_cast<std::size_t>(v + 1)] <
              need_[static_cast<std::size_t>(v + 1)][static_cast<std::size_t>(placed_[static_cast<std::size_t>(v)] + 1)]) {
        continue;
      }
      down_[static_cast<std::size_t>(pos)] = v;
      --down_left_[static_cast<std::size_t>(v)];
      ++placed_[static_cast<std::size_t>(v)];
      grow_down(pos - 1);
      --placed_[static_cast<std::size_t>(v)];
      ++down_left_[static_cast<std::size_t>(v)];
    }
  }

  int r_;
  int d_;
  int m_;
  const std::function<void(const Walk&, const Permutation&)>& visit_;
  std::vector<int> up_;
  std::vector<int> down_;
  std::vector<int> up_counts_;
  std::vector<int> pi_;
  std::vector<bool> used_;
  std::vector<std::vector<int>> need_;
  std::vector<int> down_left_;
  std::vector<int> placed_;
};

}  // namespace

void for_each_condition_C_walk(int n, int r, int d,
                               const std::function<void(const Walk&, const Permutation&)>& visit) {
  require_sizes(n, r, d);
  ConditionCSearch(n, r, d, visit).run();
}

void for_each_region_closed_tilde_walk(int n, int r, int d,
                                       const std::function<void(const Walk&)>& visit) {
  require_sizes(n, r, d);
  const int m = r * n;
  std::vector<int> steps(static_cast<std::size_t>(2 * m));
  std::vector<int> height(static_cast<std::size_t>(d) + 2, 0);
  height[0] = std::numeric_limits<int>::max();
  auto h = [&](int j) -> int& { return height[static_cast<std::size_t>(j)]; };

  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == 2 * m) {
      for (int j = 1; j <= d; ++j) {
        if (h(j) != 0) return;
      }
      visit(Walk{d, {steps.begin(), steps.begin() + m}, {steps.begin() + m, steps.end()}});
      return;
    }
    const bool positive = pos < m;
    const int in_block = (positive ? pos : pos - m) % r;
    for (int v = 1; v <= d; ++v) {
      if (in_block != 0) {
        const int prev = steps[static_cast<std::size_t>(pos - 1)];
        // W-tilde: positive blocks weakly decrease, reversed negative blocks weakly increase.
        if (positive ? v > prev : v < prev) continue;
      }
      if (positive) {
        if (v > 1 && h(v) + 1 > h(v - 1)) continue;
        ++h(v);
      } else {
        if (h(v) == 0 || (v < d && h(v) - 1 < h(v + 1))) continue;
        --h(v);
      }
      steps[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1);
      positive ? --h(v) : ++h(v);
    }
  };
  rec(rec, 0);
}

}  // namespace lpm
