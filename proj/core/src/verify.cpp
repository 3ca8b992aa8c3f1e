#include "lpm/verify.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "lpm/combinatorics.hpp"
#include "lpm/series.hpp"
#include "lpm/tableau.hpp"
#include "lpm/walks.hpp"

namespace lpm {

std::string to_json(const VerificationReport& report, bool with_timing, int indent) {
  nlohmann::ordered_json j;
  j["identity"] = report.identity;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.params) j["params"][name] = value;
  j["methods"] = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.methods) j["methods"][name] = value;
  j["pass"] = report.pass;
  if (report.witness) j["witness"] = *report.witness;
  if (with_timing) j["elapsed_ms"] = std::round(report.elapsed_ms * 1000.0) / 1000.0;
  return j.dump(indent);
}

namespace {

class Stopwatch {
public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_nrd(int n, int r, int d) {
  if (n < 1 || r < 1 || d < 0) throw std::invalid_argument("need n >= 1, r >= 1, d >= 0");
}

// Fills methods from (name, value) pairs and passes iff all values agree.
void settle_counts(VerificationReport& rep, const std::vector<std::pair<std::string, Count>>& values) {
  rep.pass = true;
  for (const auto& [name, value] : values) {
    rep.methods.emplace_back(name, to_decimal(value));
    if (rep.pass && value != values.front().second) {
      rep.pass = false;
      rep.witness = name + " = " + to_decimal(value) + " differs from " + values.front().first +
                    " = " + to_decimal(values.front().second);
    }
  }
}

VerificationReport verify_family(const char* identity, int n, int r, int d, bool subgraph,
                                 const VerifyOptions& opts) {
  require_nrd(n, r, d);
  Stopwatch clock;
  VerificationReport rep;
  rep.identity = identity;
  rep.params = {{"n", n}, {"r", r}, {"d", d}};
  const CountOptions copts{opts.budget, opts.threads};
  const SumOptions sopts{opts.budget, opts.threads};
  const auto family = subgraph ? Family::w_hat_prime : Family::w_prime;
  const auto condition = subgraph ? RowCondition::weakly_below : RowCondition::strictly_above;
  settle_counts(rep, {
                         {"brute", subgraph ? count_g_hat_brute(n, r, d, copts) : count_g_brute(n, r, d, copts)},
                         {"tableaux", count_pairs_with_condition(n, r, d, condition)},
                         {"walks-enum", signed_sum(n, r, d, family, Counter::enumerate, sopts)},
                         {"walks-dp", signed_sum(n, r, d, family, Counter::dp, sopts)},
                     });
  rep.elapsed_ms = clock.ms();
  return rep;
}

}  // namespace

VerificationReport verify_theorem1(int n, int r, int d, const VerifyOptions& opts) {
  return verify_family("theorem1", n, r, d, false, opts);
}

VerificationReport verify_plk(int n, int r, int d, const VerifyOptions& opts) {
  return verify_family("plk", n, r, d, true, opts);
}

VerificationReport verify_mot(int m, int d, const VerifyOptions& opts) {
  if (m < 1 || d < 0) throw std::invalid_argument("need m >= 1 and d >= 0");
  Stopwatch clock;
  VerificationReport rep;
  rep.identity = "mot";
  rep.params = {{"m", m}, {"d", d}};

  // Unrestricted walks of length 2m, counted per endpoint.
  const int len = 2 * m;
  opts.budget.require(sat_mul(sat_pow(static_cast<std::uint64_t>(2 * len + 1), static_cast<unsigned>(d)),
                              static_cast<std::uint64_t>(len) * static_cast<std::uint64_t>(2 * d)),
                      "lattice walk DP");
  std::map<std::vector<int>, Count> layer{{std::vector<int>(static_cast<std::size_t>(d), 0), Count(1)}};
  for (int step = 0; step < len; ++step) {
    std::map<std::vector<int>, Count> next;
    for (const auto& [point, ways] : layer) {
      auto p = point;
      for (std::size_t j = 0; j < p.size(); ++j) {
        for (int delta : {1, -1}) {
          p[j] += delta;
          next[p] += ways;
          p[j] -= delta;
        }
      }
    }
    layer = std::move(next);
  }
  Count lattice = 0;
  if (d == 0) {
    lattice = 0;  // no steps exist in Z^0
  } else {
    for_each_permutation(d, [&](const Permutation& pi) {
      auto it = layer.find(toeplitz_point(pi).coords);
      if (it == layer.end()) return;
      if (pi.sign() > 0) lattice += it->second;
      else lattice -= it->second;
    });
  }

  const Count central = binomial(static_cast<unsigned>(len), static_cast<unsigned>(m));
  settle_counts(rep, {
                         {"lattice-dp", lattice},
                         {"binomial-permutations", central * count_u(m, d, opts.budget)},
                         {"binomial-representatives",
                          central * signed_sum(m, 1, d, Family::w_prime, Counter::dp,
                                               SumOptions{opts.budget, opts.threads})},
                     });
  rep.elapsed_ms = clock.ms();
  return rep;
}

VerificationReport gessel_check(int d, int max_degree, const VerifyOptions& opts) {
  if (d < 1 || max_degree < 0) throw std::invalid_argument("need d >= 1 and M >= 0");
  Stopwatch clock;
  VerificationReport rep;
  rep.identity = "gessel";
  rep.params = {{"d", d}, {"M", max_degree}};

  std::vector<std::vector<RationalSeries>> matrix;
  for (int i = 0; i < d; ++i) {
    auto& row = matrix.emplace_back();
    for (int j = 0; j < d; ++j) row.push_back(bessel_I_series(std::abs(i - j), max_degree));
  }
  const auto det = determinant(matrix);

  std::string det_text;
  std::string perm_text;
  rep.pass = true;
  for (int k = 0; k <= max_degree; ++k) {
    const Rational got = det.coefficient(k);
    if (k % 2 == 1) {
      if (got != 0 && rep.pass) {
        rep.pass = false;
        rep.witness = "coefficient of x^" + std::to_string(k) + " is " + to_string(got) + ", expected 0";
      }
      continue;
    }
    const int m = k / 2;
    const Count fact = factorial(static_cast<unsigned>(m));
    Rational want(count_u(m, d, opts.budget), fact * fact);
    want.canonicalize();
    if (!det_text.empty()) {
      det_text += ',';
      perm_text += ',';
    }
    det_text += to_string(got);
    perm_text += to_string(want);
    if (got != want && rep.pass) {
      rep.pass = false;
      rep.witness = "coefficient of x^" + std::to_string(k) + ": determinant " + to_string(got) +
                    ", permutations " + to_string(want);
    }
  }
  rep.methods = {{"determinant", det_text}, {"permutations", perm_text}};
  rep.elapsed_ms = clock.ms();
  return rep;
}

namespace {

std::uint64_t family_walk_estimate(int n, int r, int d) {
  const auto blocks = sat_binomial(static_cast<unsigned>(d + r - 1), static_cast<unsigned>(r));
  return sat_pow(blocks, static_cast<unsigned>(2 * n));
}

std::optional<Permutation> endpoint_permutation(const Walk& w) {
  return toeplitz_preimage(endpoint(w));
}

}  // namespace

VerificationReport audit_involution(int n, int r, int d, Involution which, const VerifyOptions& opts) {
  const auto rho = which == Involution::first
                       ? std::function<Walk(const Walk&)>([r](const Walk& w) { return involution_first(w, r); })
                       : std::function<Walk(const Walk&)>([r](const Walk& w) { return involution_second(w, r); });
  return audit_involution_with(n, r, d, which, rho, opts);
}

VerificationReport audit_involution_with(int n, int r, int d, Involution which,
                                         const std::function<Walk(const Walk&)>& rho,
                                         const VerifyOptions& opts) {
  require_nrd(n, r, d);
  opts.budget.require(family_walk_estimate(n, r, d), "involution audit");
  Stopwatch clock;
  VerificationReport rep;
  rep.identity = which == Involution::first ? "involution-first" : "involution-second";
  rep.params = {{"n", n}, {"r", r}, {"d", d}};

  std::uint64_t domain = 0;
  Count total = 0;
  auto fail = [&](const Walk& w, const std::string& why) {
    if (!rep.witness) rep.witness = format_walk(w) + ": " + why;
  };

  // Marker that must be preserved by the map: the first (C) violation, or the
  // first exit from the strict region.
  auto marker = [which](const Walk& w) -> std::optional<std::pair<int, int>> {
    if (which == Involution::second) {
      if (auto u = first_condition_C_violation(w)) return std::pair{*u, 0};
      return std::nullopt;
    }
    return first_strict_region_exit(w);
  };
  auto in_domain = [&](const Walk& w) {
    if (which == Involution::first) return in_first_involution_domain(w, r);
    return in_family(w, r, Family::w_prime) && endpoint_permutation(w).has_value() &&
           !check_condition_C(w);
  };

  for_each_family_walk_toeplitz(n, r, d, Family::w_prime, [&](const Walk& base, const Permutation& pi) {
    const Walk w = which == Involution::first ? reverse_negative(base) : base;
    const auto mark = marker(w);
    if (!mark) return;
    ++domain;
    total += pi.sign();
    if (rep.witness) return;

    Walk image;
    try {
      image = rho(w);
      image.validate();
    } catch (const std::exception& e) {
      return fail(w, std::string("map rejected the walk: ") + e.what());
    }
    const std::string arrow = " -> " + format_walk(image);
    if (image.dim != w.dim || !in_domain(image)) return fail(w, "image leaves the domain" + arrow);
    if (marker(image) != mark) return fail(w, "image moves the pivot" + arrow);
    const auto image_pi = endpoint_permutation(image);
    if (!image_pi || image_pi->sign() != -pi.sign()) return fail(w, "sign is not reversed" + arrow);
    Walk back;
    try {
      back = rho(image);
    } catch (const std::exception& e) {
      return fail(w, "map rejected the image" + arrow + ": " + e.what());
    }
    if (back != w) return fail(w, "not an involution" + arrow + " -> " + format_walk(back));
  });

  rep.methods = {{"domain-size", std::to_string(domain)}, {"signed-total", to_decimal(total)}};
  if (!rep.witness && total != 0) rep.witness = "signed total over the domain is " + to_decimal(total);
  rep.pass = !rep.witness;
  rep.elapsed_ms = clock.ms();
  return rep;
}

VerificationReport audit_bijections(int n, int r, int d, const VerifyOptions& opts) {
  require_nrd(n, r, d);
  const int m = r * n;
  opts.budget.require(sat_mul(sat_factorial(static_cast<unsigned>(m)), static_cast<std::uint64_t>(m * m)),
                      "bijection audit");
  Stopwatch clock;
  VerificationReport rep;
  rep.identity = "bijections";
  rep.params = {{"n", n}, {"r", r}, {"d", d}};
  auto fail = [&](const std::string& why) {
    if (!rep.witness) rep.witness = why;
  };
  auto pair_text = [](const TableauPair& p) { return format_tableau(p.p) + " / " + format_tableau(p.q); };
  auto is_bar = [&](const Permutation& f) { return bar_map(project(f, n, r)) == f; };

  // Bar configurations with L <= d.
  std::set<Permutation> configs;
  std::size_t graphs = 0;
  for_each_multigraph(n, r, [&](const Multigraph& g) {
    const auto f = bar_map(g);
    if (project(f, n, r) != g) fail("project(bar_map(G)) differs from G = " + format_multigraph(g));
    if (planar_matching_profile(f).longest > d) return;
    ++graphs;
    configs.insert(f);
  });
  if (configs.size() != graphs) fail("bar_map is not injective");

  // RSK onto condition-(T) pairs with at most d columns.
  std::set<TableauPair> rsk_image;
  for (const auto& f : configs) {
    const auto pair = rsk(f);
    if (rsk_inverse(pair) != f) fail("RSK round trip fails for " + format_permutation(f));
    if (pair.p.num_columns() > d || !check_condition_T(pair.p, n, r) || !check_condition_T(pair.q, n, r)) {
      fail("RSK image of " + format_permutation(f) + " is not a (T) pair: " + pair_text(pair));
    }
    rsk_image.insert(pair);
  }
  std::set<TableauPair> t_pairs;
  for (const auto& shape : partitions(m, d)) {
    const auto tabs = tableaux_of_shape(shape, r, RowCondition::strictly_above);
    for (const auto& p : tabs) {
      for (const auto& q : tabs) t_pairs.insert(TableauPair{p, q});
    }
  }
  for (const auto& pair : t_pairs) {
    if (rsk_image.count(pair)) continue;
    const auto f = rsk_inverse(pair);
    fail("(T) pair " + pair_text(pair) + " comes from " + format_permutation(f) +
         (is_bar(f) ? ", a bar configuration with L > d" : ", which is not a bar configuration"));
  }
  if (rsk_image.size() != configs.size()) fail("RSK is not injective on bar configurations");

  // Tableau pairs onto closed walks in the dominance region.
  std::set<Walk> region_walks;
  for_each_region_closed_tilde_walk(n, r, d, [&](const Walk& w) { region_walks.insert(w); });
  for (const auto& pair : t_pairs) {
    const auto w = pair_to_closed_walk(pair, d);
    if (!region_walks.count(w)) fail("walk of " + pair_text(pair) + " is not a closed region walk: " + format_walk(w));
    if (closed_walk_to_pair(w) != pair) fail("pair/walk round trip fails for " + pair_text(pair));
  }
  for (const auto& w : region_walks) {
    const auto pair = closed_walk_to_pair(w);
    if (!t_pairs.count(pair)) fail("closed region walk " + format_walk(w) + " gives a non-(T) pair");
    if (pair_to_closed_walk(pair, d) != w) fail("walk/pair round trip fails for " + format_walk(w));
  }

  // Phi onto the (C) walks, with phi as inverse.
  std::set<Walk> c_walks;
  for_each_condition_C_walk(n, r, d, [&](const Walk& w, const Permutation&) {
    c_walks.insert(w);
    const auto q = crossing_quasi_config(w);
    if (!q.is_full()) return fail("(C) walk " + format_walk(w) + " gives a partial pairing");
    const auto f = q.to_permutation();
    if (!configs.count(f)) fail("(C) walk " + format_walk(w) + " gives " + format_permutation(f) + ", not a bar configuration with L <= d");
    if (phi_map(f, d) != w) fail("phi then Phi does not return " + format_walk(w));
  });
  for (const auto& f : configs) {
    const auto w = phi_map(f, d);
    if (!c_walks.count(w)) fail("Phi(" + format_permutation(f) + ") = " + format_walk(w) + " is not a (C) walk");
    const auto q = crossing_quasi_config(w);
    if (!q.is_full() || q.to_permutation() != f) fail("phi(Phi(F)) differs from F = " + format_permutation(f));
  }

  rep.methods = {{"bar-configurations", std::to_string(configs.size())},
                 {"T-pairs", std::to_string(t_pairs.size())},
                 {"closed-region-walks", std::to_string(region_walks.size())},
                 {"C-walks", std::to_string(c_walks.size())}};
  for (const auto& [name, value] : rep.methods) {
    if (value != rep.methods.front().second) fail(name + " = " + value + " differs from bar-configurations = " + rep.methods.front().second);
  }
  rep.pass = !rep.witness;
  rep.elapsed_ms = clock.ms();
  return rep;
}

}  // namespace lpm
