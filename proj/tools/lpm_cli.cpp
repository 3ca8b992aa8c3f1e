#include "lpm_cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lpm/combinatorics.hpp"
#include "lpm/tableau.hpp"
#include "lpm/verify.hpp"
#include "lpm/walks.hpp"

namespace lpm::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kGrammar = R"(Text forms:
  permutation  one-line values separated by commas, e.g. 4,2,3,1
  multigraph   rows separated by ';', entries by ',', e.g. 0,1,1;2,0,0;0,1,1
               (every row and column must sum to the same r)
  walk         positive step directions, '|', negative step directions,
               e.g. 111122|112121; use commas inside each half once any
               direction exceeds 9, e.g. 10,2|2,10
  tableau      list of rows, e.g. [[1,3],[2],[4]]

Exit codes: 0 success, 1 verification failed, 2 usage error, 3 refused by
the node budget (no partial result is printed).)";

struct Common {
  std::string format = "table";
  unsigned threads = 1;
  std::uint64_t budget = Budget{}.nodes;
  bool no_timing = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();
  sub->add_option("--threads", c.threads, "Worker threads for counting")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  sub->add_option("--budget", c.budget, "Largest search size (nodes) an exhaustive method may attempt")
      ->capture_default_str();
  sub->add_flag("--no-timing", c.no_timing, "Omit elapsed_ms so output is byte-identical across runs");
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return std::round(ms * 1000.0) / 1000.0;
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) {
      if (!out.empty()) out += ',';
      out += scalar_text(e);
    }
    return out;
  }
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Key/value listing for the human format.
void print_table(const Json& obj, std::ostream& out) {
  std::size_t width = 0;
  for (const auto& [k, v] : obj.items()) width = std::max(width, k.size());
  for (const auto& [k, v] : obj.items()) {
    out << k << std::string(width - k.size() + 2, ' ') << scalar_text(v) << '\n';
  }
}

void print_rows_csv(const std::vector<std::string>& header, const std::vector<Json>& rows, std::ostream& out) {
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      out << (i ? "," : "") << csv_field(scalar_text(row.at(header[i])));
    }
    out << '\n';
  }
}

void print_record(const Json& obj, const Common& c, std::ostream& out) {
  if (c.format == "json") {
    out << obj.dump(2) << '\n';
  } else if (c.format == "csv") {
    std::vector<std::string> header;
    for (const auto& [k, v] : obj.items()) header.push_back(k);
    print_rows_csv(header, {obj}, out);
  } else {
    print_table(obj, out);
  }
}

Count count_by_method(int n, int r, int d, const std::string& method, bool subgraph, const Common& c) {
  const Budget budget{c.budget};
  if (method == "brute") {
    const CountOptions opts{budget, c.threads};
    return subgraph ? count_g_hat_brute(n, r, d, opts) : count_g_brute(n, r, d, opts);
  }
  if (method == "tableaux") {
    return count_pairs_with_condition(n, r, d, subgraph ? RowCondition::weakly_below : RowCondition::strictly_above);
  }
  const SumOptions opts{budget, c.threads};
  return signed_sum(n, r, d, subgraph ? Family::w_hat_prime : Family::w_prime,
                    method == "walks-enum" ? Counter::enumerate : Counter::dp, opts);
}

void check_sizes(int n, int r, int d) {
  if (n < 1 || r < 1) throw CLI::ValidationError("--n and --r must be at least 1");
  if (d < 0) throw CLI::ValidationError("--d must be at least 0");
}

std::string pairs_text(const QuasiConfiguration& q) {
  std::string out;
  for (const auto& [u, v] : q.pairs()) {
    if (!out.empty()) out += ' ';
    out += "(u" + std::to_string(u) + ",v" + std::to_string(v) + ")";
  }
  return out;
}

std::string nodes_text(const std::vector<int>& nodes, char prefix) {
  std::string out;
  for (int x : nodes) {
    if (!out.empty()) out += ' ';
    out += prefix + std::to_string(x);
  }
  return out;
}

int print_report(const VerificationReport& rep, const Common& c, std::ostream& out) {
  if (c.format == "json") {
    out << to_json(rep, !c.no_timing) << '\n';
  } else if (c.format == "csv") {
    std::vector<Json> rows;
    for (const auto& [name, value] : rep.methods) {
      rows.push_back(Json{{"identity", rep.identity}, {"method", name}, {"value", value}, {"pass", rep.pass}});
    }
    print_rows_csv({"identity", "method", "value", "pass"}, rows, out);
  } else {
    std::string params;
    for (const auto& [k, v] : rep.params) params += (params.empty() ? "" : " ") + k + "=" + std::to_string(v);
    out << rep.identity << " (" << params << ")\n";
    std::size_t width = 0;
    for (const auto& [name, value] : rep.methods) width = std::max(width, name.size());
    for (const auto& [name, value] : rep.methods) {
      out << "  " << name << std::string(width - name.size() + 2, ' ') << value << '\n';
    }
    out << (rep.pass ? "PASS" : "FAIL");
    if (rep.witness) out << ": " << *rep.witness;
    if (!c.no_timing) out << "  (" << std::round(rep.elapsed_ms * 1000.0) / 1000.0 << " ms)";
    out << '\n';
  }
  return rep.pass ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts of largest planar matchings in random bipartite multigraphs", "lpm"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  app.set_version_flag("--version", "lpm 0.1.0");

  Common common;
  int n = 0;
  int r = 1;
  int d = 0;
  int m = 0;
  int max_degree = 10;
  int n_max = 0;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::string method = "walks-dp";
  std::string target;
  std::string perm_text;
  std::string graph_text;
  std::string walk_text;
  bool subgraph = false;

  auto* count = app.add_subcommand("count", "Count multigraphs with L <= d (or planar subgraph size <= d)");
  count->add_option("--n", n, "Vertices per side")->required();
  count->add_option("--r", r, "Degree")->required();
  count->add_option("--d", d, "Size bound")->required();
  count->add_option("--method", method, "Counting method")
      ->check(CLI::IsMember({"brute", "tableaux", "walks-enum", "walks-dp"}))
      ->capture_default_str();
  count->add_flag("--subgraph", subgraph, "Bound the largest planar subgraph instead of matching");
  add_common(count, common);

  auto* verify = app.add_subcommand("verify", "Check an identity by independent methods");
  verify->add_option("identity", target, "theorem1 | plk | mot | gessel")
      ->required()
      ->check(CLI::IsMember({"theorem1", "plk", "mot", "gessel"}));
  verify->add_option("--n", n, "Vertices per side (theorem1, plk)");
  verify->add_option("--r", r, "Degree (theorem1, plk)");
  verify->add_option("--d", d, "Size bound or dimension");
  verify->add_option("--m", m, "Permutation length (mot)");
  verify->add_option("--M", max_degree, "Series truncation degree (gessel)")->capture_default_str();
  add_common(verify, common);

  auto* audit = app.add_subcommand("audit", "Exhaustive audit of an involution or of the bijections");
  audit->add_option("what", target, "involution-first | involution-second | bijections")
      ->required()
      ->check(CLI::IsMember({"involution-first", "involution-second", "bijections"}));
  audit->add_option("--n", n, "Vertices per side")->required();
  audit->add_option("--r", r, "Degree")->required();
  audit->add_option("--d", d, "Dimension")->required();
  add_common(audit, common);

  auto* demo = app.add_subcommand("demo", "Apply the maps to one object and print every image");
  demo->add_option("what", target, "rsk | phi | walk")->required()->check(CLI::IsMember({"rsk", "phi", "walk"}));
  auto* perm_opt = demo->add_option("--perm", perm_text, "Permutation / configuration");
  auto* graph_opt = demo->add_option("--graph", graph_text, "Multigraph (mapped through bar_map first)");
  auto* walk_opt = demo->add_option("--walk", walk_text, "Representative walk");
  perm_opt->excludes(graph_opt)->excludes(walk_opt);
  graph_opt->excludes(walk_opt);
  demo->add_option("--r", r, "Block size for block conditions")->capture_default_str();
  demo->add_option("--d", d, "Walk dimension (default: largest direction used)");
  add_common(demo, common);

  auto* table = app.add_subcommand("table", "Table of g(n;d) for n = 1..n-max and d = 0..rn");
  table->add_option("--n-max", n_max, "Largest n")->required();
  table->add_option("--r", r, "Degree")->required();
  table->add_option("--method", method, "Counting method")
      ->check(CLI::IsMember({"brute", "tableaux", "walks-enum", "walks-dp"}))
      ->capture_default_str();
  table->add_flag("--subgraph", subgraph, "Tabulate g-hat instead of g");
  table->add_option("--sample", samples, "Also sample this many configurations per n");
  table->add_option("--seed", seed, "Sampler seed")->capture_default_str();
  add_common(table, common);

  auto* sample = app.add_subcommand("sample", "Draw uniform random configurations");
  sample->add_option("--n", n, "Vertices per side")->required();
  sample->add_option("--r", r, "Degree")->required();
  sample->add_option("--seed", seed, "Generator seed (mt19937_64)")->required();
  sample->add_option("--samples", samples, "Number of draws; more than one prints the L histogram");
  add_common(sample, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    if (count->parsed()) {
      check_sizes(n, r, d);
      const auto value = count_by_method(n, r, d, method, subgraph, common);
      Json rec{{"n", n}, {"r", r}, {"d", d}, {"method", method}, {"subgraph", subgraph}, {"count", to_decimal(value)}};
      if (!common.no_timing) rec["elapsed_ms"] = elapsed_since(start);
      if (common.format == "csv") {
        print_rows_csv({"n", "r", "d", "count"}, {rec}, out);
      } else {
        print_record(rec, common, out);
      }
      return kOk;
    }

    if (verify->parsed()) {
      const VerifyOptions opts{Budget{common.budget}, common.threads};
      if (target == "theorem1" || target == "plk") {
        if (verify->count("--n") == 0 || verify->count("--d") == 0) {
          throw CLI::ValidationError(target + " needs --n, --r and --d");
        }
        check_sizes(n, r, d);
        return print_report(target == "plk" ? verify_plk(n, r, d, opts) : verify_theorem1(n, r, d, opts), common, out);
      }
      if (target == "mot") {
        if (verify->count("--m") == 0 || verify->count("--d") == 0) throw CLI::ValidationError("mot needs --m and --d");
        if (m < 1 || d < 0) throw CLI::ValidationError("mot needs m >= 1 and d >= 0");
        return print_report(verify_mot(m, d, opts), common, out);
      }
      if (verify->count("--d") == 0) throw CLI::ValidationError("gessel needs --d");
      if (d < 1 || max_degree < 0) throw CLI::ValidationError("gessel needs d >= 1 and M >= 0");
      return print_report(gessel_check(d, max_degree, opts), common, out);
    }

    if (audit->parsed()) {
      check_sizes(n, r, d);
      const VerifyOptions opts{Budget{common.budget}, common.threads};
      if (target == "bijections") return print_report(audit_bijections(n, r, d, opts), common, out);
      const auto which = target == "involution-first" ? Involution::first : Involution::second;
      return print_report(audit_involution(n, r, d, which, opts), common, out);
    }

    if (demo->parsed()) {
      if (r < 1) throw CLI::ValidationError("--r must be at least 1");
      Json rec;
      if (target == "walk") {
        if (walk_text.empty()) throw CLI::ValidationError("demo walk needs --walk");
        const auto w = parse_walk(walk_text, d);
        rec["walk"] = format_walk(w);
        const auto end = endpoint(w);
        rec["endpoint"] = format_point(end);
        const auto pi = toeplitz_preimage(end);
        rec["toeplitz_permutation"] = pi ? format_permutation(*pi) : std::string("none");
        if (pi) rec["sign"] = pi->sign();
        const auto kl = k_l_profile(w);
        rec["k"] = kl.k;
        rec["l"] = kl.l;
        const auto violation = first_condition_C_violation(w);
        rec["condition_C"] = !violation;
        if (violation) rec["first_violation"] = "u" + std::to_string(*violation);
        rec["in_W_prime"] = in_family(w, r, Family::w_prime);
        rec["in_region"] = stays_in_dominance_region(w);
        if (w.up.size() == w.down.size()) {
          const auto q = crossing_quasi_config(w);
          rec["pairs"] = pairs_text(q);
          rec["unmatched"] = nodes_text(q.unmatched_left(), 'u') +
                             (q.unmatched_left().empty() || q.unmatched_right().empty() ? "" : " ") +
                             nodes_text(q.unmatched_right(), 'v');
          rec["full_configuration"] = q.is_full();
          if (q.is_full()) rec["configuration"] = format_permutation(q.to_permutation());
          if (violation && pi && in_family(w, r, Family::w_prime)) {
            rec["involution_second"] = format_walk(involution_second(w, r));
          }
          if (in_first_involution_domain(w, r)) rec["involution_first"] = format_walk(involution_first(w, r));
        }
      } else {
        if (perm_text.empty() && graph_text.empty()) throw CLI::ValidationError("demo " + target + " needs --perm or --graph");
        Permutation f;
        int rr = r;
        if (!graph_text.empty()) {
          const auto g = parse_multigraph(graph_text);
          rr = g.r();
          rec["multigraph"] = format_multigraph(g);
          f = bar_map(g);
        } else {
          f = parse_permutation(perm_text);
        }
        rec["configuration"] = format_permutation(f);
        const auto profile = planar_matching_profile(f);
        rec["L"] = profile.longest;
        if (target == "rsk") {
          const auto pair = rsk(f);
          rec["P"] = format_tableau(pair.p);
          rec["Q"] = format_tableau(pair.q);
          rec["shape"] = pair.p.shape();
          rec["inverse_round_trip"] = rsk_inverse(pair) == f;
          if (f.size() % rr == 0) {
            const int nn = f.size() / rr;
            rec["P_condition_T"] = check_condition_T(pair.p, nn, rr);
            rec["Q_condition_T"] = check_condition_T(pair.q, nn, rr);
            rec["P_condition_T_hat"] = check_condition_T_hat(pair.p, nn, rr);
            rec["Q_condition_T_hat"] = check_condition_T_hat(pair.q, nn, rr);
          }
          rec["closed_walk"] = format_walk(pair_to_closed_walk(pair, std::max(d, pair.p.num_columns())));
        } else {
          const auto w = phi_map(f, d);
          rec["walk"] = format_walk(w);
          const auto kl = k_l_profile(w);
          rec["k"] = kl.k;
          rec["l"] = kl.l;
          rec["condition_C"] = check_condition_C(w);
          rec["in_W_prime"] = in_family(w, rr, Family::w_prime);
          const auto q = crossing_quasi_config(w);
          rec["phi_round_trip"] = q.is_full() && q.to_permutation() == f;
        }
      }
      print_record(rec, common, out);
      return kOk;
    }

    if (table->parsed()) {
      if (n_max < 1 || r < 1) throw CLI::ValidationError("--n-max and --r must be at least 1");
      std::vector<Json> rows;
      std::vector<Json> sampled;
      for (int nn = 1; nn <= n_max; ++nn) {
        for (int dd = 0; dd <= r * nn; ++dd) {
          rows.push_back(Json{{"n", nn}, {"r", r}, {"d", dd},
                              {"count", to_decimal(count_by_method(nn, r, dd, method, subgraph, common))}});
        }
        if (samples > 0) {
          const auto hist = sample_longest_distribution(nn, r, samples, seed);
          for (std::size_t l = 0; l < hist.size(); ++l) {
            sampled.push_back(Json{{"n", nn}, {"r", r}, {"L", static_cast<int>(l)}, {"samples", hist[l]}});
          }
        }
      }
      if (common.format == "csv") {
        print_rows_csv({"n", "r", "d", "count"}, rows, out);
        if (samples > 0) {
          out << '\n';
          print_rows_csv({"n", "r", "L", "samples"}, sampled, out);
        }
      } else if (common.format == "json") {
        Json doc{{"r", r}, {"subgraph", subgraph}, {"method", method}, {"rows", rows}};
        if (samples > 0) doc["sample"] = Json{{"samples", samples}, {"seed", seed}, {"rows", sampled}};
        if (!common.no_timing) doc["elapsed_ms"] = elapsed_since(start);
        out << doc.dump(2) << '\n';
      } else {
        // One line per n with the counts for d = 0..rn.
        out << (subgraph ? "g-hat" : "g") << "(n;d), r=" << r << ", d = 0..rn\n";
        std::size_t i = 0;
        for (int nn = 1; nn <= n_max; ++nn) {
          out << "n=" << nn << ':';
          for (int dd = 0; dd <= r * nn; ++dd) out << ' ' << rows[i++]["count"].get<std::string>();
          out << '\n';
        }
        if (samples > 0) {
          out << "\nsampled L over " << samples << " configurations per n (seed " << seed << "), L = 0..rn\n";
          std::size_t j = 0;
          for (int nn = 1; nn <= n_max; ++nn) {
            out << "n=" << nn << ':';
            for (int l = 0; l <= r * nn; ++l) out << ' ' << sampled[j++]["samples"].get<std::uint64_t>();
            out << '\n';
          }
        }
      }
      return kOk;
    }

    if (sample->parsed()) {
      check_sizes(n, r, 0);
      Json rec{{"n", n}, {"r", r}, {"seed", seed}};
      if (samples <= 1) {
        const auto f = sample_configuration(n, r, seed);
        rec["configuration"] = format_permutation(f);
        rec["multigraph"] = format_multigraph(project(f, n, r));
        rec["L"] = planar_matching_profile(f).longest;
      } else {
        const auto hist = sample_longest_distribution(n, r, samples, seed);
        double mean = 0;
        for (std::size_t l = 0; l < hist.size(); ++l) mean += static_cast<double>(l) * static_cast<double>(hist[l]);
        rec["samples"] = samples;
        rec["histogram"] = hist;
        rec["mean_L"] = mean / static_cast<double>(samples);
      }
      print_record(rec, common, out);
      return kOk;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceRefused& e) {
    err << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace lpm::cli
