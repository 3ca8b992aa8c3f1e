#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "lpm_cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = lpm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json json_of(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(std::move(args));
  REQUIRE(r.code == 0);
  return nlohmann::ordered_json::parse(r.out);
}

}  // namespace

TEST_CASE("count") {
  CHECK(json_of({"count", "--n", "3", "--r", "1", "--d", "2", "--method", "brute"})["count"] == "5");
  CHECK(json_of({"count", "--n", "2", "--r", "2", "--d", "2", "--method", "walks-dp"})["count"] == "3");
  CHECK(json_of({"count", "--n", "2", "--r", "2", "--d", "2", "--method", "walks-enum"})["count"] == "3");
  CHECK(json_of({"count", "--n", "2", "--r", "2", "--d", "2", "--method", "tableaux", "--subgraph"})["count"] == "1");
  const auto j = json_of({"count", "--n", "2", "--r", "2", "--d", "1"});
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"n", "r", "d", "method", "subgraph", "count", "elapsed_ms"});
  const auto csv = run({"count", "--n", "2", "--r", "2", "--d", "1", "--format", "csv"});
  CHECK(csv.out == "n,r,d,count\n2,2,1,1\n");
}

TEST_CASE("stable JSON without timing") {
  const std::vector<std::string> args{"count", "--n", "3", "--r", "2", "--d", "3", "--format", "json", "--no-timing"};
  const auto a = run(args);
  CHECK(a.out == run(args).out);
  CHECK(a.out.find("elapsed_ms") == std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"count", "--n", "2"}).code == 2);
  CHECK(run({"count", "--n", "0", "--r", "1", "--d", "1"}).code == 2);
  CHECK(run({"count", "--n", "2", "--r", "2", "--d", "1", "--method", "magic"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  const auto refused = run({"count", "--n", "4", "--r", "2", "--d", "3", "--method", "brute", "--budget", "10"});
  CHECK(refused.code == 3);
  CHECK(refused.out.empty());
  CHECK(refused.err.find("refused") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"verify", "theorem1", "--n", "2"}).code == 2);
}

TEST_CASE("verify") {
  const auto gessel = run({"verify", "gessel", "--d", "2", "--M", "10"});
  CHECK(gessel.code == 0);
  CHECK(gessel.out.find("PASS") != std::string::npos);
  const auto t1 = json_of({"verify", "theorem1", "--n", "2", "--r", "2", "--d", "1"});
  CHECK(t1["pass"] == true);
  for (const auto& [k, v] : t1["methods"].items()) CHECK(v == "1");
  const auto mot = json_of({"verify", "mot", "--m", "3", "--d", "2"});
  CHECK(mot["methods"]["lattice-dp"] == "100");
  CHECK(mot["pass"] == true);
  CHECK(json_of({"verify", "plk", "--n", "2", "--r", "2", "--d", "3"})["methods"]["walks-dp"] == "2");
  const auto csv = run({"verify", "plk", "--n", "1", "--r", "2", "--d", "2", "--format", "csv"});
  CHECK(csv.out.rfind("identity,method,value,pass\nplk,brute,1,true\n", 0) == 0);
}

TEST_CASE("audit") {
  const auto second = json_of({"audit", "involution-second", "--n", "2", "--r", "1", "--d", "2"});
  CHECK(second["pass"] == true);
  CHECK(second["methods"]["signed-total"] == "0");
  CHECK(json_of({"audit", "involution-first", "--n", "1", "--r", "2", "--d", "2"})["pass"] == true);
  const auto bij = json_of({"audit", "bijections", "--n", "2", "--r", "2", "--d", "2"});
  CHECK(bij["methods"]["C-walks"] == "3");
}

TEST_CASE("demo") {
  const auto phi = json_of({"demo", "phi", "--graph", "0,1,1;2,0,0;0,1,1"});
  CHECK(phi["walk"] == "111122|112121");
  CHECK(phi["configuration"] == "6,4,2,1,5,3");
  CHECK(phi["phi_round_trip"] == true);
  const auto rsk = json_of({"demo", "rsk", "--perm", "4,2,3,1"});
  CHECK(rsk["P"] == "[[1,3],[2],[4]]");
  CHECK(rsk["Q"] == "[[1,3],[2],[4]]");
  CHECK(rsk["closed_walk"] == "1121|1211");
  const auto walk = json_of({"demo", "walk", "--walk", "112122|122122"});
  CHECK(walk["pairs"] == "(u1,v4) (u2,v1) (u3,v6) (u5,v5) (u6,v3)");
  CHECK(walk["unmatched"] == "u4 v2");
  CHECK(walk["full_configuration"] == false);
  const auto inv = json_of({"demo", "walk", "--walk", "12|21"});
  CHECK(inv["involution_second"] == "12|11");
  CHECK(json_of({"demo", "walk", "--walk", "2|2"})["involution_first"] == "2|1");
  CHECK(run({"demo", "rsk", "--perm", "1,1"}).code == 2);
  CHECK(run({"demo", "walk", "--walk", "12"}).code == 2);
  CHECK(run({"demo", "phi"}).code == 2);
}

TEST_CASE("table") {
  const auto csv = run({"table", "--n-max", "2", "--r", "2", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "n,r,d,count\n1,2,0,0\n1,2,1,1\n1,2,2,1\n2,2,0,0\n2,2,1,1\n2,2,2,3\n2,2,3,3\n2,2,4,3\n");
  const auto table = run({"table", "--n-max", "3", "--r", "1", "--method", "brute"});
  CHECK(table.out.find("n=3: 0 1 5 6\n") != std::string::npos);
  const auto sampled = json_of({"table", "--n-max", "2", "--r", "2", "--sample", "500", "--seed", "9"});
  std::uint64_t total = 0;
  for (const auto& row : sampled["sample"]["rows"]) {
    if (row["n"] == 2) total += row["samples"].get<std::uint64_t>();
  }
  CHECK(total == 500);
}

TEST_CASE("sample") {
  const auto a = json_of({"sample", "--n", "3", "--r", "2", "--seed", "11"});
  const auto b = json_of({"sample", "--n", "3", "--r", "2", "--seed", "11"});
  CHECK(a["configuration"] == b["configuration"]);
  const auto hist = json_of({"sample", "--n", "2", "--r", "2", "--seed", "3", "--samples", "1000"});
  std::uint64_t total = 0;
  for (const auto& c : hist["histogram"]) total += c.get<std::uint64_t>();
  CHECK(total == 1000);
  CHECK(hist["histogram"][0] == 0);
}
