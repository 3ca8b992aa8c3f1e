#include <doctest.h>

#include "lpm/combinatorics.hpp"
#include "lpm/series.hpp"
#include "lpm/verify.hpp"
#include "oracles.hpp"

using namespace lpm;

namespace {

std::string method(const VerificationReport& rep, const std::string& name) {
  for (const auto& [k, v] : rep.methods) {
    if (k == name) return v;
  }
  return "<missing>";
}

}  // namespace

TEST_CASE("Bessel series") {
  const auto i0 = bessel_I_series(0, 4);
  CHECK(i0.coefficient(0) == 1);
  CHECK(i0.coefficient(1) == 0);
  CHECK(i0.coefficient(2) == 1);
  CHECK(i0.coefficient(4) == Rational(1, 4));
  CHECK(to_string(i0) == "1 + x^2 + 1/4 x^4");
  const auto i1 = bessel_I_series(1, 3);
  CHECK(to_string(i1) == "x + 1/2 x^3");
  for (int nu = 0; nu <= 4; ++nu) {
    const auto s = bessel_I_series(nu, 12);
    for (int k = 0; k <= 12; ++k) {
      if (k < nu || (k - nu) % 2 == 1) {
        CHECK(s.coefficient(k) == 0);
      } else {
        const unsigned j = static_cast<unsigned>((k - nu) / 2);
        CHECK(s.coefficient(k) == Rational(Count(1), factorial(j) * factorial(j + static_cast<unsigned>(nu))));
      }
    }
  }
  CHECK_THROWS_AS(bessel_I_series(-1, 3), std::invalid_argument);
}

TEST_CASE("series arithmetic truncates") {
  auto a = RationalSeries::constant(1, 3);
  a.set_coefficient(1, Rational(1, 2));
  const auto sq = a * a;  // 1 + x + x^2/4
  CHECK(sq.coefficient(1) == 1);
  CHECK(sq.coefficient(2) == Rational(1, 4));
  CHECK(sq.coefficient(3) == 0);
  const auto shorter = a * bessel_I_series(0, 1);
  CHECK(shorter.max_degree() == 1);
  CHECK((a - a) == RationalSeries(3));
  CHECK((-a).coefficient(1) == Rational(-1, 2));
  CHECK(to_string(RationalSeries(2)) == "0");
  CHECK(to_string(-a) == "-1 - 1/2 x");
}

TEST_CASE("determinant by cofactors") {
  const auto c = [](int v) { return RationalSeries::constant(v, 2); };
  CHECK(determinant({{c(2), c(3)}, {c(5), c(7)}}).coefficient(0) == -1);
  CHECK(determinant({{c(1), c(2), c(3)}, {c(0), c(1), c(4)}, {c(5), c(6), c(0)}}).coefficient(0) == 1);
  CHECK(determinant({}).coefficient(0) == 1);
  CHECK_THROWS_AS(determinant({{c(1), c(2)}}), std::invalid_argument);
  // I_0^2 - I_1^2 has x^4 coefficient 3/2 - 1.
  const auto det2 = determinant({{bessel_I_series(0, 4), bessel_I_series(1, 4)},
                                 {bessel_I_series(1, 4), bessel_I_series(0, 4)}});
  CHECK(det2.coefficient(4) == Rational(1, 2));
}

TEST_CASE("gessel check") {
  for (int d = 1; d <= 3; ++d) {
    const auto rep = gessel_check(d, 10);
    CHECK(rep.pass);
  }
  const auto rep1 = gessel_check(1, 6);
  CHECK(method(rep1, "determinant") == "1,1,1/4,1/36");
  const auto rep2 = gessel_check(2, 4);
  CHECK(method(rep2, "determinant") == "1,1,1/2");
  CHECK(method(rep2, "permutations") == "1,1,1/2");
  CHECK(gessel_check(4, 12).pass);
}

TEST_CASE("theorem1 and plk reports") {
  for (auto [n, r, d, want] : {std::tuple{2, 2, 1, "1"}, {3, 1, 2, "5"}, {2, 2, 2, "3"}}) {
    const auto rep = verify_theorem1(n, r, d);
    CHECK(rep.pass);
    for (const auto& [name, value] : rep.methods) CHECK(value == want);
    CHECK(rep.methods.size() == 4);
  }
  for (auto [n, r, d, want] : {std::tuple{1, 2, 2, "1"}, {2, 2, 2, "1"}, {2, 1, 1, "1"}, {3, 2, 4, "16"}}) {
    const auto rep = verify_plk(n, r, d);
    CHECK(rep.pass);
    CHECK(method(rep, "brute") == want);
  }
  CHECK_THROWS_AS(verify_theorem1(0, 1, 1), std::invalid_argument);
  VerifyOptions tight;
  tight.budget.nodes = 5;
  CHECK_THROWS_AS(verify_theorem1(4, 2, 3, tight), ResourceRefused);
}

TEST_CASE("mot reports") {
  const auto one = verify_mot(1, 2);
  CHECK(one.pass);
  CHECK(method(one, "lattice-dp") == "2");
  CHECK(method(verify_mot(2, 2), "binomial-permutations") == "12");
  CHECK(method(verify_mot(3, 2), "lattice-dp") == "100");
  for (int m = 1; m <= 3; ++m) {
    for (int d = 1; d <= 3; ++d) {
      const auto rep = verify_mot(m, d);
      CHECK(rep.pass);
      CHECK(method(rep, "lattice-dp") == std::to_string(oracle::literal_signed_walks(m, d)));
    }
  }
}

TEST_CASE("audit reports") {
  const auto second = audit_involution(2, 1, 2, Involution::second);
  CHECK(second.pass);
  CHECK(method(second, "domain-size") == "8");
  CHECK(method(second, "signed-total") == "0");
  CHECK(audit_involution(1, 2, 2, Involution::first).pass);
  for (auto [n, r, d, size] : {std::tuple{2, 2, 2, "3"}, {3, 1, 3, "6"}, {2, 2, 1, "1"}, {3, 2, 3, "21"}}) {
    const auto rep = audit_bijections(n, r, d);
    CHECK(rep.pass);
    for (const auto& [name, value] : rep.methods) CHECK(value == size);
  }
}

TEST_CASE("report JSON is stable") {
  const auto rep = verify_theorem1(2, 2, 2);
  const auto text = to_json(rep, false);
  CHECK(text == to_json(verify_theorem1(2, 2, 2), false));
  CHECK(text ==
        "{\n  \"identity\": \"theorem1\",\n  \"params\": {\n    \"n\": 2,\n    \"r\": 2,\n    \"d\": 2\n  },\n"
        "  \"methods\": {\n    \"brute\": \"3\",\n    \"tableaux\": \"3\",\n    \"walks-enum\": \"3\",\n"
        "    \"walks-dp\": \"3\"\n  },\n  \"pass\": true\n}");
  CHECK(to_json(rep).find("\"elapsed_ms\"") != std::string::npos);
  VerificationReport failed;
  failed.identity = "x";
  failed.witness = "w";
  CHECK(to_json(failed, false, -1) == R"({"identity":"x","params":{},"methods":{},"pass":false,"witness":"w"})");
}
