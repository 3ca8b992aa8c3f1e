#include "lpm/numeric.hpp"

#include <limits>

namespace lpm {

std::string to_string(const Rational& q) { return q.get_str(10); }

Count factorial(unsigned n) {
  Count out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Count binomial(unsigned n, unsigned k) {
  Count out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

void Budget::require(std::uint64_t estimate, std::string_view what) const {
  if (estimate > nodes) {
    throw ResourceRefused(std::string(what) + ": estimated " + std::to_string(estimate) +
                          " nodes exceeds budget of " + std::to_string(nodes));
  }
}

namespace {
constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; }

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kMax / b ? kMax : a * b;
}

std::uint64_t sat_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) out = sat_mul(out, base);
  return out;
}

std::uint64_t sat_factorial(unsigned n) {
  std::uint64_t out = 1;
  for (unsigned i = 2; i <= n; ++i) out = sat_mul(out, i);
  return out;
}

std::uint64_t sat_binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  const Count exact = binomial(n, k);
  return exact.fits_ulong_p() ? exact.get_ui() : kMax;
}

}  // namespace lpm
