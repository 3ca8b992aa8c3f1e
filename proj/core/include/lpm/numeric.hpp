#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lpm {

/// Exact signed integer; every count produced by the library is one of these.
using Count = mpz_class;

/// Exact rational in lowest terms with positive denominator.
using Rational = mpq_class;

inline std::string to_decimal(const Count& c) { return c.get_str(10); }
std::string to_string(const Rational& q);

Count factorial(unsigned n);
Count binomial(unsigned n, unsigned k);

/// Raised when an exhaustive computation would exceed its node budget.
/// No partial result accompanies it.
class ResourceRefused : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Upper bound on the number of search nodes an exhaustive routine may visit.
/// Routines estimate their cost up front and refuse instead of truncating.
struct Budget {
  std::uint64_t nodes = 400'000'000;

  void require(std::uint64_t estimate, std::string_view what) const;
};

// Saturating helpers for cost estimates.
std::uint64_t sat_add(std::uint64_t a, std::uint64_t b);
std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t sat_pow(std::uint64_t base, unsigned exp);
std::uint64_t sat_factorial(unsigned n);
std::uint64_t sat_binomial(unsigned n, unsigned k);

}  // namespace lpm
