#pragma once

#include <string>
#include <vector>

#include "lpm/numeric.hpp"

namespace lpm {

/// Power series with exact rational coefficients, truncated after degree M.
class RationalSeries {
public:
  /// The zero series truncated at `max_degree`.
  explicit RationalSeries(int max_degree);
  static RationalSeries constant(const Rational& c, int max_degree);

  int max_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of x^k; zero beyond the truncation degree.
  Rational coefficient(int k) const;
  void set_coefficient(int k, const Rational& c);
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  // Binary operations truncate at the smaller of the two degrees.
  RationalSeries operator+(const RationalSeries& o) const;
  RationalSeries operator-(const RationalSeries& o) const;
  RationalSeries operator*(const RationalSeries& o) const;
  RationalSeries operator-() const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

private:
  std::vector<Rational> coeffs_;
};

/// Truncation of I_nu(2x) = sum_j x^(2j+nu) / (j! (j+nu)!).
RationalSeries bessel_I_series(int nu, int max_degree);

/// Determinant by cofactor expansion along the first row (no division).
/// Throws std::invalid_argument for a non-square matrix.
RationalSeries determinant(const std::vector<std::vector<RationalSeries>>& m);

/// Human-readable form such as `1 + x^2 + 1/4 x^4`.
std::string to_string(const RationalSeries& s);

}  // namespace lpm
