#include "lpm/series.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lpm {

RationalSeries::RationalSeries(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("truncation degree must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(max_degree) + 1, Rational(0));
}

RationalSeries RationalSeries::constant(const Rational& c, int max_degree) {
  RationalSeries s(max_degree);
  s.coeffs_[0] = c;
  return s;
}

Rational RationalSeries::coefficient(int k) const {
  if (k < 0 || k > max_degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

void RationalSeries::set_coefficient(int k, const Rational& c) {
  if (k < 0 || k > max_degree()) throw std::out_of_range("degree outside truncation");
  coeffs_[static_cast<std::size_t>(k)] = c;
  coeffs_[static_cast<std::size_t>(k)].canonicalize();
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
  RationalSeries out(std::min(max_degree(), o.max_degree()));
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k) out.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
  return out;
}

RationalSeries RationalSeries::operator-(const RationalSeries& o) const {
  RationalSeries out(std::min(max_degree(), o.max_degree()));
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k) out.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
  return out;
}

RationalSeries RationalSeries::operator-() const {
  RationalSeries out(max_degree());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = -coeffs_[k];
  return out;
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
  const int top = std::min(max_degree(), o.max_degree());
  RationalSeries out(top);
  for (int i = 0; i <= top; ++i) {
    const auto& a = coeffs_[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    for (int j = 0; i + j <= top; ++j) {
      const auto& b = o.coeffs_[static_cast<std::size_t>(j)];
      if (b != 0) out.coeffs_[static_cast<std::size_t>(i + j)] += a * b;
    }
  }
  return out;
}

RationalSeries bessel_I_series(int nu, int max_degree) {
  if (nu < 0) throw std::invalid_argument("Bessel order must be >= 0");
  RationalSeries s(max_degree);
  for (int j = 0; 2 * j + nu <= max_degree; ++j) {
    const Count denom = factorial(static_cast<unsigned>(j)) * factorial(static_cast<unsigned>(j + nu));
    s.set_coefficient(2 * j + nu, Rational(Count(1), denom));
  }
  return s;
}

namespace {

RationalSeries cofactor_det(const std::vector<std::vector<RationalSeries>>& m,
                            std::vector<std::size_t>& cols, std::size_t row, int degree) {
  if (row == m.size()) return RationalSeries::constant(1, degree);
  RationalSeries total(degree);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const std::size_t c = cols[i];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(i));
    auto term = m[row][c] * cofactor_det(m, cols, row + 1, degree);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(i), c);
    total = i % 2 == 0 ? total + term : total - term;
  }
  return total;
}

}  // namespace

RationalSeries determinant(const std::vector<std::vector<RationalSeries>>& m) {
  int degree = std::numeric_limits<int>::max();
  for (const auto& row : m) {
    if (row.size() != m.size()) throw std::invalid_argument("determinant needs a square matrix");
    for (const auto& e : row) degree = std::min(degree, e.max_degree());
  }
  if (m.empty()) return RationalSeries::constant(1, 0);
  std::vector<std::size_t> cols(m.size());
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  return cofactor_det(m, cols, 0, degree);
}

std::string to_string(const RationalSeries& s) {
  std::string out;
  for (int k = 0; k <= s.max_degree(); ++k) {
    Rational c = s.coefficient(k);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += "-";
    const bool unit = c == 1;
    if (!unit || k == 0) out += to_string(c);
    if (k > 0) {
      if (!unit) out += ' ';
      out += k == 1 ? std::string("x") : "x^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace lpm
