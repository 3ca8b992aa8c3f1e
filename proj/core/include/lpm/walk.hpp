#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace lpm {

/// Point of Z^d.
struct LatticePoint {
  std::vector<int> coords;

  int dim() const { return static_cast<int>(coords.size()); }
  bool is_origin() const;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Representative lattice walk in Z^d: every positive step precedes every
/// negative step. `up[i]` is the direction of the (i+1)-th positive step
/// (+e_up[i]) and `down[i]` that of the (i+1)-th negative step (-e_down[i]).
///
/// Text form is `up|down` with one digit per step when every direction is
/// below 10, e.g. `111122|112121`; otherwise directions are comma-separated
/// (`1,10|10,1`).
struct Walk {
  int dim = 0;
  std::vector<int> up;
  std::vector<int> down;

  int length() const { return static_cast<int>(up.size() + down.size()); }

  /// Throws std::invalid_argument if a direction falls outside [1, dim].
  void validate() const;

  friend bool operator==(const Walk&, const Walk&) = default;
  friend auto operator<=>(const Walk&, const Walk&) = default;
};

/// Parses the `up|down` text form; `dim` defaults to the largest direction.
Walk parse_walk(std::string_view text, int dim = 0);
std::string format_walk(const Walk& w);

std::string format_point(const LatticePoint& p);

}  // namespace lpm
