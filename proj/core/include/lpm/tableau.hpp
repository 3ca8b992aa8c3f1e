#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lpm/combinatorics.hpp"
#include "lpm/numeric.hpp"
#include "lpm/walk.hpp"

namespace lpm {

/// Box coordinates, 1-based; row 1 is the top row.
struct BoxPos {
  int row = 0;
  int col = 0;
  friend bool operator==(const BoxPos&, const BoxPos&) = default;
};

/// Standard Young tableau: left-justified rows of distinct positive integers,
/// increasing along rows and down columns, row lengths weakly decreasing.
class YoungTableau {
public:
  YoungTableau() = default;
  /// Throws std::invalid_argument when `rows` violates any tableau invariant.
  explicit YoungTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<int> shape() const;
  int size() const;
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_columns() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }
  std::optional<BoxPos> find(int value) const;
  /// True when the entries are exactly 1..size().
  bool is_standard() const;

  friend bool operator==(const YoungTableau&, const YoungTableau&) = default;
  friend auto operator<=>(const YoungTableau&, const YoungTableau&) = default;

private:
  std::vector<std::vector<int>> rows_;
};

struct TableauPair {
  YoungTableau p;  ///< insertion tableau
  YoungTableau q;  ///< recording tableau
  friend bool operator==(const TableauPair&, const TableauPair&) = default;
  friend auto operator<=>(const TableauPair&, const TableauPair&) = default;
};

/// Schensted row insertion of `x`; returns the new tableau and the box it
/// created. Throws std::invalid_argument if `x` is already an entry.
std::pair<YoungTableau, BoxPos> row_insert(const YoungTableau& t, int x);

TableauPair rsk(const Permutation& pi);
/// Reverse bumping. Throws std::invalid_argument unless both tableaux have
/// the same shape and entries exactly [m].
Permutation rsk_inverse(const TableauPair& pair);

/// Block conditions on where r(i-1)+s and r(i-1)+s+1 sit, for i in [n], 1 <= s < r.
enum class RowCondition {
  strictly_above,  ///< condition (T): the smaller entry is in a strictly higher row
  weakly_below,    ///< condition (T-hat): the larger entry is weakly above the smaller
};

/// Both throw std::invalid_argument unless the entries are exactly [rn].
bool check_condition_T(const YoungTableau& t, int n, int r);
bool check_condition_T_hat(const YoungTableau& t, int n, int r);
bool check_row_condition(const YoungTableau& t, int n, int r, RowCondition which);

/// Partitions of m with every part <= max_part, largest first.
std::vector<std::vector<int>> partitions(int m, int max_part);

/// Every standard tableau on [m] with at most d columns, shapes in the order
/// given by partitions(m, d), each shape filled by backtracking 1..m into
/// addable corners.
void for_each_tableau(int m, int d, const std::function<void(const YoungTableau&)>& visit);
std::vector<YoungTableau> enumerate_tableaux(int m, int d);
/// Standard tableaux of one shape that satisfy a block row condition.
std::vector<YoungTableau> tableaux_of_shape(const std::vector<int>& shape, int r,
                                            std::optional<RowCondition> which);

/// Ordered equal-shape pairs in T([rn]; d) with both tableaux satisfying
/// `which`. Counted per shape as (tableaux satisfying the condition)^2.
Count count_pairs_with_condition(int n, int r, int d, RowCondition which);

/// Column index of each entry 1..m in order: a positive-only walk in Z^d.
Walk tableau_to_positive_walk(const YoungTableau& t, int d);
/// Inverse of tableau_to_positive_walk. Throws std::invalid_argument for a
/// walk with negative steps or one leaving x_1 >= ... >= x_d.
YoungTableau positive_walk_to_tableau(const Walk& w);

/// c_1..c_m | c'_m..c'_1 where c and c' are the column walks of P and Q.
Walk pair_to_closed_walk(const TableauPair& pair, int d);
/// Inverse of pair_to_closed_walk on closed region-respecting walks.
TableauPair closed_walk_to_pair(const Walk& w);

/// Row-list text form, e.g. `[[1,3],[2],[4]]`.
YoungTableau parse_tableau(std::string_view text);
std::string format_tableau(const YoungTableau& t);

}  // namespace lpm
