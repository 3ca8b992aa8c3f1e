#include "lpm/tableau.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace lpm {

YoungTableau::YoungTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  std::vector<int> all;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const auto& row = rows_[k];
    if (row.empty()) throw std::invalid_argument("tableau rows must be nonempty");
    if (k > 0 && row.size() > rows_[k - 1].size()) {
      throw std::invalid_argument("tableau row lengths must weakly decrease");
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (row[c] < 1) throw std::invalid_argument("tableau entries must be positive");
      if (c > 0 && row[c - 1] >= row[c]) {
        throw std::invalid_argument("tableau rows must strictly increase");
      }
      if (k > 0 && rows_[k - 1][c] >= row[c]) {
        throw std::invalid_argument("tableau columns must strictly increase");
      }
      all.push_back(row[c]);
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw std::invalid_argument("tableau entries must be distinct");
  }
}

std::vector<int> YoungTableau::shape() const {
  std::vector<int> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(static_cast<int>(row.size()));
  return out;
}

int YoungTableau::size() const {
  int total = 0;
  for (const auto& row : rows_) total += static_cast<int>(row.size());
  return total;
}

std::optional<BoxPos> YoungTableau::find(int value) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const auto& row = rows_[k];
    auto it = std::lower_bound(row.begin(), row.end(), value);
    if (it != row.end() && *it == value) {
      return BoxPos{static_cast<int>(k) + 1, static_cast<int>(it - row.begin()) + 1};
    }
  }
  return std::nullopt;
}

bool YoungTableau::is_standard() const {
  const int m = size();
  for (const auto& row : rows_) {
    for (int v : row) {
      if (v > m) return false;
    }
  }
  return true;  // distinct positive entries, none above m
}

namespace {

using Rows = std::vector<std::vector<int>>;

// Inserts x into rows in place and returns the created box.
BoxPos insert_in_place(Rows& rows, int x) {
  for (std::size_t k = 0;; ++k) {
    if (k == rows.size()) {
      rows.push_back({x});
      return {static_cast<int>(k) + 1, 1};
    }
    auto& row = rows[k];
    auto it = std::upper_bound(row.begin(), row.end(), x);
    if (it == row.end()) {
      row.push_back(x);
      return {static_cast<int>(k) + 1, static_cast<int>(row.size())};
    }
    std::swap(x, *it);
  }
}

void require_standard(const YoungTableau& t, int m, const char* what) {
  if (t.size() != m || !t.is_standard()) {
    throw std::invalid_argument(std::string(what) + ": entries must be exactly [" +
                                std::to_string(m) + "]");
  }
}

std::vector<int> row_index_of_entries(const YoungTableau& t) {
  std::vector<int> row_of(static_cast<std::size_t>(t.size()) + 1, 0);
  for (std::size_t k = 0; k < t.rows().size(); ++k) {
    for (int v : t.rows()[k]) row_of[static_cast<std::size_t>(v)] = static_cast<int>(k) + 1;
  }
  return row_of;
}

bool rows_satisfy(int upper_row, int lower_row, RowCondition which) {
  // upper_row holds r(i-1)+s, lower_row holds r(i-1)+s+1.
  return which == RowCondition::strictly_above ? upper_row < lower_row : lower_row <= upper_row;
}

// Backtracking fill of a fixed shape with 1..m placed into addable corners.
// `r` and `which` prune placements violating a block row condition.
class ShapeFiller {
public:
  ShapeFiller(std::vector<int> shape, int r, std::optional<RowCondition> which,
              const std::function<void(const YoungTableau&)>& visit)
      : shape_(std::move(shape)), r_(r), which_(which), visit_(visit),
        rows_(shape_.size()) {
    for (int len : shape_) m_ += len;
    row_of_.assign(static_cast<std::size_t>(m_) + 1, 0);
  }

  void run() { place(1); }

private:
  void place(int v) {
    if (v > m_) {
      visit_(YoungTableau(rows_));
      return;
    }
    for (std::size_t k = 0; k < shape_.size(); ++k) {
      const auto len = rows_[k].size();
      if (len >= static_cast<std::size_t>(shape_[k])) continue;
      if (k > 0 && rows_[k - 1].size() <= len) continue;
      const int row = static_cast<int>(k) + 1;
      if (which_ && (v - 1) % r_ != 0 &&
          !rows_satisfy(row_of_[static_cast<std::size_t>(v - 1)], row, *which_)) {
        continue;
      }
      rows_[k].push_back(v);
      row_of_[static_cast<std::size_t>(v)] = row;
      place(v + 1);
      rows_[k].pop_back();
    }
  }

  std::vector<int> shape_;
  int r_;
  std::optional<RowCondition> which_;
  const std::function<void(const YoungTableau&)>& visit_;
  Rows rows_;
  std::vector<int> row_of_;
  int m_ = 0;
};

void partitions_into(int left, int max_part, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (left == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(left, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions_into(left - part, part, cur, out);
    cur.pop_back();
  }
}

YoungTableau tableau_from_columns(const std::vector<std::vector<int>>& columns) {
  Rows rows;
  for (const auto& col : columns) {
    for (std::size_t k = 0; k < col.size(); ++k) {
      if (rows.size() <= k) rows.emplace_back();
      rows[k].push_back(col[k]);
    }
  }
  return YoungTableau(std::move(rows));
}

}  // namespace

std::pair<YoungTableau, BoxPos> row_insert(const YoungTableau& t, int x) {
  if (x < 1) throw std::invalid_argument("inserted value must be positive");
  if (t.find(x)) throw std::invalid_argument("value " + std::to_string(x) + " already in tableau");
  Rows rows = t.rows();
  const BoxPos box = insert_in_place(rows, x);
  return {YoungTableau(std::move(rows)), box};
}

TableauPair rsk(const Permutation& pi) {
  Rows p;
  Rows q;
  for (int i = 1; i <= pi.size(); ++i) {
    const BoxPos box = insert_in_place(p, pi(i));
    if (q.size() < static_cast<std::size_t>(box.row)) q.emplace_back();
    q[static_cast<std::size_t>(box.row - 1)].push_back(i);
  }
  return {YoungTableau(std::move(p)), YoungTableau(std::move(q))};
}

Permutation rsk_inverse(const TableauPair& pair) {
  if (pair.p.shape() != pair.q.shape()) throw std::invalid_argument("tableaux differ in shape");
  const int m = pair.p.size();
  require_standard(pair.p, m, "insertion tableau");
  require_standard(pair.q, m, "recording tableau");

  Rows p = pair.p.rows();
  Rows q = pair.q.rows();
  std::vector<int> values(static_cast<std::size_t>(m));
  for (int i = m; i >= 1; --i) {
    // The largest recording entry always sits at the end of some row.
    std::size_t k = 0;
    while (q[k].back() != i) ++k;
    q[k].pop_back();
    int x = p[k].back();
    p[k].pop_back();
    for (std::size_t above = k; above-- > 0;) {
      auto& row = p[above];
      auto it = std::lower_bound(row.begin(), row.end(), x);
      --it;  // largest entry below x; exists because columns increase
      std::swap(x, *it);
    }
    if (p[k].empty()) {
      p.pop_back();
      q.pop_back();
    }
    values[static_cast<std::size_t>(i - 1)] = x;
  }
  return Permutation(std::move(values));
}

bool check_row_condition(const YoungTableau& t, int n, int r, RowCondition which) {
  if (n < 1 || r < 1) throw std::invalid_argument("n and r must be positive");
  require_standard(t, r * n, "condition check");
  const auto row_of = row_index_of_entries(t);
  for (int i = 1; i <= n; ++i) {
    for (int s = 1; s < r; ++s) {
      const int v = r * (i - 1) + s;
      if (!rows_satisfy(row_of[static_cast<std::size_t>(v)], row_of[static_cast<std::size_t>(v + 1)],
                        which)) {
        return false;
      }
    }
  }
  return true;
}

bool check_condition_T(const YoungTableau& t, int n, int r) {
  return check_row_condition(t, n, r, RowCondition::strictly_above);
}

bool check_condition_T_hat(const YoungTableau& t, int n, int r) {
  return check_row_condition(t, n, r, RowCondition::weakly_below);
}

std::vector<std::vector<int>> partitions(int m, int max_part) {
  if (m < 0 || max_part < 0) throw std::invalid_argument("partitions of a negative number");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_into(m, max_part, cur, out);
  return out;
}

void for_each_tableau(int m, int d, const std::function<void(const YoungTableau&)>& visit) {
  for (const auto& shape : partitions(m, d)) ShapeFiller(shape, 1, std::nullopt, visit).run();
}

std::vector<YoungTableau> enumerate_tableaux(int m, int d) {
  std::vector<YoungTableau> out;
  for_each_tableau(m, d, [&](const YoungTableau& t) { out.push_back(t); });
  return out;
}

std::vector<YoungTableau> tableaux_of_shape(const std::vector<int>& shape, int r,
                                            std::optional<RowCondition> which) {
  std::vector<YoungTableau> out;
  ShapeFiller(shape, r, which, [&](const YoungTableau& t) { out.push_back(t); }).run();
  return out;
}

Count count_pairs_with_condition(int n, int r, int d, RowCondition which) {
  if (n < 1 || r < 1 || d < 0) throw std::invalid_argument("need n, r >= 1 and d >= 0");
  Count total = 0;
  for (const auto& shape : partitions(r * n, d)) {
    std::uint64_t per_shape = 0;
    ShapeFiller(shape, r, which, [&](const YoungTableau&) { ++per_shape; }).run();
    const Count c(static_cast<unsigned long>(per_shape));
    total += c * c;
  }
  return total;
}

Walk tableau_to_positive_walk(const YoungTableau& t, int d) {
  require_standard(t, t.size(), "tableau walk");
  if (t.num_columns() > d) {
    throw std::invalid_argument("tableau has more than d = " + std::to_string(d) + " columns");
  }
  Walk w;
  w.dim = d;
  w.up.assign(static_cast<std::size_t>(t.size()), 0);
  for (const auto& row : t.rows()) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      w.up[static_cast<std::size_t>(row[c] - 1)] = static_cast<int>(c) + 1;
    }
  }
  return w;
}

YoungTableau positive_walk_to_tableau(const Walk& w) {
  w.validate();
  if (!w.down.empty()) throw std::invalid_argument("walk has negative steps");
  std::vector<int> height(static_cast<std::size_t>(w.dim) + 1, 0);
  std::vector<std::vector<int>> columns(static_cast<std::size_t>(w.dim));
  for (std::size_t i = 0; i < w.up.size(); ++i) {
    const auto l = static_cast<std::size_t>(w.up[i]);
    if (l > 1 && height[l - 1] <= height[l]) {
      throw std::invalid_argument("walk leaves the region x_1 >= ... >= x_d");
    }
    ++height[l];
    columns[l - 1].push_back(static_cast<int>(i) + 1);
  }
  while (!columns.empty() && columns.back().empty()) columns.pop_back();
  return tableau_from_columns(columns);
}

Walk pair_to_closed_walk(const TableauPair& pair, int d) {
  if (pair.p.shape() != pair.q.shape()) throw std::invalid_argument("tableaux differ in shape");
  Walk w = tableau_to_positive_walk(pair.p, d);
  const Walk recording = tableau_to_positive_walk(pair.q, d);
  w.down.assign(recording.up.rbegin(), recording.up.rend());
  return w;
}

TableauPair closed_walk_to_pair(const Walk& w) {
  Walk first{w.dim, w.up, {}};
  Walk second{w.dim, {w.down.rbegin(), w.down.rend()}, {}};
  TableauPair out{positive_walk_to_tableau(first), positive_walk_to_tableau(second)};
  if (out.p.shape() != out.q.shape()) throw std::invalid_argument("walk is not closed");
  return out;
}

YoungTableau parse_tableau(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw std::invalid_argument("tableau must look like [[1,3],[2],[4]]");
  }
  if (!j.is_array()) throw std::invalid_argument("tableau must be a list of rows");
  Rows rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("tableau row must be a list");
    auto& out = rows.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number_integer()) throw std::invalid_argument("tableau entries must be integers");
      out.push_back(v.get<int>());
    }
  }
  return YoungTableau(std::move(rows));
}

std::string format_tableau(const YoungTableau& t) {
  std::string out = "[";
  for (std::size_t k = 0; k < t.rows().size(); ++k) {
    if (k > 0) out += ',';
    out += '[';
    const auto& row = t.rows()[k];
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += std::to_string(row[c]);
    }
    out += ']';
  }
  return out + "]";
}

}  // namespace lpm
