#pragma once

// Standard Young tableaux whose shape fits in a (2,1)-hook: two rows of
// lengths lambda1 >= lambda2 on top of a single-cell column tail hanging
// below the first cell of row 2.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hump/error.hpp"
#include "hump/exact_int.hpp"
#include "hump/path_core.hpp"

namespace hump {

struct HookShape {
  int lambda1 = 0;
  int lambda2 = 0;
  int tail = 0;

  int size() const noexcept { return lambda1 + lambda2 + tail; }
  int row_difference() const noexcept { return lambda1 - lambda2; }
  bool valid() const noexcept {
    return lambda1 >= lambda2 && lambda2 >= 0 && tail >= 0 && (tail == 0 || lambda2 >= 1);
  }

  friend auto operator<=>(const HookShape&, const HookShape&) = default;
};

struct HookTableau {
  std::vector<int> row1;
  std::vector<int> row2;
  std::vector<int> column;  // cells below row2[0], top to bottom

  HookShape shape() const {
    return {static_cast<int>(row1.size()), static_cast<int>(row2.size()),
            static_cast<int>(column.size())};
  }
  int size() const noexcept { return static_cast<int>(row1.size() + row2.size() + column.size()); }

  friend bool operator==(const HookTableau&, const HookTableau&) = default;
  friend auto operator<=>(const HookTableau& a, const HookTableau& b) {
    return std::tie(a.row1, a.row2, a.column) <=> std::tie(b.row1, b.row2, b.column);
  }
};

/// Empty when T is standard; otherwise names the first violated constraint.
inline std::optional<std::string> validate(const HookTableau& t) {
  const auto shape = t.shape();
  if (shape.lambda1 < shape.lambda2) return "row 1 is shorter than row 2";
  if (shape.tail > 0 && shape.lambda2 == 0) return "column tail without a second row";

  const int n = t.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto* cells : {&t.row1, &t.row2, &t.column}) {
    for (int v : *cells) {
      if (v < 1 || v > n) return "entry " + std::to_string(v) + " outside 1.." + std::to_string(n);
      if (seen[static_cast<std::size_t>(v)]) return "entry " + std::to_string(v) + " repeated";
      seen[static_cast<std::size_t>(v)] = true;
    }
  }

  auto increasing = [](const std::vector<int>& v) {
    return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>{}) == v.end();
  };
  if (!increasing(t.row1)) return "row 1 not strictly increasing";
  if (!increasing(t.row2)) return "row 2 not strictly increasing";
  if (!increasing(t.column)) return "column not strictly increasing";
  for (std::size_t j = 0; j < t.row2.size(); ++j)
    if (t.row1[j] >= t.row2[j])
      return "column " + std::to_string(j) + " not increasing (row1 " + std::to_string(t.row1[j]) +
             " >= row2 " + std::to_string(t.row2[j]) + ")";
  if (!t.column.empty() && t.row2[0] >= t.column[0]) return "first column not increasing below row 2";
  return std::nullopt;
}

/// Shapes of size n with lambda1 - lambda2 = k, ordered by lambda2.
inline std::vector<HookShape> hook_shapes(int n, int k) {
  std::vector<HookShape> out;
  for (int l2 = 0; k + 2 * l2 <= n; ++l2) {
    HookShape s{l2 + k, l2, n - k - 2 * l2};
    if (s.valid()) out.push_back(s);
  }
  return out;
}

namespace detail {

// Places 1..n one at a time; a value may go to a row when the cell above it
// already holds a smaller value.
inline void fill_shape(const HookShape& shape, int next, int n, HookTableau& cur,
                       std::vector<HookTableau>& out) {
  if (next > n) {
    out.push_back(cur);
    return;
  }
  if (static_cast<int>(cur.row1.size()) < shape.lambda1) {
    cur.row1.push_back(next);
    fill_shape(shape, next + 1, n, cur, out);
    cur.row1.pop_back();
  }
  if (static_cast<int>(cur.row2.size()) < shape.lambda2 && cur.row2.size() < cur.row1.size()) {
    cur.row2.push_back(next);
    fill_shape(shape, next + 1, n, cur, out);
    cur.row2.pop_back();
  }
  if (static_cast<int>(cur.column.size()) < shape.tail && !cur.row2.empty()) {
    cur.column.push_back(next);
    fill_shape(shape, next + 1, n, cur, out);
    cur.column.pop_back();
  }
}

}  // namespace detail

/// All standard fillings of one shape, sorted by (row1, row2).
inline std::vector<HookTableau> enumerate_shape(const HookShape& shape) {
  require(shape.valid(), errc::domain, "invalid hook shape");
  std::vector<HookTableau> out;
  HookTableau cur;
  detail::fill_shape(shape, 1, shape.size(), cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Every standard hook tableau of order n with lambda1 - lambda2 = k, in
/// lexicographic order of (shape, row1, row2).
inline std::vector<HookTableau> enumerate_syt(int n, int k, int cap = default_enumeration_cap) {
  check_enumeration_size(n, cap);
  require(k >= 0 && k <= n, errc::domain,
          "row difference " + std::to_string(k) + " outside 0.." + std::to_string(n));
  std::vector<HookTableau> out;
  for (const auto& shape : hook_shapes(n, k)) {
    auto part = enumerate_shape(shape);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// S_k(2,1;n) by enumeration.
inline ExactInt s_count(int n, int k, int cap = default_enumeration_cap) {
  return ExactInt(enumerate_syt(n, k, cap).size());
}

/// SYT count over hook shapes with lambda2 <= 1, i.e. the (1,1)-hooks.
inline ExactInt s11_count(int n, int cap = default_enumeration_cap) {
  check_enumeration_size(n, cap);
  ExactInt total = 0;
  for (int k = 0; k <= n; ++k)
    for (const auto& shape : hook_shapes(n, k))
      if (shape.lambda2 <= 1) total += enumerate_shape(shape).size();
  return total;
}

inline std::string render_text(const HookTableau& t) {
  std::string out;
  auto line = [&](const std::vector<int>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cells[i]);
    }
    out += '\n';
  };
  line(t.row1);
  if (!t.row2.empty()) line(t.row2);
  for (int v : t.column) line({v});
  return out;
}

}  // namespace hump
