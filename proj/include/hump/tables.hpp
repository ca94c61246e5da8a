#pragma once

// One entry point for every (kind, backend) combination of the four
// triangles: humps, peaks, hook tableaux and Motzkin prefixes.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hump/closed_forms.hpp"
#include "hump/error.hpp"
#include "hump/hook_tableaux.hpp"
#include "hump/hump_stats.hpp"
#include "hump/path_core.hpp"
#include "hump/series.hpp"
#include "hump/triangle.hpp"

namespace hump {

enum class TableKind { hm, pm, s, mp };
enum class Backend { enumeration, formula, series };

inline std::optional<TableKind> parse_table_kind(std::string_view s) {
  if (s == "hm") return TableKind::hm;
  if (s == "pm") return TableKind::pm;
  if (s == "s") return TableKind::s;
  if (s == "mp") return TableKind::mp;
  return std::nullopt;
}

inline std::optional<Backend> parse_backend(std::string_view s) {
  if (s == "enum") return Backend::enumeration;
  if (s == "formula") return Backend::formula;
  if (s == "series") return Backend::series;
  return std::nullopt;
}

/// pm has no series route and mp no closed formula.
inline bool backend_available(TableKind kind, Backend backend) {
  if (kind == TableKind::pm && backend == Backend::series) return false;
  if (kind == TableKind::mp && backend == Backend::formula) return false;
  return true;
}

/// MP_{n,k} for 0 <= k <= n <= n_max by tallying enumerated prefixes.
inline Triangle mp_enum_table(int n_max, int cap = default_enumeration_cap) {
  check_enumeration_size(n_max, cap);
  std::vector<std::vector<ExactInt>> rows;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<ExactInt> row(static_cast<std::size_t>(n) + 1, 0);
    enumerate_paths(
        n, PathFilter::of(PathFlag::motzkin_prefix),
        [&](const PathWord& w) { ++row[static_cast<std::size_t>(w.end_height())]; }, cap);
    rows.push_back(std::move(row));
  }
  return Triangle(0, 0, std::move(rows));
}

inline Triangle s_enum_table(int n_max, int cap = default_enumeration_cap) {
  check_enumeration_size(n_max, cap);
  return Triangle(0, n_max, 0, [](int n) { return n; }, [&](int n, int k) { return s_count(n, k, cap); });
}

inline Triangle make_table(TableKind kind, Backend backend, int n_max, int cap = default_enumeration_cap) {
  require(backend_available(kind, backend), errc::domain, "backend not available for this table");
  const auto half = [](int n) { return n / 2; };
  const auto diag = [](int n) { return n; };
  switch (kind) {
    case TableKind::hm:
      if (backend == Backend::enumeration) return hm_table(n_max, cap);
      if (backend == Backend::series) return hm_series_table(n_max);
      require(n_max >= 2, errc::domain, "table needs n_max >= 2");
      return Triangle(2, n_max, 1, half, hm_formula);
    case TableKind::pm:
      if (backend == Backend::enumeration) return pm_table(n_max, cap);
      require(n_max >= 2, errc::domain, "table needs n_max >= 2");
      return Triangle(2, n_max, 1, half, pm_formula);
    case TableKind::s:
      require(n_max >= 0, errc::domain, "table needs n_max >= 0");
      if (backend == Backend::enumeration) return s_enum_table(n_max, cap);
      if (backend == Backend::series) return s_series_table(n_max);
      return Triangle(0, n_max, 0, diag, s_value);
    case TableKind::mp:
      require(n_max >= 0, errc::domain, "table needs n_max >= 0");
      if (backend == Backend::enumeration) return mp_enum_table(n_max, cap);
      return mp_gf_check(n_max);
  }
  fail(errc::domain, "unknown table kind");
}

}  // namespace hump
