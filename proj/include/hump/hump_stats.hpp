#pragma once

// Humps (U F^r D factors) and peaks (r = 0) of step words, and the
// brute-force tallies HM_{n,k}, PM_{n,k}, SM_n and SM_{n,k}.

#include <cstddef>
#include <string>
#include <vector>

#include "hump/error.hpp"
#include "hump/exact_int.hpp"
#include "hump/path_core.hpp"
#include "hump/triangle.hpp"

namespace hump {

/// A hump located by the index of its up step. The height is the level
/// reached by that up step.
struct HumpOccurrence {
  std::size_t up_index = 0;
  std::size_t flat_run = 0;
  int height = 0;

  bool is_peak() const noexcept { return flat_run == 0; }
  std::size_t down_index() const noexcept { return up_index + flat_run + 1; }

  friend bool operator==(const HumpOccurrence&, const HumpOccurrence&) = default;
};

inline std::vector<HumpOccurrence> find_humps(const PathWord& w) {
  std::vector<HumpOccurrence> out;
  int height = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Step::up) {
      std::size_t j = i + 1;
      while (j < w.size() && w[j] == Step::flat) ++j;
      if (j < w.size() && w[j] == Step::down) out.push_back({i, j - i - 1, height + 1});
    }
    height += increment(w[i]);
  }
  return out;
}

/// The hump whose up step sits at `up_index`; NOT_IN_DOMAIN if none does.
inline HumpOccurrence hump_at(const PathWord& w, std::size_t up_index) {
  for (const auto& h : find_humps(w))
    if (h.up_index == up_index) return h;
  fail(errc::not_in_domain, "no hump starts at index " + std::to_string(up_index) + " of " + w.str());
}

// ---------------------------------------------------------------------------
// Brute-force tallies

struct HumpTallies {
  std::vector<ExactInt> humps;  // index k = height, index 0 unused
  std::vector<ExactInt> peaks;
};

/// One pass over the Motzkin paths of order n, counting every hump and peak by height.
inline HumpTallies tally_humps(int n, int cap = default_enumeration_cap) {
  HumpTallies t;
  const auto width = static_cast<std::size_t>(n / 2 + 1);
  t.humps.assign(width, 0);
  t.peaks.assign(width, 0);
  enumerate_paths(
      n, PathFilter::of(PathFlag::motzkin_path),
      [&](const PathWord& w) {
        for (const auto& h : find_humps(w)) {
          const auto k = static_cast<std::size_t>(h.height);
          ++t.humps[k];
          if (h.is_peak()) ++t.peaks[k];
        }
      },
      cap);
  return t;
}

/// Total number of humps over all Motzkin paths of order n (any n >= 0).
inline ExactInt hm_total_enum(int n, int cap = default_enumeration_cap) {
  ExactInt total = 0;
  for (const auto& v : tally_humps(n, cap).humps) total += v;
  return total;
}

namespace detail {

inline void check_table_bound(int n_max, int cap) {
  require(n_max >= 2, errc::domain, "table needs n_max >= 2, got " + std::to_string(n_max));
  check_enumeration_size(n_max, cap);
}

inline Triangle hump_triangle(int n_max, int cap, bool peaks_only) {
  check_table_bound(n_max, cap);
  std::vector<std::vector<ExactInt>> rows;
  for (int n = 2; n <= n_max; ++n) {
    auto t = tally_humps(n, cap);
    auto& src = peaks_only ? t.peaks : t.humps;
    rows.emplace_back(src.begin() + 1, src.end());
  }
  return Triangle(2, 1, std::move(rows));
}

}  // namespace detail

/// HM_{n,k} for 2 <= n <= n_max, 1 <= k <= n/2.
inline Triangle hm_table(int n_max, int cap = default_enumeration_cap) {
  return detail::hump_triangle(n_max, cap, false);
}

/// PM_{n,k} on the same domain as hm_table.
inline Triangle pm_table(int n_max, int cap = default_enumeration_cap) {
  return detail::hump_triangle(n_max, cap, true);
}

/// Number of free Motzkin paths of order n.
inline ExactInt sm_count(int n, int cap = default_enumeration_cap) {
  return count_paths(n, PathFilter::of(PathFlag::free_motzkin), cap);
}

/// Free Motzkin paths of order n with minimum height -k whose last non-flat step is U.
inline ExactInt sm_k_count(int n, int k, int cap = default_enumeration_cap) {
  require(n >= 2 && k >= 1, errc::domain,
          "sm_k_count(" + std::to_string(n) + "," + std::to_string(k) + ") needs n >= 2, k >= 1");
  return count_paths(n, PathFilter::of(PathFlag::free_motzkin | PathFlag::star_u).with_min(-k), cap);
}

}  // namespace hump
