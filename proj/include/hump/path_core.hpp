#pragma once

// Step words over {U, D, F}, the path classes used throughout the library,
// exhaustive enumeration, and Motzkin-prefix counts.
//
// Positions are 0-based everywhere in the API: step i of a word of order n
// is the (i+1)-th letter w_{i+1} in 1-based notation. The height profile has
// n+1 entries, entry i being the height reached after the first i steps.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hump/error.hpp"
#include "hump/exact_int.hpp"

namespace hump {

inline constexpr int default_enumeration_cap = 16;

enum class Step : char { up = 'U', down = 'D', flat = 'F' };

constexpr char to_char(Step s) noexcept { return static_cast<char>(s); }

constexpr int increment(Step s) noexcept {
  switch (s) {
    case Step::up: return 1;
    case Step::down: return -1;
    case Step::flat: return 0;
  }
  return 0;
}

constexpr Step swap_up_down(Step s) noexcept {
  switch (s) {
    case Step::up: return Step::down;
    case Step::down: return Step::up;
    case Step::flat: return Step::flat;
  }
  return s;
}

class PathWord {
 public:
  PathWord() = default;
  explicit PathWord(std::vector<Step> steps) : steps_(std::move(steps)) {}

  static PathWord repeat(Step s, std::size_t count) {
    return PathWord(std::vector<Step>(count, s));
  }

  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  Step operator[](std::size_t i) const { return steps_[i]; }
  std::span<const Step> steps() const noexcept { return steps_; }

  auto begin() const noexcept { return steps_.begin(); }
  auto end() const noexcept { return steps_.end(); }

  /// Sub-word [first, last).
  PathWord slice(std::size_t first, std::size_t last) const {
    return PathWord(std::vector<Step>(steps_.begin() + static_cast<std::ptrdiff_t>(first),
                                      steps_.begin() + static_cast<std::ptrdiff_t>(last)));
  }

  PathWord& append(const PathWord& other) {
    steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
    return *this;
  }
  PathWord& push_back(Step s) {
    steps_.push_back(s);
    return *this;
  }

  std::vector<int> height_profile() const {
    std::vector<int> h(steps_.size() + 1, 0);
    for (std::size_t i = 0; i < steps_.size(); ++i) h[i + 1] = h[i] + increment(steps_[i]);
    return h;
  }

  int end_height() const noexcept {
    int h = 0;
    for (Step s : steps_) h += increment(s);
    return h;
  }

  std::size_t count(Step s) const noexcept {
    return static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), s));
  }

  std::string str() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step s : steps_) out.push_back(to_char(s));
    return out;
  }

  friend bool operator==(const PathWord&, const PathWord&) = default;
  friend auto operator<=>(const PathWord& a, const PathWord& b) {
    return a.str() <=> b.str();
  }

 private:
  std::vector<Step> steps_;
};

inline PathWord operator+(PathWord a, const PathWord& b) { return a.append(b); }
inline PathWord operator+(PathWord a, Step s) { return a.push_back(s); }
inline PathWord operator+(Step s, const PathWord& b) { return PathWord::repeat(s, 1).append(b); }

inline PathWord parse_path(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'U': steps.push_back(Step::up); break;
      case 'D': steps.push_back(Step::down); break;
      case 'F': steps.push_back(Step::flat); break;
      default: throw invalid_character(i, text[i]);
    }
  }
  return PathWord(std::move(steps));
}

namespace literals {
inline PathWord operator""_path(const char* s, std::size_t n) { return parse_path({s, n}); }
}  // namespace literals

/// Reverse the word and swap U with D.
inline PathWord reverse_complement(const PathWord& w) {
  std::vector<Step> out;
  out.reserve(w.size());
  for (auto it = w.steps().rbegin(); it != w.steps().rend(); ++it) out.push_back(swap_up_down(*it));
  return PathWord(std::move(out));
}

// ---------------------------------------------------------------------------
// Classification

enum class PathFlag : std::uint8_t {
  motzkin_path = 1u << 0,
  motzkin_prefix = 1u << 1,
  free_motzkin = 1u << 2,
  dyck_prefix = 1u << 3,
  star_u = 1u << 4,  // last non-flat step is U
  d_star = 1u << 5,  // has a non-up step and the first one is D
};

using PathFlags = std::uint8_t;

constexpr PathFlags operator|(PathFlag a, PathFlag b) noexcept {
  return static_cast<PathFlags>(static_cast<PathFlags>(a) | static_cast<PathFlags>(b));
}
constexpr PathFlags operator|(PathFlags a, PathFlag b) noexcept {
  return static_cast<PathFlags>(a | static_cast<PathFlags>(b));
}

struct PathClass {
  PathFlags flags = 0;
  int end_height = 0;
  int min_height = 0;

  bool has(PathFlag f) const noexcept { return (flags & static_cast<PathFlags>(f)) != 0; }
  bool has_all(PathFlags fs) const noexcept { return (flags & fs) == fs; }

  bool motzkin_path() const noexcept { return has(PathFlag::motzkin_path); }
  bool motzkin_prefix() const noexcept { return has(PathFlag::motzkin_prefix); }
  bool free_motzkin() const noexcept { return has(PathFlag::free_motzkin); }
  bool dyck_prefix() const noexcept { return has(PathFlag::dyck_prefix); }
  bool star_u() const noexcept { return has(PathFlag::star_u); }
  bool d_star() const noexcept { return has(PathFlag::d_star); }

  friend bool operator==(const PathClass&, const PathClass&) = default;
};

inline PathClass classify(const PathWord& w) {
  PathClass c;
  int h = 0;
  int lo = 0;
  bool any_flat = false;
  std::optional<Step> last_non_flat;
  std::optional<Step> first_non_up;
  for (Step s : w) {
    h += increment(s);
    lo = std::min(lo, h);
    if (s == Step::flat) any_flat = true;
    if (s != Step::flat) last_non_flat = s;
    if (s != Step::up && !first_non_up) first_non_up = s;
  }
  c.end_height = h;
  c.min_height = lo;

  PathFlags f = 0;
  const bool prefix = lo >= 0;
  if (prefix) f = f | PathFlag::motzkin_prefix;
  if (prefix && h == 0) f = f | PathFlag::motzkin_path;
  if (h == 0) f = f | PathFlag::free_motzkin;
  if (prefix && !any_flat) f = f | PathFlag::dyck_prefix;
  if (last_non_flat == Step::up) f = f | PathFlag::star_u;
  if (first_non_up == Step::down) f = f | PathFlag::d_star;
  c.flags = f;
  return c;
}

// ---------------------------------------------------------------------------
// Enumeration

/// Predicate over PathClass: all `required` flags set, plus optional exact
/// end and minimum heights.
struct PathFilter {
  PathFlags required = 0;
  std::optional<int> end_height;
  std::optional<int> min_height;

  bool matches(const PathClass& c) const noexcept {
    if (!c.has_all(required)) return false;
    if (end_height && c.end_height != *end_height) return false;
    if (min_height && c.min_height != *min_height) return false;
    return true;
  }

  static PathFilter all() { return {}; }
  static PathFilter of(PathFlags flags) { return {flags, std::nullopt, std::nullopt}; }
  static PathFilter of(PathFlag flag) { return of(static_cast<PathFlags>(flag)); }
  PathFilter& ending_at(int h) {
    end_height = h;
    return *this;
  }
  PathFilter& with_min(int h) {
    min_height = h;
    return *this;
  }
};

inline void check_enumeration_size(int n, int cap) {
  require(n >= 0, errc::negative_index, "order must be non-negative, got " + std::to_string(n));
  require(n <= cap, errc::size_limit,
          "order " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));
}

namespace detail {

// Depth-first walk in U < D < F order. Branches that cannot satisfy the
// filter's sign or end-height constraints are cut, which leaves the relative
// order of the surviving words unchanged.
class PathEnumerator {
 public:
  PathEnumerator(int n, const PathFilter& filter, const std::function<void(const PathWord&)>& visit)
      : n_(n), filter_(filter), visit_(visit) {
    const auto req = [&](PathFlag f) { return (filter.required & static_cast<PathFlags>(f)) != 0; };
    nonnegative_ = req(PathFlag::motzkin_path) || req(PathFlag::motzkin_prefix) ||
                   req(PathFlag::dyck_prefix);
    no_flats_ = req(PathFlag::dyck_prefix);
    if (filter.end_height) target_ = *filter.end_height;
    if (req(PathFlag::motzkin_path) || req(PathFlag::free_motzkin)) {
      if (target_ && *target_ != 0) impossible_ = true;
      target_ = 0;
    }
    if (filter.min_height) floor_ = *filter.min_height;
    buffer_.reserve(static_cast<std::size_t>(n));
  }

  void run() {
    if (!impossible_) descend(0, 0);
  }

 private:
  void descend(int depth, int height) {
    if (depth == n_) {
      PathWord w(buffer_);
      if (filter_.matches(classify(w))) visit_(w);
      return;
    }
    for (Step s : {Step::up, Step::down, Step::flat}) {
      if (no_flats_ && s == Step::flat) continue;
      const int h = height + increment(s);
      if (nonnegative_ && h < 0) continue;
      if (floor_ && h < *floor_) continue;
      const int remaining = n_ - depth - 1;
      if (target_ && std::abs(*target_ - h) > remaining) continue;
      buffer_.push_back(s);
      descend(depth + 1, h);
      buffer_.pop_back();
    }
  }

  int n_;
  const PathFilter& filter_;
  const std::function<void(const PathWord&)>& visit_;
  bool nonnegative_ = false;
  bool no_flats_ = false;
  bool impossible_ = false;
  std::optional<int> target_;
  std::optional<int> floor_;
  std::vector<Step> buffer_;
};

}  // namespace detail

/// Calls `visit` once for every word of order n that satisfies `filter`, in
/// lexicographic order with U < D < F.
inline void enumerate_paths(int n, const PathFilter& filter,
                            const std::function<void(const PathWord&)>& visit,
                            int cap = default_enumeration_cap) {
  check_enumeration_size(n, cap);
  detail::PathEnumerator(n, filter, visit).run();
}

inline std::vector<PathWord> collect_paths(int n, const PathFilter& filter,
                                           int cap = default_enumeration_cap) {
  std::vector<PathWord> out;
  enumerate_paths(n, filter, [&](const PathWord& w) { out.push_back(w); }, cap);
  return out;
}

inline ExactInt count_paths(int n, const PathFilter& filter, int cap = default_enumeration_cap) {
  ExactInt total = 0;
  enumerate_paths(n, filter, [&](const PathWord&) { ++total; }, cap);
  return total;
}

// ---------------------------------------------------------------------------
// Motzkin prefix counts

/// Row n of MP_{n,k} for k = 0..n, from MP_{n,k} = MP_{n-1,k-1} + MP_{n-1,k} + MP_{n-1,k+1}.
inline std::vector<ExactInt> mp_row(int n) {
  require(n >= 0, errc::negative_index, "mp_row: n < 0");
  std::vector<ExactInt> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<ExactInt> next(static_cast<std::size_t>(m) + 1, 0);
    for (int k = 0; k <= m; ++k) {
      auto at = [&](int j) -> ExactInt {
        return (j >= 0 && j < static_cast<int>(row.size())) ? row[static_cast<std::size_t>(j)] : 0;
      };
      next[static_cast<std::size_t>(k)] = at(k - 1) + at(k) + at(k + 1);
    }
    row = std::move(next);
  }
  return row;
}

inline ExactInt mp_count(int n, int k) {
  require(n >= 0 && k >= 0, errc::negative_index,
          "mp_count(" + std::to_string(n) + "," + std::to_string(k) + ")");
  if (k > n) return 0;
  return mp_row(n)[static_cast<std::size_t>(k)];
}

}  // namespace hump
