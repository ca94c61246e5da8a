#pragma once

// Forward and inverse forms of the maps between humped Motzkin paths,
// Motzkin prefixes, free Motzkin paths and (2,1)-hook tableaux.
//
// Notation used in the comments: MP(n,k) is the set of Motzkin prefixes of
// order n ending at height k; the suffix *U restricts to prefixes whose last
// non-flat step is U, and D* to those whose first non-up step is D.
//
// Every map checks full membership of its input before transforming and
// throws errc::not_in_domain otherwise. The `_traced` entry points also
// return the decomposition of the input word that the map operates on.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hump/error.hpp"
#include "hump/hook_tableaux.hpp"
#include "hump/hump_stats.hpp"
#include "hump/path_core.hpp"

namespace hump {

/// A Motzkin path together with one of its humps.
struct HumpedPath {
  PathWord path;
  HumpOccurrence hump;

  /// Looks up the hump whose up step is at `up_index`.
  static HumpedPath at(PathWord path, std::size_t up_index) {
    auto h = hump_at(path, up_index);
    return {std::move(path), h};
  }

  friend bool operator==(const HumpedPath&, const HumpedPath&) = default;
};

struct Segment {
  std::string name;
  std::size_t begin = 0;
  std::size_t end = 0;
  PathWord text;
};

/// Named consecutive pieces of a source word.
struct Decomposition {
  PathWord source;
  std::vector<Segment> segments;

  bool reproduces_source() const {
    PathWord joined;
    std::size_t pos = 0;
    for (const auto& s : segments) {
      if (s.begin != pos || s.end - s.begin != s.text.size()) return false;
      joined.append(s.text);
      pos = s.end;
    }
    return joined == source;
  }
};

template <class T>
struct Traced {
  T value;
  Decomposition trace;
};

namespace detail {

class SegmentCutter {
 public:
  explicit SegmentCutter(const PathWord& source) : d_{source, {}} {}

  SegmentCutter& take(std::string name, std::size_t length) {
    d_.segments.push_back({std::move(name), pos_, pos_ + length, d_.source.slice(pos_, pos_ + length)});
    pos_ += length;
    return *this;
  }
  SegmentCutter& rest(std::string name) { return take(std::move(name), d_.source.size() - pos_); }

  Decomposition done() const { return d_; }

 private:
  Decomposition d_;
  std::size_t pos_ = 0;
};

inline PathWord ups(std::size_t n) { return PathWord::repeat(Step::up, n); }
inline PathWord flats(std::size_t n) { return PathWord::repeat(Step::flat, n); }

inline std::optional<std::size_t> last_index_of(const PathWord& w, Step s) {
  for (std::size_t i = w.size(); i-- > 0;)
    if (w[i] == s) return i;
  return std::nullopt;
}

inline std::optional<std::size_t> last_non_flat(const PathWord& w) {
  for (std::size_t i = w.size(); i-- > 0;)
    if (w[i] != Step::flat) return i;
  return std::nullopt;
}

inline std::size_t leading_ups(const PathWord& w) {
  std::size_t r = 0;
  while (r < w.size() && w[r] == Step::up) ++r;
  return r;
}

inline void check_humped_path(const HumpedPath& hp) {
  require(classify(hp.path).motzkin_path(), errc::not_in_domain, hp.path.str() + " is not a Motzkin path");
  require(hump_at(hp.path, hp.hump.up_index) == hp.hump, errc::not_in_domain,
          "hump record does not match " + hp.path.str());
}

inline std::string word_of(const PathWord& w) { return "'" + w.str() + "'"; }

}  // namespace detail

// ---------------------------------------------------------------------------
// Membership predicates for the domains and codomains below.

/// MP(n,2k)*U for some k >= 1.
inline bool in_even_star_u(const PathWord& w) {
  const auto c = classify(w);
  return c.motzkin_prefix() && c.star_u() && c.end_height >= 2 && c.end_height % 2 == 0;
}

/// Free Motzkin path with negative minimum whose last non-flat step is U.
inline bool in_free_star_u(const PathWord& w) {
  const auto c = classify(w);
  return c.free_motzkin() && c.star_u() && c.min_height <= -1;
}

/// MP(n,k)D* with 0 <= k <= n-2.
inline bool in_d_star_range(const PathWord& w) {
  const auto c = classify(w);
  return c.motzkin_prefix() && c.d_star() && c.end_height + 2 <= static_cast<int>(w.size());
}

/// Standard hook tableau with lambda1 - lambda2 <= n - 2.
inline bool in_phi_domain(const HookTableau& t) {
  return !validate(t) && t.shape().row_difference() + 2 <= t.size();
}

inline int weight(const PathWord& w) {
  const auto last_up = detail::last_index_of(w, Step::up);
  require(last_up.has_value(), errc::not_in_domain, "weight needs an up step in " + detail::word_of(w));
  std::size_t flats_after = 0;
  for (std::size_t i = *last_up + 1; i < w.size(); ++i)
    if (w[i] == Step::flat) ++flats_after;
  return flats_after % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// psi: humped path of hump height k  <->  MP(n,2k)*U
//   M1 U F^r D M2  ->  M1 U rc(M2) U F^r

inline Traced<PathWord> psi_forward_traced(const HumpedPath& hp) {
  detail::check_humped_path(hp);
  const auto& h = hp.hump;
  const auto& m = hp.path;
  const auto trace = detail::SegmentCutter(m)
                         .take("M1", h.up_index)
                         .take("P", h.flat_run + 2)
                         .rest("M2")
                         .done();
  const auto& m1 = trace.segments[0].text;
  const auto& m2 = trace.segments[2].text;
  PathWord out = m1 + Step::up + reverse_complement(m2) + Step::up + detail::flats(h.flat_run);
  return {std::move(out), trace};
}

inline Traced<HumpedPath> psi_inverse_traced(const PathWord& w) {
  require(in_even_star_u(w), errc::not_in_domain,
          detail::word_of(w) + " is not in MP(n,2k)*U with k >= 1");
  const int k = w.end_height() / 2;
  const std::size_t last_up = *detail::last_index_of(w, Step::up);
  const std::size_t r = w.size() - 1 - last_up;
  const auto profile = w.height_profile();
  // Last point before the final U at height k-1; the path stays >= k after it.
  std::size_t split = last_up;
  while (profile[split] != k - 1) --split;

  const auto trace = detail::SegmentCutter(w)
                         .take("M1", split)
                         .take("U", 1)
                         .take("rc(M2)", last_up - split - 1)
                         .take("U", 1)
                         .rest("F^r")
                         .done();
  const auto& m1 = trace.segments[0].text;
  const auto& m2_bar = trace.segments[2].text;
  PathWord m = m1 + Step::up + detail::flats(r) + Step::down + reverse_complement(m2_bar);
  return {HumpedPath{std::move(m), {split, r, k}}, trace};
}

inline PathWord psi_forward(const HumpedPath& hp) { return psi_forward_traced(hp).value; }
inline HumpedPath psi_inverse(const PathWord& w) { return psi_inverse_traced(w).value; }

// ---------------------------------------------------------------------------
// psi*: humped path of hump height k  <->  free Motzkin path with minimum -k, last non-flat U
//   M1 U F^r D M2  ->  M2 D M1 U F^r

inline Traced<PathWord> psi_star_forward_traced(const HumpedPath& hp) {
  detail::check_humped_path(hp);
  const auto& h = hp.hump;
  const auto trace = detail::SegmentCutter(hp.path)
                         .take("M1", h.up_index)
                         .take("P", h.flat_run + 2)
                         .rest("M2")
                         .done();
  const auto& m1 = trace.segments[0].text;
  const auto& m2 = trace.segments[2].text;
  PathWord out = m2 + Step::down + m1 + Step::up + detail::flats(h.flat_run);
  return {std::move(out), trace};
}

inline Traced<HumpedPath> psi_star_inverse_traced(const PathWord& w) {
  require(in_free_star_u(w), errc::not_in_domain,
          detail::word_of(w) + " is not a free Motzkin path with negative minimum ending in U F^r");
  const auto c = classify(w);
  const int k = -c.min_height;
  const std::size_t last_up = *detail::last_index_of(w, Step::up);
  const std::size_t r = w.size() - 1 - last_up;
  const auto profile = w.height_profile();
  // The inserted D is the step into the first visit of the minimum: M2 never
  // drops below -(k-1).
  std::size_t first_min = 1;
  while (profile[first_min] != -k) ++first_min;

  const auto trace = detail::SegmentCutter(w)
                         .take("M2", first_min - 1)
                         .take("D", 1)
                         .take("M1", last_up - first_min)
                         .take("U", 1)
                         .rest("F^r")
                         .done();
  const auto& m2 = trace.segments[0].text;
  const auto& m1 = trace.segments[2].text;
  PathWord m = m1 + Step::up + detail::flats(r) + Step::down + m2;
  return {HumpedPath{std::move(m), {m1.size(), r, k}}, trace};
}

inline PathWord psi_star_forward(const HumpedPath& hp) { return psi_star_forward_traced(hp).value; }
inline HumpedPath psi_star_inverse(const PathWord& w) { return psi_star_inverse_traced(w).value; }

// ---------------------------------------------------------------------------
// rho1: MP(n,2k)*U  <->  union over 2k-1 <= m <= n-1 of MP(m,2k-1)
//   M1 U F^r  ->  M1

inline Traced<PathWord> rho1_forward_traced(const PathWord& w) {
  require(in_even_star_u(w), errc::not_in_domain,
          detail::word_of(w) + " is not in MP(n,2k)*U with k >= 1");
  const std::size_t last_up = *detail::last_index_of(w, Step::up);
  auto trace = detail::SegmentCutter(w).take("M1", last_up).take("U", 1).rest("F^r").done();
  auto out = trace.segments[0].text;
  return {std::move(out), std::move(trace)};
}

/// Appends U F^(n-m-1) to a prefix of order m < n ending at odd height.
inline Traced<PathWord> rho1_inverse_traced(const PathWord& w, int n) {
  const auto c = classify(w);
  require(c.motzkin_prefix() && c.end_height % 2 == 1, errc::not_in_domain,
          detail::word_of(w) + " is not a Motzkin prefix ending at odd height");
  require(n > static_cast<int>(w.size()), errc::not_in_domain,
          "target order " + std::to_string(n) + " must exceed " + std::to_string(w.size()));
  auto trace = detail::SegmentCutter(w).rest("M1").done();
  PathWord out = w + Step::up + detail::flats(static_cast<std::size_t>(n) - w.size() - 1);
  return {std::move(out), std::move(trace)};
}

inline PathWord rho1_forward(const PathWord& w) { return rho1_forward_traced(w).value; }
inline PathWord rho1_inverse(const PathWord& w, int n) { return rho1_inverse_traced(w, n).value; }

// ---------------------------------------------------------------------------
// rho2: MP(n,2k)  <->  MP(n,2k)*U  u  MP(n,2k+2)*U, k >= 1
//   identity on *U members, otherwise the last D becomes U.

inline Traced<PathWord> rho2_forward_traced(const PathWord& w) {
  const auto c = classify(w);
  require(c.motzkin_prefix() && c.end_height >= 2 && c.end_height % 2 == 0, errc::not_in_domain,
          detail::word_of(w) + " is not in MP(n,2k) with k >= 1");
  if (c.star_u()) return {w, detail::SegmentCutter(w).rest("M").done()};
  const std::size_t last_down = *detail::last_non_flat(w);
  auto trace = detail::SegmentCutter(w).take("M1", last_down).take("D", 1).rest("F^r").done();
  std::vector<Step> steps(w.begin(), w.end());
  steps[last_down] = Step::up;
  return {PathWord(std::move(steps)), std::move(trace)};
}

/// Inverse onto MP(n,2k) for the given k: identity at end height 2k, the
/// last U lowered to D at end height 2k+2.
inline Traced<PathWord> rho2_inverse_traced(const PathWord& w, int k) {
  const auto c = classify(w);
  require(k >= 1, errc::not_in_domain, "rho2 inverse needs k >= 1");
  require(c.motzkin_prefix() && c.star_u() && (c.end_height == 2 * k || c.end_height == 2 * k + 2),
          errc::not_in_domain,
          detail::word_of(w) + " is not in MP(n," + std::to_string(2 * k) + ")*U or MP(n," +
              std::to_string(2 * k + 2) + ")*U");
  if (c.end_height == 2 * k) return {w, detail::SegmentCutter(w).rest("M").done()};
  const std::size_t last_up = *detail::last_index_of(w, Step::up);
  auto trace = detail::SegmentCutter(w).take("M1", last_up).take("U", 1).rest("F^r").done();
  std::vector<Step> steps(w.begin(), w.end());
  steps[last_up] = Step::down;
  return {PathWord(std::move(steps)), std::move(trace)};
}

inline PathWord rho2_forward(const PathWord& w) { return rho2_forward_traced(w).value; }
inline PathWord rho2_inverse(const PathWord& w, int k) { return rho2_inverse_traced(w, k).value; }

// ---------------------------------------------------------------------------
// phi: hook tableau with lambda1 - lambda2 = k <= n-2  <->  MP(n,k)D*
// Letter i is U, D or F as i sits in row 1, row 2 or the column tail.

inline PathWord phi_forward(const HookTableau& t) {
  if (auto bad = validate(t)) fail(errc::not_in_domain, "tableau is not standard: " + *bad);
  require(in_phi_domain(t), errc::not_in_domain,
          "row difference " + std::to_string(t.shape().row_difference()) + " exceeds n-2");
  std::vector<Step> steps(static_cast<std::size_t>(t.size()), Step::flat);
  for (int v : t.row1) steps[static_cast<std::size_t>(v - 1)] = Step::up;
  for (int v : t.row2) steps[static_cast<std::size_t>(v - 1)] = Step::down;
  return PathWord(std::move(steps));
}

inline HookTableau phi_inverse(const PathWord& w) {
  require(in_d_star_range(w), errc::not_in_domain,
          detail::word_of(w) + " is not in MP(n,k)D* with k <= n-2");
  HookTableau t;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int v = static_cast<int>(i) + 1;
    switch (w[i]) {
      case Step::up: t.row1.push_back(v); break;
      case Step::down: t.row2.push_back(v); break;
      case Step::flat: t.column.push_back(v); break;
    }
  }
  return t;
}

inline Traced<PathWord> phi_forward_traced(const HookTableau& t) {
  auto w = phi_forward(t);
  return {w, detail::SegmentCutter(w).rest("w").done()};
}
inline Traced<HookTableau> phi_inverse_traced(const PathWord& w) {
  auto t = phi_inverse(w);
  return {std::move(t), detail::SegmentCutter(w).rest("w").done()};
}

// ---------------------------------------------------------------------------
// varphi: union over 0 <= k <= n-2 of MP(n,k)D*  <->  union over k >= 1 of MP(n,2k)*U
//   k odd:              U^r D M1              ->  U^(r-1) F M1 U
//   k even, last U:     M                     ->  M
//   k even:             U^r1 D M1 D F^r2      ->  U^(r1-1) F M1 U F^(r2+1)
//   k even:             U^r1 D F^r2           ->  U^(r1+1) F^r2

inline Traced<PathWord> varphi_forward_traced(const PathWord& w) {
  require(in_d_star_range(w), errc::not_in_domain,
          detail::word_of(w) + " is not in MP(n,k)D* with k <= n-2");
  const auto c = classify(w);
  const std::size_t r = detail::leading_ups(w);  // w[r] is the first D
  const std::size_t n = w.size();
  using detail::flats;
  using detail::ups;

  if (c.end_height % 2 == 1) {
    auto trace = detail::SegmentCutter(w).take("U^r", r).take("D", 1).rest("M1").done();
    PathWord out = ups(r - 1) + Step::flat + trace.segments[2].text + Step::up;
    return {std::move(out), std::move(trace)};
  }
  if (c.star_u()) return {w, detail::SegmentCutter(w).rest("M").done()};

  const std::size_t last_down = *detail::last_non_flat(w);
  if (last_down == r) {
    auto trace = detail::SegmentCutter(w).take("U^r1", r).take("D", 1).rest("F^r2").done();
    PathWord out = ups(r + 1) + flats(n - r - 1);
    return {std::move(out), std::move(trace)};
  }
  auto trace = detail::SegmentCutter(w)
                   .take("U^r1", r)
                   .take("D", 1)
                   .take("M1", last_down - r - 1)
                   .take("D", 1)
                   .rest("F^r2")
                   .done();
  const std::size_t r2 = n - 1 - last_down;
  PathWord out = ups(r - 1) + Step::flat + trace.segments[2].text + Step::up + flats(r2 + 1);
  return {std::move(out), std::move(trace)};
}

inline Traced<PathWord> varphi_inverse_traced(const PathWord& w) {
  require(in_even_star_u(w), errc::not_in_domain,
          detail::word_of(w) + " is not in MP(n,2k)*U with k >= 1");
  const auto c = classify(w);
  if (c.d_star()) return {w, detail::SegmentCutter(w).rest("M").done()};

  const std::size_t n = w.size();
  const std::size_t r1 = detail::leading_ups(w);  // w[r1] is F unless w = U^n
  using detail::flats;
  using detail::ups;
  const std::size_t last_up = *detail::last_index_of(w, Step::up);

  if (last_up < r1) {
    // U^2k F^(n-2k)
    auto trace = detail::SegmentCutter(w).take("U^2k", r1).rest("F^(n-2k)").done();
    PathWord out = ups(r1 - 1) + Step::down + flats(n - r1);
    return {std::move(out), std::move(trace)};
  }
  if (last_up == n - 1) {
    auto trace = detail::SegmentCutter(w).take("U^r", r1).take("F", 1).take("M1", last_up - r1 - 1).rest("U").done();
    PathWord out = ups(r1 + 1) + Step::down + trace.segments[2].text;
    return {std::move(out), std::move(trace)};
  }
  auto trace = detail::SegmentCutter(w)
                   .take("U^r1", r1)
                   .take("F", 1)
                   .take("M1", last_up - r1 - 1)
                   .take("U", 1)
                   .rest("F^r2")
                   .done();
  const std::size_t r2 = n - 1 - last_up;
  PathWord out = ups(r1 + 1) + Step::down + trace.segments[2].text + Step::down + flats(r2 - 1);
  return {std::move(out), std::move(trace)};
}

inline PathWord varphi_forward(const PathWord& w) { return varphi_forward_traced(w).value; }
inline PathWord varphi_inverse(const PathWord& w) { return varphi_inverse_traced(w).value; }

// ---------------------------------------------------------------------------
// Phi = phi^-1 o varphi^-1 o psi: humped paths of order n  <->  hook tableaux with k <= n-2

struct CapPhiStages {
  Traced<PathWord> psi;
  Traced<PathWord> varphi;
  Traced<HookTableau> phi;
};

inline CapPhiStages cap_phi_forward_stages(const HumpedPath& hp) {
  auto a = psi_forward_traced(hp);
  auto b = varphi_inverse_traced(a.value);
  auto c = phi_inverse_traced(b.value);
  return {std::move(a), std::move(b), std::move(c)};
}

inline HookTableau cap_phi_forward(const HumpedPath& hp) {
  return phi_inverse(varphi_inverse(psi_forward(hp)));
}

inline HumpedPath cap_phi_inverse(const HookTableau& t) {
  return psi_inverse(varphi_forward(phi_forward(t)));
}

// ---------------------------------------------------------------------------
// f: MP(n,k), n > k  <->  MP(n+1,k)D*  u  MP(n,k)D*
//   identity on D* members, otherwise U^r F M1  ->  U^(r+1) D M1

inline Traced<PathWord> f_step_forward_traced(const PathWord& w) {
  const auto c = classify(w);
  require(c.motzkin_prefix() && c.end_height < static_cast<int>(w.size()), errc::not_in_domain,
          detail::word_of(w) + " is not in MP(n,k) with n > k");
  if (c.d_star()) return {w, detail::SegmentCutter(w).rest("M").done()};
  const std::size_t r = detail::leading_ups(w);
  auto trace = detail::SegmentCutter(w).take("U^r", r).take("F", 1).rest("M1").done();
  PathWord out = detail::ups(r + 1) + Step::down + trace.segments[2].text;
  return {std::move(out), std::move(trace)};
}

/// Inverse onto MP(n,k): words of order n are fixed, words of order n+1 lose
/// their first D.
inline Traced<PathWord> f_step_inverse_traced(const PathWord& w, int n) {
  const auto c = classify(w);
  const auto len = static_cast<int>(w.size());
  require(c.motzkin_prefix() && c.d_star() && (len == n || len == n + 1) && c.end_height < n,
          errc::not_in_domain,
          detail::word_of(w) + " is not in MP(" + std::to_string(n + 1) + ",k)D* or MP(" +
              std::to_string(n) + ",k)D* with k < " + std::to_string(n));
  if (len == n) return {w, detail::SegmentCutter(w).rest("M").done()};
  const std::size_t r = detail::leading_ups(w);
  auto trace = detail::SegmentCutter(w).take("U^(r+1)", r).take("D", 1).rest("M1").done();
  PathWord out = detail::ups(r - 1) + Step::flat + trace.segments[2].text;
  return {std::move(out), std::move(trace)};
}

inline PathWord f_step_forward(const PathWord& w) { return f_step_forward_traced(w).value; }
inline PathWord f_step_inverse(const PathWord& w, int n) { return f_step_inverse_traced(w, n).value; }

// ---------------------------------------------------------------------------
// Flat mover: weight -1 members of MP(n,k+1)*U  <->  weight +1 members starting with F

inline Traced<PathWord> move_flat_traced(const PathWord& w) {
  const auto c = classify(w);
  require(c.motzkin_prefix() && c.star_u() && c.end_height >= 1, errc::not_in_domain,
          detail::word_of(w) + " is not in MP(n,k+1)*U");
  require(weight(w) == -1, errc::not_in_domain, detail::word_of(w) + " has weight +1");
  // weight -1 forces a trailing flat run of odd length, so the last flat is the last step
  auto trace = detail::SegmentCutter(w).take("M", w.size() - 1).rest("F").done();
  PathWord out = Step::flat + trace.segments[0].text;
  return {std::move(out), std::move(trace)};
}

inline Traced<PathWord> move_flat_inverse_traced(const PathWord& w) {
  const auto c = classify(w);
  require(c.motzkin_prefix() && c.star_u() && c.end_height >= 1, errc::not_in_domain,
          detail::word_of(w) + " is not in MP(n,k+1)*U");
  require(weight(w) == 1 && !w.empty() && w[0] == Step::flat, errc::not_in_domain,
          detail::word_of(w) + " is not a weight +1 word starting with F");
  auto trace = detail::SegmentCutter(w).take("F", 1).rest("M").done();
  PathWord out = trace.segments[1].text + Step::flat;
  return {std::move(out), std::move(trace)};
}

inline PathWord move_flat(const PathWord& w) { return move_flat_traced(w).value; }
inline PathWord move_flat_inverse(const PathWord& w) { return move_flat_inverse_traced(w).value; }

}  // namespace hump
