#pragma once

// Exhaustive certification of the bijections at a fixed order: both
// roundtrips, and forward image equal to the stated codomain as a set.

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hump/bijections.hpp"
#include "hump/hook_tableaux.hpp"
#include "hump/hump_stats.hpp"
#include "hump/path_core.hpp"

namespace hump {

struct BijectionCheck {
  std::string map;
  int order = 0;
  std::size_t domain_size = 0;
  std::size_t codomain_size = 0;
  std::optional<std::string> failure;

  bool passed() const noexcept { return !failure; }
};

inline std::string describe(const PathWord& w) { return w.str(); }
inline std::string describe(const HumpedPath& hp) {
  return hp.path.str() + "@" + std::to_string(hp.hump.up_index);
}
inline std::string describe(const HookTableau& t) {
  std::ostringstream os;
  auto list = [&](const std::vector<int>& v) {
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << '}';
  };
  list(t.row1);
  os << '/';
  list(t.row2);
  os << '/';
  list(t.column);
  return os.str();
}

/// Checks fwd: domain -> codomain is a bijection with inverse inv. `extra`
/// may add a per-element property; it returns an error text on violation.
template <class X, class Y>
BijectionCheck certify_bijection(std::string name, int order, const std::vector<X>& domain,
                                 const std::vector<Y>& codomain, const std::function<Y(const X&)>& fwd,
                                 const std::function<X(const Y&)>& inv,
                                 const std::function<std::optional<std::string>(const X&, const Y&)>& extra = {}) {
  BijectionCheck out{std::move(name), order, domain.size(), codomain.size(), std::nullopt};
  const std::set<Y> target(codomain.begin(), codomain.end());
  std::set<Y> image;
  auto fail_with = [&](std::string why) {
    out.failure = std::move(why);
    return out;
  };
  try {
    for (const auto& x : domain) {
      const Y y = fwd(x);
      if (!target.count(y)) return fail_with("image of " + describe(x) + " = " + describe(y) + " outside codomain");
      if (!(inv(y) == x)) return fail_with("inverse(forward(" + describe(x) + ")) != input");
      if (extra)
        if (auto bad = extra(x, y)) return fail_with(*bad);
      image.insert(y);
    }
    if (image.size() != domain.size()) return fail_with("forward map is not injective");
    if (image != target)
      return fail_with("image has " + std::to_string(image.size()) + " elements, codomain " +
                       std::to_string(target.size()));
    for (const auto& y : codomain) {
      const X x = inv(y);
      if (!(fwd(x) == y)) return fail_with("forward(inverse(" + describe(y) + ")) != input");
    }
  } catch (const error& e) {
    return fail_with(e.what());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Domain and codomain sets at order n

inline std::vector<HumpedPath> humped_paths(int n, int cap = default_enumeration_cap) {
  std::vector<HumpedPath> out;
  enumerate_paths(
      n, PathFilter::of(PathFlag::motzkin_path),
      [&](const PathWord& w) {
        for (const auto& h : find_humps(w)) out.push_back({w, h});
      },
      cap);
  return out;
}

inline std::vector<PathWord> words_where(int n, const std::function<bool(const PathWord&)>& keep,
                                         int cap = default_enumeration_cap) {
  std::vector<PathWord> out;
  enumerate_paths(
      n, PathFilter::all(),
      [&](const PathWord& w) {
        if (keep(w)) out.push_back(w);
      },
      cap);
  return out;
}

/// Standard hook tableaux of order n with row difference <= n-2.
inline std::vector<HookTableau> phi_tableaux(int n, int cap = default_enumeration_cap) {
  std::vector<HookTableau> out;
  for (int k = 0; k + 2 <= n; ++k) {
    auto part = enumerate_syt(n, k, cap);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// Certifies every map at order n (n >= 1). f is certified from order n onto
/// orders n and n+1, so n+1 must also be within the cap.
inline std::vector<BijectionCheck> certify_all_bijections(int n, int cap = default_enumeration_cap) {
  using W = PathWord;
  using H = HumpedPath;
  using T = HookTableau;
  std::vector<BijectionCheck> out;

  const auto humped = humped_paths(n, cap);
  const auto even_star_u = words_where(n, in_even_star_u, cap);
  const auto free_star_u = words_where(n, in_free_star_u, cap);
  const auto d_star = words_where(n, in_d_star_range, cap);
  const auto tableaux = phi_tableaux(n, cap);

  out.push_back(certify_bijection<H, W>(
      "psi", n, humped, even_star_u, psi_forward, psi_inverse,
      [](const H& x, const W& y) -> std::optional<std::string> {
        if (y.end_height() != 2 * x.hump.height) return "psi height refinement fails at " + describe(x);
        const bool ends_up = !y.empty() && y[y.size() - 1] == Step::up;
        if (ends_up != x.hump.is_peak()) return "psi peak refinement fails at " + describe(x);
        return std::nullopt;
      }));

  out.push_back(certify_bijection<H, W>(
      "psi*", n, humped, free_star_u, psi_star_forward, psi_star_inverse,
      [](const H& x, const W& y) -> std::optional<std::string> {
        if (classify(y).min_height != -x.hump.height) return "psi* height refinement fails at " + describe(x);
        return std::nullopt;
      }));

  {
    std::vector<W> odd_prefixes;
    for (int m = 0; m < n; ++m) {
      auto part = words_where(
          m, [](const W& w) { return classify(w).motzkin_prefix() && w.end_height() % 2 == 1; }, cap);
      odd_prefixes.insert(odd_prefixes.end(), part.begin(), part.end());
    }
    out.push_back(certify_bijection<W, W>("rho1", n, even_star_u, odd_prefixes, rho1_forward,
                                          [n](const W& w) { return rho1_inverse(w, n); }));
  }

  {
    // rho2 is a bijection for each fixed k; fold all k into one report.
    BijectionCheck total{"rho2", n, 0, 0, std::nullopt};
    for (int k = 1; 2 * k <= n && total.passed(); ++k) {
      const auto dom = words_where(
          n, [k](const W& w) { return classify(w).motzkin_prefix() && w.end_height() == 2 * k; }, cap);
      const auto cod = words_where(
          n,
          [k](const W& w) {
            const auto c = classify(w);
            return c.motzkin_prefix() && c.star_u() && (c.end_height == 2 * k || c.end_height == 2 * k + 2);
          },
          cap);
      auto part = certify_bijection<W, W>("rho2", n, dom, cod, rho2_forward,
                                          [k](const W& w) { return rho2_inverse(w, k); });
      total.domain_size += part.domain_size;
      total.codomain_size += part.codomain_size;
      if (!part.passed()) total.failure = "k=" + std::to_string(k) + ": " + *part.failure;
    }
    out.push_back(total);
  }

  out.push_back(certify_bijection<T, W>("phi", n, tableaux, d_star, phi_forward, phi_inverse));
  out.push_back(certify_bijection<W, W>("varphi", n, d_star, even_star_u, varphi_forward, varphi_inverse));
  out.push_back(certify_bijection<H, T>("Phi", n, humped, tableaux, cap_phi_forward, cap_phi_inverse));

  {
    const auto dom = words_where(
        n, [n](const W& w) { return classify(w).motzkin_prefix() && w.end_height() < n; }, cap);
    auto cod = words_where(
        n + 1, [n](const W& w) { const auto c = classify(w); return c.motzkin_prefix() && c.d_star() && c.end_height < n; },
        cap);
    const auto same = words_where(
        n, [n](const W& w) { const auto c = classify(w); return c.motzkin_prefix() && c.d_star() && c.end_height < n; },
        cap);
    cod.insert(cod.end(), same.begin(), same.end());
    out.push_back(certify_bijection<W, W>("f", n, dom, cod, f_step_forward,
                                          [n](const W& w) { return f_step_inverse(w, n); }));
  }

  {
    auto star_u_prefix = [](const W& w) {
      const auto c = classify(w);
      return c.motzkin_prefix() && c.star_u() && c.end_height >= 1;
    };
    const auto dom = words_where(n, [&](const W& w) { return star_u_prefix(w) && weight(w) == -1; }, cap);
    const auto cod = words_where(
        n, [&](const W& w) { return star_u_prefix(w) && weight(w) == 1 && w[0] == Step::flat; }, cap);
    out.push_back(certify_bijection<W, W>("move_flat", n, dom, cod, move_flat, move_flat_inverse));
  }
  return out;
}

}  // namespace hump
