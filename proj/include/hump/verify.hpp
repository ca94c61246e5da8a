#pragma once

// Named identity checks over a range of orders. Each check compares two
// independently computed sides and records the first disagreement.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hump/bijections.hpp"
#include "hump/certify.hpp"
#include "hump/closed_forms.hpp"
#include "hump/error.hpp"
#include "hump/hook_tableaux.hpp"
#include "hump/hump_stats.hpp"
#include "hump/path_core.hpp"
#include "hump/series.hpp"
#include "hump/tables.hpp"

namespace hump {

struct Counterexample {
  std::string inputs;
  std::string lhs;
  std::string rhs;
};

struct VerificationReport {
  std::string identity;
  int n_from = 0;
  int n_to = 0;
  std::string k_range;
  std::size_t cases = 0;
  std::optional<Counterexample> counterexample;

  bool passed() const noexcept { return !counterexample; }
};

namespace detail {

class Checker {
 public:
  Checker(std::string identity, int n_from, int n_to, std::string k_range)
      : report_{std::move(identity), n_from, n_to, std::move(k_range), 0, std::nullopt} {}

  /// Records one comparison; keeps only the first failure.
  bool expect(const std::string& inputs, const ExactInt& lhs, const ExactInt& rhs) {
    ++report_.cases;
    if (lhs == rhs) return true;
    if (!report_.counterexample) report_.counterexample = Counterexample{inputs, to_decimal(lhs), to_decimal(rhs)};
    return false;
  }
  bool expect_true(const std::string& inputs, bool ok, const std::string& detail) {
    ++report_.cases;
    if (!ok && !report_.counterexample) report_.counterexample = Counterexample{inputs, detail, "expected to hold"};
    return ok;
  }
  bool failed() const noexcept { return report_.counterexample.has_value(); }
  VerificationReport done() const { return report_; }

 private:
  VerificationReport report_;
};

inline std::string nk(int n, int k) { return "n=" + std::to_string(n) + " k=" + std::to_string(k); }
inline std::string on(int n) { return "n=" + std::to_string(n); }

// S_{n,k} = S_k(2,1;n) + (-1)^(n+k+1), enumeration side.
inline ExactInt shifted_s(const Triangle& s, int n, int k) { return s.at(n, k) + sign_power(n + k + 1); }

}  // namespace detail

using IdentityCheck = std::function<VerificationReport(int n_max, int cap)>;

struct IdentitySpec {
  std::string name;
  std::string summary;
  int default_n_max;
  IdentityCheck run;
};

/// 2 HM_n + 1 = SM_n, and the binomial sum for HM_n.
inline VerificationReport verify_eq1(int n_max, int cap = default_enumeration_cap) {
  detail::Checker c("eq1", 0, n_max, "-");
  for (int n = 0; n <= n_max && !c.failed(); ++n) {
    const ExactInt hm = hm_total_enum(n, cap);
    c.expect(detail::on(n) + " 2*HM_n+1 vs SM_n", 2 * hm + 1, sm_count(n, cap));
    if (n >= 1) c.expect(detail::on(n) + " HM_n vs (sum C(n,j)C(n-j,j))/2", hm, hm_total_formula(n));
  }
  return c.done();
}

/// sum_k S_k(2,1;n) - 1 = HM_n.
inline VerificationReport verify_eq2(int n_max, int cap = default_enumeration_cap) {
  detail::Checker c("eq2", 0, n_max, "0..n");
  for (int n = 0; n <= n_max && !c.failed(); ++n) {
    ExactInt total = 0;
    for (int k = 0; k <= n; ++k) total += s_count(n, k, cap);
    c.expect(detail::on(n) + " sum_k S_k(2,1;n) - 1 vs HM_n", total - 1, hm_total_enum(n, cap));
  }
  return c.done();
}

/// HM_{n,k} = SM_{n,k}.
inline VerificationReport verify_eq3(int n_max, int cap = default_enumeration_cap) {
  detail::Checker c("eq3", 2, n_max, "1..n/2");
  if (n_max < 2) return c.done();
  const auto hm = hm_table(n_max, cap);
  for (int n = 2; n <= n_max && !c.failed(); ++n)
    for (int k = 1; 2 * k <= n; ++k) c.expect(detail::nk(n, k) + " HM vs SM", hm.at(n, k), sm_k_count(n, k, cap));
  return c.done();
}

/// HM_{n,k} = sum_{m=2k-1}^{n-1} MP_{m,2k-1}.
inline VerificationReport verify_eq4(int n_max, int cap = default_enumeration_cap) {
  detail::Checker c("eq4", 2, n_max, "1..n/2");
  if (n_max < 2) return c.done();
  const auto hm = hm_table(n_max, cap);
  for (int n = 2; n <= n_max && !c.failed(); ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      ExactInt sum = 0;
      for (int m = 2 * k - 1; m <= n - 1; ++m) sum += mp_count(m, 2 * k - 1);
      c.expect(detail::nk(n, k) + " HM vs sum MP", hm.at(n, k), sum);
    }
  return c.done();
}

/// MP_{n,2k} = HM_{n,k} + HM_{n,k+1}.
inline VerificationReport verify_eq5(int n_max, int cap = default_enumeration_cap) {
  detail::Checker c("eq5", 2, n_max, "1..n/2");
  if (n_max < 2) return c.done();
  const auto hm = hm_table(n_max, cap);
  for (int n = 2; n <= n_max && !c.failed(); ++n)
    for (int k = 1; 2 * k <= n; ++k)
      c.expect(detail::nk(n, k) + " MP_{n,2k} vs HM_{n,k}+HM_{n,k+1}", mp_count(n, 2 * k),
               hm.at(n, k) + hm.value_or_zero(n, k + 1));
  return c.done();
}

/// S_{n+1,k} + S_{n,k} = MP_{n,k} for n >= k; touches order n_max + 1.
inline VerificationReport verify_rec31(int n_max, int cap = default_enumeration_cap) {
  detail::Checker c("rec31", 0, n_max, "0..n");
  const auto s = s_enum_table(n_max + 1, cap);
  for (int n = 0; n <= n_max && !c.failed(); ++n)
    for (int k = 0; k <= n; ++k)
      c.expect(detail::nk(n, k) + " S_{n+1,k}+S_{n,k} vs MP_{n,k}",
               detail::shifted_s(s, n + 1, k) + detail::shifted_s(s, n, k), mp_count(n, k));
  return c.done();
}

/// S_{2k-1}(2,1;n+1) + S_{2k-1}(2,1;n) = HM_{n+1,k} - HM_{n,k}; touches order n_max + 1.
inline VerificationReport verify_cor34(int n_max, int cap = default_enumeration_cap) {
  detail::Checker c("cor34", 2, n_max, "1..n/2");
  if (n_max < 2) return c.done();
  const auto hm = hm_table(n_max + 1, cap);
  for (int n = 2; n <= n_max && !c.failed(); ++n)
    for (int k = 1; 2 * k <= n; ++k)
      c.expect(detail::nk(n, k) + " S_{2k-1}(n+1)+S_{2k-1}(n) vs HM_{n+1,k}-HM_{n,k}",
               s_count(n + 1, 2 * k - 1, cap) + s_count(n, 2 * k - 1, cap), hm.at(n + 1, k) - hm.at(n, k));
  return c.done();
}

inline VerificationReport verify_riordan_hm(int n_max, int cap = default_enumeration_cap) {
  detail::Checker c("riordan-hm", 2, n_max, "1..n/2");
  if (n_max < 2) return c.done();
  const auto hm = hm_table(n_max, cap);
  const auto series = hm_series_table(n_max);
  for (int n = 2; n <= n_max && !c.failed(); ++n)
    for (int k = 1; 2 * k <= n; ++k)
      c.expect(detail::nk(n, k) + " [x^n] x^2k M^2k/(1-x) vs HM", series.at(n, k), hm.at(n, k));
  return c.done();
}

inline VerificationReport verify_riordan_s(int n_max, int cap = default_enumeration_cap) {
  detail::Checker c("riordan-s", 0, n_max, "0..n");
  const auto s = s_enum_table(n_max, cap);
  const auto series = s_shifted_series_table(n_max);
  for (int n = 0; n <= n_max && !c.failed(); ++n)
    for (int k = 0; k <= n; ++k)
      c.expect(detail::nk(n, k) + " [x^n] (xM)^(k+1)/(1+x) vs S_{n,k}", series.at(n, k), detail::shifted_s(s, n, k));
  return c.done();
}

/// Hump and peak formulas against enumeration.
inline VerificationReport verify_thm11(int n_max, int cap = default_enumeration_cap) {
  detail::Checker c("thm11", 2, n_max, "1..n/2");
  if (n_max < 2) return c.done();
  const auto hm = hm_table(n_max, cap);
  const auto pm = pm_table(n_max, cap);
  for (int n = 2; n <= n_max && !c.failed(); ++n)
    for (int k = 1; 2 * k <= n; ++k) {
      c.expect(detail::nk(n, k) + " hm_formula vs HM", hm_formula(n, k), hm.at(n, k));
      c.expect(detail::nk(n, k) + " pm_formula vs PM", pm_formula(n, k), pm.at(n, k));
    }
  return c.done();
}

/// Tableau formula against enumeration, the signed-weight sum, and the
/// flat-moving bijection behind it.
inline VerificationReport verify_thm12(int n_max, int cap = default_enumeration_cap) {
  detail::Checker c("thm12", 0, n_max, "0..n");
  const auto s = s_enum_table(n_max, cap);
  for (int n = 2; n <= n_max && !c.failed(); ++n)
    for (int k = 0; k + 2 <= n; ++k) c.expect(detail::nk(n, k) + " s_formula vs S_k(2,1;n)", s_formula(n, k), s.at(n, k));

  for (int n = 0; n <= n_max && !c.failed(); ++n) {
    std::map<int, ExactInt> signed_sum;
    std::map<int, std::set<PathWord>> negative_images, positive_flat_initial;
    enumerate_paths(
        n, PathFilter::of(PathFlag::motzkin_prefix | PathFlag::star_u),
        [&](const PathWord& w) {
          const int k = w.end_height() - 1;
          const int wt = weight(w);
          signed_sum[k] += wt;
          if (wt == -1) negative_images[k].insert(move_flat(w));
          else if (w[0] == Step::flat) positive_flat_initial[k].insert(w);
        },
        cap);
    for (int k = 0; k <= n; ++k) {
      c.expect(detail::nk(n, k) + " sum of weights over MP_{n,k+1}*U vs S_{n,k}", signed_sum[k],
               detail::shifted_s(s, n, k));
      c.expect_true(detail::nk(n, k), negative_images[k] == positive_flat_initial[k],
                    "move_flat image differs from the weight +1 flat-initial set");
    }
  }
  return c.done();
}

/// [x^n] x^k M^(k+1) against the prefix recurrence and against enumeration.
inline VerificationReport verify_eq21(int n_max, int cap = default_enumeration_cap) {
  detail::Checker c("eq21", 0, n_max, "0..n");
  const auto series = mp_gf_check(n_max);
  const auto enumerated = mp_enum_table(n_max, cap);
  for (int n = 0; n <= n_max && !c.failed(); ++n)
    for (int k = 0; k <= n; ++k) {
      c.expect(detail::nk(n, k) + " series vs recurrence", series.at(n, k), mp_count(n, k));
      c.expect(detail::nk(n, k) + " series vs enumeration", series.at(n, k), enumerated.at(n, k));
    }
  return c.done();
}

/// Every divided summand of the closed formulas is exact, n <= n_max.
inline VerificationReport verify_integrality(int n_max, int /*cap*/ = default_enumeration_cap) {
  detail::Checker c("integrality", 1, n_max, "full formula domains");
  auto guarded = [&](const std::string& what, const std::function<void()>& body) {
    try {
      body();
      c.expect_true(what, true, "");
    } catch (const error& e) {
      c.expect_true(what, false, e.what());
    }
  };
  for (int n = 1; n <= n_max && !c.failed(); ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      guarded("hm_formula " + detail::nk(n, k), [&] { hm_formula(n, k); });
      guarded("pm_formula " + detail::nk(n, k), [&] { pm_formula(n, k); });
    }
    for (int k = 0; k + 2 <= n; ++k) guarded("s_formula " + detail::nk(n, k), [&] { s_formula(n, k); });
    guarded("hm_total_formula " + detail::on(n), [&] { hm_total_formula(n); });
    for (int m = 1; m <= n; ++m) guarded("dyck_prefix_end_u " + detail::nk(n, m), [&] { dyck_prefix_end_u(n, m); });
  }
  return c.done();
}

/// All bijection certificates for orders 1..n_max (f also touches n_max + 1).
inline VerificationReport verify_bijections(int n_max, int cap = default_enumeration_cap) {
  detail::Checker c("bijections", 1, n_max, "-");
  for (int n = 1; n <= n_max && !c.failed(); ++n)
    for (const auto& check : certify_all_bijections(n, cap))
      c.expect_true(check.map + " " + detail::on(n), check.passed(), check.failure.value_or(""));
  return c.done();
}

inline const std::vector<IdentitySpec>& identity_registry() {
  static const std::vector<IdentitySpec> registry = {
      {"eq1", "HM_n = (SM_n - 1)/2", 12, verify_eq1},
      {"eq2", "S(2,1;n) - 1 = HM_n", 12, verify_eq2},
      {"eq3", "HM_{n,k} = SM_{n,k}", 12, verify_eq3},
      {"eq4", "HM_{n,k} = sum_{m=2k-1}^{n-1} MP_{m,2k-1}", 12, verify_eq4},
      {"eq5", "MP_{n,2k} = HM_{n,k} + HM_{n,k+1}", 12, verify_eq5},
      {"rec31", "S_{n+1,k} + S_{n,k} = MP_{n,k}", 11, verify_rec31},
      {"cor34", "S_{2k-1}(2,1;n+1) + S_{2k-1}(2,1;n) = HM_{n+1,k} - HM_{n,k}", 11, verify_cor34},
      {"riordan-hm", "HM is the Riordan array (1/(1-x), x^2 M^2)", 12, verify_riordan_hm},
      {"riordan-s", "S_{n,k} is the Riordan array (xM/(1+x), xM)", 12, verify_riordan_s},
      {"thm11", "closed forms for HM_{n,k} and PM_{n,k}", 12, verify_thm11},
      {"thm12", "closed form for S_k(2,1;n) and its signed-weight proof", 12, verify_thm12},
      {"eq21", "sum_n MP_{n,k} x^n = x^k M^(k+1)", 14, verify_eq21},
      {"integrality", "exact divisions in every closed formula", 40, verify_integrality},
      {"bijections", "roundtrips and images of every bijection", 10, verify_bijections},
  };
  return registry;
}

inline const IdentitySpec* find_identity(const std::string& name) {
  for (const auto& spec : identity_registry())
    if (spec.name == name) return &spec;
  return nullptr;
}

}  // namespace hump
