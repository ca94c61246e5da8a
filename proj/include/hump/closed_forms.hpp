#pragma once

// Exact evaluation of the closed counting formulas. Every summand that
// involves a division is computed numerator-first and checked for a zero
// remainder; an inexact division raises errc::integrality.

#include <string>

#include "hump/error.hpp"
#include "hump/exact_int.hpp"

namespace hump {

/// C(a, b), zero whenever b < 0, b > a or a < 0.
inline ExactInt binom(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  ExactInt r = 1;
  for (long long i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

/// Ways to distribute `items` indistinguishable flats over `slots` gaps,
/// C(slots + items - 1, items), with exactly one way to place nothing.
inline ExactInt multichoose(long long slots, long long items) {
  if (items == 0) return 1;
  return binom(slots + items - 1, items);
}

/// numerator / denominator, which must divide exactly.
inline ExactInt exact_div(const ExactInt& numerator, const ExactInt& denominator,
                          const std::string& context) {
  require(denominator != 0, errc::integrality, context + ": zero denominator");
  ExactInt q, rem;
  boost::multiprecision::divide_qr(numerator, denominator, q, rem);
  require(rem == 0, errc::integrality,
          context + ": " + to_decimal(numerator) + " / " + to_decimal(denominator) + " is not exact");
  return q;
}

namespace detail {

inline std::string args(const char* name, long long a, long long b) {
  return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// Shared body of the hump and peak formulas; `n_choose` is the first
// binomial's upper index (n for humps, n-1 for peaks).
inline ExactInt hump_sum(int n, int k, int n_choose, const char* name) {
  require(n >= 2 && k >= 1 && 2 * k <= n, errc::domain, args(name, n, k) + " needs n >= 2, 1 <= k <= n/2");
  ExactInt total = 0;
  for (int j = 0; j <= n - 2 * k; ++j) {
    if ((j - n) % 2 != 0) continue;
    const ExactInt num = ExactInt(4 * k) * binom(n_choose, j) * binom(n - j - 1, (n - j) / 2 + k - 1);
    total += exact_div(num, n - j + 2 * k, args(name, n, k) + " term j=" + std::to_string(j));
  }
  return total;
}

}  // namespace detail

/// Total humps of height k over Motzkin paths of order n; j counts flat steps.
inline ExactInt hm_formula(int n, int k) { return detail::hump_sum(n, k, n, "hm_formula"); }

/// Total peaks of height k over Motzkin paths of order n.
inline ExactInt pm_formula(int n, int k) { return detail::hump_sum(n, k, n - 1, "pm_formula"); }

/// S_k(2,1;n) for 0 <= k <= n-2.
///
/// Term (i, j) counts prefixes built from a Dyck prefix of length
/// L = n-2i-j ending with U at height k+1, with 2i flats appended and j flats
/// inserted into the L-1 gaps between its first and last up steps.
inline ExactInt s_formula(int n, int k) {
  require(k >= 0 && k + 2 <= n, errc::domain, detail::args("s_formula", n, k) + " needs 0 <= k <= n-2");
  ExactInt total = sign_power(n + k);
  for (int i = 0; i <= (n - k - 1) / 2; ++i) {
    for (int j = 0; j <= n - k - 1 - 2 * i; ++j) {
      if ((j - (n + k - 1)) % 2 != 0) continue;
      const ExactInt num = ExactInt(2 * k + 2) * multichoose(n - 2 * i - j - 1, j) *
                           binom(n - 2 * i - j - 1, (n + k - j - 1) / 2 - i);
      total += exact_div(num, n + k + 1 - 2 * i - j,
                         detail::args("s_formula", n, k) + " term i=" + std::to_string(i) +
                             " j=" + std::to_string(j));
    }
  }
  return total;
}

/// S_k(2,1;n) on the full range 0 <= k <= n: the formula below the diagonal,
/// plus S_{n-1}(2,1;n) = 0 and S_n(2,1;n) = 1 (single row).
inline ExactInt s_value(int n, int k) {
  require(n >= 0 && k >= 0 && k <= n, errc::domain, detail::args("s_value", n, k));
  if (k == n) return 1;
  if (k == n - 1) return 0;
  return s_formula(n, k);
}

/// Half of (SM_n - 1), with SM_n - 1 = sum_{j>=1} C(n,j) C(n-j,j).
inline ExactInt hm_total_formula(int n) {
  require(n >= 1, errc::domain, "hm_total_formula needs n >= 1");
  ExactInt sum = 0;
  for (int j = 1; 2 * j <= n; ++j) sum += binom(n, j) * binom(n - j, j);
  return exact_div(sum, 2, "hm_total_formula(" + std::to_string(n) + ")");
}

/// Central trinomial coefficient SM_n = sum_{j>=0} C(n,j) C(n-j,j).
inline ExactInt sm_formula(int n) {
  require(n >= 0, errc::domain, "sm_formula needs n >= 0");
  ExactInt sum = 0;
  for (int j = 0; 2 * j <= n; ++j) sum += binom(n, j) * binom(n - j, j);
  return sum;
}

/// (m/n) C(2n-m-1, n-1): Dyck prefixes from the origin to (2n-m, m) whose last step is U.
inline ExactInt dyck_prefix_end_u(int n, int m) {
  require(n >= 1 && m >= 1 && m <= n, errc::domain, detail::args("dyck_prefix_end_u", n, m));
  return exact_div(ExactInt(m) * binom(2 * n - m - 1, n - 1), n, detail::args("dyck_prefix_end_u", n, m));
}

/// S(1,1;n) = 2^(n-1).
inline ExactInt s11(int n) {
  require(n >= 1, errc::domain, "s11 needs n >= 1");
  return ExactInt(1) << (n - 1);
}

}  // namespace hump
