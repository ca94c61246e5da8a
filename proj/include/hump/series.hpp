#pragma once

// Truncated formal power series with exact integer coefficients, and the
// Riordan-array triangles built from them.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "hump/error.hpp"
#include "hump/exact_int.hpp"
#include "hump/triangle.hpp"

namespace hump {

/// Coefficients c_0..c_N of a series known modulo x^(N+1). Binary operations
/// on series of different orders truncate to the smaller order.
class IntSeries {
 public:
  IntSeries() : coeffs_{0} {}
  explicit IntSeries(std::vector<ExactInt> coeffs) : coeffs_(std::move(coeffs)) {
    require(!coeffs_.empty(), errc::domain, "series needs at least one coefficient");
  }
  IntSeries(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) coeffs_.emplace_back(c);
    require(!coeffs_.empty(), errc::domain, "series needs at least one coefficient");
  }

  static IntSeries zero(int order) { return IntSeries(std::vector<ExactInt>(checked(order) + 1, 0)); }
  static IntSeries one(int order) {
    auto s = zero(order);
    s.coeffs_[0] = 1;
    return s;
  }
  /// x at the given truncation order (order >= 1), or 0 at order 0.
  static IntSeries x(int order) {
    auto s = zero(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
  }

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const ExactInt& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<ExactInt>& coefficients() const noexcept { return coeffs_; }

  IntSeries truncated(int order) const {
    require(order >= 0 && order <= this->order(), errc::domain, "cannot extend a truncated series");
    return IntSeries(std::vector<ExactInt>(coeffs_.begin(), coeffs_.begin() + order + 1));
  }

  friend IntSeries operator+(const IntSeries& a, const IntSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<ExactInt> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = a[i] + b[i];
    return IntSeries(std::move(c));
  }

  friend IntSeries operator-(const IntSeries& a, const IntSeries& b) { return a + b * ExactInt(-1); }

  friend IntSeries operator*(const IntSeries& a, const ExactInt& s) {
    auto c = a.coeffs_;
    for (auto& v : c) v *= s;
    return IntSeries(std::move(c));
  }

  /// Cauchy product modulo x^(min(N_a, N_b) + 1).
  friend IntSeries operator*(const IntSeries& a, const IntSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<ExactInt> c(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i <= n; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= n; ++j) c[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
    return IntSeries(std::move(c));
  }

  /// Multiplies by x^s, keeping the truncation order.
  IntSeries shifted(int s) const {
    require(s >= 0, errc::domain, "negative shift");
    std::vector<ExactInt> c(coeffs_.size(), 0);
    for (std::size_t i = 0; i + static_cast<std::size_t>(s) < c.size(); ++i)
      c[i + static_cast<std::size_t>(s)] = coeffs_[i];
    return IntSeries(std::move(c));
  }

  IntSeries pow(int e) const {
    require(e >= 0, errc::domain, "negative power");
    IntSeries r = one(order());
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const IntSeries&, const IntSeries&) = default;

 private:
  static std::size_t checked(int order) {
    require(order >= 0, errc::domain, "negative truncation order");
    return static_cast<std::size_t>(order);
  }

  std::vector<ExactInt> coeffs_;
};

/// M(x) = sum m_n x^n with m_{n+1} = m_n + sum_{i=0}^{n-1} m_i m_{n-1-i}.
inline IntSeries motzkin_series(int order) {
  require(order >= 0, errc::domain, "negative truncation order");
  std::vector<ExactInt> m(static_cast<std::size_t>(order) + 1, 0);
  m[0] = 1;
  for (std::size_t n = 0; n + 1 < m.size(); ++n) {
    ExactInt next = m[n];
    for (std::size_t i = 0; i < n; ++i) next += m[i] * m[n - 1 - i];
    m[n + 1] = next;
  }
  return IntSeries(std::move(m));
}

/// a/(1-x) for sign = +1 (prefix sums), a/(1+x) for sign = -1.
inline IntSeries divide_geometric(const IntSeries& a, int sign) {
  require(sign == 1 || sign == -1, errc::domain, "divide_geometric sign must be +1 or -1");
  std::vector<ExactInt> c(static_cast<std::size_t>(a.order()) + 1);
  c[0] = a[0];
  for (int n = 1; n <= a.order(); ++n) {
    const auto i = static_cast<std::size_t>(n);
    c[i] = sign == 1 ? a[n] + c[i - 1] : a[n] - c[i - 1];
  }
  return IntSeries(std::move(c));
}

/// Entry (n,k) = [x^n] d(x) h(x)^k for 0 <= k <= n <= n_max.
inline Triangle riordan_triangle(const IntSeries& d, const IntSeries& h, int n_max) {
  require(h[0] == 0, errc::domain, "riordan_triangle: h must have zero constant term");
  require(n_max >= 0 && d.order() >= n_max && h.order() >= n_max, errc::domain,
          "riordan_triangle: series truncated below n_max = " + std::to_string(n_max));
  const auto dd = d.truncated(n_max);
  const auto hh = h.truncated(n_max);
  std::vector<IntSeries> columns;
  columns.reserve(static_cast<std::size_t>(n_max) + 1);
  columns.push_back(dd);
  for (int k = 1; k <= n_max; ++k) columns.push_back(columns.back() * hh);
  return Triangle(0, n_max, 0, [](int n) { return n; },
                  [&](int n, int k) { return columns[static_cast<std::size_t>(k)][n]; });
}

/// [x^n] x^k M(x)^(k+1), i.e. the Riordan array (M, xM).
inline Triangle mp_gf_check(int n_max) {
  const auto m = motzkin_series(n_max);
  return riordan_triangle(m, m.shifted(1), n_max);
}

/// Riordan array (1/(1-x), x^2 M^2) restricted to 2 <= n, 1 <= k <= n/2.
inline Triangle hm_series_table(int n_max) {
  require(n_max >= 2, errc::domain, "table needs n_max >= 2");
  const auto m = motzkin_series(n_max);
  const auto h = (m * m).shifted(2);
  const auto full = riordan_triangle(divide_geometric(IntSeries::one(n_max), 1), h, n_max);
  return Triangle(2, n_max, 1, [](int n) { return n / 2; }, [&](int n, int k) { return full.at(n, k); });
}

/// Riordan array (xM/(1+x), xM): the shifted counts S_{n,k}, 0 <= k <= n.
inline Triangle s_shifted_series_table(int n_max) {
  const auto xm = motzkin_series(n_max).shifted(1);
  return riordan_triangle(divide_geometric(xm, -1), xm, n_max);
}

/// S_k(2,1;n) = S_{n,k} + (-1)^(n+k) from the series route.
inline Triangle s_series_table(int n_max) {
  const auto shifted = s_shifted_series_table(n_max);
  return Triangle(0, n_max, 0, [](int n) { return n; },
                  [&](int n, int k) { return shifted.at(n, k) + sign_power(n + k); });
}

}  // namespace hump
