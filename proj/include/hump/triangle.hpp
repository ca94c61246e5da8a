#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hump/error.hpp"
#include "hump/exact_int.hpp"

namespace hump {

/// Exact-integer table indexed by (n, k). Row n covers k_min..k_max(n);
/// lookups outside that domain throw rather than returning zero.
class Triangle {
 public:
  Triangle() = default;

  /// Builds rows n_min..n_max, row n spanning k_min..k_max(n), filled by `entry`.
  Triangle(int n_min, int n_max, int k_min, const std::function<int(int)>& k_max,
           const std::function<ExactInt(int, int)>& entry)
      : n_min_(n_min), k_min_(k_min) {
    for (int n = n_min; n <= n_max; ++n) {
      std::vector<ExactInt> row;
      for (int k = k_min; k <= k_max(n); ++k) row.push_back(entry(n, k));
      rows_.push_back(std::move(row));
    }
  }

  Triangle(int n_min, int k_min, std::vector<std::vector<ExactInt>> rows)
      : n_min_(n_min), k_min_(k_min), rows_(std::move(rows)) {}

  int n_min() const noexcept { return n_min_; }
  int n_max() const noexcept { return n_min_ + static_cast<int>(rows_.size()) - 1; }
  int k_min() const noexcept { return k_min_; }
  int k_max(int n) const { return k_min_ + static_cast<int>(row(n).size()) - 1; }

  bool contains(int n, int k) const noexcept {
    if (n < n_min_ || n > n_max()) return false;
    const auto& r = rows_[static_cast<std::size_t>(n - n_min_)];
    return k >= k_min_ && k < k_min_ + static_cast<int>(r.size());
  }

  const std::vector<ExactInt>& row(int n) const {
    require(n >= n_min_ && n <= n_max(), errc::domain,
            "row " + std::to_string(n) + " outside [" + std::to_string(n_min_) + "," +
                std::to_string(n_max()) + "]");
    return rows_[static_cast<std::size_t>(n - n_min_)];
  }

  const ExactInt& at(int n, int k) const {
    require(contains(n, k), errc::domain,
            "entry (" + std::to_string(n) + "," + std::to_string(k) + ") outside triangle domain");
    return rows_[static_cast<std::size_t>(n - n_min_)][static_cast<std::size_t>(k - k_min_)];
  }

  /// Entry, or zero outside the stored domain.
  ExactInt value_or_zero(int n, int k) const { return contains(n, k) ? at(n, k) : ExactInt(0); }

  const std::vector<std::vector<ExactInt>>& rows() const noexcept { return rows_; }

  friend bool operator==(const Triangle&, const Triangle&) = default;

  /// Header "n,<k_min>,...,<k_max>", then one line per row; cells outside a
  /// row's domain are left empty.
  std::string to_csv() const {
    int widest = k_min_ - 1;
    for (int n = n_min_; n <= n_max(); ++n) widest = std::max(widest, k_max(n));
    std::ostringstream os;
    os << 'n';
    for (int k = k_min_; k <= widest; ++k) os << ',' << k;
    os << '\n';
    for (int n = n_min_; n <= n_max(); ++n) {
      os << n;
      for (int k = k_min_; k <= widest; ++k) {
        os << ',';
        if (contains(n, k)) os << to_decimal(at(n, k));
      }
      os << '\n';
    }
    return os.str();
  }

  /// {"n_min":..,"k_min":..,"rows":[[..],..]}; integers rendered as exact
  /// decimal literals, so values beyond 64 bits survive.
  std::string to_json() const {
    std::ostringstream os;
    os << "{\"n_min\":" << n_min_ << ",\"k_min\":" << k_min_ << ",\"rows\":[";
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i) os << ',';
      os << '[';
      for (std::size_t j = 0; j < rows_[i].size(); ++j) {
        if (j) os << ',';
        os << to_decimal(rows_[i][j]);
      }
      os << ']';
    }
    os << "]}\n";
    return os.str();
  }

 private:
  int n_min_ = 0;
  int k_min_ = 0;
  std::vector<std::vector<ExactInt>> rows_;
};

}  // namespace hump
