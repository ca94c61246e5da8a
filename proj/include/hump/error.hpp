#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hump {

enum class errc {
  invalid_character,
  size_limit,
  negative_index,
  domain,
  not_in_domain,
  integrality,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::invalid_character: return "INVALID_CHARACTER";
    case errc::size_limit: return "SIZE_LIMIT";
    case errc::negative_index: return "NEGATIVE_INDEX";
    case errc::domain: return "DOMAIN";
    case errc::not_in_domain: return "NOT_IN_DOMAIN";
    case errc::integrality: return "INTEGRALITY";
  }
  return "UNKNOWN";
}

// All library failures are reported through this one exception type; the
// code is what callers (and the CLI exit status) branch on.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

class invalid_character : public error {
 public:
  invalid_character(std::size_t position, char ch)
      : error(errc::invalid_character,
              "unexpected '" + std::string(1, ch) + "' at index " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace hump
