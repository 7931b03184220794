#pragma once

#include <cctype>
#include <compare>
#include <string>
#include <string_view>

#include "netlab/errors.hpp"

namespace netlab {

/// Country identifier, e.g. "DEU". Uppercased on construction; comparisons
/// are plain string comparisons afterwards.
class CountryCode {
 public:
  CountryCode() = default;

  explicit CountryCode(std::string_view token) {
    if (token.empty()) throw ValidationError("empty country code");
    code_.reserve(token.size());
    for (char c : token) {
      unsigned char uc = static_cast<unsigned char>(c);
      if (!std::isalnum(uc) && c != '_' && c != '-')
        throw ValidationError("invalid character in country code '" + std::string(token) + "'");
      code_.push_back(static_cast<char>(std::toupper(uc)));
    }
  }

  const std::string& str() const { return code_; }
  bool empty() const { return code_.empty(); }

  auto operator<=>(const CountryCode&) const = default;

 private:
  std::string code_;
};

}  // namespace netlab
