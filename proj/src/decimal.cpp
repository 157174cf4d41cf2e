// SPDX-License-Identifier: Apache-2.0
#include "eonplan/decimal.hpp"

#include <cctype>
#include <cstdlib>

namespace eonplan {

int64_t parse_scaled_decimal(std::string_view text, int scale) {
  std::string_view rest = text;
  bool negative = false;
  if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
    negative = rest.front() == '-';
    rest.remove_prefix(1);
  }
  if (rest.empty()) {
    throw validation_error("invalid number '" + std::string(text) + "'");
  }

  int64_t value = 0;
  auto push_digit = [&](char c) {
    if (value > (INT64_MAX - 9) / 10) {
      throw validation_error("number out of range: '" + std::string(text) + "'");
    }
    value = value * 10 + (c - '0');
  };

  size_t i = 0;
  if (rest[i] == '.') {
    throw validation_error("invalid number '" + std::string(text) + "'");
  }
  while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) {
    push_digit(rest[i]);
    ++i;
  }
  int frac_digits = 0;
  if (i < rest.size() && rest[i] == '.') {
    ++i;
    if (i == rest.size()) {
      throw validation_error("invalid number '" + std::string(text) + "'");
    }
    while (i < rest.size() && std::isdigit(static_cast<unsigned char>(rest[i]))) {
      if (frac_digits == scale) {
        // Allow redundant trailing zeros beyond the scale, nothing else.
        if (rest[i] != '0') {
          throw validation_error("number '" + std::string(text) + "' has more than " +
                                 std::to_string(scale) + " decimal places");
        }
        ++i;
        continue;
      }
      push_digit(rest[i]);
      ++frac_digits;
      ++i;
    }
  }
  if (i != rest.size()) {
    throw validation_error("invalid number '" + std::string(text) + "'");
  }
  for (; frac_digits < scale; ++frac_digits) {
    if (value > INT64_MAX / 10) {
      throw validation_error("number out of range: '" + std::string(text) + "'");
    }
    value *= 10;
  }
  return negative ? -value : value;
}

std::string format_scaled_decimal(int64_t value, int scale) {
  bool negative = value < 0;
  uint64_t magnitude = negative ? -static_cast<uint64_t>(value) : static_cast<uint64_t>(value);
  uint64_t divisor = 1;
  for (int i = 0; i < scale; ++i) divisor *= 10;

  uint64_t whole = magnitude / divisor;
  uint64_t frac = magnitude % divisor;

  std::string out = negative ? "-" : "";
  out += std::to_string(whole);
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, scale - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += '.';
    out += digits;
  }
  return out;
}

}  // namespace eonplan
