// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "eonplan/errors.hpp"

namespace eonplan {

// All quantities that the tables depend on (bit-rates, slice widths, target
// fractions) are exact decimals, stored as scaled integers. Keeping them out
// of binary floating point makes every ceil() in the slice math exact.

// Parses a decimal literal ("100", "-6.25", "0.9") into an integer scaled by
// 10^scale. Rejects more fractional digits than the scale allows.
int64_t parse_scaled_decimal(std::string_view text, int scale);

// Renders a scaled integer back to a decimal string with trailing zeros
// trimmed: (625, 2) -> "6.25", (2500, 2) -> "25".
std::string format_scaled_decimal(int64_t value, int scale);

// Bit-rate in hundredths of a Gb/s (0.01 Gb/s resolution).
struct Rate {
  int64_t cgbps = 0;

  static Rate from_cgbps(int64_t v) { return Rate{v}; }
  static Rate from_gbps(int64_t whole) { return Rate{whole * 100}; }

  friend bool operator==(Rate a, Rate b) { return a.cgbps == b.cgbps; }
  friend auto operator<=>(Rate a, Rate b) { return a.cgbps <=> b.cgbps; }
  friend Rate operator+(Rate a, Rate b) { return Rate{a.cgbps + b.cgbps}; }
  friend Rate operator-(Rate a, Rate b) { return Rate{a.cgbps - b.cgbps}; }

  bool is_zero() const { return cgbps == 0; }
  bool multiple_of(Rate step) const {
    return step.cgbps > 0 && cgbps % step.cgbps == 0;
  }

  std::string to_string() const { return format_scaled_decimal(cgbps, 2); }
};

// ceil(a / b) for nonnegative a and positive b.
inline int64_t ceil_div(int64_t a, int64_t b) { return (a + b - 1) / b; }

}  // namespace eonplan
