// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <string_view>

#include "eonplan/decimal.hpp"

namespace eonplan {

struct ModulationFormat {
  std::string name;
  int bits_per_symbol = 0;
  bool pol_mux = false;
};

// Flexgrid parameters. The symbol rate per slice, in Gbaud, is numerically
// equal to the slice width in GHz; `overhead` (a rational >= 1) inflates the
// spectrum needed per bit and defaults to none.
struct GridSpec {
  int64_t slice_width_cghz = 625;  // hundredths of a GHz
  int64_t overhead_num = 1;
  int64_t overhead_den = 1;

  std::string slice_width_string() const {
    return format_scaled_decimal(slice_width_cghz, 2);
  }
};

// Presets selectable in scenario files: "qpsk-pm", "16qam-pm".
ModulationFormat modulation_preset(std::string_view name);

// Bit-rate carried by one slice: slice width x bits/symbol x 2 if
// polarization-multiplexed. 25 Gb/s for QPSK-PM, 50 Gb/s for 16QAM-PM.
Rate slice_capacity(const ModulationFormat& m, const GridSpec& g);

// Number of contiguous slices needed to carry `rate`; 0 iff rate is 0.
int slices_for_rate(Rate rate, const ModulationFormat& m, const GridSpec& g);

// Slices for the XOR of the member signals. The encoded signal runs at the
// largest member rate (the shorter signals are zero-padded), so the coded
// channel is sized by the bulkiest member, not the sum.
int coded_slices(std::span<const Rate> member_rates, const ModulationFormat& m,
                 const GridSpec& g);

}  // namespace eonplan
