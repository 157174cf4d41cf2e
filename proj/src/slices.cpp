// SPDX-License-Identifier: Apache-2.0
#include "eonplan/slices.hpp"

#include <algorithm>

namespace eonplan {

namespace {

void check_format(const ModulationFormat& m) {
  if (m.bits_per_symbol < 1) {
    throw validation_error("modulation '" + m.name + "': bits_per_symbol must be >= 1");
  }
}

void check_grid(const GridSpec& g) {
  if (g.slice_width_cghz <= 0) {
    throw validation_error("slice width must be positive");
  }
  if (g.overhead_num < g.overhead_den || g.overhead_den <= 0) {
    throw validation_error("overhead factor must be >= 1");
  }
}

}  // namespace

ModulationFormat modulation_preset(std::string_view name) {
  if (name == "qpsk-pm") return ModulationFormat{"qpsk-pm", 2, true};
  if (name == "16qam-pm") return ModulationFormat{"16qam-pm", 4, true};
  throw validation_error("unknown modulation preset '" + std::string(name) +
                         "' (expected \"qpsk-pm\" or \"16qam-pm\")");
}

Rate slice_capacity(const ModulationFormat& m, const GridSpec& g) {
  check_format(m);
  check_grid(g);
  // cGHz * bits/symbol * pol factor == cGb/s, since Gbaud == GHz here.
  return Rate{g.slice_width_cghz * m.bits_per_symbol * (m.pol_mux ? 2 : 1)};
}

int slices_for_rate(Rate rate, const ModulationFormat& m, const GridSpec& g) {
  if (rate.cgbps < 0) {
    throw validation_error("bit-rate must be nonnegative");
  }
  Rate capacity = slice_capacity(m, g);
  if (rate.is_zero()) return 0;
  return static_cast<int>(
      ceil_div(rate.cgbps * g.overhead_num, capacity.cgbps * g.overhead_den));
}

int coded_slices(std::span<const Rate> member_rates, const ModulationFormat& m,
                 const GridSpec& g) {
  if (member_rates.empty()) {
    throw validation_error("coded channel needs at least one member signal");
  }
  Rate largest{0};
  for (Rate r : member_rates) {
    if (r.cgbps < 0) {
      throw validation_error("bit-rate must be nonnegative");
    }
    largest = std::max(largest, r);
  }
  return slices_for_rate(largest, m, g);
}

}  // namespace eonplan
