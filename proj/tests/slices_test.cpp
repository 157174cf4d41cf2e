// SPDX-License-Identifier: Apache-2.0
#include "eonplan/slices.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "eonplan/errors.hpp"
#include "oracles.hpp"

namespace eonplan {
namespace {

const GridSpec kGrid;  // 6.25 GHz, no overhead

TEST(ModulationPreset, KnownFormats) {
  ModulationFormat qpsk = modulation_preset("qpsk-pm");
  EXPECT_EQ(qpsk.bits_per_symbol, 2);
  EXPECT_TRUE(qpsk.pol_mux);
  ModulationFormat qam = modulation_preset("16qam-pm");
  EXPECT_EQ(qam.bits_per_symbol, 4);
  EXPECT_THROW(modulation_preset("8qam"), Error);
}

TEST(SliceCapacity, MatchesPresets) {
  EXPECT_EQ(slice_capacity(modulation_preset("qpsk-pm"), kGrid), Rate::from_gbps(25));
  EXPECT_EQ(slice_capacity(modulation_preset("16qam-pm"), kGrid),
            Rate::from_gbps(50));
  EXPECT_EQ(kGrid.slice_width_string(), "6.25");
}

TEST(SlicesForRate, QpskLadder) {
  ModulationFormat m = modulation_preset("qpsk-pm");
  EXPECT_EQ(slices_for_rate(Rate::from_gbps(100), m, kGrid), 4);
  EXPECT_EQ(slices_for_rate(Rate::from_gbps(150), m, kGrid), 6);
  EXPECT_EQ(slices_for_rate(Rate::from_gbps(125), m, kGrid), 5);
  EXPECT_EQ(slices_for_rate(Rate::from_gbps(25), m, kGrid), 1);
  EXPECT_EQ(slices_for_rate(Rate::from_gbps(26), m, kGrid), 2);
  EXPECT_EQ(slices_for_rate(Rate::from_cgbps(1), m, kGrid), 1);
  EXPECT_EQ(slices_for_rate(Rate{}, m, kGrid), 0);
}

TEST(SlicesForRate, SixteenQamLadder) {
  ModulationFormat m = modulation_preset("16qam-pm");
  EXPECT_EQ(slices_for_rate(Rate::from_gbps(100), m, kGrid), 2);
  EXPECT_EQ(slices_for_rate(Rate::from_gbps(50), m, kGrid), 1);
  EXPECT_EQ(slices_for_rate(Rate::from_gbps(51), m, kGrid), 2);
}

TEST(SlicesForRate, OverheadInflatesSpectrum) {
  ModulationFormat m = modulation_preset("qpsk-pm");
  GridSpec grid;
  grid.overhead_num = 23;  // x1.15
  grid.overhead_den = 20;
  // 100 * 1.15 = 115 -> 5 slices at 25 Gb/s each.
  EXPECT_EQ(slices_for_rate(Rate::from_gbps(100), m, grid), 5);
  EXPECT_EQ(slices_for_rate(Rate::from_gbps(87), m, grid), 5);  // 100.05
}

TEST(SlicesForRate, MatchesIndependentOracle) {
  for (const char* preset : {"qpsk-pm", "16qam-pm"}) {
    ModulationFormat m = modulation_preset(preset);
    for (int gbps = 0; gbps <= 400; gbps += 5) {
      Rate r = Rate::from_gbps(gbps);
      EXPECT_EQ(slices_for_rate(r, m, kGrid), test::oracle_slices(r, m, kGrid))
          << preset << " at " << gbps;
    }
  }
}

TEST(CodedSlices, SizedByLargestMember) {
  ModulationFormat m = modulation_preset("16qam-pm");
  std::vector<Rate> pair{Rate::from_gbps(100), Rate::from_gbps(50)};
  EXPECT_EQ(coded_slices(pair, m, kGrid), 2);

  ModulationFormat qpsk = modulation_preset("qpsk-pm");
  std::vector<Rate> full{Rate::from_gbps(100), Rate::from_gbps(150)};
  EXPECT_EQ(coded_slices(full, qpsk, kGrid), 6);

  std::vector<Rate> lopsided{Rate::from_gbps(25), Rate{}};
  EXPECT_EQ(coded_slices(lopsided, qpsk, kGrid), 1);

  std::vector<Rate> single{Rate::from_gbps(75)};
  EXPECT_EQ(coded_slices(single, qpsk, kGrid), 3);
}

TEST(CodedSlices, NeverExceedsUncodedSum) {
  ModulationFormat m = modulation_preset("qpsk-pm");
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rate> rates;
    int sum = 0;
    for (int i = 0; i < 1 + static_cast<int>(rng() % 4); ++i) {
      Rate r = Rate::from_gbps(25 * static_cast<int64_t>(rng() % 17));
      rates.push_back(r);
      sum += slices_for_rate(r, m, kGrid);
    }
    EXPECT_LE(coded_slices(rates, m, kGrid), sum == 0 ? 0 : sum);
  }
}

TEST(CodedSlices, RejectsBadInput) {
  ModulationFormat m = modulation_preset("qpsk-pm");
  EXPECT_THROW(coded_slices({}, m, kGrid), Error);
  std::vector<Rate> negative{Rate::from_cgbps(-1)};
  EXPECT_THROW(coded_slices(negative, m, kGrid), Error);
  EXPECT_THROW(slices_for_rate(Rate::from_cgbps(-1), m, kGrid), Error);
  GridSpec bad;
  bad.overhead_num = 1;
  bad.overhead_den = 2;  // < 1
  EXPECT_THROW(slices_for_rate(Rate::from_gbps(25), m, bad), Error);
}

}  // namespace
}  // namespace eonplan
