// SPDX-License-Identifier: Apache-2.0
#include "eonplan/decimal.hpp"

#include <gtest/gtest.h>

#include "eonplan/errors.hpp"

namespace eonplan {
namespace {

TEST(ParseScaledDecimal, WholeAndFractional) {
  EXPECT_EQ(parse_scaled_decimal("100", 2), 10000);
  EXPECT_EQ(parse_scaled_decimal("6.25", 2), 625);
  EXPECT_EQ(parse_scaled_decimal("0.9", 4), 9000);
  EXPECT_EQ(parse_scaled_decimal("1.0", 4), 10000);
  EXPECT_EQ(parse_scaled_decimal("0", 4), 0);
  EXPECT_EQ(parse_scaled_decimal("-6.25", 2), -625);
}

TEST(ParseScaledDecimal, TrailingZerosBeyondScaleAreFine) {
  EXPECT_EQ(parse_scaled_decimal("25.0000", 2), 2500);
  EXPECT_EQ(parse_scaled_decimal("0.250", 2), 25);
}

TEST(ParseScaledDecimal, RejectsFinerThanScale) {
  EXPECT_THROW(parse_scaled_decimal("0.125", 2), Error);
  EXPECT_THROW(parse_scaled_decimal("0.00001", 4), Error);
}

TEST(ParseScaledDecimal, RejectsGarbage) {
  EXPECT_THROW(parse_scaled_decimal("", 2), Error);
  EXPECT_THROW(parse_scaled_decimal("1e3", 2), Error);
  EXPECT_THROW(parse_scaled_decimal("12.", 2), Error);
  EXPECT_THROW(parse_scaled_decimal(".5", 2), Error);
  EXPECT_THROW(parse_scaled_decimal("1.2.3", 2), Error);
  EXPECT_THROW(parse_scaled_decimal("abc", 2), Error);
  EXPECT_THROW(parse_scaled_decimal("9223372036854775808", 0), Error);
}

TEST(FormatScaledDecimal, TrimsTrailingZeros) {
  EXPECT_EQ(format_scaled_decimal(625, 2), "6.25");
  EXPECT_EQ(format_scaled_decimal(2500, 2), "25");
  EXPECT_EQ(format_scaled_decimal(9000, 4), "0.9");
  EXPECT_EQ(format_scaled_decimal(10000, 4), "1");
  EXPECT_EQ(format_scaled_decimal(0, 4), "0");
  EXPECT_EQ(format_scaled_decimal(-625, 2), "-6.25");
}

TEST(FormatScaledDecimal, RoundTripsParse) {
  for (int64_t v : {0L, 1L, 99L, 625L, 2500L, 123456L, -7L, -625L}) {
    EXPECT_EQ(parse_scaled_decimal(format_scaled_decimal(v, 2), 2), v);
  }
}

TEST(Rate, ComparesAndFormats) {
  EXPECT_EQ(Rate::from_gbps(100).to_string(), "100");
  EXPECT_EQ(Rate::from_cgbps(12550).to_string(), "125.5");
  EXPECT_LT(Rate::from_gbps(50), Rate::from_gbps(100));
  EXPECT_TRUE(Rate::from_gbps(100).multiple_of(Rate::from_gbps(25)));
  EXPECT_FALSE(Rate::from_gbps(110).multiple_of(Rate::from_gbps(25)));
}

TEST(CeilDiv, Exact) {
  EXPECT_EQ(ceil_div(100, 25), 4);
  EXPECT_EQ(ceil_div(101, 25), 5);
  EXPECT_EQ(ceil_div(0, 25), 0);
}

}  // namespace
}  // namespace eonplan
