/*
 * Copyright 2026 The l2disc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "l2disc/checksum.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

using namespace l2disc;

namespace {

// Reference: plain 32-bit accumulator, folded once at the end.
std::uint16_t oracle_checksum(const Bytes& data)
{
    std::uint32_t acc = 0;
    for (std::size_t i = 0; i < data.size(); i += 2) {
        std::uint32_t word = std::uint32_t{data[i]} << 8;
        if (i + 1 < data.size())
            word |= data[i + 1];
        acc += word;
    }
    while (acc >> 16)
        acc = (acc & 0xffff) + (acc >> 16);
    return static_cast<std::uint16_t>(~acc & 0xffff);
}

} // namespace

TEST(ChecksumOracle, FrozenValues)
{
    EXPECT_EQ(oracle_checksum({}), 0xffff);
    EXPECT_EQ(oracle_checksum({0x00, 0x01, 0xf2, 0x03}), 0x0dfb);
    EXPECT_EQ(oracle_checksum({0xff}), 0x00ff);
}

TEST(Checksum, EmptyPayload)
{
    EXPECT_EQ(cdp_checksum({}), 0xffff);
}

TEST(Checksum, WordExample)
{
    Bytes b{0x00, 0x01, 0xf2, 0x03};
    EXPECT_EQ(cdp_checksum(b), 0x0dfb);
}

TEST(Checksum, OddLengthPadsWithZero)
{
    Bytes odd{0x12, 0x34, 0x56};
    Bytes even{0x12, 0x34, 0x56, 0x00};
    EXPECT_EQ(cdp_checksum(odd), cdp_checksum(even));
}

TEST(Checksum, MatchesOracleOnRandomInput)
{
    support::Gen g(11);
    for (int i = 0; i < 2000; ++i) {
        auto b = g.bytes(300);
        ASSERT_EQ(cdp_checksum(b), oracle_checksum(b));
    }
}

TEST(Checksum, FilledFieldVerifiesToAllOnes)
{
    support::Gen g(12);
    for (int i = 0; i < 1000; ++i) {
        auto b = g.bytes(200);
        b.resize(std::max<std::size_t>(b.size(), 4));
        b[2] = b[3] = 0;
        auto c = cdp_checksum(b);
        b[2] = static_cast<std::uint8_t>(c >> 8);
        b[3] = static_cast<std::uint8_t>(c);
        ASSERT_EQ(ones_complement_sum(b), 0xffff);
    }
}
