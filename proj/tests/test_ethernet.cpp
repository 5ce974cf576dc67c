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

#include "l2disc/error.hpp"
#include "l2disc/ethernet.hpp"

#include <gtest/gtest.h>

using namespace l2disc;

namespace {

const MacAddress src = *MacAddress::parse("02:00:00:00:01:01");

CdpPacket small_cdp()
{
    CdpPacket p;
    p.tlvs.push_back(CdpTlv::device_id("R1"));
    return p;
}

LldpFrame small_lldp()
{
    LldpFrame f;
    f.chassis_id = LldpId::chassis_mac(src);
    f.port_id = LldpId::interface_name("eth0");
    return f;
}

} // namespace

TEST(Ethernet, CdpFrameLayout)
{
    auto frame = wrap_ethernet(src, small_cdp());
    ASSERT_EQ(frame.size(), ethernet_min_frame);
    EXPECT_EQ(MacAddress::from_bytes(ByteView(frame).subspan(0, 6)), mac::cdp_multicast);
    EXPECT_EQ(MacAddress::from_bytes(ByteView(frame).subspan(6, 6)), src);
    // 802.3 length covers LLC/SNAP (8) plus the 10-byte CDP payload.
    EXPECT_EQ(frame[12], 0x00);
    EXPECT_EQ(frame[13], 18);
    Bytes snap(frame.begin() + 14, frame.begin() + 22);
    EXPECT_EQ(snap, (Bytes{0xaa, 0xaa, 0x03, 0x00, 0x00, 0x0c, 0x20, 0x00}));
}

TEST(Ethernet, LldpFrameLayout)
{
    auto frame = wrap_ethernet(src, small_lldp());
    ASSERT_EQ(frame.size(), ethernet_min_frame);
    EXPECT_EQ(MacAddress::from_bytes(ByteView(frame).subspan(0, 6)), mac::lldp_nearest_bridge);
    EXPECT_EQ(frame[12], 0x88);
    EXPECT_EQ(frame[13], 0xcc);
}

TEST(Ethernet, AlternateLldpDestination)
{
    auto frame = wrap_ethernet(src, small_lldp(), mac::lldp_nearest_customer_bridge);
    EXPECT_EQ(parse_ethernet(frame).dst, mac::lldp_nearest_customer_bridge);
}

TEST(Ethernet, ClassifiesRoundTrip)
{
    auto cdp = parse_ethernet(wrap_ethernet(src, small_cdp()));
    EXPECT_EQ(cdp.kind, FrameKind::cdp);
    EXPECT_EQ(decode_cdp(cdp.body), small_cdp());
    auto lldp = parse_ethernet(wrap_ethernet(src, small_lldp()));
    EXPECT_EQ(lldp.kind, FrameKind::lldp);
    EXPECT_EQ(decode_lldp(lldp.body), small_lldp());
}

TEST(Ethernet, LargeFrameNotPadded)
{
    auto p = small_cdp();
    p.tlvs.push_back(CdpTlv::software_version(std::string(200, 'v')));
    auto frame = wrap_ethernet(src, p);
    EXPECT_EQ(frame.size(), 14u + 8u + 4u + 6u + 204u);
    EXPECT_EQ(decode_cdp(parse_ethernet(frame).body), p);
}

TEST(Ethernet, Ipv4IsOpaque)
{
    Bytes frame(60, 0);
    frame[12] = 0x08;
    EXPECT_EQ(parse_ethernet(frame).kind, FrameKind::opaque);
}

TEST(Ethernet, OtherSnapIsOpaque)
{
    auto frame = wrap_ethernet(src, small_cdp());
    frame[21] = 0x01;
    EXPECT_EQ(parse_ethernet(frame).kind, FrameKind::opaque);
}

TEST(Ethernet, ShortInputTruncated)
{
    try {
        parse_ethernet(Bytes(10, 0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::truncated);
    }
}

TEST(Ethernet, LengthOverrun)
{
    auto frame = wrap_ethernet(src, small_cdp());
    frame[12] = 0x05;
    frame[13] = 0xdc;
    EXPECT_THROW(parse_ethernet(frame), Error);
}
