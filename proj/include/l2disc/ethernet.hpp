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

#pragma once

#include "l2disc/cdp_codec.hpp"
#include "l2disc/lldp_codec.hpp"
#include "l2disc/net_types.hpp"

#include <cstdint>

namespace l2disc {

inline constexpr std::uint16_t lldp_ethertype = 0x88cc;
inline constexpr std::uint16_t cdp_snap_pid = 0x2000;
inline constexpr std::size_t ethernet_header_size = 14;
inline constexpr std::size_t ethernet_min_frame = 60;

enum class FrameKind { cdp, lldp, opaque };

const char* to_string(FrameKind kind);

struct EthernetFrame {
    MacAddress dst;
    MacAddress src;
    /// Ethertype, or the 802.3 length field for LLC frames.
    std::uint16_t type_or_length = 0;
    FrameKind kind = FrameKind::opaque;
    /// CDP payload (after LLC/SNAP), LLDPDU, or everything after the header.
    Bytes body;
};

/// CDP over 802.3 + LLC/SNAP to 01:00:0c:cc:cc:cc. Frames shorter than 60
/// bytes are zero padded.
Bytes wrap_ethernet(const MacAddress& src, const CdpPacket& packet);

/// LLDP under Ethertype 0x88CC, by default to 01:80:c2:00:00:0e.
Bytes wrap_ethernet(const MacAddress& src, const LldpFrame& frame,
                    const MacAddress& dst = mac::lldp_nearest_bridge);

/// Classifies a raw frame. Throws Errc::truncated for inputs shorter than an
/// Ethernet header or an 802.3 length that overruns the buffer.
EthernetFrame parse_ethernet(ByteView frame);

} // namespace l2disc
