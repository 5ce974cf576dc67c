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

#include "l2disc/ethernet.hpp"

#include "byte_io.hpp"
#include "l2disc/error.hpp"

#include <algorithm>

namespace l2disc {

namespace {

constexpr std::uint8_t cdp_llc_snap[] = {0xaa, 0xaa, 0x03, 0x00, 0x00, 0x0c, 0x20, 0x00};

void put_mac(Bytes& out, const MacAddress& mac)
{
    out.insert(out.end(), mac.octets().begin(), mac.octets().end());
}

void pad(Bytes& out)
{
    if (out.size() < ethernet_min_frame)
        out.resize(ethernet_min_frame, 0);
}

} // namespace

const char* to_string(FrameKind kind)
{
    switch (kind) {
    case FrameKind::cdp: return "CDP";
    case FrameKind::lldp: return "LLDP";
    case FrameKind::opaque: return "opaque";
    }
    return "opaque";
}

Bytes wrap_ethernet(const MacAddress& src, const CdpPacket& packet)
{
    Bytes payload = encode_cdp(packet);
    std::size_t length = sizeof cdp_llc_snap + payload.size();
    if (length > 1500)
        throw Error(Errc::tlv_too_long, "CDP packet exceeds 802.3 payload size");

    Bytes out;
    out.reserve(ethernet_header_size + length);
    put_mac(out, mac::cdp_multicast);
    put_mac(out, src);
    out.push_back(static_cast<std::uint8_t>(length >> 8));
    out.push_back(static_cast<std::uint8_t>(length));
    out.insert(out.end(), std::begin(cdp_llc_snap), std::end(cdp_llc_snap));
    out.insert(out.end(), payload.begin(), payload.end());
    pad(out);
    return out;
}

Bytes wrap_ethernet(const MacAddress& src, const LldpFrame& frame, const MacAddress& dst)
{
    Bytes payload = encode_lldp(frame);
    Bytes out;
    out.reserve(ethernet_header_size + payload.size());
    put_mac(out, dst);
    put_mac(out, src);
    out.push_back(static_cast<std::uint8_t>(lldp_ethertype >> 8));
    out.push_back(static_cast<std::uint8_t>(lldp_ethertype & 0xff));
    out.insert(out.end(), payload.begin(), payload.end());
    pad(out);
    return out;
}

EthernetFrame parse_ethernet(ByteView frame)
{
    detail::ByteReader r(frame);
    if (frame.size() < ethernet_header_size)
        throw Error(Errc::truncated, "Ethernet header needs 14 bytes, got " + std::to_string(frame.size()));

    EthernetFrame out;
    out.dst = MacAddress::from_bytes(r.take(6));
    out.src = MacAddress::from_bytes(r.take(6));
    out.type_or_length = r.u16();

    if (out.type_or_length == lldp_ethertype) {
        out.kind = FrameKind::lldp;
        auto body = r.rest();
        out.body.assign(body.begin(), body.end());
        return out;
    }
    if (out.type_or_length <= 1500) {
        if (out.type_or_length > r.remaining())
            throw Error(Errc::truncated, "802.3 length " + std::to_string(out.type_or_length) + " exceeds frame");
        auto llc = r.take(out.type_or_length);
        if (llc.size() >= sizeof cdp_llc_snap && std::equal(std::begin(cdp_llc_snap), std::end(cdp_llc_snap), llc.begin())) {
            out.kind = FrameKind::cdp;
            out.body.assign(llc.begin() + sizeof cdp_llc_snap, llc.end());
            return out;
        }
        out.body.assign(llc.begin(), llc.end());
        return out;
    }
    auto body = r.rest();
    out.body.assign(body.begin(), body.end());
    return out;
}

} // namespace l2disc
