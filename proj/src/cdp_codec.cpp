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

#include "l2disc/cdp_codec.hpp"

#include "byte_io.hpp"
#include "l2disc/checksum.hpp"
#include "l2disc/error.hpp"

#include <limits>

namespace l2disc {

using detail::ByteReader;
using detail::ByteWriter;

const char* cdp_tlv_name(std::uint16_t type)
{
    switch (static_cast<CdpTlvType>(type)) {
    case CdpTlvType::device_id: return "Device ID";
    case CdpTlvType::address: return "Addresses";
    case CdpTlvType::port_id: return "Port ID";
    case CdpTlvType::capabilities: return "Capabilities";
    case CdpTlvType::software_version: return "Software Version";
    case CdpTlvType::platform: return "Platform";
    case CdpTlvType::ip_network_prefix: return "IP Network Prefix";
    case CdpTlvType::vtp_management_domain: return "VTP Management Domain";
    case CdpTlvType::native_vlan: return "Native VLAN";
    case CdpTlvType::full_half_duplex: return "Duplex";
    case CdpTlvType::location: return "Location";
    }
    return "Unknown";
}

std::string cdp_capability_codes(std::uint32_t caps)
{
    static constexpr std::pair<std::uint32_t, const char*> codes[] = {
        {cdp_cap::router, "R"}, {cdp_cap::transparent_bridge, "T"}, {cdp_cap::source_route_bridge, "B"},
        {cdp_cap::switch_, "S"}, {cdp_cap::host, "H"},           {cdp_cap::igmp, "I"},
        {cdp_cap::repeater, "r"},
    };
    std::string out;
    for (auto [bit, letter] : codes) {
        if (caps & bit) {
            if (!out.empty())
                out += ' ';
            out += letter;
        }
    }
    return out;
}

CdpAddressRecord CdpAddressRecord::ipv4(Ipv4Address a)
{
    auto o = a.octets();
    return {1, Bytes{0xcc}, Bytes(o.begin(), o.end())};
}

std::optional<Ipv4Address> CdpAddressRecord::as_ipv4() const
{
    if (protocol_type == 1 && protocol == Bytes{0xcc} && address.size() == 4)
        return Ipv4Address::from_bytes(address);
    return std::nullopt;
}

bool CdpTlv::is_known() const
{
    return std::string_view(cdp_tlv_name(type)) != "Unknown";
}

const CdpTlv* CdpPacket::find(CdpTlvType type) const
{
    for (const auto& tlv : tlvs)
        if (tlv.is(type))
            return &tlv;
    return nullptr;
}

namespace {

void put_address_block(ByteWriter& w, const std::vector<CdpAddressRecord>& records)
{
    w.u32(static_cast<std::uint32_t>(records.size()));
    for (const auto& r : records) {
        if (r.protocol.size() > 0xff || r.address.size() > 0xffff)
            throw Error(Errc::tlv_too_long, "address record field too long");
        w.u8(r.protocol_type);
        w.u8(static_cast<std::uint8_t>(r.protocol.size()));
        w.bytes(r.protocol);
        w.u16(static_cast<std::uint16_t>(r.address.size()));
        w.bytes(r.address);
    }
}

std::vector<CdpAddressRecord> get_address_block(ByteReader& r)
{
    std::uint32_t count = r.u32();
    std::vector<CdpAddressRecord> records;
    // Each record is at least 4 bytes; bound the reservation by the input.
    records.reserve(std::min<std::size_t>(count, r.remaining() / 4));
    for (std::uint32_t i = 0; i < count; ++i) {
        CdpAddressRecord rec;
        rec.protocol_type = r.u8();
        auto plen = r.u8();
        auto proto = r.take(plen);
        rec.protocol.assign(proto.begin(), proto.end());
        auto alen = r.u16();
        auto addr = r.take(alen);
        rec.address.assign(addr.begin(), addr.end());
        records.push_back(std::move(rec));
    }
    return records;
}

struct ValueEncoder {
    ByteWriter& w;

    void operator()(const std::string& s) const { w.bytes(ByteView(reinterpret_cast<const std::uint8_t*>(s.data()), s.size())); }
    void operator()(const CdpAddressList& list) const
    {
        put_address_block(w, list.addresses);
        if (!list.reflected.empty())
            put_address_block(w, list.reflected);
    }
    void operator()(const CdpCapabilities& caps) const { w.u32(caps.bits); }
    void operator()(const CdpPrefixList& list) const
    {
        if (list.default_gateway)
            w.u32(list.default_gateway->value());
        for (const auto& p : list.prefixes) {
            w.u32(p.address.value());
            w.u8(p.length);
        }
    }
    void operator()(Duplex d) const { w.u8(static_cast<std::uint8_t>(d)); }
    void operator()(const CdpNativeVlan& vlan) const { w.u16(vlan.id); }
    void operator()(const Bytes& raw) const { w.bytes(raw); }
};

CdpTlvValue decode_value(std::uint16_t type, ByteView value)
{
    auto expect_size = [&](std::size_t n) {
        if (value.size() != n)
            throw Error(Errc::bad_tlv_length, std::string(cdp_tlv_name(type)) + " value must be " +
                                                  std::to_string(n) + " bytes");
    };
    switch (static_cast<CdpTlvType>(type)) {
    case CdpTlvType::device_id:
    case CdpTlvType::port_id:
    case CdpTlvType::software_version:
    case CdpTlvType::platform:
    case CdpTlvType::vtp_management_domain:
    case CdpTlvType::location:
        return to_text(value);
    case CdpTlvType::address: {
        ByteReader r(value);
        CdpAddressList list;
        list.addresses = get_address_block(r);
        if (!r.empty())
            list.reflected = get_address_block(r);
        if (!r.empty())
            throw Error(Errc::bad_tlv_length, "trailing bytes in Address TLV");
        return list;
    }
    case CdpTlvType::capabilities: {
        expect_size(4);
        ByteReader r(value);
        return CdpCapabilities{r.u32()};
    }
    case CdpTlvType::ip_network_prefix: {
        if (value.size() % 5 != 0 && value.size() % 5 != 4)
            throw Error(Errc::bad_tlv_length, "IP Network Prefix value length " + std::to_string(value.size()));
        ByteReader r(value);
        CdpPrefixList list;
        if (value.size() % 5 == 4)
            list.default_gateway = Ipv4Address(r.u32());
        while (!r.empty()) {
            Ipv4Address a(r.u32());
            std::uint8_t len = r.u8();
            if (len > 32)
                throw Error(Errc::bad_tlv_length, "prefix length " + std::to_string(len));
            list.prefixes.push_back({a, len});
        }
        return list;
    }
    case CdpTlvType::full_half_duplex:
        expect_size(1);
        return value[0] ? Duplex::full : Duplex::half;
    case CdpTlvType::native_vlan: {
        expect_size(2);
        ByteReader r(value);
        return CdpNativeVlan{r.u16()};
    }
    }
    return Bytes(value.begin(), value.end());
}

} // namespace

Bytes encode_cdp(const CdpPacket& packet)
{
    ByteWriter w;
    w.u8(packet.version);
    w.u8(packet.ttl);
    w.u16(0);
    for (const auto& tlv : packet.tlvs) {
        std::size_t start = w.size();
        w.u16(tlv.type);
        w.u16(0);
        std::visit(ValueEncoder{w}, tlv.value);
        std::size_t length = w.size() - start;
        if (length > std::numeric_limits<std::uint16_t>::max())
            throw Error(Errc::tlv_too_long, std::string(cdp_tlv_name(tlv.type)) + " TLV is " +
                                                std::to_string(length) + " bytes");
        w.patch_u16(start + 2, static_cast<std::uint16_t>(length));
    }
    w.patch_u16(2, cdp_checksum(w.buffer()));
    return w.take();
}

CdpPacket decode_cdp(ByteView payload)
{
    if (payload.size() < cdp_header_size)
        throw Error(Errc::truncated, "CDP header needs 4 bytes");
    if (ones_complement_sum(payload) != 0xffff)
        throw Error(Errc::bad_checksum, "checksum verification failed");

    ByteReader r(payload);
    CdpPacket packet;
    packet.version = r.u8();
    packet.ttl = r.u8();
    packet.checksum = r.u16();
    while (!r.empty()) {
        std::uint16_t type = r.u16();
        std::uint16_t length = r.u16();
        if (length < 4)
            throw Error(Errc::bad_tlv_length, "TLV length " + std::to_string(length) + " below header size");
        auto value = r.take(length - 4u);
        packet.tlvs.push_back({type, decode_value(type, value)});
    }
    return packet;
}

} // namespace l2disc
