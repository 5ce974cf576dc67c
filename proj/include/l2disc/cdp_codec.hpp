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

#include "l2disc/net_types.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace l2disc {

enum class CdpTlvType : std::uint16_t {
    device_id = 0x0001,
    address = 0x0002,
    port_id = 0x0003,
    capabilities = 0x0004,
    software_version = 0x0005,
    platform = 0x0006,
    ip_network_prefix = 0x0007,
    vtp_management_domain = 0x0009,
    native_vlan = 0x000a,
    full_half_duplex = 0x000b,
    location = 0x000c,
};

const char* cdp_tlv_name(std::uint16_t type);

namespace cdp_cap {
inline constexpr std::uint32_t router = 0x01;
inline constexpr std::uint32_t transparent_bridge = 0x02;
inline constexpr std::uint32_t source_route_bridge = 0x04;
inline constexpr std::uint32_t switch_ = 0x08;
inline constexpr std::uint32_t host = 0x10;
inline constexpr std::uint32_t igmp = 0x20;
inline constexpr std::uint32_t repeater = 0x40;
} // namespace cdp_cap

/// Cisco single-letter capability codes ("R S I").
std::string cdp_capability_codes(std::uint32_t caps);

enum class Duplex : std::uint8_t { half = 0, full = 1 };

/// One entry of an Address TLV. IPv4 entries use NLPID protocol 0xCC.
struct CdpAddressRecord {
    std::uint8_t protocol_type = 1;
    Bytes protocol{0xcc};
    Bytes address;

    static CdpAddressRecord ipv4(Ipv4Address a);
    std::optional<Ipv4Address> as_ipv4() const;

    bool operator==(const CdpAddressRecord&) const = default;
};

/// Address TLV body: the sender's addresses, optionally followed by a second
/// counted block holding the reflected recipient address. The engines never
/// generate the reflected block; the codec carries it through when present.
struct CdpAddressList {
    std::vector<CdpAddressRecord> addresses;
    std::vector<CdpAddressRecord> reflected;

    bool operator==(const CdpAddressList&) const = default;
};

struct CdpCapabilities {
    std::uint32_t bits = 0;
    bool operator==(const CdpCapabilities&) const = default;
};

/// IP Network Prefix TLV (ODR). Wire form is an optional 4-byte default
/// gateway followed by 5-byte (address, length) entries, so the value length
/// is 4 (mod 5) exactly when a gateway is present.
struct CdpPrefixList {
    std::optional<Ipv4Address> default_gateway;
    std::vector<Ipv4Prefix> prefixes;

    bool operator==(const CdpPrefixList&) const = default;
};

struct CdpNativeVlan {
    std::uint16_t id = 1;
    bool operator==(const CdpNativeVlan&) const = default;
};

/// Text TLVs hold std::string; unrecognized TLV codes keep their raw bytes.
using CdpTlvValue =
    std::variant<std::string, CdpAddressList, CdpCapabilities, CdpPrefixList, Duplex, CdpNativeVlan, Bytes>;

struct CdpTlv {
    std::uint16_t type = 0;
    CdpTlvValue value;

    static CdpTlv device_id(std::string id) { return {code(CdpTlvType::device_id), std::move(id)}; }
    static CdpTlv port_id(std::string id) { return {code(CdpTlvType::port_id), std::move(id)}; }
    static CdpTlv software_version(std::string v) { return {code(CdpTlvType::software_version), std::move(v)}; }
    static CdpTlv platform(std::string p) { return {code(CdpTlvType::platform), std::move(p)}; }
    static CdpTlv location(std::string l) { return {code(CdpTlvType::location), std::move(l)}; }
    static CdpTlv vtp_management_domain(std::string d) { return {code(CdpTlvType::vtp_management_domain), std::move(d)}; }
    static CdpTlv address(CdpAddressList list) { return {code(CdpTlvType::address), std::move(list)}; }
    static CdpTlv capabilities(std::uint32_t bits) { return {code(CdpTlvType::capabilities), CdpCapabilities{bits}}; }
    static CdpTlv ip_network_prefix(CdpPrefixList list) { return {code(CdpTlvType::ip_network_prefix), std::move(list)}; }
    static CdpTlv duplex(Duplex d) { return {code(CdpTlvType::full_half_duplex), d}; }
    static CdpTlv native_vlan(std::uint16_t vlan) { return {code(CdpTlvType::native_vlan), CdpNativeVlan{vlan}}; }
    static CdpTlv unknown(std::uint16_t type, Bytes raw) { return {type, std::move(raw)}; }

    bool is(CdpTlvType t) const { return type == code(t); }
    bool is_known() const;

    bool operator==(const CdpTlv&) const = default;

    static constexpr std::uint16_t code(CdpTlvType t) { return static_cast<std::uint16_t>(t); }
};

struct CdpPacket {
    std::uint8_t version = 2;
    std::uint8_t ttl = 180;
    /// Filled by decode_cdp; encode_cdp always recomputes it.
    std::uint16_t checksum = 0;
    std::vector<CdpTlv> tlvs;

    const CdpTlv* find(CdpTlvType type) const;

    template <typename T>
    const T* get(CdpTlvType type) const
    {
        const CdpTlv* tlv = find(type);
        return tlv ? std::get_if<T>(&tlv->value) : nullptr;
    }

    /// Content equality; the checksum is derived data and is not compared.
    friend bool operator==(const CdpPacket& a, const CdpPacket& b)
    {
        return a.version == b.version && a.ttl == b.ttl && a.tlvs == b.tlvs;
    }
};

inline constexpr std::size_t cdp_header_size = 4;

/// Serializes version, ttl, checksum and TLVs. Throws Errc::tlv_too_long when
/// a TLV does not fit its 16-bit length field.
Bytes encode_cdp(const CdpPacket& packet);

/// Verifies the checksum first, then parses TLVs. Throws Errc::truncated,
/// Errc::bad_checksum or Errc::bad_tlv_length.
CdpPacket decode_cdp(ByteView payload);

} // namespace l2disc
