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

enum class LldpTlvType : std::uint8_t {
    end = 0,
    chassis_id = 1,
    port_id = 2,
    ttl = 3,
    port_description = 4,
    system_name = 5,
    system_description = 6,
    system_capabilities = 7,
    management_address = 8,
};

const char* lldp_tlv_name(std::uint8_t type);

namespace lldp_cap {
inline constexpr std::uint16_t other = 0x01;
inline constexpr std::uint16_t repeater = 0x02;
inline constexpr std::uint16_t bridge = 0x04;
inline constexpr std::uint16_t wlan_ap = 0x08;
inline constexpr std::uint16_t router = 0x10;
inline constexpr std::uint16_t telephone = 0x20;
inline constexpr std::uint16_t docsis = 0x40;
inline constexpr std::uint16_t station = 0x80;
} // namespace lldp_cap

/// Cisco-style capability letters for `show lldp neighbors` ("B,R").
std::string lldp_capability_codes(std::uint16_t caps);

namespace chassis_subtype {
inline constexpr std::uint8_t mac_address = 4;
inline constexpr std::uint8_t locally_assigned = 7;
} // namespace chassis_subtype

namespace port_subtype {
inline constexpr std::uint8_t mac_address = 3;
inline constexpr std::uint8_t interface_name = 5;
inline constexpr std::uint8_t locally_assigned = 7;
} // namespace port_subtype

/// Chassis Id or Port Id: a subtype byte followed by an opaque identifier.
struct LldpId {
    std::uint8_t subtype = 0;
    Bytes value;

    static LldpId chassis_mac(MacAddress mac);
    static LldpId interface_name(std::string_view name);

    /// MAC subtypes render as colon hex, printable ids as text, the rest as hex.
    std::string to_string() const;

    auto operator<=>(const LldpId&) const = default;
};

struct LldpCapabilities {
    std::uint16_t capabilities = 0;
    std::uint16_t enabled = 0;
    bool operator==(const LldpCapabilities&) const = default;
};

struct LldpManagementAddress {
    std::uint8_t address_subtype = 1; // IANA address family, 1 = IPv4
    Bytes address;
    std::uint8_t interface_subtype = 2; // ifIndex
    std::uint32_t interface_number = 0;
    Bytes oid;

    static LldpManagementAddress ipv4(Ipv4Address a, std::uint32_t if_index);
    std::optional<Ipv4Address> as_ipv4() const;

    bool operator==(const LldpManagementAddress&) const = default;
};

/// Text TLVs hold std::string; unrecognized TLV codes keep their raw bytes.
using LldpTlvValue = std::variant<std::string, LldpCapabilities, LldpManagementAddress, Bytes>;

struct LldpTlv {
    std::uint8_t type = 0;
    LldpTlvValue value;

    static LldpTlv port_description(std::string s) { return {code(LldpTlvType::port_description), std::move(s)}; }
    static LldpTlv system_name(std::string s) { return {code(LldpTlvType::system_name), std::move(s)}; }
    static LldpTlv system_description(std::string s) { return {code(LldpTlvType::system_description), std::move(s)}; }
    static LldpTlv system_capabilities(std::uint16_t caps, std::uint16_t enabled)
    {
        return {code(LldpTlvType::system_capabilities), LldpCapabilities{caps, enabled}};
    }
    static LldpTlv management_address(LldpManagementAddress a) { return {code(LldpTlvType::management_address), std::move(a)}; }
    static LldpTlv unknown(std::uint8_t type, Bytes raw) { return {type, std::move(raw)}; }

    bool is(LldpTlvType t) const { return type == code(t); }
    bool is_known() const { return type >= 4 && type <= 8; }

    bool operator==(const LldpTlv&) const = default;

    static constexpr std::uint8_t code(LldpTlvType t) { return static_cast<std::uint8_t>(t); }
};

struct LldpFrame {
    LldpId chassis_id;
    LldpId port_id;
    std::uint16_t ttl = 120;
    std::vector<LldpTlv> optional_tlvs;

    const LldpTlv* find(LldpTlvType type) const;

    template <typename T>
    const T* get(LldpTlvType type) const
    {
        const LldpTlv* tlv = find(type);
        return tlv ? std::get_if<T>(&tlv->value) : nullptr;
    }

    bool operator==(const LldpFrame&) const = default;
};

inline constexpr std::size_t lldp_max_tlv_value = 511;

/// Emits Chassis Id, Port Id, TTL, the optional TLVs in order, then
/// EndOfLLDPDU. Throws Errc::tlv_too_long or Errc::duplicate_tlv.
Bytes encode_lldp(const LldpFrame& frame);

/// Parses up to EndOfLLDPDU; bytes after it are ignored. Throws
/// Errc::bad_mandatory_order, Errc::duplicate_tlv, Errc::truncated or
/// Errc::bad_tlv_length.
LldpFrame decode_lldp(ByteView payload);

} // namespace l2disc
