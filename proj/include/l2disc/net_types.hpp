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

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace l2disc {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline Bytes to_bytes(std::string_view text) { return Bytes(text.begin(), text.end()); }
inline std::string to_text(ByteView bytes) { return std::string(bytes.begin(), bytes.end()); }

class MacAddress {
public:
    constexpr MacAddress() = default;
    constexpr explicit MacAddress(std::array<std::uint8_t, 6> octets) : octets_(octets) {}

    /// Accepts `aa:bb:cc:dd:ee:ff` (either case, `-` also allowed as separator).
    static std::optional<MacAddress> parse(std::string_view text);
    static MacAddress from_bytes(ByteView bytes);

    std::string to_string() const;
    const std::array<std::uint8_t, 6>& octets() const { return octets_; }
    std::uint8_t operator[](std::size_t i) const { return octets_[i]; }

    auto operator<=>(const MacAddress&) const = default;

private:
    std::array<std::uint8_t, 6> octets_{};
};

namespace mac {
inline constexpr MacAddress cdp_multicast{{0x01, 0x00, 0x0c, 0xcc, 0xcc, 0xcc}};
inline constexpr MacAddress lldp_nearest_bridge{{0x01, 0x80, 0xc2, 0x00, 0x00, 0x0e}};
inline constexpr MacAddress lldp_nearest_non_tpmr_bridge{{0x01, 0x80, 0xc2, 0x00, 0x00, 0x03}};
inline constexpr MacAddress lldp_nearest_customer_bridge{{0x01, 0x80, 0xc2, 0x00, 0x00, 0x00}};
} // namespace mac

class Ipv4Address {
public:
    constexpr Ipv4Address() = default;
    constexpr explicit Ipv4Address(std::uint32_t value) : value_(value) {}

    static std::optional<Ipv4Address> parse(std::string_view text);
    static Ipv4Address from_bytes(ByteView bytes);

    constexpr std::uint32_t value() const { return value_; }
    std::array<std::uint8_t, 4> octets() const;
    std::string to_string() const;

    auto operator<=>(const Ipv4Address&) const = default;

private:
    std::uint32_t value_ = 0;
};

/// Address plus prefix length. The address part is not required to be the
/// network address, so the same type describes an interface address.
struct Ipv4Prefix {
    Ipv4Address address;
    std::uint8_t length = 0;

    /// `a.b.c.d/len`; a bare address parses as /32.
    static std::optional<Ipv4Prefix> parse(std::string_view text);

    std::uint32_t mask() const { return length == 0 ? 0 : ~std::uint32_t{0} << (32 - length); }
    Ipv4Prefix network() const { return {Ipv4Address(address.value() & mask()), length}; }
    bool contains(Ipv4Address a) const { return (a.value() & mask()) == (address.value() & mask()); }
    std::string to_string() const;

    auto operator<=>(const Ipv4Prefix&) const = default;
};

} // namespace l2disc
