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

#include "l2disc/net_types.hpp"

#include <charconv>
#include <cstdio>

namespace l2disc {

namespace {

int hex_value(char c)
{
    if (c >= '0' && c <= '9')
        return c - '0';
    if (c >= 'a' && c <= 'f')
        return c - 'a' + 10;
    if (c >= 'A' && c <= 'F')
        return c - 'A' + 10;
    return -1;
}

std::optional<unsigned> parse_uint(std::string_view text, unsigned max)
{
    if (text.empty() || text.size() > 10)
        return std::nullopt;
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value > max)
        return std::nullopt;
    return value;
}

} // namespace

std::optional<MacAddress> MacAddress::parse(std::string_view text)
{
    if (text.size() != 17)
        return std::nullopt;
    std::array<std::uint8_t, 6> octets{};
    for (std::size_t i = 0; i < 6; ++i) {
        int hi = hex_value(text[i * 3]);
        int lo = hex_value(text[i * 3 + 1]);
        if (hi < 0 || lo < 0)
            return std::nullopt;
        if (i < 5 && text[i * 3 + 2] != ':' && text[i * 3 + 2] != '-')
            return std::nullopt;
        octets[i] = static_cast<std::uint8_t>(hi << 4 | lo);
    }
    return MacAddress(octets);
}

MacAddress MacAddress::from_bytes(ByteView bytes)
{
    std::array<std::uint8_t, 6> octets{};
    for (std::size_t i = 0; i < 6 && i < bytes.size(); ++i)
        octets[i] = bytes[i];
    return MacAddress(octets);
}

std::string MacAddress::to_string() const
{
    char buf[18];
    std::snprintf(buf, sizeof buf, "%02x:%02x:%02x:%02x:%02x:%02x", octets_[0], octets_[1],
                  octets_[2], octets_[3], octets_[4], octets_[5]);
    return buf;
}

std::optional<Ipv4Address> Ipv4Address::parse(std::string_view text)
{
    std::uint32_t value = 0;
    for (int part = 0; part < 4; ++part) {
        auto dot = text.find('.');
        if ((part < 3) == (dot == std::string_view::npos))
            return std::nullopt;
        auto octet = parse_uint(text.substr(0, dot), 255);
        if (!octet)
            return std::nullopt;
        value = value << 8 | *octet;
        text = part < 3 ? text.substr(dot + 1) : std::string_view{};
    }
    return Ipv4Address(value);
}

Ipv4Address Ipv4Address::from_bytes(ByteView bytes)
{
    std::uint32_t value = 0;
    for (std::size_t i = 0; i < 4; ++i)
        value = value << 8 | (i < bytes.size() ? bytes[i] : 0);
    return Ipv4Address(value);
}

std::array<std::uint8_t, 4> Ipv4Address::octets() const
{
    return {static_cast<std::uint8_t>(value_ >> 24), static_cast<std::uint8_t>(value_ >> 16),
            static_cast<std::uint8_t>(value_ >> 8), static_cast<std::uint8_t>(value_)};
}

std::string Ipv4Address::to_string() const
{
    auto o = octets();
    return std::to_string(o[0]) + "." + std::to_string(o[1]) + "." + std::to_string(o[2]) + "." +
           std::to_string(o[3]);
}

std::optional<Ipv4Prefix> Ipv4Prefix::parse(std::string_view text)
{
    auto slash = text.find('/');
    auto address = Ipv4Address::parse(text.substr(0, slash));
    if (!address)
        return std::nullopt;
    if (slash == std::string_view::npos)
        return Ipv4Prefix{*address, 32};
    auto length = parse_uint(text.substr(slash + 1), 32);
    if (!length)
        return std::nullopt;
    return Ipv4Prefix{*address, static_cast<std::uint8_t>(*length)};
}

std::string Ipv4Prefix::to_string() const
{
    return address.to_string() + "/" + std::to_string(length);
}

} // namespace l2disc
