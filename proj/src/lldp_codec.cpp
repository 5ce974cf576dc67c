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

#include "l2disc/lldp_codec.hpp"

#include "byte_io.hpp"
#include "l2disc/error.hpp"

#include <algorithm>
#include <cstdio>

namespace l2disc {

using detail::ByteReader;
using detail::ByteWriter;

const char* lldp_tlv_name(std::uint8_t type)
{
    switch (type) {
    case 0: return "End Of LLDPDU";
    case 1: return "Chassis Id";
    case 2: return "Port Id";
    case 3: return "Time To Live";
    case 4: return "Port Description";
    case 5: return "System Name";
    case 6: return "System Description";
    case 7: return "System Capabilities";
    case 8: return "Management Address";
    case 127: return "Organizationally Specific";
    default: return "Unknown";
    }
}

std::string lldp_capability_codes(std::uint16_t caps)
{
    static constexpr std::pair<std::uint16_t, const char*> codes[] = {
        {lldp_cap::other, "O"},  {lldp_cap::repeater, "P"},  {lldp_cap::bridge, "B"},
        {lldp_cap::wlan_ap, "W"}, {lldp_cap::router, "R"},   {lldp_cap::telephone, "T"},
        {lldp_cap::docsis, "C"}, {lldp_cap::station, "S"},
    };
    std::string out;
    for (auto [bit, letter] : codes) {
        if (caps & bit) {
            if (!out.empty())
                out += ',';
            out += letter;
        }
    }
    return out;
}

LldpId LldpId::chassis_mac(MacAddress mac)
{
    return {chassis_subtype::mac_address, Bytes(mac.octets().begin(), mac.octets().end())};
}

LldpId LldpId::interface_name(std::string_view name)
{
    return {port_subtype::interface_name, to_bytes(name)};
}

std::string LldpId::to_string() const
{
    bool is_mac = (subtype == chassis_subtype::mac_address || subtype == port_subtype::mac_address);
    if (is_mac && value.size() == 6)
        return MacAddress::from_bytes(value).to_string();
    bool printable = !value.empty() && std::all_of(value.begin(), value.end(), [](std::uint8_t c) {
        return c >= 0x20 && c < 0x7f;
    });
    if (printable)
        return to_text(value);
    std::string out;
    char buf[4];
    for (auto b : value) {
        std::snprintf(buf, sizeof buf, "%02x", b);
        out += buf;
    }
    return out;
}

LldpManagementAddress LldpManagementAddress::ipv4(Ipv4Address a, std::uint32_t if_index)
{
    auto o = a.octets();
    return {1, Bytes(o.begin(), o.end()), 2, if_index, {}};
}

std::optional<Ipv4Address> LldpManagementAddress::as_ipv4() const
{
    if (address_subtype == 1 && address.size() == 4)
        return Ipv4Address::from_bytes(address);
    return std::nullopt;
}

const LldpTlv* LldpFrame::find(LldpTlvType type) const
{
    for (const auto& tlv : optional_tlvs)
        if (tlv.is(type))
            return &tlv;
    return nullptr;
}

namespace {

void put_tlv(ByteWriter& w, std::uint8_t type, ByteView value)
{
    if (value.size() > lldp_max_tlv_value)
        throw Error(Errc::tlv_too_long, std::string(lldp_tlv_name(type)) + " value is " +
                                            std::to_string(value.size()) + " bytes");
    w.u16(static_cast<std::uint16_t>(type << 9 | value.size()));
    w.bytes(value);
}

Bytes id_value(const LldpId& id)
{
    Bytes v(id.value.size() + 1);
    v[0] = id.subtype;
    std::copy(id.value.begin(), id.value.end(), v.begin() + 1);
    return v;
}

struct ValueEncoder {
    Bytes operator()(const std::string& s) const { return to_bytes(s); }
    Bytes operator()(const LldpCapabilities& c) const
    {
        ByteWriter w;
        w.u16(c.capabilities);
        w.u16(c.enabled);
        return w.take();
    }
    Bytes operator()(const LldpManagementAddress& m) const
    {
        if (m.address.empty() || m.address.size() > 31 || m.oid.size() > 128)
            throw Error(Errc::tlv_too_long, "management address field out of range");
        ByteWriter w;
        w.u8(static_cast<std::uint8_t>(m.address.size() + 1));
        w.u8(m.address_subtype);
        w.bytes(m.address);
        w.u8(m.interface_subtype);
        w.u32(m.interface_number);
        w.u8(static_cast<std::uint8_t>(m.oid.size()));
        w.bytes(m.oid);
        return w.take();
    }
    Bytes operator()(const Bytes& raw) const { return raw; }
};

LldpId decode_id(std::uint8_t type, ByteView value)
{
    if (value.empty())
        throw Error(Errc::bad_tlv_length, std::string(lldp_tlv_name(type)) + " without subtype");
    return {value[0], Bytes(value.begin() + 1, value.end())};
}

LldpTlvValue decode_value(std::uint8_t type, ByteView value)
{
    switch (static_cast<LldpTlvType>(type)) {
    case LldpTlvType::port_description:
    case LldpTlvType::system_name:
    case LldpTlvType::system_description:
        return to_text(value);
    case LldpTlvType::system_capabilities: {
        if (value.size() != 4)
            throw Error(Errc::bad_tlv_length, "System Capabilities value must be 4 bytes");
        ByteReader r(value);
        LldpCapabilities caps;
        caps.capabilities = r.u16();
        caps.enabled = r.u16();
        return caps;
    }
    case LldpTlvType::management_address: {
        ByteReader r(value);
        LldpManagementAddress m;
        std::uint8_t string_length = r.u8();
        if (string_length < 2 || string_length > 32)
            throw Error(Errc::bad_tlv_length, "management address string length " + std::to_string(string_length));
        m.address_subtype = r.u8();
        auto addr = r.take(string_length - 1u);
        m.address.assign(addr.begin(), addr.end());
        m.interface_subtype = r.u8();
        m.interface_number = r.u32();
        auto oid = r.take(r.u8());
        m.oid.assign(oid.begin(), oid.end());
        if (!r.empty())
            throw Error(Errc::bad_tlv_length, "trailing bytes in Management Address TLV");
        return m;
    }
    default:
        return Bytes(value.begin(), value.end());
    }
}

} // namespace

Bytes encode_lldp(const LldpFrame& frame)
{
    ByteWriter w;
    put_tlv(w, LldpTlv::code(LldpTlvType::chassis_id), id_value(frame.chassis_id));
    put_tlv(w, LldpTlv::code(LldpTlvType::port_id), id_value(frame.port_id));
    ByteWriter ttl;
    ttl.u16(frame.ttl);
    put_tlv(w, LldpTlv::code(LldpTlvType::ttl), ttl.buffer());

    unsigned seen = 0;
    for (const auto& tlv : frame.optional_tlvs) {
        if (tlv.type >= 4 && tlv.type <= 7) {
            if (seen & (1u << tlv.type))
                throw Error(Errc::duplicate_tlv, lldp_tlv_name(tlv.type));
            seen |= 1u << tlv.type;
        }
        if (tlv.type <= 3 || tlv.type > 127)
            throw Error(Errc::bad_mandatory_order, "optional TLV with reserved type " + std::to_string(tlv.type));
        put_tlv(w, tlv.type, std::visit(ValueEncoder{}, tlv.value));
    }
    w.u16(0);
    return w.take();
}

LldpFrame decode_lldp(ByteView payload)
{
    ByteReader r(payload);
    auto next_tlv = [&r](std::uint8_t& type) {
        std::uint16_t header = r.u16();
        type = static_cast<std::uint8_t>(header >> 9);
        return r.take(header & 0x1ff);
    };

    LldpFrame frame;
    std::uint8_t type = 0;
    static constexpr LldpTlvType mandatory[] = {LldpTlvType::chassis_id, LldpTlvType::port_id, LldpTlvType::ttl};
    for (auto expected : mandatory) {
        auto value = next_tlv(type);
        if (type != LldpTlv::code(expected))
            throw Error(Errc::bad_mandatory_order, std::string("expected ") + lldp_tlv_name(LldpTlv::code(expected)) +
                                                       ", found " + lldp_tlv_name(type));
        if (expected == LldpTlvType::chassis_id) {
            frame.chassis_id = decode_id(type, value);
        } else if (expected == LldpTlvType::port_id) {
            frame.port_id = decode_id(type, value);
        } else {
            if (value.size() != 2)
                throw Error(Errc::bad_tlv_length, "Time To Live value must be 2 bytes");
            frame.ttl = static_cast<std::uint16_t>(value[0] << 8 | value[1]);
        }
    }

    unsigned seen = 0;
    for (;;) {
        auto value = next_tlv(type);
        if (type == LldpTlv::code(LldpTlvType::end))
            break;
        if (type <= 3 || (type <= 7 && (seen & (1u << type))))
            throw Error(Errc::duplicate_tlv, lldp_tlv_name(type));
        if (type <= 7)
            seen |= 1u << type;
        frame.optional_tlvs.push_back({type, decode_value(type, value)});
    }
    return frame;
}

} // namespace l2disc
