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

#include "l2disc/cdp_engine.hpp"

#include "l2disc/error.hpp"
#include "text_table.hpp"

#include <algorithm>

namespace l2disc {

const char* to_string(OdrRole role)
{
    switch (role) {
    case OdrRole::off: return "off";
    case OdrRole::hub: return "hub";
    case OdrRole::stub: return "stub";
    }
    return "off";
}

std::optional<OdrRole> parse_odr_role(std::string_view text)
{
    if (text == "off")
        return OdrRole::off;
    if (text == "hub")
        return OdrRole::hub;
    if (text == "stub")
        return OdrRole::stub;
    return std::nullopt;
}

const char* to_string(OdrRouteState state)
{
    switch (state) {
    case OdrRouteState::valid: return "valid";
    case OdrRouteState::holddown: return "holddown";
    case OdrRouteState::flushed_pending: return "flushed-pending";
    }
    return "valid";
}

CdpEngine::CdpEngine(CdpDeviceConfig config, std::uint64_t seed) : config_(std::move(config)), rng_(seed)
{
    if (config_.update_interval < 1)
        throw Error(Errc::invalid_config, "update interval must be at least 1 s");
    int holdtime = config_.effective_holdtime();
    if (holdtime < 1 || holdtime > 255)
        throw Error(Errc::invalid_config, "holdtime " + std::to_string(holdtime) + " outside [1, 255]");
    const auto& t = config_.odr_timers;
    if (t.invalid <= SimTime{} || t.holddown < SimTime{} || t.flush <= t.invalid)
        throw Error(Errc::invalid_config, "ODR timers need 0 < invalid < flush and holddown >= 0");
    if (config_.jitter < SimTime{})
        throw Error(Errc::invalid_config, "negative jitter");

    for (const auto& ifc : config_.interfaces) {
        if (has_interface(ifc.name))
            throw Error(Errc::invalid_config, "duplicate interface " + ifc.name);
        interfaces_.push_back({ifc.name, ifc.enabled, false, 0, std::nullopt});
    }
}

bool CdpEngine::has_interface(std::string_view if_id) const
{
    return std::any_of(interfaces_.begin(), interfaces_.end(), [&](const auto& e) { return e.if_id == if_id; });
}

const CdpInterfaceEntry& CdpEngine::interface(std::string_view if_id) const
{
    return const_cast<CdpEngine*>(this)->entry(if_id);
}

CdpInterfaceEntry& CdpEngine::entry(std::string_view if_id)
{
    for (auto& e : interfaces_)
        if (e.if_id == if_id)
            return e;
    throw Error(Errc::unknown_interface, std::string(if_id));
}

const CdpInterfaceConfig& CdpEngine::interface_config(std::string_view if_id) const
{
    for (const auto& c : config_.interfaces)
        if (c.name == if_id)
            return c;
    throw Error(Errc::unknown_interface, std::string(if_id));
}

void CdpEngine::observe(SimTime now)
{
    if (last_now_ && now < *last_now_)
        throw Error(Errc::non_monotonic_time, now.to_string() + " after " + last_now_->to_string());
    last_now_ = now;
}

void CdpEngine::interface_up(std::string_view if_id, SimTime now)
{
    auto& e = entry(if_id);
    observe(now);
    e.up = true;
    e.fast_start_remaining = cdp_fast_start_count;
    e.next_tx_at = now;
}

void CdpEngine::interface_down(std::string_view if_id, SimTime now)
{
    auto& e = entry(if_id);
    observe(now);
    if (!e.enabled)
        return;
    e.up = false;
    e.fast_start_remaining = 0;
    e.next_tx_at.reset();
}

CdpPacket CdpEngine::build_update(std::string_view if_id, SimTime) const
{
    const auto& e = interface(if_id);
    if (!e.enabled || !e.up)
        throw Error(Errc::interface_down, std::string(if_id));
    const auto& ifc = interface_config(if_id);

    CdpPacket packet;
    packet.version = 2;
    packet.ttl = static_cast<std::uint8_t>(holdtime());
    packet.tlvs.push_back(CdpTlv::device_id(config_.device_id));
    if (ifc.address)
        packet.tlvs.push_back(CdpTlv::address({{CdpAddressRecord::ipv4(ifc.address->address)}, {}}));
    packet.tlvs.push_back(CdpTlv::port_id(ifc.name));
    packet.tlvs.push_back(CdpTlv::capabilities(config_.capabilities));
    packet.tlvs.push_back(CdpTlv::software_version(config_.software_version));
    packet.tlvs.push_back(CdpTlv::platform(config_.platform));

    if (config_.odr_role == OdrRole::stub) {
        CdpPrefixList list;
        list.default_gateway = ifc.default_gateway;
        for (const auto& c : config_.interfaces)
            if (c.address)
                list.prefixes.push_back(c.address->network());
        packet.tlvs.push_back(CdpTlv::ip_network_prefix(std::move(list)));
    } else if (config_.odr_role == OdrRole::hub && ifc.address) {
        packet.tlvs.push_back(CdpTlv::ip_network_prefix({ifc.address->address, {}}));
    }

    if (config_.vtp_domain)
        packet.tlvs.push_back(CdpTlv::vtp_management_domain(*config_.vtp_domain));
    if (ifc.native_vlan)
        packet.tlvs.push_back(CdpTlv::native_vlan(*ifc.native_vlan));
    if (ifc.duplex)
        packet.tlvs.push_back(CdpTlv::duplex(*ifc.duplex));
    if (config_.location)
        packet.tlvs.push_back(CdpTlv::location(*config_.location));
    return packet;
}

void CdpEngine::receive(std::string_view if_id, const CdpPacket& packet, SimTime now)
{
    auto& e = entry(if_id);
    observe(now);
    if (!e.enabled) {
        ++counters_.dropped_disabled;
        return;
    }
    ++counters_.packets_in;

    auto text = [&](CdpTlvType t) {
        const auto* s = packet.get<std::string>(t);
        return s ? *s : std::string{};
    };
    NeighborKey key{std::string(if_id), text(CdpTlvType::device_id), text(CdpTlvType::port_id)};
    if (packet.ttl == 0) {
        neighbors_.erase(key);
        return;
    }

    CdpNeighborEntry n;
    n.local_if = std::get<0>(key);
    n.device_id = std::get<1>(key);
    n.port_id = std::get<2>(key);
    if (const auto* caps = packet.get<CdpCapabilities>(CdpTlvType::capabilities))
        n.capabilities = caps->bits;
    n.platform = text(CdpTlvType::platform);
    n.software_version = text(CdpTlvType::software_version);
    if (const auto* list = packet.get<CdpAddressList>(CdpTlvType::address))
        for (const auto& rec : list->addresses)
            if (auto a = rec.as_ipv4())
                n.addresses.push_back(*a);
    if (const auto* d = packet.get<Duplex>(CdpTlvType::full_half_duplex))
        n.duplex = *d;
    if (const auto* v = packet.get<CdpNativeVlan>(CdpTlvType::native_vlan))
        n.native_vlan = v->id;
    n.expires_at = now + SimTime::seconds(packet.ttl);
    neighbors_[key] = std::move(n);

    learn_odr(if_id, packet, now);
}

void CdpEngine::receive_payload(std::string_view if_id, ByteView payload, SimTime now)
{
    CdpPacket packet;
    try {
        packet = decode_cdp(payload);
    } catch (const Error&) {
        entry(if_id);
        ++counters_.malformed;
        return;
    }
    receive(if_id, packet, now);
}

void CdpEngine::learn_odr(std::string_view if_id, const CdpPacket& packet, SimTime now)
{
    const auto* list = packet.get<CdpPrefixList>(CdpTlvType::ip_network_prefix);
    if (!list)
        return;

    if (config_.odr_role == OdrRole::hub) {
        const auto* addrs = packet.get<CdpAddressList>(CdpTlvType::address);
        std::optional<Ipv4Address> next_hop;
        if (addrs)
            for (const auto& rec : addrs->addresses)
                if ((next_hop = rec.as_ipv4()))
                    break;
        if (!next_hop)
            return;
        for (const auto& prefix : list->prefixes) {
            auto net = prefix.network();
            bool connected = std::any_of(config_.interfaces.begin(), config_.interfaces.end(), [&](const auto& c) {
                return c.address && c.address->network() == net;
            });
            if (!connected)
                install_route(net, *next_hop, if_id, now);
        }
    } else if (config_.odr_role == OdrRole::stub && list->default_gateway) {
        install_route(Ipv4Prefix{}, *list->default_gateway, if_id, now);
    }
}

void CdpEngine::install_route(Ipv4Prefix prefix, Ipv4Address next_hop, std::string_view if_id, SimTime now)
{
    const auto& t = config_.odr_timers;
    OdrRoute route;
    route.prefix = prefix;
    route.next_hop = next_hop;
    route.learned_on = std::string(if_id);
    route.metric = 1;
    route.state = OdrRouteState::valid;
    route.invalid_at = now + t.invalid;
    route.holddown_until = route.invalid_at + t.holddown;
    route.flush_at = now + t.flush;
    routes_[prefix] = std::move(route);
}

void CdpEngine::age(SimTime now)
{
    std::erase_if(neighbors_, [&](const auto& kv) { return kv.second.expires_at <= now; });

    for (auto it = routes_.begin(); it != routes_.end();) {
        auto& r = it->second;
        if (now >= r.flush_at) {
            it = routes_.erase(it);
            continue;
        }
        if (now >= r.holddown_until)
            r.state = OdrRouteState::flushed_pending;
        else if (now >= r.invalid_at)
            r.state = OdrRouteState::holddown;
        ++it;
    }
}

SimTime CdpEngine::periodic_gap()
{
    SimTime gap = SimTime::seconds(config_.update_interval);
    if (config_.jitter > SimTime{})
        gap += SimTime::micros(static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(config_.jitter.count())));
    return gap;
}

std::vector<CdpEmission> CdpEngine::poll(SimTime now)
{
    observe(now);
    age(now);

    std::vector<CdpEmission> out;
    for (auto& e : interfaces_) {
        if (!e.enabled || !e.up || !e.next_tx_at || *e.next_tx_at > now)
            continue;
        out.push_back({e.if_id, build_update(e.if_id, now)});
        ++counters_.packets_out;
        if (e.fast_start_remaining > 0)
            --e.fast_start_remaining;
        e.next_tx_at = now + (e.fast_start_remaining > 0 ? cdp_fast_start_gap : periodic_gap());
    }
    return out;
}

std::optional<SimTime> CdpEngine::next_deadline() const
{
    std::optional<SimTime> best;
    auto consider = [&](SimTime t) {
        if (!best || t < *best)
            best = t;
    };
    for (const auto& e : interfaces_)
        if (e.enabled && e.up && e.next_tx_at)
            consider(*e.next_tx_at);
    for (const auto& [key, n] : neighbors_)
        consider(n.expires_at);
    for (const auto& [prefix, r] : routes_) {
        if (r.state == OdrRouteState::valid)
            consider(std::min(r.invalid_at, r.flush_at));
        else if (r.state == OdrRouteState::holddown && r.holddown_until < r.flush_at)
            consider(r.holddown_until);
        consider(r.flush_at);
    }
    return best;
}

std::vector<CdpNeighborEntry> CdpEngine::neighbors() const
{
    std::vector<CdpNeighborEntry> out;
    out.reserve(neighbors_.size());
    for (const auto& [key, n] : neighbors_)
        out.push_back(n);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return std::tie(a.device_id, a.local_if, a.port_id) < std::tie(b.device_id, b.local_if, b.port_id);
    });
    return out;
}

std::string CdpEngine::dump_neighbors(SimTime now) const
{
    std::string out;
    std::string line;
    detail::cell(line, "Device ID", 17);
    detail::cell(line, "Local Intrfce", 18);
    detail::cell(line, "Holdtme", 11);
    detail::cell(line, "Capability", 12);
    detail::cell(line, "Platform", 10);
    line += "Port ID";
    out += line + "\n";
    for (const auto& n : neighbors()) {
        line.clear();
        detail::cell(line, n.device_id, 17);
        detail::cell(line, n.local_if, 18);
        detail::cell(line, std::to_string((n.expires_at - now).ceil_seconds()), 11);
        detail::cell(line, cdp_capability_codes(n.capabilities), 12);
        detail::cell(line, n.platform, 10);
        line += n.port_id;
        detail::trim_right(line);
        out += line + "\n";
    }
    return out;
}

std::vector<OdrRoute> CdpEngine::odr_routes() const
{
    std::vector<OdrRoute> out;
    out.reserve(routes_.size());
    for (const auto& [prefix, r] : routes_)
        out.push_back(r);
    return out;
}

std::string CdpEngine::dump_odr_routes() const
{
    std::string out;
    for (const auto& r : odr_routes())
        out += "o     " + r.prefix.to_string() + " [160/" + std::to_string(r.metric) + "] via " +
               r.next_hop.to_string() + ", " + r.learned_on + ", " + to_string(r.state) + "\n";
    return out;
}

} // namespace l2disc
