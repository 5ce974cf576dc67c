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

#include "l2disc/lldp_engine.hpp"

#include "l2disc/error.hpp"
#include "text_table.hpp"

#include <algorithm>

namespace l2disc {

const char* to_string(LldpAdminStatus status)
{
    switch (status) {
    case LldpAdminStatus::tx_rx: return "txRx";
    case LldpAdminStatus::tx_only: return "txOnly";
    case LldpAdminStatus::rx_only: return "rxOnly";
    case LldpAdminStatus::disabled: return "disabled";
    }
    return "disabled";
}

std::optional<LldpAdminStatus> parse_admin_status(std::string_view text)
{
    for (auto s : {LldpAdminStatus::tx_rx, LldpAdminStatus::tx_only, LldpAdminStatus::rx_only, LldpAdminStatus::disabled})
        if (text == to_string(s))
            return s;
    return std::nullopt;
}

int LldpAgentConfig::advertised_ttl() const
{
    return static_cast<int>(std::min<long long>(65535, static_cast<long long>(msg_tx_interval) * msg_tx_hold));
}

int lldp_hold_for_ttl(int msg_tx_interval, int ttl)
{
    if (msg_tx_interval < 1 || ttl < 1 || ttl % msg_tx_interval != 0)
        throw Error(Errc::invalid_config, "ttl " + std::to_string(ttl) + " is not a multiple of tx interval " +
                                              std::to_string(msg_tx_interval));
    return ttl / msg_tx_interval;
}

LldpEngine::LldpEngine(LldpLocalMib mib, std::vector<LldpAgentConfig> agents, std::uint64_t seed)
    : mib_(std::move(mib)), rng_(seed)
{
    if ((mib_.enabled_capabilities & ~mib_.capabilities) != 0)
        throw Error(Errc::invalid_config, "enabled capabilities must be a subset of capabilities");
    for (auto& c : agents) {
        if (c.tx_fast_init < 1 || c.tx_fast_init > 8)
            throw Error(Errc::invalid_config, "tx_fast_init " + std::to_string(c.tx_fast_init) + " outside [1, 8]");
        if (c.msg_tx_interval < 1)
            throw Error(Errc::invalid_config, "msg_tx_interval must be at least 1 s");
        if (c.msg_tx_hold < 1 || c.msg_fast_tx < 1 || c.tx_credit_max < 1)
            throw Error(Errc::invalid_config, "msg_tx_hold, msg_fast_tx and tx_credit_max must be positive");
        if (c.jitter < SimTime{})
            throw Error(Errc::invalid_config, "negative jitter");
        if (has_agent(c.port))
            throw Error(Errc::invalid_config, "duplicate agent port " + c.port);
        LldpAgent a;
        a.tx_credit = c.tx_credit_max;
        a.tx_fast_remaining = c.tx_fast_init;
        a.config = std::move(c);
        agents_.push_back(std::move(a));
    }
    counters_.resize(agents_.size());
}

bool LldpEngine::has_agent(std::string_view port) const
{
    return std::any_of(agents_.begin(), agents_.end(), [&](const auto& a) { return a.config.port == port; });
}

std::size_t LldpEngine::index_of(std::string_view port) const
{
    for (std::size_t i = 0; i < agents_.size(); ++i)
        if (agents_[i].config.port == port)
            return i;
    throw Error(Errc::unknown_port, std::string(port));
}

LldpAgent& LldpEngine::find(std::string_view port)
{
    return agents_[index_of(port)];
}

const LldpAgent& LldpEngine::agent(std::string_view port) const
{
    return agents_[index_of(port)];
}

const LldpCounters& LldpEngine::counters(std::string_view port) const
{
    return counters_[index_of(port)];
}

void LldpEngine::observe(SimTime now)
{
    if (last_now_ && now < *last_now_)
        throw Error(Errc::non_monotonic_time, now.to_string() + " after " + last_now_->to_string());
    std::int64_t tick = now.whole_seconds();
    if (last_now_ && tick > credit_tick_) {
        std::int64_t earned = tick - credit_tick_;
        for (auto& a : agents_)
            a.tx_credit = static_cast<int>(std::min<std::int64_t>(a.config.tx_credit_max, a.tx_credit + earned));
    }
    credit_tick_ = tick;
    last_now_ = now;
}

void LldpEngine::start_fast(LldpAgent& a, SimTime now)
{
    a.tx_fast_remaining = a.config.tx_fast_init;
    a.next_tx_at = now;
}

void LldpEngine::set_local_mib(LldpLocalMib mib, SimTime now)
{
    if (mib.chassis_id != mib_.chassis_id)
        throw Error(Errc::invalid_config, "chassis id is fixed for the device lifetime");
    if ((mib.enabled_capabilities & ~mib.capabilities) != 0)
        throw Error(Errc::invalid_config, "enabled capabilities must be a subset of capabilities");
    mib_ = std::move(mib);
    local_change(now);
}

void LldpEngine::port_up(std::string_view port, SimTime now)
{
    auto& a = find(port);
    observe(now);
    a.up = true;
    if (transmits(a.config.admin_status))
        start_fast(a, now);
}

void LldpEngine::port_down(std::string_view port, SimTime now)
{
    auto& a = find(port);
    observe(now);
    a.up = false;
    a.tx_fast_remaining = 0;
    a.next_tx_at.reset();
    a.shutdown_pending_at.reset();
}

void LldpEngine::set_admin_status(std::string_view port, LldpAdminStatus status, SimTime now)
{
    std::size_t i = index_of(port);
    auto& a = agents_[i];
    observe(now);
    LldpAdminStatus old = a.config.admin_status;
    a.config.admin_status = status;

    if (transmits(old) && !transmits(status)) {
        a.next_tx_at.reset();
        a.tx_fast_remaining = 0;
        if (a.up)
            a.shutdown_pending_at = now;
    } else if (!transmits(old) && transmits(status) && a.up) {
        a.shutdown_pending_at.reset();
        start_fast(a, now);
    }
    if (receives(old) && !receives(status))
        std::erase_if(remote_, [&](const auto& kv) { return std::get<0>(kv.first) == port; });
}

LldpFrame LldpEngine::build_frame(std::string_view port, SimTime) const
{
    const auto& a = agent(port);
    if (!transmits(a.config.admin_status))
        throw Error(Errc::agent_not_transmitting, std::string(port) + " is " + to_string(a.config.admin_status));

    LldpFrame f;
    f.chassis_id = LldpId::chassis_mac(mib_.chassis_id);
    f.port_id = LldpId::interface_name(a.config.port);
    f.ttl = static_cast<std::uint16_t>(a.config.advertised_ttl());
    f.optional_tlvs.push_back(LldpTlv::port_description(a.config.port_description));
    f.optional_tlvs.push_back(LldpTlv::system_name(mib_.system_name));
    f.optional_tlvs.push_back(LldpTlv::system_description(mib_.system_description));
    f.optional_tlvs.push_back(LldpTlv::system_capabilities(mib_.capabilities, mib_.enabled_capabilities));
    if (mib_.management_address)
        f.optional_tlvs.push_back(
            LldpTlv::management_address(LldpManagementAddress::ipv4(*mib_.management_address, a.config.if_index)));
    return f;
}

LldpFrame LldpEngine::shutdown_frame(std::string_view port) const
{
    const auto& a = agent(port);
    LldpFrame f;
    f.chassis_id = LldpId::chassis_mac(mib_.chassis_id);
    f.port_id = LldpId::interface_name(a.config.port);
    f.ttl = 0;
    return f;
}

void LldpEngine::receive(std::string_view port, const LldpFrame& frame, SimTime now)
{
    std::size_t i = index_of(port);
    auto& a = agents_[i];
    auto& c = counters_[i];
    observe(now);
    if (!receives(a.config.admin_status)) {
        ++c.frames_discarded;
        return;
    }
    ++c.frames_in;
    c.tlvs_unrecognized += static_cast<std::uint64_t>(
        std::count_if(frame.optional_tlvs.begin(), frame.optional_tlvs.end(), [](const auto& t) { return !t.is_known(); }));

    NeighborKey key{std::string(port), frame.chassis_id, frame.port_id};
    if (frame.ttl == 0) {
        remote_.erase(key);
        return;
    }

    LldpNeighborEntry n;
    n.local_port = std::string(port);
    n.chassis_id = frame.chassis_id;
    n.port_id = frame.port_id;
    n.rx_ttl = frame.ttl;
    n.expires_at = now + SimTime::seconds(frame.ttl);
    if (const auto* s = frame.get<std::string>(LldpTlvType::port_description))
        n.port_description = *s;
    if (const auto* s = frame.get<std::string>(LldpTlvType::system_name))
        n.system_name = *s;
    if (const auto* s = frame.get<std::string>(LldpTlvType::system_description))
        n.system_description = *s;
    if (const auto* caps = frame.get<LldpCapabilities>(LldpTlvType::system_capabilities))
        n.capabilities = *caps;
    if (const auto* m = frame.get<LldpManagementAddress>(LldpTlvType::management_address))
        n.management_address = m->as_ipv4();

    auto [it, inserted] = remote_.insert_or_assign(key, std::move(n));
    // New neighbor starts fast-start unless one is already running.
    if (inserted && a.config.fast_start_on_new_neighbor && transmits(a.config.admin_status) && a.up &&
        a.tx_fast_remaining == 0)
        start_fast(a, now);
}

void LldpEngine::receive_payload(std::string_view port, ByteView payload, SimTime now)
{
    std::size_t i = index_of(port);
    LldpFrame frame;
    try {
        frame = decode_lldp(payload);
    } catch (const Error&) {
        observe(now);
        ++counters_[i].frames_in_errors;
        return;
    }
    receive(port, frame, now);
}

void LldpEngine::local_change(SimTime now)
{
    observe(now);
    for (auto& a : agents_) {
        if (!transmits(a.config.admin_status) || !a.up)
            continue;
        a.something_changed_local = true;
        if (a.config.fast_start_on_local_change)
            a.tx_fast_remaining = a.config.tx_fast_init;
        a.next_tx_at = now;
    }
}

SimTime LldpEngine::periodic_gap(const LldpAgent& a)
{
    SimTime gap = SimTime::seconds(a.config.msg_tx_interval);
    if (a.config.jitter > SimTime{})
        gap += SimTime::micros(static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(a.config.jitter.count())));
    return gap;
}

std::vector<LldpEmission> LldpEngine::poll(SimTime now)
{
    observe(now);

    for (auto it = remote_.begin(); it != remote_.end();) {
        if (it->second.expires_at <= now) {
            ++counters_[index_of(it->second.local_port)].ageouts;
            it = remote_.erase(it);
        } else {
            ++it;
        }
    }

    std::vector<LldpEmission> out;
    for (std::size_t i = 0; i < agents_.size(); ++i) {
        auto& a = agents_[i];
        if (a.shutdown_pending_at && *a.shutdown_pending_at <= now) {
            a.shutdown_pending_at.reset();
            out.push_back({a.config.port, a.config.destination, shutdown_frame(a.config.port)});
            ++counters_[i].frames_out;
        }
        if (!a.up || !transmits(a.config.admin_status) || !a.next_tx_at || *a.next_tx_at > now)
            continue;
        if (a.tx_credit < 1)
            continue;
        --a.tx_credit;
        out.push_back({a.config.port, a.config.destination, build_frame(a.config.port, now)});
        ++counters_[i].frames_out;
        a.something_changed_local = false;
        if (a.tx_fast_remaining > 0)
            --a.tx_fast_remaining;
        a.next_tx_at = now + (a.tx_fast_remaining > 0 ? SimTime::seconds(a.config.msg_fast_tx) : periodic_gap(a));
    }
    return out;
}

std::optional<SimTime> LldpEngine::next_deadline() const
{
    std::optional<SimTime> best;
    auto consider = [&](SimTime t) {
        if (!best || t < *best)
            best = t;
    };
    for (const auto& a : agents_) {
        if (a.shutdown_pending_at)
            consider(*a.shutdown_pending_at);
        if (!a.up || !transmits(a.config.admin_status) || !a.next_tx_at)
            continue;
        if (a.tx_credit >= 1 || !last_now_ || *a.next_tx_at > *last_now_)
            consider(*a.next_tx_at);
        else
            consider(SimTime::seconds(credit_tick_ + 1));
    }
    for (const auto& [key, n] : remote_)
        consider(n.expires_at);
    return best;
}

std::vector<LldpNeighborEntry> LldpEngine::neighbors() const
{
    std::vector<LldpNeighborEntry> out;
    out.reserve(remote_.size());
    for (const auto& [key, n] : remote_)
        out.push_back(n);
    return out;
}

std::string LldpEngine::dump_neighbors(SimTime now) const
{
    std::string out;
    std::string line;
    detail::cell(line, "Device ID", 20);
    detail::cell(line, "Local Intf", 15);
    detail::cell(line, "Hold-time", 11);
    detail::cell(line, "Capability", 16);
    line += "Port ID";
    out += line + "\n";

    auto rows = neighbors();
    auto device = [](const LldpNeighborEntry& n) { return n.system_name.value_or(n.chassis_id.to_string()); };
    std::stable_sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
        return std::make_tuple(device(a), a.local_port) < std::make_tuple(device(b), b.local_port);
    });
    for (const auto& n : rows) {
        line.clear();
        detail::cell(line, device(n), 20);
        detail::cell(line, n.local_port, 15);
        detail::cell(line, std::to_string((n.expires_at - now).ceil_seconds()), 11);
        detail::cell(line, n.capabilities ? lldp_capability_codes(n.capabilities->enabled) : "", 16);
        line += n.port_id.to_string();
        detail::trim_right(line);
        out += line + "\n";
    }
    return out;
}

} // namespace l2disc
