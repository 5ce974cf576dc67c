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
#include "l2disc/net_types.hpp"
#include "l2disc/sim_time.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace l2disc {

enum class OdrRole { off, hub, stub };

const char* to_string(OdrRole role);
std::optional<OdrRole> parse_odr_role(std::string_view text);

struct CdpInterfaceConfig {
    std::string name;
    bool enabled = true;
    /// Interface address with prefix length, e.g. 10.0.12.1/24.
    std::optional<Ipv4Prefix> address;
    std::optional<Duplex> duplex;
    std::optional<std::uint16_t> native_vlan;
    /// Stub routers only; advertised alongside the connected prefixes.
    std::optional<Ipv4Address> default_gateway;

    bool operator==(const CdpInterfaceConfig&) const = default;
};

/// ODR route timers, all measured from the last refresh.
struct OdrTimers {
    SimTime invalid = SimTime::seconds(180);
    SimTime holddown = SimTime::seconds(180);
    SimTime flush = SimTime::seconds(240);

    bool operator==(const OdrTimers&) const = default;
};

struct CdpDeviceConfig {
    std::string device_id;
    std::string platform;
    std::string software_version;
    std::optional<std::string> location;
    std::uint32_t capabilities = cdp_cap::router;
    std::optional<std::string> vtp_domain;
    int update_interval = 60;
    /// Defaults to three update intervals.
    std::optional<int> holdtime;
    OdrRole odr_role = OdrRole::off;
    OdrTimers odr_timers;
    /// Upper bound of the uniform delay added to each periodic interval.
    SimTime jitter;
    std::vector<CdpInterfaceConfig> interfaces;

    int effective_holdtime() const { return holdtime.value_or(3 * update_interval); }

    bool operator==(const CdpDeviceConfig&) const = default;
};

inline constexpr int cdp_fast_start_count = 3;
inline constexpr SimTime cdp_fast_start_gap = SimTime::seconds(1);

struct CdpInterfaceEntry {
    std::string if_id;
    bool enabled = true;
    bool up = false;
    int fast_start_remaining = 0;
    /// Only meaningful while enabled and up.
    std::optional<SimTime> next_tx_at;
};

struct CdpNeighborEntry {
    std::string local_if;
    std::string device_id;
    std::string port_id;
    std::uint32_t capabilities = 0;
    std::string platform;
    std::string software_version;
    std::vector<Ipv4Address> addresses;
    std::optional<Duplex> duplex;
    std::optional<std::uint16_t> native_vlan;
    SimTime expires_at;

    bool operator==(const CdpNeighborEntry&) const = default;
};

enum class OdrRouteState { valid, holddown, flushed_pending };

const char* to_string(OdrRouteState state);

struct OdrRoute {
    Ipv4Prefix prefix;
    Ipv4Address next_hop;
    std::string learned_on;
    int metric = 1;
    OdrRouteState state = OdrRouteState::valid;
    SimTime invalid_at;
    SimTime holddown_until;
    SimTime flush_at;

    bool operator==(const OdrRoute&) const = default;
};

struct CdpEmission {
    std::string if_id;
    CdpPacket packet;
};

struct CdpCounters {
    std::uint64_t packets_out = 0;
    std::uint64_t packets_in = 0;
    std::uint64_t malformed = 0;
    std::uint64_t dropped_disabled = 0;
};

/// One device's CDP process: interface table, neighbor table and the ODR
/// route table. Not thread safe; callers serialize access.
class CdpEngine {
public:
    /// Throws Errc::invalid_config.
    explicit CdpEngine(CdpDeviceConfig config, std::uint64_t seed = 0);

    const CdpDeviceConfig& config() const { return config_; }
    int holdtime() const { return config_.effective_holdtime(); }

    bool has_interface(std::string_view if_id) const;
    const CdpInterfaceEntry& interface(std::string_view if_id) const;
    const std::vector<CdpInterfaceEntry>& interfaces() const { return interfaces_; }

    /// Starts fast-start: three updates one second apart, the first at `now`.
    void interface_up(std::string_view if_id, SimTime now);
    /// Stops transmission. Neighbors learned on the interface age out normally.
    void interface_down(std::string_view if_id, SimTime now);

    CdpPacket build_update(std::string_view if_id, SimTime now) const;

    void receive(std::string_view if_id, const CdpPacket& packet, SimTime now);
    /// Decodes a CDP payload and hands it to receive(); malformed payloads
    /// are counted and dropped.
    void receive_payload(std::string_view if_id, ByteView payload, SimTime now);

    /// Emits updates due at `now`, ages neighbors and applies ODR timers.
    std::vector<CdpEmission> poll(SimTime now);
    /// Earliest instant at which poll() has work to do.
    std::optional<SimTime> next_deadline() const;

    /// Sorted by (device_id, local_if, port_id).
    std::vector<CdpNeighborEntry> neighbors() const;
    std::string dump_neighbors(SimTime now) const;

    /// Sorted by prefix.
    std::vector<OdrRoute> odr_routes() const;
    std::string dump_odr_routes() const;

    const CdpCounters& counters() const { return counters_; }

private:
    using NeighborKey = std::tuple<std::string, std::string, std::string>;

    CdpInterfaceEntry& entry(std::string_view if_id);
    const CdpInterfaceConfig& interface_config(std::string_view if_id) const;
    void observe(SimTime now);
    void learn_odr(std::string_view if_id, const CdpPacket& packet, SimTime now);
    void install_route(Ipv4Prefix prefix, Ipv4Address next_hop, std::string_view if_id, SimTime now);
    void age(SimTime now);
    SimTime periodic_gap();

    CdpDeviceConfig config_;
    std::vector<CdpInterfaceEntry> interfaces_;
    std::map<NeighborKey, CdpNeighborEntry> neighbors_;
    std::map<Ipv4Prefix, OdrRoute> routes_;
    CdpCounters counters_;
    std::mt19937_64 rng_;
    std::optional<SimTime> last_now_;
};

} // namespace l2disc
