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

#include "l2disc/lldp_codec.hpp"
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

enum class LldpAdminStatus { tx_rx, tx_only, rx_only, disabled };

const char* to_string(LldpAdminStatus status);
std::optional<LldpAdminStatus> parse_admin_status(std::string_view text);

inline bool transmits(LldpAdminStatus s) { return s == LldpAdminStatus::tx_rx || s == LldpAdminStatus::tx_only; }
inline bool receives(LldpAdminStatus s) { return s == LldpAdminStatus::tx_rx || s == LldpAdminStatus::rx_only; }

/// Device-wide part of the local MIB. Port ids and descriptions live in the
/// per-agent configuration.
struct LldpLocalMib {
    MacAddress chassis_id;
    std::string system_name;
    std::string system_description;
    std::uint16_t capabilities = lldp_cap::router;
    std::uint16_t enabled_capabilities = lldp_cap::router;
    std::optional<Ipv4Address> management_address;

    bool operator==(const LldpLocalMib&) const = default;
};

struct LldpAgentConfig {
    std::string port;
    std::string port_description;
    std::uint32_t if_index = 0;
    LldpAdminStatus admin_status = LldpAdminStatus::tx_rx;
    int msg_tx_interval = 30;
    int msg_tx_hold = 4;
    int msg_fast_tx = 1;
    int tx_fast_init = 3;
    int tx_credit_max = 5;
    MacAddress destination = mac::lldp_nearest_bridge;
    bool fast_start_on_local_change = true;
    bool fast_start_on_new_neighbor = true;
    SimTime jitter;

    int advertised_ttl() const;

    bool operator==(const LldpAgentConfig&) const = default;
};

/// msg_tx_hold that yields `ttl` for the given interval. Throws
/// Errc::invalid_config unless ttl is a positive multiple of the interval.
int lldp_hold_for_ttl(int msg_tx_interval, int ttl);

/// Per-port transmit/receive state.
struct LldpAgent {
    LldpAgentConfig config;
    bool up = false;
    int tx_fast_remaining = 0;
    int tx_credit = 0;
    std::optional<SimTime> next_tx_at;
    bool something_changed_local = false;
    std::optional<SimTime> shutdown_pending_at;
};

struct LldpNeighborEntry {
    std::string local_port;
    LldpId chassis_id;
    LldpId port_id;
    std::uint16_t rx_ttl = 0;
    SimTime expires_at;
    std::optional<std::string> port_description;
    std::optional<std::string> system_name;
    std::optional<std::string> system_description;
    std::optional<LldpCapabilities> capabilities;
    std::optional<Ipv4Address> management_address;

    bool operator==(const LldpNeighborEntry&) const = default;
};

struct LldpCounters {
    std::uint64_t frames_out = 0;
    std::uint64_t frames_in = 0;
    std::uint64_t frames_in_errors = 0;
    std::uint64_t frames_discarded = 0;
    std::uint64_t tlvs_unrecognized = 0;
    std::uint64_t ageouts = 0;

    bool operator==(const LldpCounters&) const = default;
};

struct LldpEmission {
    std::string port;
    MacAddress destination;
    LldpFrame frame;
};

/// One device's LLDP implementation: agents, local and remote MIB, credit
/// based transmit limiting. Not thread safe; callers serialize access.
class LldpEngine {
public:
    /// Throws Errc::invalid_config.
    LldpEngine(LldpLocalMib mib, std::vector<LldpAgentConfig> agents, std::uint64_t seed = 0);

    const LldpLocalMib& local_mib() const { return mib_; }
    /// Replaces the local MIB (chassis id must not change) and signals a change.
    void set_local_mib(LldpLocalMib mib, SimTime now);

    bool has_agent(std::string_view port) const;
    const LldpAgent& agent(std::string_view port) const;
    const std::vector<LldpAgent>& agents() const { return agents_; }

    /// Link came up: fast-start with the first frame at `now`.
    void port_up(std::string_view port, SimTime now);
    /// Link failure: transmission stops silently, remote entries age out.
    void port_down(std::string_view port, SimTime now);
    /// Leaving a transmitting status queues a shutdown frame; leaving a
    /// receiving status drops the port's remote entries.
    void set_admin_status(std::string_view port, LldpAdminStatus status, SimTime now);

    LldpFrame build_frame(std::string_view port, SimTime now) const;
    LldpFrame shutdown_frame(std::string_view port) const;

    void receive(std::string_view port, const LldpFrame& frame, SimTime now);
    /// Decodes an LLDPDU; decode failures count as frames_in_errors.
    void receive_payload(std::string_view port, ByteView payload, SimTime now);

    /// Local MIB changed: every transmitting agent sends at the next
    /// opportunity and (if enabled) restarts fast-start.
    void local_change(SimTime now);

    std::vector<LldpEmission> poll(SimTime now);
    std::optional<SimTime> next_deadline() const;

    /// Sorted by (local_port, chassis_id, port_id).
    std::vector<LldpNeighborEntry> neighbors() const;
    std::string dump_neighbors(SimTime now) const;

    const LldpCounters& counters(std::string_view port) const;

private:
    using NeighborKey = std::tuple<std::string, LldpId, LldpId>;

    LldpAgent& find(std::string_view port);
    std::size_t index_of(std::string_view port) const;
    void observe(SimTime now);
    void start_fast(LldpAgent& a, SimTime now);
    SimTime periodic_gap(const LldpAgent& a);

    LldpLocalMib mib_;
    std::vector<LldpAgent> agents_;
    std::vector<LldpCounters> counters_;
    std::map<NeighborKey, LldpNeighborEntry> remote_;
    std::mt19937_64 rng_;
    std::optional<SimTime> last_now_;
    std::int64_t credit_tick_ = 0;
};

} // namespace l2disc
