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

#include "l2disc/cdp_engine.hpp"
#include "l2disc/lldp_engine.hpp"
#include "l2disc/net_types.hpp"
#include "l2disc/sim_time.hpp"
#include "l2disc/simulator.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace l2disc {

struct InterfaceSpec {
    std::string name;
    MacAddress mac;
    std::optional<Ipv4Prefix> address;
    std::string description;
    std::optional<Duplex> duplex;
    std::optional<std::uint16_t> native_vlan;
    std::optional<Ipv4Address> default_gateway;
    bool cdp = true;
    std::optional<LldpAdminStatus> lldp_admin;

    bool operator==(const InterfaceSpec&) const = default;
};

struct CdpSpec {
    std::string device_id;
    std::string platform;
    std::string software_version;
    std::optional<std::string> location;
    std::optional<std::string> vtp_domain;
    std::uint32_t capabilities = cdp_cap::router;
    int update_interval = 60;
    std::optional<int> holdtime;
    OdrRole odr = OdrRole::off;
    OdrTimers odr_timers;
    SimTime jitter;

    bool operator==(const CdpSpec&) const = default;
};

struct LldpSpec {
    std::string system_name;
    std::string system_description;
    std::uint16_t capabilities = lldp_cap::router;
    std::uint16_t enabled_capabilities = lldp_cap::router;
    std::optional<Ipv4Address> management_address;
    LldpAdminStatus admin_status = LldpAdminStatus::tx_rx;
    int tx_interval = 30;
    int tx_hold = 4;
    int fast_tx = 1;
    int tx_fast_init = 3;
    int tx_credit_max = 5;
    MacAddress destination = mac::lldp_nearest_bridge;
    bool fast_start_on_change = true;
    bool fast_start_on_new_neighbor = true;
    SimTime jitter;

    bool operator==(const LldpSpec&) const = default;
};

struct NodeSpec {
    std::string id;
    NodeKind kind = NodeKind::router;
    /// Chassis MAC; interface MACs default to it with the last octet set to
    /// the interface's position.
    MacAddress mac;
    std::vector<InterfaceSpec> interfaces;
    std::optional<CdpSpec> cdp;
    std::optional<LldpSpec> lldp;

    bool operator==(const NodeSpec&) const = default;
};

struct LinkSpec {
    Endpoint a;
    Endpoint b;
    SimTime delay;
    LinkState initial = LinkState::up;

    bool operator==(const LinkSpec&) const = default;
};

enum class TimelineAction { link_up, link_down, local_mib_change, dump_tables };

const char* to_string(TimelineAction action);

struct TimelineEvent {
    SimTime at;
    TimelineAction action = TimelineAction::dump_tables;
    /// Either endpoint of the affected link (link actions).
    std::optional<Endpoint> link;
    /// Affected node (local-mib-change).
    std::optional<std::string> node;

    bool operator==(const TimelineEvent&) const = default;
};

struct OutputSpec {
    std::optional<std::string> pcap;
    std::optional<std::string> csv;
    std::optional<std::string> dumps;

    bool operator==(const OutputSpec&) const = default;
};

struct Scenario {
    std::string name;
    std::uint64_t seed = 0;
    SimTime until = SimTime::seconds(300);
    std::vector<NodeSpec> nodes;
    std::vector<LinkSpec> links;
    /// Sorted by time; equal times keep document order.
    std::vector<TimelineEvent> timeline;
    OutputSpec outputs;

    const NodeSpec* find_node(std::string_view id) const;

    bool operator==(const Scenario&) const = default;
};

/// Parses and validates a scenario document (schema "1"). Defaults are
/// filled in, so serialize_scenario() writes every effective value.
/// Throws Errc::parse_error (with line) or Errc::schema_error.
Scenario parse_scenario(std::string_view xml);

/// Reads and parses a file. Throws Errc::io_error plus the parse errors.
Scenario load_scenario(const std::filesystem::path& path);

std::string serialize_scenario(const Scenario& scenario);

} // namespace l2disc
