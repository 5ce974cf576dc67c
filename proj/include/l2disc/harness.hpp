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

#include "l2disc/message_log.hpp"
#include "l2disc/pcap.hpp"
#include "l2disc/scenario.hpp"
#include "l2disc/simulator.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace l2disc {

/// Command-line style overrides of scenario values.
struct RunOptions {
    std::optional<SimTime> until;
    std::optional<std::uint64_t> seed;
    /// Replaces every engine's jitter bound.
    std::optional<SimTime> jitter;
};

struct TableDump {
    SimTime at;
    std::string label;
    std::string text;
};

struct NodeTotals {
    std::string node;
    std::size_t cdp_neighbors = 0;
    std::size_t lldp_neighbors = 0;
    std::size_t odr_routes = 0;
};

struct RunArtifacts {
    std::string scenario;
    SimTime until;
    MessageLog log;
    std::vector<CaptureRecord> capture;
    std::vector<TableDump> dumps;
    std::vector<NodeTotals> totals;
    SimStats stats;

    std::vector<PcapRecord> pcap_records() const;
    std::string dump_text() const;
    std::string summary() const;
};

/// Per-engine RNG seed: the scenario seed mixed with the node id and protocol.
std::uint64_t engine_seed(std::uint64_t seed, std::string_view node, Protocol protocol);

/// Nodes, engines, links and the timeline's link and local-MIB events.
/// Dumps are not scheduled; run_scenario() takes them between run_until calls.
Simulator build_simulator(const Scenario& scenario, const RunOptions& options = {});

/// `R1# show cdp neighbors` style text for every node, as seen at sim.now().
std::string render_tables(const Simulator& sim);

/// Runs to the end time. Each dump-tables event captures the tables after
/// every other event at that instant; a final dump is always taken at the end.
RunArtifacts run_scenario(const Scenario& scenario, const RunOptions& options = {});

} // namespace l2disc
