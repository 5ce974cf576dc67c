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

#include "l2disc/harness.hpp"

#include "l2disc/error.hpp"

#include <sstream>

namespace l2disc {

std::uint64_t engine_seed(std::uint64_t seed, std::string_view node, Protocol protocol)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : node) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return seed ^ h ^ (protocol == Protocol::cdp ? 0x43445000ull : 0x4c4c4450ull);
}

namespace {

CdpDeviceConfig cdp_config(const NodeSpec& node, const CdpSpec& spec, const RunOptions& options)
{
    CdpDeviceConfig c;
    c.device_id = spec.device_id;
    c.platform = spec.platform;
    c.software_version = spec.software_version;
    c.location = spec.location;
    c.capabilities = spec.capabilities;
    c.vtp_domain = spec.vtp_domain;
    c.update_interval = spec.update_interval;
    c.holdtime = spec.holdtime;
    c.odr_role = spec.odr;
    c.odr_timers = spec.odr_timers;
    c.jitter = options.jitter.value_or(spec.jitter);
    for (const auto& i : node.interfaces)
        c.interfaces.push_back({i.name, i.cdp, i.address, i.duplex, i.native_vlan, i.default_gateway});
    return c;
}

LldpEngine lldp_engine(const NodeSpec& node, const LldpSpec& spec, const RunOptions& options, std::uint64_t seed)
{
    LldpLocalMib mib{node.mac,         spec.system_name,          spec.system_description,
                     spec.capabilities, spec.enabled_capabilities, spec.management_address};
    std::vector<LldpAgentConfig> agents;
    for (std::size_t k = 0; k < node.interfaces.size(); ++k) {
        const auto& i = node.interfaces[k];
        LldpAgentConfig a;
        a.port = i.name;
        a.port_description = i.description.empty() ? i.name : i.description;
        a.if_index = static_cast<std::uint32_t>(k + 1);
        a.admin_status = i.lldp_admin.value_or(spec.admin_status);
        a.msg_tx_interval = spec.tx_interval;
        a.msg_tx_hold = spec.tx_hold;
        a.msg_fast_tx = spec.fast_tx;
        a.tx_fast_init = spec.tx_fast_init;
        a.tx_credit_max = spec.tx_credit_max;
        a.destination = spec.destination;
        a.fast_start_on_local_change = spec.fast_start_on_change;
        a.fast_start_on_new_neighbor = spec.fast_start_on_new_neighbor;
        a.jitter = options.jitter.value_or(spec.jitter);
        agents.push_back(std::move(a));
    }
    return LldpEngine(std::move(mib), std::move(agents), seed);
}

std::size_t count_odr(const CdpEngine* cdp)
{
    return cdp ? cdp->odr_routes().size() : 0;
}

} // namespace

Simulator build_simulator(const Scenario& scenario, const RunOptions& options)
{
    std::uint64_t seed = options.seed.value_or(scenario.seed);
    Simulator sim;
    for (const auto& node : scenario.nodes) {
        std::vector<SimPort> ports;
        for (const auto& i : node.interfaces)
            ports.push_back({i.name, i.mac});
        sim.add_node(node.id, node.kind, std::move(ports));
        if (node.cdp)
            sim.attach_cdp(node.id, CdpEngine(cdp_config(node, *node.cdp, options), engine_seed(seed, node.id, Protocol::cdp)));
        if (node.lldp)
            sim.attach_lldp(node.id, lldp_engine(node, *node.lldp, options, engine_seed(seed, node.id, Protocol::lldp)));
    }
    for (const auto& link : scenario.links)
        sim.add_link(link.a, link.b, link.delay, link.initial);
    for (const auto& ev : scenario.timeline) {
        switch (ev.action) {
        case TimelineAction::link_up:
        case TimelineAction::link_down:
            sim.set_link_state(*sim.find_link(*ev.link),
                               ev.action == TimelineAction::link_up ? LinkState::up : LinkState::down, ev.at);
            break;
        case TimelineAction::local_mib_change:
            sim.schedule({ev.at, LocalMibChange{*ev.node}});
            break;
        case TimelineAction::dump_tables:
            break;
        }
    }
    return sim;
}

std::string render_tables(const Simulator& sim)
{
    std::string out;
    for (const auto& node : sim.nodes()) {
        if (node.cdp) {
            out += node.id + "# show cdp neighbors\n" + node.cdp->dump_neighbors(sim.now()) + "\n";
            if (node.cdp->config().odr_role != OdrRole::off)
                out += node.id + "# show ip route odr\n" + node.cdp->dump_odr_routes() + "\n";
        }
        if (node.lldp)
            out += node.id + "# show lldp neighbors\n" + node.lldp->dump_neighbors(sim.now()) + "\n";
    }
    return out;
}

RunArtifacts run_scenario(const Scenario& scenario, const RunOptions& options)
{
    RunArtifacts art;
    art.scenario = scenario.name;
    art.until = options.until.value_or(scenario.until);
    Simulator sim = build_simulator(scenario, options);

    for (const auto& ev : scenario.timeline) {
        if (ev.action != TimelineAction::dump_tables || ev.at > art.until)
            continue;
        sim.run_until(ev.at);
        art.dumps.push_back({ev.at, to_string(ev.action), render_tables(sim)});
    }
    sim.run_until(art.until);
    art.dumps.push_back({art.until, "end", render_tables(sim)});

    art.capture = sim.capture();
    art.log = message_log_from_capture(art.capture);
    art.stats = sim.stats();
    for (const auto& node : sim.nodes())
        art.totals.push_back({node.id, node.cdp ? node.cdp->neighbors().size() : 0,
                              node.lldp ? node.lldp->neighbors().size() : 0, count_odr(sim.cdp(node.id))});
    return art;
}

std::vector<PcapRecord> RunArtifacts::pcap_records() const
{
    std::vector<PcapRecord> out;
    out.reserve(capture.size());
    for (const auto& c : capture)
        out.push_back({c.at, c.frame, static_cast<std::uint32_t>(c.frame.size())});
    return out;
}

std::string RunArtifacts::dump_text() const
{
    std::string out;
    for (const auto& d : dumps)
        out += "### t=" + d.at.to_string() + " " + d.label + "\n\n" + d.text;
    return out;
}

std::string RunArtifacts::summary() const
{
    std::size_t cdp = 0;
    std::size_t lldp = 0;
    for (const auto& row : log)
        ++(row.protocol == Protocol::cdp ? cdp : lldp);
    std::ostringstream out;
    out << "scenario " << (scenario.empty() ? "(unnamed)" : scenario) << " ran to " << until.to_string() << " s\n";
    out << "frames sent: CDP " << cdp << ", LLDP " << lldp << ", dropped on down links " << stats.dropped_link_down
        << "\n";
    for (const auto& t : totals) {
        out << t.node << ": cdp neighbors " << t.cdp_neighbors << ", lldp neighbors " << t.lldp_neighbors;
        if (t.odr_routes)
            out << ", odr routes " << t.odr_routes;
        out << "\n";
    }
    return out.str();
}

} // namespace l2disc
