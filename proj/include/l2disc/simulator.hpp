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

#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace l2disc {

enum class NodeKind { router, ethernet_switch, host };

const char* to_string(NodeKind kind);
std::optional<NodeKind> parse_node_kind(std::string_view text);

enum class LinkState { down, up };

const char* to_string(LinkState state);

struct Endpoint {
    std::string node;
    std::string port;

    /// `node:port`
    static std::optional<Endpoint> parse(std::string_view text);
    std::string to_string() const { return node + ":" + port; }

    auto operator<=>(const Endpoint&) const = default;
};

using LinkId = std::size_t;

struct SimPort {
    std::string name;
    MacAddress mac;
};

/// A switch node terminates discovery frames on each port; nothing is ever
/// forwarded between ports of any node.
struct SimNode {
    std::string id;
    NodeKind kind = NodeKind::router;
    std::vector<SimPort> ports;
    std::optional<CdpEngine> cdp;
    std::optional<LldpEngine> lldp;

    const SimPort* port(std::string_view name) const;
};

struct SimLink {
    Endpoint a;
    Endpoint b;
    LinkState state = LinkState::up;
    SimTime propagation_delay;
};

struct EnginePoll {
    std::size_t node = 0;
};
struct LinkStateChange {
    LinkId link = 0;
    LinkState state = LinkState::up;
};
struct FrameArrival {
    LinkId link = 0;
    Endpoint to;
    Bytes frame;
};
struct ScheduledDump {
    std::string label;
};
struct LocalMibChange {
    std::string node;
};

using SimEventPayload = std::variant<EnginePoll, LinkStateChange, FrameArrival, ScheduledDump, LocalMibChange>;

struct SimEvent {
    SimTime at;
    SimEventPayload payload;
};

/// Transmit-side capture of every frame put on an up link.
struct CaptureRecord {
    SimTime at;
    Endpoint from;
    Endpoint to;
    Bytes frame;
};

struct SimStats {
    std::uint64_t transmitted = 0;
    std::uint64_t delivered = 0;
    std::uint64_t dropped_link_down = 0;
    std::uint64_t undecodable = 0;
};

/// Deterministic discrete-event network. Events run in (time, insertion)
/// order; each node is polled only at its engines' next deadline.
class Simulator {
public:
    using DumpHandler = std::function<void(const Simulator&, const std::string& label)>;

    std::size_t add_node(std::string id, NodeKind kind, std::vector<SimPort> ports);
    void attach_cdp(std::string_view node, CdpEngine engine);
    void attach_lldp(std::string_view node, LldpEngine engine);
    /// Throws Errc::unattached_port if an endpoint does not exist or is
    /// already linked.
    LinkId add_link(const Endpoint& a, const Endpoint& b, SimTime delay = {}, LinkState initial = LinkState::up);

    /// Throws Errc::event_in_past.
    void schedule(SimEvent event);
    /// Throws Errc::unknown_link or Errc::event_in_past.
    void set_link_state(LinkId link, LinkState state, SimTime at);
    /// Puts a frame on the link attached to `from`. Throws Errc::unattached_port.
    void transmit(const Endpoint& from, Bytes frame, SimTime at);

    void run_until(SimTime t);
    SimTime now() const { return now_; }

    void set_dump_handler(DumpHandler handler) { dump_handler_ = std::move(handler); }

    const std::vector<SimNode>& nodes() const { return nodes_; }
    const SimNode& node(std::string_view id) const;
    const std::vector<SimLink>& links() const { return links_; }
    std::optional<LinkId> find_link(const Endpoint& endpoint) const;
    const CdpEngine* cdp(std::string_view node) const;
    const LldpEngine* lldp(std::string_view node) const;
    CdpEngine* cdp(std::string_view node);
    LldpEngine* lldp(std::string_view node);

    const std::vector<CaptureRecord>& capture() const { return capture_; }
    const SimStats& stats() const { return stats_; }

private:
    struct Queued {
        SimTime at;
        std::uint64_t seq;
        SimEventPayload payload;
    };
    struct Later {
        bool operator()(const Queued& x, const Queued& y) const
        {
            return x.at != y.at ? x.at > y.at : x.seq > y.seq;
        }
    };

    std::size_t node_index(std::string_view id) const;
    void start();
    void execute(SimEventPayload& payload);
    void notify_link(const SimLink& link, LinkState state);
    void poll_node(std::size_t index);
    void reschedule(std::size_t index);
    void deliver(FrameArrival& arrival);

    std::vector<SimNode> nodes_;
    std::vector<SimLink> links_;
    std::vector<std::set<SimTime>> pending_polls_;
    std::priority_queue<Queued, std::vector<Queued>, Later> queue_;
    std::uint64_t next_seq_ = 0;
    SimTime now_;
    bool started_ = false;
    std::vector<CaptureRecord> capture_;
    SimStats stats_;
    DumpHandler dump_handler_;
};

} // namespace l2disc
