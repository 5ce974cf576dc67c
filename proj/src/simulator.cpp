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

#include "l2disc/simulator.hpp"

#include "l2disc/error.hpp"
#include "l2disc/ethernet.hpp"

#include <algorithm>

namespace l2disc {

const char* to_string(NodeKind kind)
{
    switch (kind) {
    case NodeKind::router: return "router";
    case NodeKind::ethernet_switch: return "switch";
    case NodeKind::host: return "host";
    }
    return "router";
}

std::optional<NodeKind> parse_node_kind(std::string_view text)
{
    for (auto k : {NodeKind::router, NodeKind::ethernet_switch, NodeKind::host})
        if (text == to_string(k))
            return k;
    return std::nullopt;
}

const char* to_string(LinkState state)
{
    return state == LinkState::up ? "up" : "down";
}

std::optional<Endpoint> Endpoint::parse(std::string_view text)
{
    auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == text.size())
        return std::nullopt;
    return Endpoint{std::string(text.substr(0, colon)), std::string(text.substr(colon + 1))};
}

const SimPort* SimNode::port(std::string_view name) const
{
    for (const auto& p : ports)
        if (p.name == name)
            return &p;
    return nullptr;
}

std::size_t Simulator::add_node(std::string id, NodeKind kind, std::vector<SimPort> ports)
{
    if (std::any_of(nodes_.begin(), nodes_.end(), [&](const auto& n) { return n.id == id; }))
        throw Error(Errc::invalid_config, "duplicate node " + id);
    nodes_.push_back(SimNode{std::move(id), kind, std::move(ports), std::nullopt, std::nullopt});
    pending_polls_.emplace_back();
    return nodes_.size() - 1;
}

std::size_t Simulator::node_index(std::string_view id) const
{
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].id == id)
            return i;
    throw Error(Errc::unattached_port, "unknown node " + std::string(id));
}

void Simulator::attach_cdp(std::string_view node, CdpEngine engine)
{
    nodes_[node_index(node)].cdp.emplace(std::move(engine));
}

void Simulator::attach_lldp(std::string_view node, LldpEngine engine)
{
    nodes_[node_index(node)].lldp.emplace(std::move(engine));
}

LinkId Simulator::add_link(const Endpoint& a, const Endpoint& b, SimTime delay, LinkState initial)
{
    for (const auto* e : {&a, &b}) {
        if (!nodes_[node_index(e->node)].port(e->port))
            throw Error(Errc::unattached_port, "no port " + e->to_string());
        if (find_link(*e))
            throw Error(Errc::unattached_port, e->to_string() + " is already linked");
    }
    if (a == b)
        throw Error(Errc::unattached_port, "link endpoints must differ");
    links_.push_back({a, b, initial, delay});
    return links_.size() - 1;
}

std::optional<LinkId> Simulator::find_link(const Endpoint& endpoint) const
{
    for (LinkId i = 0; i < links_.size(); ++i)
        if (links_[i].a == endpoint || links_[i].b == endpoint)
            return i;
    return std::nullopt;
}

const SimNode& Simulator::node(std::string_view id) const
{
    return nodes_[node_index(id)];
}

const CdpEngine* Simulator::cdp(std::string_view node) const
{
    const auto& n = nodes_[node_index(node)];
    return n.cdp ? &*n.cdp : nullptr;
}

const LldpEngine* Simulator::lldp(std::string_view node) const
{
    const auto& n = nodes_[node_index(node)];
    return n.lldp ? &*n.lldp : nullptr;
}

CdpEngine* Simulator::cdp(std::string_view node)
{
    auto& n = nodes_[node_index(node)];
    return n.cdp ? &*n.cdp : nullptr;
}

LldpEngine* Simulator::lldp(std::string_view node)
{
    auto& n = nodes_[node_index(node)];
    return n.lldp ? &*n.lldp : nullptr;
}

void Simulator::schedule(SimEvent event)
{
    if (event.at < now_)
        throw Error(Errc::event_in_past, event.at.to_string() + " < " + now_.to_string());
    queue_.push({event.at, next_seq_++, std::move(event.payload)});
}

void Simulator::set_link_state(LinkId link, LinkState state, SimTime at)
{
    if (link >= links_.size())
        throw Error(Errc::unknown_link, "link " + std::to_string(link));
    schedule({at, LinkStateChange{link, state}});
}

void Simulator::transmit(const Endpoint& from, Bytes frame, SimTime at)
{
    if (at < now_)
        throw Error(Errc::event_in_past, "transmit at " + at.to_string());
    auto id = find_link(from);
    if (!id)
        throw Error(Errc::unattached_port, from.to_string());
    const auto& link = links_[*id];
    ++stats_.transmitted;
    if (link.state == LinkState::down) {
        ++stats_.dropped_link_down;
        return;
    }
    const Endpoint& to = link.a == from ? link.b : link.a;
    capture_.push_back({at, from, to, frame});
    schedule({at + link.propagation_delay, FrameArrival{*id, to, std::move(frame)}});
}

void Simulator::run_until(SimTime t)
{
    if (t < now_)
        throw Error(Errc::event_in_past, "run_until " + t.to_string() + " < " + now_.to_string());
    if (!started_)
        start();
    while (!queue_.empty() && queue_.top().at <= t) {
        Queued q = queue_.top();
        queue_.pop();
        now_ = q.at;
        execute(q.payload);
    }
    now_ = t;
}

void Simulator::start()
{
    started_ = true;
    for (const auto& link : links_)
        if (link.state == LinkState::up)
            notify_link(link, LinkState::up);
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        reschedule(i);
}

void Simulator::notify_link(const SimLink& link, LinkState state)
{
    for (const auto* e : {&link.a, &link.b}) {
        std::size_t i = node_index(e->node);
        auto& n = nodes_[i];
        if (n.cdp && n.cdp->has_interface(e->port)) {
            if (state == LinkState::up)
                n.cdp->interface_up(e->port, now_);
            else
                n.cdp->interface_down(e->port, now_);
        }
        if (n.lldp && n.lldp->has_agent(e->port)) {
            if (state == LinkState::up)
                n.lldp->port_up(e->port, now_);
            else
                n.lldp->port_down(e->port, now_);
        }
        reschedule(i);
    }
}

void Simulator::execute(SimEventPayload& payload)
{
    if (auto* poll = std::get_if<EnginePoll>(&payload)) {
        pending_polls_[poll->node].erase(now_);
        poll_node(poll->node);
    } else if (auto* change = std::get_if<LinkStateChange>(&payload)) {
        auto& link = links_[change->link];
        if (link.state == change->state)
            return;
        link.state = change->state;
        notify_link(link, change->state);
    } else if (auto* arrival = std::get_if<FrameArrival>(&payload)) {
        deliver(*arrival);
    } else if (auto* dump = std::get_if<ScheduledDump>(&payload)) {
        if (dump_handler_)
            dump_handler_(*this, dump->label);
    } else if (auto* mib = std::get_if<LocalMibChange>(&payload)) {
        std::size_t i = node_index(mib->node);
        if (nodes_[i].lldp) {
            nodes_[i].lldp->local_change(now_);
            reschedule(i);
        }
    }
}

void Simulator::poll_node(std::size_t index)
{
    auto& n = nodes_[index];
    auto mac_of = [&](const std::string& port) {
        const auto* p = n.port(port);
        if (!p)
            throw Error(Errc::unattached_port, n.id + ":" + port);
        return p->mac;
    };
    if (n.cdp)
        for (auto& e : n.cdp->poll(now_))
            transmit({n.id, e.if_id}, wrap_ethernet(mac_of(e.if_id), e.packet), now_);
    if (n.lldp)
        for (auto& e : n.lldp->poll(now_))
            transmit({n.id, e.port}, wrap_ethernet(mac_of(e.port), e.frame, e.destination), now_);
    reschedule(index);
}

void Simulator::reschedule(std::size_t index)
{
    const auto& n = nodes_[index];
    std::optional<SimTime> deadline;
    for (auto d : {n.cdp ? n.cdp->next_deadline() : std::nullopt, n.lldp ? n.lldp->next_deadline() : std::nullopt})
        if (d && (!deadline || *d < *deadline))
            deadline = d;
    if (!deadline)
        return;
    SimTime at = std::max(*deadline, now_);
    if (pending_polls_[index].insert(at).second)
        queue_.push({at, next_seq_++, EnginePoll{index}});
}

void Simulator::deliver(FrameArrival& arrival)
{
    if (links_[arrival.link].state == LinkState::down) {
        ++stats_.dropped_link_down;
        return;
    }
    ++stats_.delivered;
    std::size_t i = node_index(arrival.to.node);
    auto& n = nodes_[i];
    EthernetFrame frame;
    try {
        frame = parse_ethernet(arrival.frame);
    } catch (const Error&) {
        ++stats_.undecodable;
        return;
    }
    if (frame.kind == FrameKind::cdp && n.cdp && n.cdp->has_interface(arrival.to.port))
        n.cdp->receive_payload(arrival.to.port, frame.body, now_);
    else if (frame.kind == FrameKind::lldp && n.lldp && n.lldp->has_agent(arrival.to.port))
        n.lldp->receive_payload(arrival.to.port, frame.body, now_);
    reschedule(i);
}

} // namespace l2disc
