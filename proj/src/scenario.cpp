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

#include "l2disc/scenario.hpp"

#include "l2disc/error.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace l2disc {

namespace ptree = boost::property_tree;

const char* to_string(TimelineAction action)
{
    switch (action) {
    case TimelineAction::link_up: return "link-up";
    case TimelineAction::link_down: return "link-down";
    case TimelineAction::local_mib_change: return "local-mib-change";
    case TimelineAction::dump_tables: return "dump-tables";
    }
    return "dump-tables";
}

const NodeSpec* Scenario::find_node(std::string_view id) const
{
    for (const auto& n : nodes)
        if (n.id == id)
            return &n;
    return nullptr;
}

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what)
{
    throw Error(Errc::schema_error, where + ": " + what);
}

constexpr std::pair<std::uint32_t, std::string_view> cdp_cap_names[] = {
    {cdp_cap::router, "router"}, {cdp_cap::transparent_bridge, "transparent-bridge"},
    {cdp_cap::source_route_bridge, "source-route-bridge"}, {cdp_cap::switch_, "switch"},
    {cdp_cap::host, "host"}, {cdp_cap::igmp, "igmp"}, {cdp_cap::repeater, "repeater"},
};

constexpr std::pair<std::uint32_t, std::string_view> lldp_cap_names[] = {
    {lldp_cap::other, "other"}, {lldp_cap::repeater, "repeater"}, {lldp_cap::bridge, "bridge"},
    {lldp_cap::wlan_ap, "wlan-ap"}, {lldp_cap::router, "router"}, {lldp_cap::telephone, "telephone"},
    {lldp_cap::docsis, "docsis"}, {lldp_cap::station, "station"},
};

constexpr std::pair<MacAddress, std::string_view> lldp_destinations[] = {
    {mac::lldp_nearest_bridge, "nearest-bridge"},
    {mac::lldp_nearest_non_tpmr_bridge, "nearest-non-tpmr-bridge"},
    {mac::lldp_nearest_customer_bridge, "nearest-customer-bridge"},
};

template <std::size_t N>
std::string caps_to_text(std::uint32_t bits, const std::pair<std::uint32_t, std::string_view> (&names)[N])
{
    std::string out;
    std::uint32_t named = 0;
    for (auto [bit, name] : names) {
        named |= bit;
        if (bits & bit) {
            if (!out.empty())
                out += ',';
            out += name;
        }
    }
    if (bits & ~named) {
        std::ostringstream hex;
        hex << "0x" << std::hex << bits;
        return hex.str();
    }
    return out;
}

// Strict view over one element: every attribute read is recorded and
// unread attributes are rejected by finish().
class Element {
public:
    Element(const ptree::ptree& tree, std::string where) : tree_(tree), where_(std::move(where)) {}

    const std::string& where() const { return where_; }

    std::optional<std::string> attr(std::string_view name)
    {
        known_.insert(std::string(name));
        auto attrs = tree_.get_child_optional("<xmlattr>");
        if (!attrs)
            return std::nullopt;
        auto it = attrs->find(std::string(name));
        if (it == attrs->not_found())
            return std::nullopt;
        return it->second.data();
    }

    std::string required(std::string_view name)
    {
        auto v = attr(name);
        if (!v)
            schema_error(where_, "missing attribute '" + std::string(name) + "'");
        return *v;
    }

    template <typename Int>
    std::optional<Int> integer(std::string_view name, long long lo, long long hi)
    {
        auto v = attr(name);
        if (!v)
            return std::nullopt;
        long long value = 0;
        auto [p, ec] = std::from_chars(v->data(), v->data() + v->size(), value);
        if (ec != std::errc{} || p != v->data() + v->size() || value < lo || value > hi)
            schema_error(where_, "attribute '" + std::string(name) + "' must be an integer in [" +
                                     std::to_string(lo) + ", " + std::to_string(hi) + "], got '" + *v + "'");
        return static_cast<Int>(value);
    }

    std::optional<std::uint64_t> unsigned64(std::string_view name)
    {
        auto v = attr(name);
        if (!v)
            return std::nullopt;
        std::uint64_t value = 0;
        auto [p, ec] = std::from_chars(v->data(), v->data() + v->size(), value);
        if (ec != std::errc{} || p != v->data() + v->size())
            schema_error(where_, "attribute '" + std::string(name) + "' must be an unsigned integer");
        return value;
    }

    std::optional<SimTime> time(std::string_view name)
    {
        auto v = attr(name);
        if (!v)
            return std::nullopt;
        if (!v->empty() && v->front() == '-')
            schema_error(where_, "negative time '" + *v + "' in '" + std::string(name) + "'");
        auto t = SimTime::parse_seconds(*v);
        if (!t)
            schema_error(where_, "attribute '" + std::string(name) + "' is not a time in seconds: '" + *v + "'");
        return t;
    }

    std::optional<bool> boolean(std::string_view name)
    {
        auto v = attr(name);
        if (!v)
            return std::nullopt;
        if (*v == "true" || *v == "on" || *v == "yes" || *v == "1")
            return true;
        if (*v == "false" || *v == "off" || *v == "no" || *v == "0")
            return false;
        schema_error(where_, "attribute '" + std::string(name) + "' must be true or false");
    }

    template <typename T, typename Parse>
    std::optional<T> parsed(std::string_view name, Parse parse, std::string_view what)
    {
        auto v = attr(name);
        if (!v)
            return std::nullopt;
        auto value = parse(*v);
        if (!value)
            schema_error(where_, "attribute '" + std::string(name) + "' is not " + std::string(what) + ": '" + *v + "'");
        return T(*value);
    }

    template <std::size_t N>
    std::optional<std::uint32_t> capabilities(std::string_view name, const std::pair<std::uint32_t, std::string_view> (&names)[N])
    {
        auto v = attr(name);
        if (!v)
            return std::nullopt;
        if (v->rfind("0x", 0) == 0) {
            std::uint32_t bits = 0;
            auto [p, ec] = std::from_chars(v->data() + 2, v->data() + v->size(), bits, 16);
            if (ec != std::errc{} || p != v->data() + v->size())
                schema_error(where_, "bad capability mask '" + *v + "'");
            return bits;
        }
        std::uint32_t bits = 0;
        std::string_view rest = *v;
        while (!rest.empty()) {
            auto comma = rest.find(',');
            auto token = rest.substr(0, comma);
            auto it = std::find_if(std::begin(names), std::end(names), [&](const auto& p) { return p.second == token; });
            if (it == std::end(names))
                schema_error(where_, "unknown capability '" + std::string(token) + "'");
            bits |= it->first;
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
        return bits;
    }

    /// Child elements in document order; rejects stray text.
    std::vector<std::pair<std::string, const ptree::ptree*>> children() const
    {
        std::vector<std::pair<std::string, const ptree::ptree*>> out;
        for (const auto& [name, child] : tree_) {
            if (name == "<xmlattr>" || name == "<xmlcomment>")
                continue;
            out.emplace_back(name, &child);
        }
        return out;
    }

    void finish() const
    {
        auto text = tree_.data();
        if (text.find_first_not_of(" \t\r\n") != std::string::npos)
            schema_error(where_, "unexpected text content");
        if (auto attrs = tree_.get_child_optional("<xmlattr>"))
            for (const auto& [name, value] : *attrs)
                if (!known_.count(name))
                    schema_error(where_, "unknown attribute '" + name + "'");
    }

    void no_children() const
    {
        auto kids = children();
        if (!kids.empty())
            schema_error(where_, "unexpected element <" + kids.front().first + ">");
    }

private:
    const ptree::ptree& tree_;
    std::string where_;
    std::set<std::string> known_;
};

std::optional<MacAddress> parse_destination(std::string_view text)
{
    for (auto [addr, name] : lldp_destinations)
        if (text == name)
            return addr;
    return MacAddress::parse(text);
}

std::optional<Duplex> parse_duplex(std::string_view text)
{
    if (text == "full")
        return Duplex::full;
    if (text == "half")
        return Duplex::half;
    return std::nullopt;
}

MacAddress derive_mac(MacAddress base, std::size_t index)
{
    auto o = base.octets();
    o[5] = static_cast<std::uint8_t>(index + 1);
    return MacAddress(o);
}

InterfaceSpec parse_interface(Element& e, const MacAddress& node_mac, std::size_t index)
{
    InterfaceSpec s;
    s.name = e.required("name");
    s.mac = e.parsed<MacAddress>("mac", MacAddress::parse, "a MAC address").value_or(derive_mac(node_mac, index));
    s.address = e.parsed<Ipv4Prefix>("address", Ipv4Prefix::parse, "an IPv4 address/prefix");
    s.description = e.attr("description").value_or("");
    s.duplex = e.parsed<Duplex>("duplex", parse_duplex, "full or half");
    s.native_vlan = e.integer<std::uint16_t>("native-vlan", 1, 4094);
    s.default_gateway = e.parsed<Ipv4Address>("default-gateway", Ipv4Address::parse, "an IPv4 address");
    s.cdp = e.boolean("cdp").value_or(true);
    s.lldp_admin = e.parsed<LldpAdminStatus>("lldp-admin", parse_admin_status, "txRx, txOnly, rxOnly or disabled");
    e.no_children();
    e.finish();
    return s;
}

std::string kind_label(NodeKind kind)
{
    return kind == NodeKind::ethernet_switch ? "switch" : to_string(kind);
}

CdpSpec parse_cdp(Element& e, const NodeSpec& node)
{
    CdpSpec s;
    s.device_id = e.attr("device-id").value_or(node.id);
    s.platform = e.attr("platform").value_or("sim-" + kind_label(node.kind));
    s.software_version = e.attr("software-version").value_or("l2disc simulated " + kind_label(node.kind) + " 1.0");
    s.location = e.attr("location");
    s.vtp_domain = e.attr("vtp-domain");
    std::uint32_t default_caps = node.kind == NodeKind::router            ? cdp_cap::router
                                 : node.kind == NodeKind::ethernet_switch ? (cdp_cap::switch_ | cdp_cap::igmp)
                                                                          : cdp_cap::host;
    s.capabilities = e.capabilities("capabilities", cdp_cap_names).value_or(default_caps);
    s.update_interval = e.integer<int>("update-interval", 1, 65535).value_or(60);
    s.holdtime = e.integer<int>("holdtime", 1, 255);
    s.odr = e.parsed<OdrRole>("odr", parse_odr_role, "off, hub or stub").value_or(OdrRole::off);
    s.odr_timers.invalid = e.time("odr-invalid").value_or(s.odr_timers.invalid);
    s.odr_timers.holddown = e.time("odr-holddown").value_or(s.odr_timers.holddown);
    s.odr_timers.flush = e.time("odr-flush").value_or(s.odr_timers.flush);
    s.jitter = e.time("jitter").value_or(SimTime{});
    e.no_children();
    e.finish();
    return s;
}

LldpSpec parse_lldp(Element& e, const NodeSpec& node)
{
    LldpSpec s;
    s.system_name = e.attr("system-name").value_or(node.id);
    s.system_description = e.attr("system-description").value_or("l2disc simulated " + kind_label(node.kind));
    std::uint16_t default_caps = node.kind == NodeKind::router            ? lldp_cap::router
                                 : node.kind == NodeKind::ethernet_switch ? lldp_cap::bridge
                                                                          : lldp_cap::station;
    s.capabilities = static_cast<std::uint16_t>(e.capabilities("capabilities", lldp_cap_names).value_or(default_caps));
    s.enabled_capabilities =
        static_cast<std::uint16_t>(e.capabilities("enabled-capabilities", lldp_cap_names).value_or(s.capabilities));
    s.management_address = e.parsed<Ipv4Address>("management-address", Ipv4Address::parse, "an IPv4 address");
    if (!s.management_address)
        for (const auto& i : node.interfaces)
            if (i.address) {
                s.management_address = i.address->address;
                break;
            }
    s.admin_status = e.parsed<LldpAdminStatus>("admin-status", parse_admin_status, "txRx, txOnly, rxOnly or disabled")
                         .value_or(LldpAdminStatus::tx_rx);
    s.tx_interval = e.integer<int>("tx-interval", 1, 65535).value_or(30);
    auto hold = e.integer<int>("tx-hold", 1, 65535);
    auto ttl = e.integer<int>("ttl", 1, 65535);
    if (hold && ttl)
        schema_error(e.where(), "give either 'tx-hold' or 'ttl', not both");
    if (ttl) {
        if (*ttl % s.tx_interval != 0)
            schema_error(e.where(), "ttl " + std::to_string(*ttl) + " is not a multiple of tx-interval " +
                                        std::to_string(s.tx_interval));
        s.tx_hold = lldp_hold_for_ttl(s.tx_interval, *ttl);
    } else {
        s.tx_hold = hold.value_or(4);
    }
    s.fast_tx = e.integer<int>("fast-tx", 1, 3600).value_or(1);
    s.tx_fast_init = e.integer<int>("tx-fast-init", 1, 8).value_or(3);
    s.tx_credit_max = e.integer<int>("tx-credit-max", 1, 255).value_or(5);
    s.destination = e.parsed<MacAddress>("destination", parse_destination, "an LLDP destination")
                        .value_or(mac::lldp_nearest_bridge);
    s.fast_start_on_change = e.boolean("fast-start-on-change").value_or(true);
    s.fast_start_on_new_neighbor = e.boolean("fast-start-on-new-neighbor").value_or(true);
    s.jitter = e.time("jitter").value_or(SimTime{});
    e.no_children();
    e.finish();
    return s;
}

NodeSpec parse_node(Element& e, std::size_t index)
{
    NodeSpec n;
    n.id = e.required("id");
    if (n.id.empty() || n.id.find(':') != std::string::npos)
        schema_error(e.where(), "node id must be non-empty and must not contain ':'");
    n.kind = e.parsed<NodeKind>("kind", parse_node_kind, "router, switch or host").value_or(NodeKind::router);
    std::array<std::uint8_t, 6> base{0x02, 0x00, 0x00, static_cast<std::uint8_t>((index + 1) >> 8),
                                     static_cast<std::uint8_t>(index + 1), 0x00};
    n.mac = e.parsed<MacAddress>("mac", MacAddress::parse, "a MAC address").value_or(MacAddress(base));

    std::string where = "node '" + n.id + "'";
    const ptree::ptree* cdp = nullptr;
    const ptree::ptree* lldp = nullptr;
    for (const auto& [name, child] : e.children()) {
        if (name == "interface") {
            Element ie(*child, where + " interface #" + std::to_string(n.interfaces.size() + 1));
            n.interfaces.push_back(parse_interface(ie, n.mac, n.interfaces.size()));
            for (std::size_t i = 0; i + 1 < n.interfaces.size(); ++i)
                if (n.interfaces[i].name == n.interfaces.back().name)
                    schema_error(where, "duplicate interface '" + n.interfaces.back().name + "'");
        } else if (name == "cdp" || name == "lldp") {
            auto& slot = name == "cdp" ? cdp : lldp;
            if (slot)
                schema_error(where, "more than one <" + name + "> element");
            slot = child;
        } else {
            schema_error(where, "unknown element <" + name + ">");
        }
    }
    // Protocol elements are parsed last so their defaults can see interfaces.
    if (cdp) {
        Element ce(*cdp, where + " <cdp>");
        n.cdp = parse_cdp(ce, n);
    }
    if (lldp) {
        Element le(*lldp, where + " <lldp>");
        n.lldp = parse_lldp(le, n);
    }
    e.finish();
    return n;
}

std::optional<TimelineAction> parse_action(std::string_view text)
{
    for (auto a : {TimelineAction::link_up, TimelineAction::link_down, TimelineAction::local_mib_change,
                   TimelineAction::dump_tables})
        if (text == to_string(a))
            return a;
    return std::nullopt;
}

std::optional<LinkState> parse_link_state(std::string_view text)
{
    if (text == "up")
        return LinkState::up;
    if (text == "down")
        return LinkState::down;
    return std::nullopt;
}

void validate(Scenario& s)
{
    std::set<std::string> ids;
    for (const auto& n : s.nodes)
        if (!ids.insert(n.id).second)
            schema_error("node '" + n.id + "'", "duplicate node id");

    std::set<Endpoint> used;
    for (std::size_t i = 0; i < s.links.size(); ++i) {
        const auto& l = s.links[i];
        std::string where = "link #" + std::to_string(i + 1);
        for (const auto* ep : {&l.a, &l.b}) {
            const auto* node = s.find_node(ep->node);
            if (!node)
                schema_error(where, "missing endpoint: undeclared node '" + ep->node + "'");
            bool has_port = std::any_of(node->interfaces.begin(), node->interfaces.end(),
                                        [&](const auto& i) { return i.name == ep->port; });
            if (!has_port)
                schema_error(where, "missing endpoint: node '" + ep->node + "' has no interface '" + ep->port + "'");
            if (!used.insert(*ep).second)
                schema_error(where, "endpoint " + ep->to_string() + " is already linked");
        }
    }

    for (std::size_t i = 0; i < s.timeline.size(); ++i) {
        const auto& ev = s.timeline[i];
        std::string where = "event #" + std::to_string(i + 1);
        bool link_action = ev.action == TimelineAction::link_up || ev.action == TimelineAction::link_down;
        if (link_action != ev.link.has_value())
            schema_error(where, link_action ? "link action needs 'link'" : "'link' only applies to link actions");
        if ((ev.action == TimelineAction::local_mib_change) != ev.node.has_value())
            schema_error(where, ev.node ? "'node' only applies to local-mib-change" : "local-mib-change needs 'node'");
        if (ev.link && !used.count(*ev.link))
            schema_error(where, "no link attached to " + ev.link->to_string());
        if (ev.node && !s.find_node(*ev.node))
            schema_error(where, "undeclared node '" + *ev.node + "'");
    }
    std::stable_sort(s.timeline.begin(), s.timeline.end(), [](const auto& a, const auto& b) { return a.at < b.at; });
}

} // namespace

Scenario parse_scenario(std::string_view xml)
{
    ptree::ptree doc;
    try {
        std::istringstream in{std::string(xml)};
        ptree::read_xml(in, doc, ptree::xml_parser::trim_whitespace);
    } catch (const ptree::xml_parser_error& e) {
        throw Error(Errc::parse_error, e.message(), static_cast<int>(e.line()));
    }

    const ptree::ptree* root = nullptr;
    for (const auto& [name, child] : doc) {
        if (name == "<xmlcomment>")
            continue;
        if (name != "scenario" || root)
            schema_error("document", "root element must be a single <scenario>");
        root = &child;
    }
    if (doc.empty())
        throw Error(Errc::parse_error, "no root element", 1);
    if (!root)
        schema_error("document", "missing <scenario> root element");

    Element top(*root, "<scenario>");
    Scenario s;
    if (auto version = top.attr("schema"); version && *version != "1")
        schema_error("<scenario>", "unsupported schema version '" + *version + "'");
    s.name = top.attr("name").value_or("");
    s.seed = top.unsigned64("seed").value_or(0);
    s.until = top.time("until").value_or(s.until);

    bool have_output = false;
    for (const auto& [name, child] : top.children()) {
        if (name == "node") {
            Element e(*child, "node #" + std::to_string(s.nodes.size() + 1));
            s.nodes.push_back(parse_node(e, s.nodes.size()));
        } else if (name == "link") {
            Element e(*child, "link #" + std::to_string(s.links.size() + 1));
            LinkSpec l;
            for (auto [key, slot] : {std::pair{"a", &l.a}, std::pair{"b", &l.b}}) {
                auto ep = e.parsed<Endpoint>(key, Endpoint::parse, "an endpoint node:port");
                if (!ep)
                    schema_error(e.where(), std::string("missing endpoint attribute '") + key + "'");
                *slot = *ep;
            }
            l.delay = e.time("delay").value_or(SimTime{});
            l.initial = e.parsed<LinkState>("state", parse_link_state, "up or down").value_or(LinkState::up);
            e.no_children();
            e.finish();
            s.links.push_back(std::move(l));
        } else if (name == "event") {
            Element e(*child, "event #" + std::to_string(s.timeline.size() + 1));
            TimelineEvent ev;
            auto at = e.time("at");
            if (!at)
                schema_error(e.where(), "missing attribute 'at'");
            ev.at = *at;
            auto action = e.parsed<TimelineAction>("action", parse_action, "a timeline action");
            if (!action)
                schema_error(e.where(), "missing attribute 'action'");
            ev.action = *action;
            ev.link = e.parsed<Endpoint>("link", Endpoint::parse, "an endpoint node:port");
            ev.node = e.attr("node");
            e.no_children();
            e.finish();
            s.timeline.push_back(std::move(ev));
        } else if (name == "output") {
            Element e(*child, "<output>");
            if (have_output)
                schema_error("<scenario>", "more than one <output> element");
            have_output = true;
            s.outputs.pcap = e.attr("pcap");
            s.outputs.csv = e.attr("csv");
            s.outputs.dumps = e.attr("dumps");
            e.no_children();
            e.finish();
        } else {
            schema_error("<scenario>", "unknown element <" + name + ">");
        }
    }
    top.finish();
    validate(s);
    return s;
}

Scenario load_scenario(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::io_error, "cannot open " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    if (in.bad())
        throw Error(Errc::io_error, "cannot read " + path.string());
    return parse_scenario(text.str());
}

namespace {

std::string escape(std::string_view text)
{
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

class Tag {
public:
    Tag(std::string& out, std::string_view indent, std::string_view name) : out_(out), name_(name)
    {
        out_ += std::string(indent) + "<" + std::string(name);
    }
    Tag& attr(std::string_view key, std::string_view value)
    {
        out_ += " " + std::string(key) + "=\"" + escape(value) + "\"";
        return *this;
    }
    template <typename T>
    Tag& attr(std::string_view key, const std::optional<T>& value)
    {
        if (value)
            attr(key, render(*value));
        return *this;
    }
    void close() { out_ += "/>\n"; }
    void open() { out_ += ">\n"; }

private:
    static std::string render(const std::string& s) { return s; }
    static std::string render(int v) { return std::to_string(v); }
    static std::string render(std::uint16_t v) { return std::to_string(v); }
    template <typename T>
    static std::string render(const T& v)
    {
        return v.to_string();
    }

    std::string& out_;
    std::string_view name_;
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

} // namespace

std::string serialize_scenario(const Scenario& s)
{
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    Tag(out, "", "scenario")
        .attr("schema", "1")
        .attr("name", s.name)
        .attr("seed", std::to_string(s.seed))
        .attr("until", s.until.to_decimal())
        .open();

    for (const auto& n : s.nodes) {
        Tag(out, "  ", "node").attr("id", n.id).attr("kind", kind_label(n.kind)).attr("mac", n.mac.to_string()).open();
        for (const auto& i : n.interfaces) {
            Tag t(out, "    ", "interface");
            t.attr("name", i.name).attr("mac", i.mac.to_string()).attr("address", i.address);
            if (!i.description.empty())
                t.attr("description", i.description);
            if (i.duplex)
                t.attr("duplex", *i.duplex == Duplex::full ? "full" : "half");
            t.attr("native-vlan", i.native_vlan).attr("default-gateway", i.default_gateway).attr("cdp", bool_text(i.cdp));
            if (i.lldp_admin)
                t.attr("lldp-admin", to_string(*i.lldp_admin));
            t.close();
        }
        if (const auto& c = n.cdp) {
            Tag t(out, "    ", "cdp");
            t.attr("device-id", c->device_id)
                .attr("platform", c->platform)
                .attr("software-version", c->software_version)
                .attr("location", c->location)
                .attr("vtp-domain", c->vtp_domain)
                .attr("capabilities", caps_to_text(c->capabilities, cdp_cap_names))
                .attr("update-interval", std::to_string(c->update_interval))
                .attr("holdtime", c->holdtime)
                .attr("odr", to_string(c->odr))
                .attr("odr-invalid", c->odr_timers.invalid.to_decimal())
                .attr("odr-holddown", c->odr_timers.holddown.to_decimal())
                .attr("odr-flush", c->odr_timers.flush.to_decimal())
                .attr("jitter", c->jitter.to_decimal())
                .close();
        }
        if (const auto& l = n.lldp) {
            std::string destination = l->destination.to_string();
            for (auto [addr, name] : lldp_destinations)
                if (addr == l->destination)
                    destination = name;
            Tag t(out, "    ", "lldp");
            t.attr("system-name", l->system_name)
                .attr("system-description", l->system_description)
                .attr("capabilities", caps_to_text(l->capabilities, lldp_cap_names))
                .attr("enabled-capabilities", caps_to_text(l->enabled_capabilities, lldp_cap_names))
                .attr("management-address", l->management_address)
                .attr("admin-status", to_string(l->admin_status))
                .attr("tx-interval", std::to_string(l->tx_interval))
                .attr("tx-hold", std::to_string(l->tx_hold))
                .attr("fast-tx", std::to_string(l->fast_tx))
                .attr("tx-fast-init", std::to_string(l->tx_fast_init))
                .attr("tx-credit-max", std::to_string(l->tx_credit_max))
                .attr("destination", destination)
                .attr("fast-start-on-change", bool_text(l->fast_start_on_change))
                .attr("fast-start-on-new-neighbor", bool_text(l->fast_start_on_new_neighbor))
                .attr("jitter", l->jitter.to_decimal())
                .close();
        }
        out += "  </node>\n";
    }
    for (const auto& l : s.links)
        Tag(out, "  ", "link")
            .attr("a", l.a.to_string())
            .attr("b", l.b.to_string())
            .attr("delay", l.delay.to_decimal())
            .attr("state", to_string(l.initial))
            .close();
    for (const auto& ev : s.timeline)
        Tag(out, "  ", "event")
            .attr("at", ev.at.to_decimal())
            .attr("action", to_string(ev.action))
            .attr("link", ev.link)
            .attr("node", ev.node)
            .close();
    if (s.outputs.pcap || s.outputs.csv || s.outputs.dumps)
        Tag(out, "  ", "output").attr("pcap", s.outputs.pcap).attr("csv", s.outputs.csv).attr("dumps", s.outputs.dumps).close();
    out += "</scenario>\n";
    return out;
}

} // namespace l2disc
