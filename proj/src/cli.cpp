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

#include "l2disc/cli.hpp"

#include "l2disc/error.hpp"
#include "l2disc/ethernet.hpp"
#include "l2disc/harness.hpp"
#include "l2disc/message_log.hpp"
#include "l2disc/pcap.hpp"
#include "l2disc/scenario.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>

namespace l2disc {

namespace {

using json = nlohmann::ordered_json;

std::string hex(ByteView bytes)
{
    std::string out;
    char buf[4];
    for (auto b : bytes) {
        std::snprintf(buf, sizeof buf, "%02x", b);
        out += buf;
    }
    return out;
}

std::string hex32(std::uint32_t v, int width)
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%0*x", width, v);
    return buf;
}

std::string address_text(const std::vector<CdpAddressRecord>& list)
{
    std::string out;
    for (const auto& r : list) {
        if (!out.empty())
            out += ", ";
        auto v4 = r.as_ipv4();
        out += v4 ? v4->to_string() : "proto " + hex(r.protocol) + " addr " + hex(r.address);
    }
    return out;
}

std::string cdp_value_text(const CdpTlv& tlv)
{
    return std::visit(
        [&](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) {
                return v;
            } else if constexpr (std::is_same_v<T, CdpAddressList>) {
                std::string out = address_text(v.addresses);
                if (!v.reflected.empty())
                    out += " (reflected " + address_text(v.reflected) + ")";
                return out;
            } else if constexpr (std::is_same_v<T, CdpCapabilities>) {
                return hex32(v.bits, 8) + " (" + cdp_capability_codes(v.bits) + ")";
            } else if constexpr (std::is_same_v<T, CdpPrefixList>) {
                std::string out;
                if (v.default_gateway)
                    out = "gateway " + v.default_gateway->to_string();
                for (const auto& p : v.prefixes)
                    out += (out.empty() ? "" : ", ") + p.to_string();
                return out;
            } else if constexpr (std::is_same_v<T, Duplex>) {
                return v == Duplex::full ? "full" : "half";
            } else if constexpr (std::is_same_v<T, CdpNativeVlan>) {
                return std::to_string(v.id);
            } else {
                return hex(v);
            }
        },
        tlv.value);
}

std::string lldp_value_text(const LldpTlv& tlv)
{
    return std::visit(
        [&](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) {
                return v;
            } else if constexpr (std::is_same_v<T, LldpCapabilities>) {
                return "capabilities " + lldp_capability_codes(v.capabilities) + ", enabled " +
                       lldp_capability_codes(v.enabled);
            } else if constexpr (std::is_same_v<T, LldpManagementAddress>) {
                auto v4 = v.as_ipv4();
                return (v4 ? v4->to_string() : "family " + std::to_string(v.address_subtype) + " " + hex(v.address)) +
                       " ifIndex " + std::to_string(v.interface_number);
            } else {
                return hex(v);
            }
        },
        tlv.value);
}

struct DecodedTlv {
    std::string name;
    unsigned type;
    std::string value;
};

struct DecodedFrame {
    SimTime at;
    std::string protocol;
    std::string src;
    std::string dst;
    std::size_t length = 0;
    std::vector<DecodedTlv> tlvs;
    std::string other;
    std::optional<std::string> error;
};

DecodedFrame decode_record(const PcapRecord& rec)
{
    DecodedFrame d;
    d.at = rec.at;
    d.length = rec.frame.size();
    try {
        auto eth = parse_ethernet(rec.frame);
        d.src = eth.src.to_string();
        d.dst = eth.dst.to_string();
        d.protocol = to_string(eth.kind);
        if (eth.kind == FrameKind::cdp) {
            auto p = decode_cdp(eth.body);
            d.tlvs.push_back({"Version", 0, std::to_string(p.version)});
            d.tlvs.push_back({"TTL", 0, std::to_string(p.ttl)});
            d.tlvs.push_back({"Checksum", 0, hex32(p.checksum, 4)});
            for (const auto& t : p.tlvs)
                d.tlvs.push_back({cdp_tlv_name(t.type), t.type, cdp_value_text(t)});
        } else if (eth.kind == FrameKind::lldp) {
            auto f = decode_lldp(eth.body);
            d.tlvs.push_back({lldp_tlv_name(1), 1, f.chassis_id.to_string()});
            d.tlvs.push_back({lldp_tlv_name(2), 2, f.port_id.to_string()});
            d.tlvs.push_back({lldp_tlv_name(3), 3, std::to_string(f.ttl)});
            for (const auto& t : f.optional_tlvs)
                d.tlvs.push_back({lldp_tlv_name(t.type), t.type, lldp_value_text(t)});
        } else {
            d.other = hex32(eth.type_or_length, 4);
        }
    } catch (const Error& e) {
        d.error = e.what();
    }
    return d;
}

void print_text(std::ostream& out, std::size_t index, const DecodedFrame& d)
{
    out << "#" << index << " t=" << d.at.to_string() << " ";
    if (d.src.empty()) {
        out << "error: " << *d.error << "\n";
        return;
    }
    if (!d.other.empty()) {
        out << "non-discovery frame type " << d.other << " " << d.src << " -> " << d.dst << " len " << d.length
            << "\n";
        return;
    }
    out << d.protocol << " " << d.src << " -> " << d.dst << " len " << d.length << "\n";
    if (d.error) {
        out << "  error: " << *d.error << "\n";
        return;
    }
    for (const auto& t : d.tlvs)
        out << "  " << t.name << ": " << t.value << "\n";
}

json to_json(std::size_t index, const DecodedFrame& d)
{
    json j;
    j["index"] = index;
    j["timestamp"] = d.at.to_string();
    j["protocol"] = d.protocol.empty() ? "unknown" : d.protocol;
    j["src"] = d.src;
    j["dst"] = d.dst;
    j["length"] = d.length;
    if (!d.other.empty())
        j["type"] = d.other;
    json tlvs = json::array();
    for (const auto& t : d.tlvs)
        tlvs.push_back({{"name", t.name}, {"type", t.type}, {"value", t.value}});
    j["tlvs"] = std::move(tlvs);
    if (d.error)
        j["error"] = *d.error;
    return j;
}

int report(std::ostream& err, const std::exception& e)
{
    err << "l2disc: " << e.what() << "\n";
    return exit_input;
}

std::optional<SimTime> seconds_option(const std::string& text, const char* flag)
{
    if (text.empty())
        return std::nullopt;
    auto t = SimTime::parse_seconds(text);
    if (!t)
        throw CLI::ValidationError(flag, "expected non-negative seconds, got '" + text + "'");
    return t;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"CDP/LLDP discovery protocol simulator", "l2disc"};
    app.require_subcommand(1);
    app.footer("Exit codes: 0 success, 1 usage error, 2 input error (parse, schema, decode or I/O).");

    std::string scenario_path;
    std::string until_text;
    std::string jitter_text;
    std::string pcap_path;
    std::string csv_path;
    std::string dumps_path;
    std::uint64_t seed = 0;
    auto* run = app.add_subcommand("run", "Run a scenario and write the requested artifacts");
    run->add_option("scenario", scenario_path, "Scenario XML file")->required();
    run->add_option("--until", until_text, "End time in seconds (overrides the document)");
    auto* seed_opt = run->add_option("--seed", seed, "RNG seed (overrides the document)");
    run->add_option("--jitter", jitter_text, "Jitter bound in seconds for every engine");
    run->add_option("--pcap", pcap_path, "Write a capture file");
    run->add_option("--csv", csv_path, "Write the message log");
    run->add_option("--dumps", dumps_path, "Write the table dumps");

    std::string decode_path;
    bool as_json = false;
    auto* decode = app.add_subcommand("decode", "Print every frame of a capture file");
    decode->add_option("pcap", decode_path, "Capture file")->required();
    decode->add_flag("--json", as_json, "Emit a JSON array");

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "Check a scenario document");
    validate->add_option("scenario", validate_path, "Scenario XML file")->required();

    std::string csv_a;
    std::string csv_b;
    std::string proto_a;
    std::string proto_b;
    auto* compare = app.add_subcommand("compare", "Side-by-side timestamps of two message logs");
    compare->add_option("a", csv_a, "First CSV")->required();
    compare->add_option("b", csv_b, "Second CSV")->required();
    auto proto_check = CLI::IsMember({"CDP", "LLDP", "cdp", "lldp"});
    compare->add_option("--protocol-a", proto_a, "Only rows of this protocol from the first file")->check(proto_check);
    compare->add_option("--protocol-b", proto_b, "Only rows of this protocol from the second file")->check(proto_check);

    std::optional<SimTime> until;
    std::optional<SimTime> jitter;
    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
        until = seconds_option(until_text, "--until");
        jitter = seconds_option(jitter_text, "--jitter");
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "l2disc: " << e.what() << "\n";
        if (auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front())
            err << "Run with " << (sub == &app ? "" : sub->get_name() + " ") << "--help for usage.\n";
        return exit_usage;
    }

    try {
        if (*run) {
            auto scenario = load_scenario(scenario_path);
            RunOptions options{until, std::nullopt, jitter};
            if (*seed_opt)
                options.seed = seed;
            auto art = run_scenario(scenario, options);
            auto pcap = pcap_path.empty() ? scenario.outputs.pcap : std::optional<std::string>(pcap_path);
            auto csv = csv_path.empty() ? scenario.outputs.csv : std::optional<std::string>(csv_path);
            auto dumps = dumps_path.empty() ? scenario.outputs.dumps : std::optional<std::string>(dumps_path);
            if (pcap)
                write_pcap(*pcap, art.pcap_records());
            if (csv)
                write_message_csv(art.log, *csv);
            if (dumps) {
                std::ofstream f(*dumps, std::ios::binary | std::ios::trunc);
                f << art.dump_text();
                if (!f)
                    throw Error(Errc::io_error, "cannot write " + *dumps);
            }
            out << art.summary();
        } else if (*decode) {
            auto file = read_pcap(decode_path);
            if (as_json) {
                json arr = json::array();
                for (std::size_t i = 0; i < file.records.size(); ++i)
                    arr.push_back(to_json(i + 1, decode_record(file.records[i])));
                if (file.trailing_error)
                    arr.push_back({{"index", file.records.size() + 1}, {"error", *file.trailing_error}});
                out << arr.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < file.records.size(); ++i)
                    print_text(out, i + 1, decode_record(file.records[i]));
                if (file.trailing_error)
                    out << "#" << file.records.size() + 1 << " error: " << *file.trailing_error << "\n";
            }
        } else if (*validate) {
            auto s = load_scenario(validate_path);
            out << validate_path << ": ok (" << s.nodes.size() << " nodes, " << s.links.size() << " links, "
                << s.timeline.size() << " events)\n";
        } else if (*compare) {
            CompareOptions options;
            options.label_a = proto_a.empty() ? "A" : "A " + std::string(to_string(*parse_protocol(proto_a)));
            options.label_b = proto_b.empty() ? "B" : "B " + std::string(to_string(*parse_protocol(proto_b)));
            if (!proto_a.empty())
                options.protocol_a = parse_protocol(proto_a);
            if (!proto_b.empty())
                options.protocol_b = parse_protocol(proto_b);
            out << render_comparison(read_message_csv(csv_a), read_message_csv(csv_b), options);
        }
    } catch (const Error& e) {
        return report(err, e);
    } catch (const std::ios_base::failure& e) {
        return report(err, e);
    }
    return exit_ok;
}

} // namespace l2disc
