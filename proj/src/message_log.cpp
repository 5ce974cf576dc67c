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

#include "l2disc/message_log.hpp"

#include "l2disc/error.hpp"
#include "l2disc/ethernet.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace l2disc {

namespace {

constexpr std::string_view arrow = " → ";

std::string csv_field(std::string_view text)
{
    if (text.find_first_of(",\"\r\n") == std::string_view::npos)
        return std::string(text);
    std::string out = "\"";
    for (char c : text) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::vector<std::string> split_csv_line(std::string_view line, int line_no)
{
    std::vector<std::string> fields(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                fields.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                fields.back() += c;
            }
        } else if (c == '"' && fields.back().empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.emplace_back();
        } else {
            fields.back() += c;
        }
    }
    if (quoted)
        throw Error(Errc::parse_error, "unterminated quoted field", line_no);
    return fields;
}

} // namespace

const char* to_string(Protocol protocol)
{
    return protocol == Protocol::cdp ? "CDP" : "LLDP";
}

std::optional<Protocol> parse_protocol(std::string_view text)
{
    if (text == "CDP" || text == "cdp")
        return Protocol::cdp;
    if (text == "LLDP" || text == "lldp")
        return Protocol::lldp;
    return std::nullopt;
}

std::string MessageLogRow::direction() const
{
    return src_node + std::string(arrow) + dst_node;
}

MessageLog message_log_from_capture(const std::vector<CaptureRecord>& capture)
{
    MessageLog log;
    for (const auto& rec : capture) {
        auto eth = parse_ethernet(rec.frame);
        MessageLogRow row;
        row.timestamp = rec.at;
        row.src_node = rec.from.node;
        row.dst_node = rec.to.node;
        row.src_port = rec.from.port;
        if (eth.kind == FrameKind::cdp) {
            auto packet = decode_cdp(eth.body);
            row.protocol = Protocol::cdp;
            const auto* id = packet.get<std::string>(CdpTlvType::device_id);
            row.summary = "device=" + (id ? *id : std::string("?")) + " ttl=" + std::to_string(packet.ttl);
        } else if (eth.kind == FrameKind::lldp) {
            auto frame = decode_lldp(eth.body);
            row.protocol = Protocol::lldp;
            row.summary = "chassis=" + frame.chassis_id.to_string() + " ttl=" + std::to_string(frame.ttl);
        } else {
            continue;
        }
        log.push_back(std::move(row));
    }
    return log;
}

std::string format_message_csv(const MessageLog& log)
{
    std::string out(message_csv_header);
    out += '\n';
    for (const auto& row : log) {
        out += row.timestamp.to_string();
        out += ',';
        out += to_string(row.protocol);
        out += ',';
        out += csv_field(row.direction());
        out += ',';
        out += csv_field(row.src_port);
        out += ',';
        out += csv_field(row.summary);
        out += '\n';
    }
    return out;
}

void write_message_csv(const MessageLog& log, const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(Errc::io_error, "cannot create " + path.string());
    out << format_message_csv(log);
    if (!out)
        throw Error(Errc::io_error, "cannot write " + path.string());
}

MessageLog parse_message_csv(std::string_view text)
{
    MessageLog log;
    int line_no = 0;
    bool header_seen = false;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (!header_seen) {
            if (line != message_csv_header)
                throw Error(Errc::parse_error, "expected header '" + std::string(message_csv_header) + "'", line_no);
            header_seen = true;
            continue;
        }
        if (line.empty())
            continue;
        auto fields = split_csv_line(line, line_no);
        if (fields.size() != 5)
            throw Error(Errc::parse_error, "expected 5 fields, got " + std::to_string(fields.size()), line_no);
        MessageLogRow row;
        auto ts = SimTime::parse_seconds(fields[0]);
        if (!ts)
            throw Error(Errc::parse_error, "bad timestamp '" + fields[0] + "'", line_no);
        row.timestamp = *ts;
        auto proto = parse_protocol(fields[1]);
        if (!proto)
            throw Error(Errc::parse_error, "bad protocol '" + fields[1] + "'", line_no);
        row.protocol = *proto;
        auto sep = fields[2].find(arrow);
        if (sep == std::string::npos)
            throw Error(Errc::parse_error, "bad direction '" + fields[2] + "'", line_no);
        row.src_node = fields[2].substr(0, sep);
        row.dst_node = fields[2].substr(sep + arrow.size());
        row.src_port = fields[3];
        row.summary = fields[4];
        log.push_back(std::move(row));
    }
    if (!header_seen)
        throw Error(Errc::parse_error, "empty file", 1);
    return log;
}

MessageLog read_message_csv(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::io_error, "cannot open " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    return parse_message_csv(text.str());
}

std::string render_comparison(const MessageLog& a, const MessageLog& b, const CompareOptions& options)
{
    std::vector<std::string> order;
    std::map<std::string, std::pair<std::vector<SimTime>, std::vector<SimTime>>> by_direction;
    auto collect = [&](const MessageLog& log, std::optional<Protocol> filter, bool first) {
        for (const auto& row : log) {
            if (filter && row.protocol != *filter)
                continue;
            auto dir = row.direction();
            auto [it, inserted] = by_direction.try_emplace(dir);
            if (inserted)
                order.push_back(dir);
            (first ? it->second.first : it->second.second).push_back(row.timestamp);
        }
    };
    collect(a, options.protocol_a, true);
    collect(b, options.protocol_b, false);

    std::ostringstream out;
    char line[160];
    for (std::size_t d = 0; d < order.size(); ++d) {
        const auto& [ta, tb] = by_direction[order[d]];
        if (d)
            out << '\n';
        out << order[d] << '\n';
        std::snprintf(line, sizeof line, "  %-4s %-14s %-14s %s\n", "#", (options.label_a + " [s]").c_str(),
                      (options.label_b + " [s]").c_str(), "delta [s]");
        out << line;
        for (std::size_t i = 0; i < std::max(ta.size(), tb.size()); ++i) {
            std::string sa = i < ta.size() ? ta[i].to_string() : "missing";
            std::string sb = i < tb.size() ? tb[i].to_string() : "missing";
            std::string delta = i < ta.size() && i < tb.size() ? (tb[i] - ta[i]).to_string() : "-";
            std::snprintf(line, sizeof line, "  %-4zu %-14s %-14s %s\n", i + 1, sa.c_str(), sb.c_str(), delta.c_str());
            out << line;
        }
    }
    return out.str();
}

} // namespace l2disc
