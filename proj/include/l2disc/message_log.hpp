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

#include "l2disc/sim_time.hpp"
#include "l2disc/simulator.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace l2disc {

enum class Protocol { cdp, lldp };

const char* to_string(Protocol protocol);
std::optional<Protocol> parse_protocol(std::string_view text);

/// One transmitted discovery frame.
struct MessageLogRow {
    SimTime timestamp;
    Protocol protocol = Protocol::cdp;
    std::string src_node;
    std::string dst_node;
    std::string src_port;
    /// `device=R1 ttl=180` or `chassis=02:00:00:00:01:00 ttl=180`
    std::string summary;

    /// `src_node → dst_node`
    std::string direction() const;

    bool operator==(const MessageLogRow&) const = default;
};

using MessageLog = std::vector<MessageLogRow>;

inline constexpr std::string_view message_csv_header = "timestamp,protocol,direction,src_port,summary";

/// One row per CDP/LLDP frame in the capture, in capture order. Frames that
/// are neither are skipped. Throws on frames that fail to decode.
MessageLog message_log_from_capture(const std::vector<CaptureRecord>& capture);

std::string format_message_csv(const MessageLog& log);
void write_message_csv(const MessageLog& log, const std::filesystem::path& path);

/// Throws Errc::parse_error (with line) on malformed input.
MessageLog parse_message_csv(std::string_view text);
MessageLog read_message_csv(const std::filesystem::path& path);

struct CompareOptions {
    std::string label_a = "A";
    std::string label_b = "B";
    std::optional<Protocol> protocol_a;
    std::optional<Protocol> protocol_b;
};

/// Side-by-side timestamps per direction. The n-th row of a direction in one
/// log is paired with the n-th row of the same direction in the other;
/// unpaired rows show as "missing".
std::string render_comparison(const MessageLog& a, const MessageLog& b, const CompareOptions& options = {});

} // namespace l2disc
