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

#include "l2disc/net_types.hpp"
#include "l2disc/sim_time.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace l2disc {

struct PcapRecord {
    SimTime at;
    Bytes frame;
    /// Original length on the wire; equals frame.size() unless truncated
    /// by the snap length.
    std::uint32_t original_length = 0;

    bool operator==(const PcapRecord&) const = default;
};

struct PcapFile {
    std::uint32_t snaplen = 65535;
    std::uint32_t linktype = 1;
    std::vector<PcapRecord> records;
    /// Set when the file ends inside a record.
    std::optional<std::string> trailing_error;
};

inline constexpr std::uint32_t pcap_magic = 0xa1b2c3d4;
inline constexpr std::size_t pcap_global_header_size = 24;
inline constexpr std::size_t pcap_record_header_size = 16;

/// Classic little-endian libpcap, microsecond timestamps, LINKTYPE_ETHERNET.
/// Records are written in timestamp order (stable for ties).
Bytes encode_pcap(std::vector<PcapRecord> records);
void write_pcap(const std::filesystem::path& path, std::vector<PcapRecord> records);

/// Throws Errc::parse_error for a bad global header. A record cut short at
/// the end of the data is reported in trailing_error and dropped.
PcapFile decode_pcap(ByteView data);
PcapFile read_pcap(const std::filesystem::path& path);

} // namespace l2disc
