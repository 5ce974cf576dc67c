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

#include "l2disc/pcap.hpp"

#include "l2disc/error.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>

namespace l2disc {

namespace {

void put_le32(Bytes& out, std::uint32_t v)
{
    for (int i = 0; i < 4; ++i)
        out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_le16(Bytes& out, std::uint16_t v)
{
    out.push_back(static_cast<std::uint8_t>(v));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

std::uint32_t get32(ByteView data, std::size_t at, bool swapped)
{
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
        int shift = swapped ? 8 * (3 - i) : 8 * i;
        v |= std::uint32_t{data[at + i]} << shift;
    }
    return v;
}

} // namespace

Bytes encode_pcap(std::vector<PcapRecord> records)
{
    std::stable_sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.at < b.at; });
    Bytes out;
    put_le32(out, pcap_magic);
    put_le16(out, 2);
    put_le16(out, 4);
    put_le32(out, 0);
    put_le32(out, 0);
    put_le32(out, 65535);
    put_le32(out, 1);
    for (const auto& r : records) {
        if (r.at.count() < 0)
            throw Error(Errc::invalid_config, "negative capture timestamp");
        auto seconds = r.at.whole_seconds();
        put_le32(out, static_cast<std::uint32_t>(seconds));
        put_le32(out, static_cast<std::uint32_t>(r.at.count() - seconds * 1'000'000));
        auto caplen = static_cast<std::uint32_t>(std::min<std::size_t>(r.frame.size(), 65535));
        put_le32(out, caplen);
        put_le32(out, std::max<std::uint32_t>(r.original_length, static_cast<std::uint32_t>(r.frame.size())));
        out.insert(out.end(), r.frame.begin(), r.frame.begin() + caplen);
    }
    return out;
}

void write_pcap(const std::filesystem::path& path, std::vector<PcapRecord> records)
{
    auto bytes = encode_pcap(std::move(records));
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error(Errc::io_error, "cannot create " + path.string());
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw Error(Errc::io_error, "cannot write " + path.string());
}

PcapFile decode_pcap(ByteView data)
{
    if (data.size() < pcap_global_header_size)
        throw Error(Errc::parse_error, "pcap global header truncated");
    bool swapped = false;
    std::uint32_t magic = get32(data, 0, false);
    if (magic == 0xd4c3b2a1)
        swapped = true;
    else if (magic != pcap_magic)
        throw Error(Errc::parse_error, "not a microsecond pcap file");

    PcapFile file;
    file.snaplen = get32(data, 16, swapped);
    file.linktype = get32(data, 20, swapped);
    std::size_t at = pcap_global_header_size;
    while (at < data.size()) {
        if (data.size() - at < pcap_record_header_size) {
            file.trailing_error = "record header truncated at offset " + std::to_string(at);
            break;
        }
        std::uint32_t sec = get32(data, at, swapped);
        std::uint32_t usec = get32(data, at + 4, swapped);
        std::uint32_t caplen = get32(data, at + 8, swapped);
        std::uint32_t origlen = get32(data, at + 12, swapped);
        at += pcap_record_header_size;
        if (data.size() - at < caplen) {
            file.trailing_error = "record data truncated at offset " + std::to_string(at);
            break;
        }
        PcapRecord r;
        r.at = SimTime::seconds(sec) + SimTime::micros(usec);
        r.frame.assign(data.begin() + static_cast<std::ptrdiff_t>(at), data.begin() + static_cast<std::ptrdiff_t>(at + caplen));
        r.original_length = origlen;
        file.records.push_back(std::move(r));
        at += caplen;
    }
    return file;
}

PcapFile read_pcap(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::io_error, "cannot open " + path.string());
    Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return decode_pcap(data);
}

} // namespace l2disc
