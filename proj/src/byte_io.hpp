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

#include "l2disc/error.hpp"
#include "l2disc/net_types.hpp"

#include <cstdint>

namespace l2disc::detail {

// Big-endian cursor over an input buffer. Every read is bounds checked and
// throws Errc::truncated.
class ByteReader {
public:
    explicit ByteReader(ByteView data) : data_(data) {}

    std::size_t remaining() const { return data_.size() - pos_; }
    std::size_t position() const { return pos_; }
    bool empty() const { return remaining() == 0; }

    std::uint8_t u8()
    {
        need(1);
        return data_[pos_++];
    }

    std::uint16_t u16()
    {
        need(2);
        std::uint16_t v = static_cast<std::uint16_t>(data_[pos_] << 8 | data_[pos_ + 1]);
        pos_ += 2;
        return v;
    }

    std::uint32_t u32()
    {
        std::uint32_t hi = u16();
        return hi << 16 | u16();
    }

    ByteView take(std::size_t n)
    {
        need(n);
        auto view = data_.subspan(pos_, n);
        pos_ += n;
        return view;
    }

    ByteView rest() { return take(remaining()); }

private:
    void need(std::size_t n) const
    {
        if (remaining() < n)
            throw Error(Errc::truncated, "need " + std::to_string(n) + " bytes at offset " +
                                             std::to_string(pos_) + ", " +
                                             std::to_string(remaining()) + " left");
    }

    ByteView data_;
    std::size_t pos_ = 0;
};

class ByteWriter {
public:
    void u8(std::uint8_t v) { out_.push_back(v); }
    void u16(std::uint16_t v)
    {
        out_.push_back(static_cast<std::uint8_t>(v >> 8));
        out_.push_back(static_cast<std::uint8_t>(v));
    }
    void u32(std::uint32_t v)
    {
        u16(static_cast<std::uint16_t>(v >> 16));
        u16(static_cast<std::uint16_t>(v));
    }
    void bytes(ByteView v) { out_.insert(out_.end(), v.begin(), v.end()); }

    void patch_u16(std::size_t at, std::uint16_t v)
    {
        out_[at] = static_cast<std::uint8_t>(v >> 8);
        out_[at + 1] = static_cast<std::uint8_t>(v);
    }

    std::size_t size() const { return out_.size(); }
    Bytes& buffer() { return out_; }
    Bytes take() { return std::move(out_); }

private:
    Bytes out_;
};

} // namespace l2disc::detail
