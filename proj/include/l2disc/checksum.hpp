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

#include <cstdint>

namespace l2disc {

/// 16-bit one's-complement sum of big-endian words, carries folded in.
/// Odd-length input is summed as if padded with one trailing zero byte.
std::uint16_t ones_complement_sum(ByteView data) noexcept;

/// CDP header checksum: complement of ones_complement_sum(). A payload that
/// carries a correct checksum sums to 0xFFFF.
inline std::uint16_t cdp_checksum(ByteView payload) noexcept
{
    return static_cast<std::uint16_t>(~ones_complement_sum(payload));
}

} // namespace l2disc
