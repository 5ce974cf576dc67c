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

#include <stdexcept>
#include <string>

namespace l2disc {

enum class Errc {
    // wire codecs
    tlv_too_long,
    truncated,
    bad_checksum,
    bad_tlv_length,
    bad_mandatory_order,
    duplicate_tlv,
    // protocol engines
    invalid_config,
    unknown_interface,
    interface_down,
    non_monotonic_time,
    agent_not_transmitting,
    unknown_port,
    // simulator
    event_in_past,
    unknown_link,
    unattached_port,
    // scenario documents and files
    parse_error,
    schema_error,
    io_error,
};

const char* to_string(Errc code) noexcept;

/// Single exception type used across the library. `line()` is set for
/// document parse errors and is 0 otherwise.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message, int line = 0);

    Errc code() const noexcept { return code_; }
    int line() const noexcept { return line_; }

private:
    Errc code_;
    int line_;
};

} // namespace l2disc
