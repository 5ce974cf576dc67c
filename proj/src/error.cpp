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

#include "l2disc/error.hpp"

namespace l2disc {

const char* to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::tlv_too_long: return "TLVTooLong";
    case Errc::truncated: return "Truncated";
    case Errc::bad_checksum: return "BadChecksum";
    case Errc::bad_tlv_length: return "BadTlvLength";
    case Errc::bad_mandatory_order: return "BadMandatoryOrder";
    case Errc::duplicate_tlv: return "DuplicateTlv";
    case Errc::invalid_config: return "InvalidConfig";
    case Errc::unknown_interface: return "UnknownInterface";
    case Errc::interface_down: return "InterfaceDown";
    case Errc::non_monotonic_time: return "NonMonotonicTime";
    case Errc::agent_not_transmitting: return "AgentNotTransmitting";
    case Errc::unknown_port: return "UnknownPort";
    case Errc::event_in_past: return "EventInPast";
    case Errc::unknown_link: return "UnknownLink";
    case Errc::unattached_port: return "UnattachedPort";
    case Errc::parse_error: return "ParseError";
    case Errc::schema_error: return "SchemaError";
    case Errc::io_error: return "IoError";
    }
    return "Unknown";
}

static std::string compose(Errc code, const std::string& message, int line)
{
    std::string text = to_string(code);
    if (line > 0)
        text += " (line " + std::to_string(line) + ")";
    if (!message.empty())
        text += ": " + message;
    return text;
}

Error::Error(Errc code, const std::string& message, int line)
    : std::runtime_error(compose(code, message, line)), code_(code), line_(line)
{
}

} // namespace l2disc
