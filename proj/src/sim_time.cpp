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

#include "l2disc/sim_time.hpp"

#include <charconv>
#include <cstdio>

namespace l2disc {

std::optional<SimTime> SimTime::parse_seconds(std::string_view text)
{
    auto dot = text.find('.');
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || frac.size() > 6 || whole.size() > 12)
        return std::nullopt;
    if (dot != std::string_view::npos && frac.empty())
        return std::nullopt;

    auto digits = [](std::string_view s, std::int64_t& out) {
        out = 0;
        if (s.empty())
            return true;
        auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc{} && p == s.data() + s.size() && s.front() != '-' && s.front() != '+';
    };
    std::int64_t w = 0;
    std::int64_t f = 0;
    if (!digits(whole, w) || !digits(frac, f))
        return std::nullopt;
    for (std::size_t i = frac.size(); i < 6; ++i)
        f *= 10;
    return SimTime::micros(w * 1'000'000 + f);
}

std::string SimTime::to_string() const
{
    std::int64_t ms = us_ >= 0 ? (us_ + 500) / 1000 : -((-us_ + 500) / 1000);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%lld.%03lld", ms < 0 ? "-" : "",
                  static_cast<long long>((ms < 0 ? -ms : ms) / 1000),
                  static_cast<long long>((ms < 0 ? -ms : ms) % 1000));
    return buf;
}

std::string SimTime::to_decimal() const
{
    std::int64_t a = us_ < 0 ? -us_ : us_;
    std::string out = (us_ < 0 ? "-" : "") + std::to_string(a / 1'000'000);
    std::int64_t frac = a % 1'000'000;
    if (frac != 0) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "%06lld", static_cast<long long>(frac));
        std::string f = buf;
        while (f.back() == '0')
            f.pop_back();
        out += "." + f;
    }
    return out;
}

} // namespace l2disc
