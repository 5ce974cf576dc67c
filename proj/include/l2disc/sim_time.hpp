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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace l2disc {

/// Simulation clock value or duration, integer microseconds.
class SimTime {
public:
    constexpr SimTime() = default;

    static constexpr SimTime micros(std::int64_t us) { return SimTime(us); }
    static constexpr SimTime millis(std::int64_t ms) { return SimTime(ms * 1000); }
    static constexpr SimTime seconds(std::int64_t s) { return SimTime(s * 1'000'000); }

    /// Parses a decimal seconds literal ("62", "0.005") exactly, up to six
    /// fractional digits. Negative values are rejected.
    static std::optional<SimTime> parse_seconds(std::string_view text);

    constexpr std::int64_t count() const { return us_; }
    constexpr double to_seconds() const { return static_cast<double>(us_) / 1e6; }
    /// Floor of the value in whole seconds.
    constexpr std::int64_t whole_seconds() const { return us_ >= 0 ? us_ / 1'000'000 : -((-us_ + 999'999) / 1'000'000); }
    /// Ceiling of the value in whole seconds.
    constexpr std::int64_t ceil_seconds() const { return -SimTime(-us_).whole_seconds(); }

    /// Seconds with exactly three decimals, rounded half up ("62.000").
    std::string to_string() const;
    /// Shortest exact decimal seconds form ("0.005", "60").
    std::string to_decimal() const;

    constexpr SimTime& operator+=(SimTime o) { us_ += o.us_; return *this; }
    constexpr SimTime& operator-=(SimTime o) { us_ -= o.us_; return *this; }
    friend constexpr SimTime operator+(SimTime a, SimTime b) { return SimTime(a.us_ + b.us_); }
    friend constexpr SimTime operator-(SimTime a, SimTime b) { return SimTime(a.us_ - b.us_); }
    friend constexpr SimTime operator*(SimTime a, std::int64_t k) { return SimTime(a.us_ * k); }

    auto operator<=>(const SimTime&) const = default;

private:
    constexpr explicit SimTime(std::int64_t us) : us_(us) {}
    std::int64_t us_ = 0;
};

} // namespace l2disc
