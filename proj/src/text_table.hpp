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

#include <string>
#include <string_view>

namespace l2disc::detail {

// Left-aligned fixed-width cell. Overlong values keep one separating space.
inline void cell(std::string& line, std::string_view value, std::size_t width)
{
    line += value;
    if (value.size() < width)
        line.append(width - value.size(), ' ');
    else
        line += ' ';
}

inline void trim_right(std::string& line)
{
    while (!line.empty() && line.back() == ' ')
        line.pop_back();
}

} // namespace l2disc::detail
