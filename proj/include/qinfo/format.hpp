// Copyright 2026 The qinfo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace qinfo {

// Locale-independent number formatting and parsing (always '.' decimals,
// via std::to_chars / std::from_chars).

// General format with `precision` significant digits.
std::string format_double(double v, int precision);

// Shortest representation that parses back to the same double.
std::string format_full(double v);

// Strict full-string parse; throws InvalidArgument on leftovers or garbage.
double parse_double(const std::string& text);

// Comma-separated list of doubles, e.g. "0.5,0.25,0.25".
std::vector<double> parse_double_list(const std::string& text);

}  // namespace qinfo
