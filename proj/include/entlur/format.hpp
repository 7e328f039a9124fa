// Copyright 2026 The entlur Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace entlur {

/// Rounds to 12 significant digits; -0 becomes 0. All JSON and CSV output
/// goes through this so identical runs render identical bytes.
double round12(double x);

/// "%.12g" rendering of round12(x).
std::string format12(double x);

/// 64-bit FNV-1a of the bytes, rendered as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

} // namespace entlur
