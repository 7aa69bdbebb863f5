// Copyright 2026 The chainlint Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rules/bech32.hpp"

#include <cctype>
#include <cstdint>
#include <string>

namespace chainlint::rules {

namespace {

constexpr std::string_view kCharset = "qpzry9x8gf2tvdw0s3jn54khce6mua7l";

uint32_t polymod(const std::basic_string<uint8_t>& values) {
  constexpr uint32_t kGen[5] = {0x3b6a57b2, 0x26508e6d, 0x1ea119fa, 0x3d4233dd, 0x2a1462b3};
  uint32_t chk = 1;
  for (uint8_t v : values) {
    const uint32_t top = chk >> 25;
    chk = ((chk & 0x1ffffff) << 5) ^ v;
    for (int i = 0; i < 5; ++i) {
      if ((top >> i) & 1) chk ^= kGen[i];
    }
  }
  return chk;
}

}  // namespace

bool is_bech32(std::string_view s) {
  bool lower = false;
  bool upper = false;
  for (char c : s) {
    if (c < 33 || c > 126) return false;
    lower = lower || (c >= 'a' && c <= 'z');
    upper = upper || (c >= 'A' && c <= 'Z');
  }
  if (lower && upper) return false;
  const size_t sep = s.rfind('1');
  if (sep == std::string_view::npos || sep == 0 || sep + 7 > s.size()) return false;
  std::basic_string<uint8_t> values;
  for (size_t i = 0; i < sep; ++i) values.push_back(static_cast<uint8_t>(std::tolower(s[i]) >> 5));
  values.push_back(0);
  for (size_t i = 0; i < sep; ++i) values.push_back(static_cast<uint8_t>(std::tolower(s[i]) & 31));
  for (size_t i = sep + 1; i < s.size(); ++i) {
    const size_t d = kCharset.find(static_cast<char>(std::tolower(s[i])));
    if (d == std::string_view::npos) return false;
    values.push_back(static_cast<uint8_t>(d));
  }
  return polymod(values) == 1;
}

}  // namespace chainlint::rules
