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

#ifndef CHAINLINT_RULES_BECH32_HPP_
#define CHAINLINT_RULES_BECH32_HPP_

#include <string_view>

namespace chainlint::rules {

// True when `s` is a complete Bech32 string (BIP-173): human-readable part,
// separator '1', data in the 32-character alphabet, valid 6-character
// checksum. Mixed case is rejected.
bool is_bech32(std::string_view s);

}  // namespace chainlint::rules

#endif  // CHAINLINT_RULES_BECH32_HPP_
