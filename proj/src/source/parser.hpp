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

#ifndef CHAINLINT_SOURCE_PARSER_HPP_
#define CHAINLINT_SOURCE_PARSER_HPP_

#include "source/ast.hpp"

namespace chainlint::go {

// Parses file.source into file.root. Fills comments, line table, package
// name and imports. Throws ParseError on the first syntax error.
void parse_file(SourceFile& file);

}  // namespace chainlint::go

#endif  // CHAINLINT_SOURCE_PARSER_HPP_
