// Copyright 2026 The gwcodes Authors
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

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace gw::cli {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kInputError = 2, kGuardExceeded = 3 };

/// Parses "p^e" or a prime power "q" into (p, e). Throws InputError otherwise.
std::pair<std::uint32_t, std::uint32_t> parse_prime_power(const std::string& text);

/// Runs the gwcodes command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gw::cli
