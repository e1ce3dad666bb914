/*
   Copyright 2026 The dedekind Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DEDEKIND_CLI_HPP
#define DEDEKIND_CLI_HPP

#include <string>
#include <vector>

#include "dedekind/error.hpp"

namespace dedekind::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_false = 1;
inline constexpr int exit_input = 2;
inline constexpr int exit_internal = 3;

const char* version() noexcept;

struct Outcome {
    int exit_code = exit_ok;
    std::string out; // stdout
    std::string err; // stderr
};

/// Runs one invocation; args exclude the program name.
Outcome run(const std::vector<std::string>& args);

int exit_code_for(ErrorCode code) noexcept;

} // namespace dedekind::cli

#endif
