/*
   Copyright 2026 The cinv Authors

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

#ifndef CINV_TOOLS_COMMANDS_HPP
#define CINV_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cinv/io.hpp"

namespace cinv::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitIneligible = 3;

/// A result document plus the exit code and an optional diagnostic for stderr.
struct CommandResult {
    io::json document;
    int exit_code = kExitOk;
    std::string diagnostic;
};

enum class InverseKind { Drazin, Complete };
enum class Route { Formula, Euclid, Sequence, All };

CommandResult cmd_index(const io::MatrixDocument& input);
CommandResult cmd_inverse(const io::MatrixDocument& input, InverseKind kind, Route route);
CommandResult cmd_pcf(const io::MatrixDocument& input, const std::vector<std::size_t>& evaluate_at);
/// `n` defaults to max(index(A), 1).
CommandResult cmd_verify(const io::MatrixDocument& input, const io::MatrixDocument& candidate,
                         const std::string& equations, std::optional<unsigned> n);
/// `golden` defaults to the built-in document.
CommandResult cmd_selftest(const std::optional<io::json>& golden, std::uint64_t seed, std::size_t count);

}  // namespace cinv::cli

#endif  // CINV_TOOLS_COMMANDS_HPP
