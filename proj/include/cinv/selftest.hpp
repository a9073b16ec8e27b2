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

#ifndef CINV_SELFTEST_HPP
#define CINV_SELFTEST_HPP

#include <string>
#include <vector>

#include "cinv/io.hpp"

namespace cinv {

/// Built-in copy of data/example1_golden.json.
io::json default_golden();

struct GoldenCheck {
    std::string name;
    bool passed = false;
};

/// Recomputes every quantity stored in a golden document (index, rank,
/// minimal polynomial, both Drazin routes, complete inverse, closed form and
/// its inverse maps) and compares exactly. Throws ParseError when the
/// document itself is malformed.
std::vector<GoldenCheck> run_golden_suite(const io::json& golden);

}  // namespace cinv

#endif  // CINV_SELFTEST_HPP
