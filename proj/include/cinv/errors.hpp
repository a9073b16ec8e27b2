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

#ifndef CINV_ERRORS_HPP
#define CINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cinv {

/// Operand shapes do not fit the operation (non-square, mismatched sizes).
class DimensionError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input: rational literals, matrix documents, equation lists.
class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace cinv

#endif  // CINV_ERRORS_HPP
