// SPDX-License-Identifier: Apache-2.0
//
// relay-mi: asymptotic mutual-information statistics of two-hop AF MIMO relay channels
// Copyright (C) 2026 The relay-mi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef relaymi_errors_H
#define relaymi_errors_H

#include <stdexcept>
#include <string>

namespace relaymi
{

    // Input failed a structural or domain invariant; message names the invariant.
    struct ValidationError : std::runtime_error
    {
        explicit ValidationError(const std::string &msg) : std::runtime_error(msg) {}
    };

    // Text input rejected; carries the 1-based line number of the offending line.
    struct ParseError : std::runtime_error
    {
        int line;
        ParseError(int line_no, const std::string &msg)
            : std::runtime_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
    };

    // A matrix operation left the numeric domain (not PD, singular, NaN).
    struct NumericError : std::runtime_error
    {
        explicit NumericError(const std::string &msg) : std::runtime_error(msg) {}
    };

    // Fixed-point iteration exhausted its budget; carries the last residual.
    struct ConvergenceError : std::runtime_error
    {
        double residual;
        ConvergenceError(const std::string &msg, double last_residual)
            : std::runtime_error(msg + " (last residual " + std::to_string(last_residual) + ")"),
              residual(last_residual) {}
    };

} // namespace relaymi

#endif
