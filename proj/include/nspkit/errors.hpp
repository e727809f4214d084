// Copyright (c) 2026 The nspkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace nspkit {

/// Numerical failure: an iterative scheme hit its cap, a factorization met a
/// rank-deficient input it cannot handle, or a combinatorial budget ran out.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested problem has no feasible point (e.g. y outside range(AD)).
class InfeasibleProblem : public std::runtime_error {
public:
    explicit InfeasibleProblem(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nspkit
