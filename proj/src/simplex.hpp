// Copyright 2026 The qgt authors
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

#ifndef QGT_SIMPLEX_HPP
#define QGT_SIMPLEX_HPP

#include <optional>
#include <vector>

#include "rational.hpp"

namespace qgt {

// Exact phase-1 simplex: finds x >= 0 with A x = b, or reports that none
// exists. Bland's rule, so it terminates on degenerate systems.
std::optional<std::vector<Rational>> lp_feasible(
    const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b);

}  // namespace qgt

#endif  // QGT_SIMPLEX_HPP
