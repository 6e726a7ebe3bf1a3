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

// Step logarithm: the number of iterations of p <- p - ceil(p/q) needed to
// reach zero, together with its inverse sequence and the dual counting
// procedure that renders both as grouped digit strings.

#ifndef QGT_SLOG_HPP
#define QGT_SLOG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rational.hpp"

namespace qgt {

// slog(p, q) for p >= 0, q >= 2. Iterative; p may exceed any fixed width.
Integer slog(const Integer& p, const Integer& q);
uint64_t slog_u64(uint64_t p, uint64_t q);

// s_q(p): the largest argument reaching a given slog value in p steps.
// s_q(0) = 0, s_q(p) = s_q(p-1) + ceil((s_q(p-1)+1)/(q-1)).
Integer s_seq(const Integer& q, const Integer& p);

struct SlogTrace {
    Integer p;
    Integer q;
    Integer value;
    // p = p0 > p1 > ... > 0 with p_{t+1} = p_t - ceil(p_t/q).
    std::vector<Integer> subtract_path;
    // 0 = s0 < s1 < ..., s_{t+1} = s_t + ceil((s_t+1)/(q-1)), cut at >= p.
    std::vector<Integer> build_path;
    // Grouped digit strings in the dual-counting style; only rendered when
    // p and q are small enough to draw.
    std::string subtract_diagram;
    std::string build_diagram;
};

SlogTrace slog_trace(const Integer& p, const Integer& q);

// log_{q/(q-1)}(p) + 1, the asymptotic reference value.
double slog_asymptote(double p, double q);

}  // namespace qgt

#endif  // QGT_SLOG_HPP
