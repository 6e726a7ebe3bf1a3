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

#include "slog.hpp"

#include <cmath>
#include <stdexcept>

namespace qgt {

namespace {

void check_args(const Integer& p, const Integer& q) {
    if (p < 0) throw std::invalid_argument("slog: p must be nonnegative");
    if (q < 2) throw std::invalid_argument("slog: q must be at least 2");
}

Integer ceil_div(const Integer& a, const Integer& b) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace

Integer slog(const Integer& p, const Integer& q) {
    check_args(p, q);
    if (mpz_fits_ulong_p(p.get_mpz_t()) && mpz_fits_ulong_p(q.get_mpz_t())) {
        return Integer(static_cast<unsigned long>(slog_u64(p.get_ui(), q.get_ui())));
    }
    Integer cur = p;
    Integer steps = 0;
    while (cur > 0) {
        cur -= ceil_div(cur, q);
        ++steps;
    }
    return steps;
}

uint64_t slog_u64(uint64_t p, uint64_t q) {
    if (q < 2) throw std::invalid_argument("slog: q must be at least 2");
    uint64_t steps = 0;
    while (p > 0) {
        p -= (p + q - 1) / q;
        ++steps;
    }
    return steps;
}

Integer s_seq(const Integer& q, const Integer& p) {
    check_args(p, q);
    Integer s = 0;
    Integer qm1 = q - 1;
    for (Integer t = 0; t < p; ++t) {
        s += ceil_div(s + 1, qm1);
    }
    return s;
}

namespace {

// Positions 1..p carry digit ceil(pos/rep). Renders the groups given by
// consecutive position ranges, space separated, provided every digit is a
// single character.
std::string render_groups(const Integer& p, const Integer& rep,
                          const std::vector<Integer>& sizes) {
    if (!mpz_fits_ulong_p(p.get_mpz_t())) return "";
    unsigned long pl = p.get_ui();
    unsigned long repl = rep.get_ui();
    if (repl == 0 || (pl + repl - 1) / repl > 9) return "";
    std::string out;
    unsigned long pos = 1;
    for (const Integer& gz : sizes) {
        if (!out.empty()) out += ' ';
        unsigned long g = gz.get_ui();
        for (unsigned long k = 0; k < g && pos <= pl; ++k, ++pos) {
            out += static_cast<char>('0' + (pos + repl - 1) / repl);
        }
    }
    return out;
}

}  // namespace

SlogTrace slog_trace(const Integer& p, const Integer& q) {
    check_args(p, q);
    SlogTrace tr;
    tr.p = p;
    tr.q = q;

    Integer cur = p;
    tr.subtract_path.push_back(cur);
    while (cur > 0) {
        cur -= ceil_div(cur, q);
        tr.subtract_path.push_back(cur);
    }
    tr.value = Integer(static_cast<unsigned long>(tr.subtract_path.size() - 1));

    Integer s = 0;
    tr.build_path.push_back(s);
    while (s < p) {
        s += ceil_div(s + 1, q - 1);
        tr.build_path.push_back(s);
    }

    // Subtract groups, drawn right to left: sizes ceil(p_t/q), smallest last.
    std::vector<Integer> sub_sizes;
    for (size_t t = 0; t + 1 < tr.subtract_path.size(); ++t) {
        sub_sizes.push_back(tr.subtract_path[t] - tr.subtract_path[t + 1]);
    }
    std::vector<Integer> sub_left(sub_sizes.rbegin(), sub_sizes.rend());
    tr.subtract_diagram = render_groups(p, q, sub_left);

    // Build groups, drawn left to right; the last group is cut at p.
    std::vector<Integer> build_sizes;
    for (size_t t = 0; t + 1 < tr.build_path.size(); ++t) {
        Integer next = tr.build_path[t + 1];
        if (next > p) next = p;
        build_sizes.push_back(next - tr.build_path[t]);
    }
    tr.build_diagram = render_groups(p, q - 1, build_sizes);

    return tr;
}

double slog_asymptote(double p, double q) {
    if (p < 1) throw std::invalid_argument("slog_asymptote: p must be >= 1");
    return std::log(p) / std::log(q / (q - 1.0)) + 1.0;
}

}  // namespace qgt
