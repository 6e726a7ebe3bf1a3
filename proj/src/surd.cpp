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

#include "surd.hpp"

#include <algorithm>
#include <stdexcept>

namespace qgt {

RadTable::Slot RadTable::insert(const Rational& r) {
    if (sgn(r) <= 0) throw std::domain_error("RadTable: radicand must be positive");
    Slot s;
    if (rat_is_perfect_square(r, &s.scale)) {
        s.idx = kRational;
        return s;
    }
    for (uint32_t i = 0; i < vals_.size(); ++i) {
        Rational ratio = r / vals_[i];
        Rational root;
        if (rat_is_perfect_square(ratio, &root)) {
            s.scale = root;
            s.idx = i;
            return s;
        }
    }
    vals_.push_back(r);
    sqrts_.push_back(rat_sqrt_double(r));
    s.scale = 1;
    s.idx = static_cast<uint32_t>(vals_.size() - 1);
    return s;
}

XEntry make_entry(SurdCtx& ctx, CRational coeff, const Rational& radicand) {
    if (coeff.is_zero()) return XEntry{};
    RadTable::Slot s = ctx.table.insert(radicand);
    XEntry e;
    e.c = s.scale * coeff;
    if (s.idx != RadTable::kRational) e.rad.push_back(s.idx);
    return e;
}

XEntry entry_mul(const SurdCtx& ctx, const XEntry& a, const XEntry& b) {
    XEntry out;
    out.c = a.c * b.c;
    if (out.c.is_zero()) return out;
    // Merge sorted index sets; shared indices fold to their value.
    size_t i = 0, j = 0;
    Rational fold(1);
    bool folded = false;
    while (i < a.rad.size() && j < b.rad.size()) {
        if (a.rad[i] == b.rad[j]) {
            fold *= ctx.table.value(a.rad[i]);
            folded = true;
            ++i;
            ++j;
        } else if (a.rad[i] < b.rad[j]) {
            out.rad.push_back(a.rad[i++]);
        } else {
            out.rad.push_back(b.rad[j++]);
        }
    }
    out.rad.insert(out.rad.end(), a.rad.begin() + i, a.rad.end());
    out.rad.insert(out.rad.end(), b.rad.begin() + j, b.rad.end());
    if (folded) out.c = fold * out.c;
    return out;
}

double entry_to_double(const SurdCtx& ctx, const XEntry& e) {
    double v = rat_to_double(e.c.re);
    for (uint32_t i : e.rad) v *= ctx.table.sqrt_double(i);
    return v;
}

Rational entry_abs2(const SurdCtx& ctx, const XEntry& e) {
    Rational v = e.c.norm2();
    for (uint32_t i : e.rad) v *= ctx.table.value(i);
    return v;
}

void SurdSum::add(const XEntry& e) {
    if (e.is_zero()) return;
    auto it = terms_.find(e.rad);
    if (it == terms_.end()) {
        terms_.emplace(e.rad, e.c);
        return;
    }
    it->second += e.c;
    if (it->second.is_zero()) terms_.erase(it);
}

void SurdSum::add_mul(const SurdCtx& ctx, const XEntry& a, const XEntry& b) {
    add(entry_mul(ctx, a, b));
}

bool SurdSum::rational_value(CRational* out) const {
    if (terms_.empty()) {
        if (out != nullptr) *out = CRational();
        return true;
    }
    if (terms_.size() == 1 && terms_.begin()->first.empty()) {
        if (out != nullptr) *out = terms_.begin()->second;
        return true;
    }
    return false;
}

double SurdSum::to_double(const SurdCtx& ctx) const {
    double acc_re = 0.0, acc_im = 0.0;
    for (const auto& [rad, c] : terms_) {
        double f = 1.0;
        for (uint32_t i : rad) f *= ctx.table.sqrt_double(i);
        acc_re += rat_to_double(c.re) * f;
        acc_im += rat_to_double(c.im) * f;
    }
    return std::abs(std::complex<double>(acc_re, acc_im));
}

}  // namespace qgt
