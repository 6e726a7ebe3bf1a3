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

// Exact arithmetic on quadratic surds: finite sums of c * sqrt(r1*...*rk)
// with c complex rational and each ri a registered positive rational.
// Radicands are kept factored as index sets over a RadTable; the product
// of two square roots of the same index folds back into the coefficient,
// so identities that hold term-by-term are decided exactly without any
// integer factoring.

#ifndef QGT_SURD_HPP
#define QGT_SURD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "rational.hpp"

namespace qgt {

// Registry of base radicands. Values are positive, pairwise ratios are
// never perfect squares (insert folds such coincidences into the scale).
class RadTable {
  public:
    struct Slot {
        Rational scale;             // sqrt(r) = scale * sqrt(value(idx))
        uint32_t idx = kRational;   // kRational when r itself is a square
    };
    static constexpr uint32_t kRational = UINT32_MAX;

    Slot insert(const Rational& r);
    const Rational& value(uint32_t i) const { return vals_[i]; }
    double sqrt_double(uint32_t i) const { return sqrts_[i]; }
    size_t size() const { return vals_.size(); }

  private:
    std::vector<Rational> vals_;
    std::vector<double> sqrts_;
};

struct SurdCtx {
    RadTable table;
};

// One surd term. `rad` is a sorted set of distinct RadTable indices;
// empty means the value is plain rational.
struct XEntry {
    CRational c;
    std::vector<uint32_t> rad;

    XEntry() = default;
    explicit XEntry(CRational coeff) : c(std::move(coeff)) {}
    XEntry(CRational coeff, std::vector<uint32_t> r) : c(std::move(coeff)), rad(std::move(r)) {}

    bool is_zero() const { return c.is_zero(); }
    XEntry conj() const { return {c.conj(), rad}; }
    XEntry negate() const { return {-c, rad}; }
};

XEntry make_entry(SurdCtx& ctx, CRational coeff, const Rational& radicand);
XEntry entry_mul(const SurdCtx& ctx, const XEntry& a, const XEntry& b);
double entry_to_double(const SurdCtx& ctx, const XEntry& e);
// |e|^2, exact (radicands pair out).
Rational entry_abs2(const SurdCtx& ctx, const XEntry& e);

// Accumulator for sums of surd terms; zero terms are elided so a sum of
// terms that cancel pairwise ends empty.
class SurdSum {
  public:
    void add(const XEntry& e);
    void add_mul(const SurdCtx& ctx, const XEntry& a, const XEntry& b);
    bool is_zero() const { return terms_.empty(); }
    // True when the sum has no irrational part; writes the value.
    bool rational_value(CRational* out) const;
    double to_double(const SurdCtx& ctx) const;
    size_t term_count() const { return terms_.size(); }
    const std::map<std::vector<uint32_t>, CRational>& terms() const { return terms_; }

  private:
    std::map<std::vector<uint32_t>, CRational> terms_;
};

}  // namespace qgt

#endif  // QGT_SURD_HPP
