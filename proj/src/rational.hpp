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

#ifndef QGT_RATIONAL_HPP
#define QGT_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace qgt {

using Integer = mpz_class;
using Rational = mpq_class;

// b^e with e possibly negative (b must be nonzero for e < 0).
Rational rat_pow(const Rational& b, long e);

// Exact test; writes the nonnegative root into *root when it exists.
bool rat_is_perfect_square(const Rational& r, Rational* root = nullptr);

// Saturating conversion. Values whose exponent exceeds the double range
// come back as 0 or +/-inf rather than garbage.
double rat_to_double(const Rational& r);

// Decimal value of sqrt(r) computed at `prec` bits, r >= 0.
double rat_sqrt_double(const Rational& r, unsigned prec = 256);

std::string rat_to_string(const Rational& r);
std::optional<Rational> rat_from_string(const std::string& num,
                                        const std::string& den);

// Complex number with exact rational parts.
struct CRational {
    Rational re;
    Rational im;

    CRational() = default;
    CRational(Rational r) : re(std::move(r)) {}
    CRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    CRational(long r) : re(r) {}

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    CRational conj() const { return {re, -im}; }
    Rational norm2() const { return re * re + im * im; }
    std::complex<double> to_complex() const {
        return {rat_to_double(re), rat_to_double(im)};
    }

    CRational operator+(const CRational& o) const { return {re + o.re, im + o.im}; }
    CRational operator-(const CRational& o) const { return {re - o.re, im - o.im}; }
    CRational operator-() const { return {-re, -im}; }
    CRational operator*(const CRational& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CRational& operator+=(const CRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    CRational& operator-=(const CRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    bool operator==(const CRational& o) const { return re == o.re && im == o.im; }
};

inline CRational operator*(const Rational& s, const CRational& z) {
    return {s * z.re, s * z.im};
}

// z / w for w != 0.
CRational crat_div(const CRational& z, const CRational& w);

}  // namespace qgt

#endif  // QGT_RATIONAL_HPP
