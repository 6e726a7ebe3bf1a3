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

#include "rational.hpp"

#include <cmath>
#include <stdexcept>

namespace qgt {

Rational rat_pow(const Rational& b, long e) {
    if (e == 0) return Rational(1);
    bool neg = e < 0;
    unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num().get_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den().get_mpz_t(), k);
    r.canonicalize();
    if (neg) {
        if (sgn(r) == 0) throw std::domain_error("rat_pow: 0 to negative power");
        r = 1 / r;
    }
    return r;
}

bool rat_is_perfect_square(const Rational& r, Rational* root) {
    if (sgn(r) < 0) return false;
    if (mpz_perfect_square_p(r.get_num().get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(r.get_den().get_mpz_t()) == 0) return false;
    if (root != nullptr) {
        Rational s;
        mpz_sqrt(s.get_num_mpz_t(), r.get_num().get_mpz_t());
        mpz_sqrt(s.get_den_mpz_t(), r.get_den().get_mpz_t());
        s.canonicalize();
        *root = s;
    }
    return true;
}

double rat_to_double(const Rational& r) {
    if (sgn(r) == 0) return 0.0;
    // mpq_get_d already truncates toward zero with correct over/underflow
    // behaviour for the exponents we hit, but compute via 2-exponent split
    // so schedule-scale values degrade to 0/inf instead of NaN.
    long exp_num = static_cast<long>(mpz_sizeinbase(r.get_num().get_mpz_t(), 2));
    long exp_den = static_cast<long>(mpz_sizeinbase(r.get_den().get_mpz_t(), 2));
    long shift = exp_num - exp_den;
    if (shift > 1100) return sgn(r) > 0 ? INFINITY : -INFINITY;
    if (shift < -1100) return 0.0;
    return mpq_get_d(r.get_mpq_t());
}

double rat_sqrt_double(const Rational& r, unsigned prec) {
    if (sgn(r) < 0) throw std::domain_error("rat_sqrt_double: negative radicand");
    if (sgn(r) == 0) return 0.0;
    mpf_class f(0, prec);
    mpf_set_q(f.get_mpf_t(), r.get_mpq_t());
    mpf_class s(0, prec);
    mpf_sqrt(s.get_mpf_t(), f.get_mpf_t());
    return mpf_get_d(s.get_mpf_t());
}

std::string rat_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::optional<Rational> rat_from_string(const std::string& num, const std::string& den) {
    Integer n, d;
    if (mpz_set_str(n.get_mpz_t(), num.c_str(), 10) != 0) return std::nullopt;
    if (mpz_set_str(d.get_mpz_t(), den.c_str(), 10) != 0) return std::nullopt;
    if (sgn(d) == 0) return std::nullopt;
    Rational r(n, d);
    r.canonicalize();
    return r;
}

CRational crat_div(const CRational& z, const CRational& w) {
    Rational n2 = w.norm2();
    if (sgn(n2) == 0) throw std::domain_error("crat_div: division by zero");
    CRational p = z * w.conj();
    return {p.re / n2, p.im / n2};
}

}  // namespace qgt
