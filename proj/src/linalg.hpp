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

#ifndef QGT_LINALG_HPP
#define QGT_LINALG_HPP

#include <complex>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace qgt {

using CD = std::complex<double>;

inline CD scal_conj(const CD& z) { return std::conj(z); }
inline CRational scal_conj(const CRational& z) { return z.conj(); }
inline double scal_abs2(const CD& z) { return std::norm(z); }
inline Rational scal_abs2(const CRational& z) { return z.norm2(); }
inline bool scal_is_zero(const CD& z) { return z == CD(0.0, 0.0); }
inline bool scal_is_zero(const CRational& z) { return z.is_zero(); }
inline CD scal_one(const CD*) { return CD(1.0, 0.0); }
inline CRational scal_one(const CRational*) { return CRational(Rational(1)); }

// Dense row-major matrix over complex doubles or complex rationals.
template <class T>
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<T> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    T& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const T& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = scal_one(static_cast<const T*>(nullptr));
        return m;
    }

    Mat adjoint() const {
        Mat m(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(j, i) = scal_conj(at(i, j));
        return m;
    }

    Mat operator*(const Mat& o) const {
        if (cols != o.rows) throw std::invalid_argument("Mat: shape mismatch in product");
        Mat m(rows, o.cols);
        for (int i = 0; i < rows; ++i) {
            for (int k = 0; k < cols; ++k) {
                const T& x = at(i, k);
                if (scal_is_zero(x)) continue;
                for (int j = 0; j < o.cols; ++j) {
                    m.at(i, j) += x * o.at(k, j);
                }
            }
        }
        return m;
    }

    Mat operator+(const Mat& o) const {
        Mat m(rows, cols);
        for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] + o.a[i];
        return m;
    }

    Mat operator-(const Mat& o) const {
        Mat m(rows, cols);
        for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] - o.a[i];
        return m;
    }

    Mat scaled(const T& s) const {
        Mat m(rows, cols);
        for (size_t i = 0; i < a.size(); ++i) m.a[i] = a[i] * s;
        return m;
    }

    T trace() const {
        T t{};
        for (int i = 0; i < rows && i < cols; ++i) t += at(i, i);
        return t;
    }

    Mat tensor(const Mat& o) const {
        Mat m(rows * o.rows, cols * o.cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) {
                if (scal_is_zero(at(i, j))) continue;
                for (int k = 0; k < o.rows; ++k)
                    for (int l = 0; l < o.cols; ++l)
                        m.at(i * o.rows + k, j * o.cols + l) = at(i, j) * o.at(k, l);
            }
        return m;
    }

    auto frob_norm2() const {
        decltype(scal_abs2(a[0])) s{};
        for (const T& x : a) s += scal_abs2(x);
        return s;
    }

    bool is_diagonal() const {
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (i != j && !scal_is_zero(at(i, j))) return false;
        return true;
    }
};

using DMat = Mat<CD>;
using XMat = Mat<CRational>;

using DVec = std::vector<CD>;
using XCVec = std::vector<CRational>;

// <x|y>, conjugate linear in the first argument.
CD vdot(const DVec& x, const DVec& y);
CRational vdot(const XCVec& x, const XCVec& y);
DVec matvec(const DMat& m, const DVec& v);
XCVec matvec(const XMat& m, const XCVec& v);
double vnorm(const DVec& v);

// Index of the first Hermiticity violation, or {-1,-1}.
std::pair<int, int> hermitian_defect(const DMat& m, double tol);
std::pair<int, int> hermitian_defect(const XMat& m);

XMat xmat_from(const DMat&) = delete;  // never silently promote floats
DMat to_float(const XMat& m);

struct EighResult {
    std::vector<double> values;  // descending
    DMat vectors;                // columns are eigenvectors
};

// Cyclic Jacobi for complex Hermitian matrices. Deterministic output:
// eigenvalues sorted descending; inside a degenerate cluster the basis is
// rebuilt by Gram-Schmidt over standard basis projections, and every
// vector's first significant entry is made real positive.
EighResult jacobi_eigh(const DMat& m, double tol = 1e-13);

// In-place modified Gram-Schmidt; drops vectors with residual norm below
// drop_tol and returns the surviving count.
int orthonormalize(std::vector<DVec>& vs, double drop_tol = 1e-9);

}  // namespace qgt

#endif  // QGT_LINALG_HPP
