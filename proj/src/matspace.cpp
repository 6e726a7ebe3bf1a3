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

#include "matspace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qgt {

FSubspace fsub_from_vectors(int ambient, std::vector<DVec> raw, double drop_tol) {
    FSubspace s;
    s.ambient = ambient;
    orthonormalize(raw, drop_tol);
    s.basis = std::move(raw);
    return s;
}

FSubspace fsub_full(int ambient) {
    FSubspace s;
    s.ambient = ambient;
    for (int i = 0; i < ambient; ++i) {
        DVec e(ambient, CD(0.0));
        e[i] = 1.0;
        s.basis.push_back(std::move(e));
    }
    return s;
}

FSubspace fsub_coordinates(int ambient, const std::vector<int>& coords) {
    FSubspace s;
    s.ambient = ambient;
    for (int c : coords) {
        DVec e(ambient, CD(0.0));
        e[c] = 1.0;
        s.basis.push_back(std::move(e));
    }
    return s;
}

XSubspace xsub_coordinates(int ambient, const std::vector<int>& coords) {
    XSubspace s;
    s.ambient = ambient;
    for (int c : coords) {
        std::vector<XEntry> v(ambient);
        v[c] = XEntry(CRational(Rational(1)));
        s.basis.push_back(std::move(v));
    }
    return s;
}

namespace {

// True when every entry of the vector carries the same radicand set;
// extracts the rational coefficient vector and the shared set.
bool scaled_rational(const std::vector<XEntry>& v, XCVec* coeffs,
                     std::vector<uint32_t>* rad) {
    std::vector<uint32_t> shared;
    bool found = false;
    for (const XEntry& e : v) {
        if (e.is_zero()) continue;
        if (!found) {
            shared = e.rad;
            found = true;
        } else if (e.rad != shared) {
            return false;
        }
    }
    if (coeffs != nullptr) {
        coeffs->assign(v.size(), CRational());
        for (size_t i = 0; i < v.size(); ++i) (*coeffs)[i] = v[i].c;
    }
    if (rad != nullptr) *rad = shared;
    return true;
}

}  // namespace

std::vector<XCVec> orthogonalize_rational(const std::vector<XCVec>& raw) {
    std::vector<XCVec> dirs;
    for (XCVec v : raw) {
        for (const XCVec& u : dirs) {
            CRational num = vdot(u, v);
            if (num.is_zero()) continue;
            CRational coef = crat_div(num, CRational(vdot(u, u).re));
            for (size_t i = 0; i < v.size(); ++i) v[i] -= coef * u[i];
        }
        bool zero = true;
        for (const CRational& z : v) {
            if (!z.is_zero()) {
                zero = false;
                break;
            }
        }
        if (!zero) dirs.push_back(std::move(v));
    }
    return dirs;
}

XSubspace xsub_from_rational(int ambient, const std::vector<XCVec>& raw) {
    XSubspace s;
    s.ambient = ambient;
    for (const XCVec& dir : orthogonalize_rational(raw)) {
        Rational n2 = vdot(dir, dir).re;
        std::vector<XEntry> v(ambient);
        // dir / sqrt(n2): attach radicand 1/n2 to every entry.
        for (int i = 0; i < ambient; ++i) {
            if (dir[i].is_zero()) continue;
            v[i] = make_entry(*s.ctx, dir[i], 1 / n2);
        }
        s.basis.push_back(std::move(v));
    }
    return s;
}

XSubspace xsub_full(int ambient) {
    std::vector<int> coords(ambient);
    std::iota(coords.begin(), coords.end(), 0);
    return xsub_coordinates(ambient, coords);
}

FSubspace to_float(const XSubspace& s) {
    FSubspace f;
    f.ambient = s.ambient;
    for (const auto& v : s.basis) {
        DVec w(s.ambient, CD(0.0));
        for (int i = 0; i < s.ambient; ++i) {
            double mag = 1.0;
            for (uint32_t r : v[i].rad) mag *= s.ctx->table.sqrt_double(r);
            w[i] = v[i].c.to_complex() * mag;
        }
        f.basis.push_back(std::move(w));
    }
    orthonormalize(f.basis, 1e-12);
    return f;
}

DMat project(const FSubspace& s) {
    DMat p(s.ambient, s.ambient);
    for (const DVec& v : s.basis) {
        for (int i = 0; i < s.ambient; ++i) {
            if (v[i] == CD(0.0)) continue;
            for (int j = 0; j < s.ambient; ++j) {
                p.at(i, j) += v[i] * std::conj(v[j]);
            }
        }
    }
    return p;
}

XMat project(const XSubspace& s) {
    XMat p(s.ambient, s.ambient);
    for (const auto& v : s.basis) {
        XCVec c;
        std::vector<uint32_t> rad;
        if (!scaled_rational(v, &c, &rad)) {
            throw std::invalid_argument(
                "project: exact projection needs scaled-rational basis vectors");
        }
        Rational radval(1);
        for (uint32_t r : rad) radval *= s.ctx->table.value(r);
        Rational n2 = vdot(c, c).re * radval;
        if (sgn(n2) == 0) continue;
        for (int i = 0; i < s.ambient; ++i) {
            if (c[i].is_zero()) continue;
            CRational ci = (radval / n2) * c[i];
            for (int j = 0; j < s.ambient; ++j) {
                p.at(i, j) += ci * c[j].conj();
            }
        }
    }
    return p;
}

FSubspace complement(const FSubspace& s) {
    // Residuals of the standard basis against S, orthonormalized in order.
    std::vector<DVec> cand;
    for (int e = 0; e < s.ambient; ++e) {
        DVec v(s.ambient, CD(0.0));
        v[e] = 1.0;
        for (const DVec& u : s.basis) {
            CD c = vdot(u, v);
            for (int i = 0; i < s.ambient; ++i) v[i] -= c * u[i];
        }
        cand.push_back(std::move(v));
    }
    FSubspace out;
    out.ambient = s.ambient;
    orthonormalize(cand, 1e-9);
    while (static_cast<int>(cand.size()) > s.ambient - s.dim()) cand.pop_back();
    out.basis = std::move(cand);
    return out;
}

XSubspace complement(const XSubspace& s) {
    // Solve <v_k | x> = 0 for all basis vectors; radicand scales drop out.
    XMat sys(s.dim(), s.ambient);
    for (int k = 0; k < s.dim(); ++k) {
        XCVec c;
        if (!scaled_rational(s.basis[k], &c, nullptr)) {
            throw std::invalid_argument(
                "complement: exact complement needs scaled-rational basis vectors");
        }
        for (int j = 0; j < s.ambient; ++j) sys.at(k, j) = c[j].conj();
    }
    std::vector<XCVec> null = nullspace(sys);
    return xsub_from_rational(s.ambient, null);
}

FSubspace intersect(const FSubspace& a, const FSubspace& b, double tol) {
    if (a.ambient != b.ambient) {
        throw std::invalid_argument("intersect: ambient dimension mismatch");
    }
    // x in A iff P_A x = x; stack the two residual maps and take the
    // numerical nullspace via the eigenvectors of R*R.
    DMat pa = project(a), pb = project(b);
    DMat id = DMat::identity(a.ambient);
    DMat ra = id - pa, rb = id - pb;
    DMat q = ra.adjoint() * ra + rb.adjoint() * rb;
    EighResult e = jacobi_eigh(q);
    FSubspace out;
    out.ambient = a.ambient;
    for (int k = a.ambient - 1; k >= 0; --k) {
        if (e.values[k] <= tol) {
            DVec v(a.ambient);
            for (int i = 0; i < a.ambient; ++i) v[i] = e.vectors.at(i, k);
            out.basis.push_back(std::move(v));
        }
    }
    orthonormalize(out.basis, 1e-12);
    return out;
}

XSubspace intersect(const XSubspace& a, const XSubspace& b) {
    if (a.ambient != b.ambient) {
        throw std::invalid_argument("intersect: ambient dimension mismatch");
    }
    int n = a.ambient;
    XMat pa = project(a), pb = project(b);
    XMat sys(2 * n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            CRational d1 = (i == j ? CRational(Rational(1)) : CRational()) - pa.at(i, j);
            CRational d2 = (i == j ? CRational(Rational(1)) : CRational()) - pb.at(i, j);
            sys.at(i, j) = d1;
            sys.at(n + i, j) = d2;
        }
    }
    return xsub_from_rational(n, nullspace(sys));
}

double rayleigh(const DMat& a, const DVec& x) {
    double n = vnorm(x);
    if (n == 0.0) throw std::invalid_argument("rayleigh: zero vector");
    DVec ax = matvec(a, x);
    return (vdot(x, ax) / (n * n)).real();
}

Rational rayleigh(const XMat& a, const XCVec& x) {
    CRational n2 = vdot(x, x);
    if (sgn(n2.re) == 0) throw std::invalid_argument("rayleigh: zero vector");
    XCVec ax = matvec(a, x);
    return vdot(x, ax).re / n2.re;
}

DiagEigh eigh_diagonal(const XMat& m) {
    if (m.rows != m.cols) throw std::invalid_argument("eigh_diagonal: square input required");
    auto defect = hermitian_defect(m);
    if (defect.first >= 0) {
        throw std::invalid_argument("eigh_diagonal: input is not Hermitian at entry pair (" +
                                    std::to_string(defect.first) + "," +
                                    std::to_string(defect.second) + ")");
    }
    if (!m.is_diagonal()) {
        throw std::invalid_argument(
            "eigh_diagonal: exact eigendecomposition supports diagonal matrices; "
            "use the floating backend otherwise");
    }
    DiagEigh out;
    out.perm.resize(m.rows);
    std::iota(out.perm.begin(), out.perm.end(), 0);
    std::stable_sort(out.perm.begin(), out.perm.end(), [&](int x, int y) {
        return m.at(x, x).re > m.at(y, y).re;
    });
    for (int i : out.perm) out.values.push_back(m.at(i, i).re);
    return out;
}

std::vector<XCVec> nullspace(const XMat& m) {
    int rows = m.rows, cols = m.cols;
    XMat r = m;
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int sel = -1;
        for (int i = row; i < rows; ++i) {
            if (!r.at(i, col).is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != row) {
            for (int j = 0; j < cols; ++j) std::swap(r.at(sel, j), r.at(row, j));
        }
        CRational inv = crat_div(CRational(Rational(1)), r.at(row, col));
        for (int j = col; j < cols; ++j) r.at(row, j) = inv * r.at(row, j);
        for (int i = 0; i < rows; ++i) {
            if (i == row || r.at(i, col).is_zero()) continue;
            CRational f = r.at(i, col);
            for (int j = col; j < cols; ++j) r.at(i, j) -= f * r.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<XCVec> basis;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        XCVec v(cols);
        v[free] = CRational(Rational(1));
        for (size_t k = 0; k < pivot_col.size(); ++k) {
            v[pivot_col[k]] = -r.at(static_cast<int>(k), free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank(const XMat& m) {
    return m.cols - static_cast<int>(nullspace(m).size());
}

}  // namespace qgt
