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

#include "linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qgt {

CD vdot(const DVec& x, const DVec& y) {
    CD s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
    return s;
}

CRational vdot(const XCVec& x, const XCVec& y) {
    CRational s;
    for (size_t i = 0; i < x.size(); ++i) s += x[i].conj() * y[i];
    return s;
}

DVec matvec(const DMat& m, const DVec& v) {
    DVec out(m.rows, CD(0.0));
    for (int i = 0; i < m.rows; ++i) {
        CD s = 0.0;
        for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

XCVec matvec(const XMat& m, const XCVec& v) {
    XCVec out(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        CRational s;
        for (int j = 0; j < m.cols; ++j) {
            if (m.at(i, j).is_zero()) continue;
            s += m.at(i, j) * v[j];
        }
        out[i] = s;
    }
    return out;
}

double vnorm(const DVec& v) {
    double s = 0.0;
    for (const CD& z : v) s += std::norm(z);
    return std::sqrt(s);
}

std::pair<int, int> hermitian_defect(const DMat& m, double tol) {
    double scale = std::sqrt(m.frob_norm2());
    double bound = tol * std::max(1.0, scale);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = i; j < m.cols; ++j) {
            if (std::abs(m.at(i, j) - std::conj(m.at(j, i))) > bound) return {i, j};
        }
    }
    return {-1, -1};
}

std::pair<int, int> hermitian_defect(const XMat& m) {
    for (int i = 0; i < m.rows; ++i) {
        for (int j = i; j < m.cols; ++j) {
            if (!(m.at(i, j) == m.at(j, i).conj())) return {i, j};
        }
    }
    return {-1, -1};
}

DMat to_float(const XMat& m) {
    DMat out(m.rows, m.cols);
    for (size_t i = 0; i < m.a.size(); ++i) out.a[i] = m.a[i].to_complex();
    return out;
}

namespace {

double offdiag_norm2(const DMat& a) {
    double s = 0.0;
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            if (i != j) s += std::norm(a.at(i, j));
    return s;
}

void phase_fix(DVec& v) {
    for (CD& z : v) {
        if (std::abs(z) > 1e-8) {
            CD ph = z / std::abs(z);
            CD corr = std::conj(ph);
            for (CD& w : v) w *= corr;
            return;
        }
    }
}

}  // namespace

int orthonormalize(std::vector<DVec>& vs, double drop_tol) {
    std::vector<DVec> kept;
    for (DVec v : vs) {
        for (int pass = 0; pass < 2; ++pass) {
            for (const DVec& u : kept) {
                CD c = vdot(u, v);
                for (size_t i = 0; i < v.size(); ++i) v[i] -= c * u[i];
            }
        }
        double n = vnorm(v);
        if (n > drop_tol) {
            for (CD& z : v) z /= n;
            kept.push_back(std::move(v));
        }
    }
    vs = std::move(kept);
    return static_cast<int>(vs.size());
}

EighResult jacobi_eigh(const DMat& m, double tol) {
    if (m.rows != m.cols) throw std::invalid_argument("eigh: matrix must be square");
    auto defect = hermitian_defect(m, 1e-10);
    if (defect.first >= 0) {
        throw std::invalid_argument("eigh: input is not Hermitian at entry pair (" +
                                    std::to_string(defect.first) + "," +
                                    std::to_string(defect.second) + ")");
    }
    const int n = m.rows;
    DMat a = m;
    DMat v = DMat::identity(n);

    double scale2 = a.frob_norm2();
    double thresh2 = tol * tol * std::max(scale2, 1e-300);
    for (int sweep = 0; sweep < 60 && offdiag_norm2(a) > thresh2; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                CD apq = a.at(p, q);
                double mag = std::abs(apq);
                if (mag == 0.0) continue;
                double app = a.at(p, p).real();
                double aqq = a.at(q, q).real();
                CD phase = apq / mag;
                double tau = (aqq - app) / (2.0 * mag);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                CD sp = s * phase;  // complex sine
                // Columns p and q of A and V.
                for (int i = 0; i < n; ++i) {
                    CD aip = a.at(i, p), aiq = a.at(i, q);
                    a.at(i, p) = c * aip - std::conj(sp) * aiq;
                    a.at(i, q) = sp * aip + c * aiq;
                    CD vip = v.at(i, p), viq = v.at(i, q);
                    v.at(i, p) = c * vip - std::conj(sp) * viq;
                    v.at(i, q) = sp * vip + c * viq;
                }
                // Rows p and q of A.
                for (int j = 0; j < n; ++j) {
                    CD apj = a.at(p, j), aqj = a.at(q, j);
                    a.at(p, j) = c * apj - sp * aqj;
                    a.at(q, j) = std::conj(sp) * apj + c * aqj;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> d(n);
    for (int i = 0; i < n; ++i) d[i] = a.at(i, i).real();
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return d[x] > d[y]; });

    EighResult res;
    res.values.resize(n);
    res.vectors = DMat(n, n);
    for (int k = 0; k < n; ++k) {
        res.values[k] = d[order[k]];
        for (int i = 0; i < n; ++i) res.vectors.at(i, k) = v.at(i, order[k]);
    }

    // Deterministic basis inside (near-)degenerate clusters: project the
    // standard basis onto the cluster space and Gram-Schmidt in index order.
    double vscale = std::max(std::abs(res.values.front()), std::abs(res.values.back()));
    double cluster_tol = 1e-10 * std::max(vscale, 1e-300);
    int start = 0;
    while (start < n) {
        int end = start + 1;
        while (end < n && res.values[end - 1] - res.values[end] <= cluster_tol) ++end;
        int dim = end - start;
        std::vector<DVec> cols(dim, DVec(n));
        for (int k = 0; k < dim; ++k)
            for (int i = 0; i < n; ++i) cols[k][i] = res.vectors.at(i, start + k);
        if (dim > 1) {
            std::vector<DVec> proj;
            for (int e = 0; e < n && static_cast<int>(proj.size()) < dim; ++e) {
                DVec w(n, CD(0.0));
                for (const DVec& u : cols) {
                    CD coef = u[e];  // <u|e_e> conjugated: u[e] is <e|u>, want P e
                    for (int i = 0; i < n; ++i) w[i] += std::conj(coef) * u[i];
                }
                if (vnorm(w) > 1e-6) proj.push_back(std::move(w));
            }
            if (orthonormalize(proj) == dim) cols = std::move(proj);
        }
        for (DVec& u : cols) phase_fix(u);
        for (int k = 0; k < dim; ++k)
            for (int i = 0; i < n; ++i) res.vectors.at(i, start + k) = cols[k][i];
        start = end;
    }
    return res;
}

}  // namespace qgt
