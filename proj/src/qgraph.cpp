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

#include "qgraph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qgt {

bool QuantumGraph::diagonal() const {
    if (mode == Mode::exact) {
        for (const XMat& m : xbasis)
            if (!m.is_diagonal()) return false;
        return true;
    }
    for (const DMat& m : fbasis)
        if (!m.is_diagonal()) return false;
    return true;
}

namespace {

std::vector<double> real_coords(const DMat& m) {
    std::vector<double> v;
    v.reserve(m.a.size() * 2);
    for (const CD& z : m.a) {
        v.push_back(z.real());
        v.push_back(z.imag());
    }
    return v;
}

std::vector<Rational> real_coords(const XMat& m) {
    std::vector<Rational> v;
    v.reserve(m.a.size() * 2);
    for (const CRational& z : m.a) {
        v.push_back(z.re);
        v.push_back(z.im);
    }
    return v;
}

// Incremental real-linear independence filter over rationals.
class ExactRowFilter {
  public:
    bool offer(std::vector<Rational> row) {
        for (const auto& [col, r] : rows_) {
            if (sgn(row[col]) == 0) continue;
            Rational f = row[col] / r[col];
            for (size_t j = 0; j < row.size(); ++j) row[j] -= f * r[j];
        }
        for (size_t j = 0; j < row.size(); ++j) {
            if (sgn(row[j]) != 0) {
                rows_.emplace_back(j, std::move(row));
                return true;
            }
        }
        return false;
    }

  private:
    std::vector<std::pair<size_t, std::vector<Rational>>> rows_;
};

// Floating counterpart; accepts when the residual after projecting out the
// kept span is at least tol relative to the candidate's own norm.
class FloatRowFilter {
  public:
    explicit FloatRowFilter(double tol) : tol_(tol) {}

    bool offer(std::vector<double> row) {
        double n0 = norm(row);
        if (n0 == 0.0) return false;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& u : rows_) {
                double c = dot(u, row);
                for (size_t j = 0; j < row.size(); ++j) row[j] -= c * u[j];
            }
        }
        double n1 = norm(row);
        if (n1 <= tol_ * n0) return false;
        for (double& x : row) x /= n1;
        rows_.push_back(std::move(row));
        return true;
    }

  private:
    static double dot(const std::vector<double>& a, const std::vector<double>& b) {
        double s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    }
    static double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }
    double tol_;
    std::vector<std::vector<double>> rows_;
};

}  // namespace

ValidationReport validate(const QuantumGraph& g, double tol) {
    ValidationReport rep;
    rep.n = g.n;
    rep.valence = g.valence();
    auto fail = [&rep](std::string msg) {
        rep.ok = false;
        rep.violations.push_back(std::move(msg));
    };
    int k = g.basis_size();
    if (g.n <= 0) fail("vertex dimension must be positive");
    if (k == 0) {
        fail("edge basis is empty");
        return rep;
    }
    if (g.mode == Mode::exact) {
        for (int idx = 0; idx < k; ++idx) {
            const XMat& m = g.xbasis[idx];
            if (m.rows != g.n || m.cols != g.n) {
                fail("basis element " + std::to_string(idx) + " has wrong shape");
                continue;
            }
            auto d = hermitian_defect(m);
            if (d.first >= 0) {
                fail("basis element " + std::to_string(idx) + " not Hermitian at (" +
                     std::to_string(d.first) + "," + std::to_string(d.second) + ")");
            }
        }
        if (rep.ok && !((g.xbasis[0] - XMat::identity(g.n)).frob_norm2() == 0)) {
            fail("basis element 0 is not the identity");
        }
        if (rep.ok) {
            ExactRowFilter filter;
            for (int idx = 0; idx < k; ++idx) {
                if (!filter.offer(real_coords(g.xbasis[idx]))) {
                    fail("basis element " + std::to_string(idx) +
                         " is linearly dependent on earlier elements");
                }
            }
        }
    } else {
        for (int idx = 0; idx < k; ++idx) {
            const DMat& m = g.fbasis[idx];
            if (m.rows != g.n || m.cols != g.n) {
                fail("basis element " + std::to_string(idx) + " has wrong shape");
                continue;
            }
            auto d = hermitian_defect(m, tol);
            if (d.first >= 0) {
                fail("basis element " + std::to_string(idx) + " not Hermitian at (" +
                     std::to_string(d.first) + "," + std::to_string(d.second) + ")");
            }
        }
        if (rep.ok &&
            std::sqrt((g.fbasis[0] - DMat::identity(g.n)).frob_norm2()) > tol * g.n) {
            fail("basis element 0 is not the identity");
        }
        if (rep.ok) {
            FloatRowFilter filter(1e-9);
            for (int idx = 0; idx < k; ++idx) {
                if (!filter.offer(real_coords(g.fbasis[idx]))) {
                    fail("basis element " + std::to_string(idx) +
                         " is linearly dependent on earlier elements");
                }
            }
        }
    }
    return rep;
}

QuantumGraph induced_subgraph(const QuantumGraph& g, const FSubspace& s, double tol) {
    if (s.dim() == 0) throw std::invalid_argument("induced_subgraph: zero subspace");
    const QuantumGraph gf = g.mode == Mode::exact ? to_float(g) : g;
    int r = s.dim();
    QuantumGraph out;
    out.mode = Mode::floating;
    out.n = r;
    out.metadata = gf.metadata;
    out.fbasis.push_back(DMat::identity(r));
    FloatRowFilter filter(tol);
    filter.offer(real_coords(out.fbasis[0]));
    for (int idx = 0; idx < gf.basis_size(); ++idx) {
        const DMat& a = gf.fbasis[idx];
        DMat b(r, r);
        std::vector<DVec> av(r);
        for (int j = 0; j < r; ++j) av[j] = matvec(a, s.basis[j]);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) b.at(i, j) = vdot(s.basis[i], av[j]);
        DMat bh = (b + b.adjoint()).scaled(CD(0.5));
        if (filter.offer(real_coords(bh))) out.fbasis.push_back(std::move(bh));
    }
    return out;
}

QuantumGraph induced_subgraph_exact(const QuantumGraph& g, const XSubspace& s) {
    if (g.mode != Mode::exact) {
        throw std::invalid_argument("induced_subgraph_exact: graph is not exact");
    }
    if (s.dim() == 0) throw std::invalid_argument("induced_subgraph: zero subspace");
    int r = s.dim();
    QuantumGraph out;
    out.mode = Mode::exact;
    out.n = r;
    out.metadata = g.metadata;
    out.xbasis.push_back(XMat::identity(r));
    ExactRowFilter filter;
    filter.offer(real_coords(out.xbasis[0]));
    for (const XMat& a : g.xbasis) {
        XMat b(r, r);
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                SurdSum acc;
                for (int p = 0; p < g.n; ++p) {
                    if (s.basis[i][p].is_zero()) continue;
                    for (int q = 0; q < g.n; ++q) {
                        if (a.at(p, q).is_zero() || s.basis[j][q].is_zero()) continue;
                        XEntry t = entry_mul(*s.ctx, s.basis[i][p].conj(), s.basis[j][q]);
                        t.c = a.at(p, q) * t.c;
                        acc.add(t);
                    }
                }
                CRational v;
                if (!acc.rational_value(&v)) {
                    throw std::invalid_argument(
                        "induced_subgraph_exact: compression leaves the rational field; "
                        "use the floating backend");
                }
                b.at(i, j) = v;
            }
        }
        if (filter.offer(real_coords(b))) out.xbasis.push_back(std::move(b));
    }
    return out;
}

QuantumGraph from_classical(const Adjacency& adj) {
    int q = static_cast<int>(adj.size());
    if (q == 0) throw std::invalid_argument("from_classical: empty adjacency");
    for (int i = 0; i < q; ++i) {
        if (static_cast<int>(adj[i].size()) != q) {
            throw std::invalid_argument("from_classical: adjacency is not square");
        }
        for (int j = 0; j < q; ++j) {
            if (adj[i][j] != adj[j][i]) {
                throw std::invalid_argument("from_classical: adjacency is not symmetric");
            }
        }
    }
    QuantumGraph g;
    g.mode = Mode::exact;
    g.n = q;
    g.metadata = "classical";
    g.xbasis.push_back(XMat::identity(q));
    // Self loops ride on the identity; each proper edge contributes its
    // symmetric and antisymmetric Hermitian pair.
    for (int a = 0; a < q; ++a) {
        for (int b = a + 1; b < q; ++b) {
            if (!adj[a][b]) continue;
            XMat sym(q, q), asym(q, q);
            sym.at(a, b) = CRational(Rational(1));
            sym.at(b, a) = CRational(Rational(1));
            asym.at(a, b) = CRational(Rational(0), Rational(1));
            asym.at(b, a) = CRational(Rational(0), Rational(-1));
            g.xbasis.push_back(std::move(sym));
            g.xbasis.push_back(std::move(asym));
        }
    }
    return g;
}

QuantumGraph tensor_product(const QuantumGraph& g, const QuantumGraph& h) {
    if (g.mode != h.mode) {
        throw std::invalid_argument("tensor_product: mixed exact/floating operands");
    }
    QuantumGraph out;
    out.mode = g.mode;
    out.n = g.n * h.n;
    if (g.mode == Mode::exact) {
        ExactRowFilter filter;
        for (const XMat& a : g.xbasis) {
            for (const XMat& b : h.xbasis) {
                XMat t = a.tensor(b);
                if (filter.offer(real_coords(t))) out.xbasis.push_back(std::move(t));
            }
        }
    } else {
        FloatRowFilter filter(1e-9);
        for (const DMat& a : g.fbasis) {
            for (const DMat& b : h.fbasis) {
                DMat t = a.tensor(b);
                if (filter.offer(real_coords(t))) out.fbasis.push_back(std::move(t));
            }
        }
    }
    return out;
}

double NormalSampler::next() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = 0.0, u2 = 0.0;
    do {
        u1 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    } while (u1 <= 0.0);
    u2 = static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
}

uint64_t NormalSampler::next_u64() {
    // splitmix64, pinned so seeds mean the same thing on every platform.
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

QuantumGraph random_graph(int n, int m, uint64_t seed) {
    if (n <= 0) throw std::invalid_argument("random_graph: n must be positive");
    if (m < 0 || m > n * n - 1) {
        throw std::invalid_argument("random_graph: m out of range [0, n^2-1]");
    }
    QuantumGraph g;
    g.mode = Mode::floating;
    g.n = n;
    g.metadata = "random";
    g.fbasis.push_back(DMat::identity(n));
    NormalSampler rng(seed);
    FloatRowFilter filter(1e-9);
    filter.offer(real_coords(g.fbasis[0]));
    while (g.valence() < m) {
        DMat raw(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) raw.at(i, j) = CD(rng.next(), rng.next());
        DMat h = (raw + raw.adjoint()).scaled(CD(0.5));
        if (filter.offer(real_coords(h))) g.fbasis.push_back(std::move(h));
    }
    return g;
}

SlopeReport slope(const QuantumGraph& g, const FSubspace& s) {
    if (s.dim() == 0) throw std::invalid_argument("slope: zero subspace");
    const QuantumGraph gf = g.mode == Mode::exact ? to_float(g) : g;
    SlopeReport rep;
    rep.mode = Mode::floating;
    DMat p = project(s);
    int dim = s.dim();
    for (int idx = 0; idx < gf.basis_size(); ++idx) {
        DMat pap = p * gf.fbasis[idx] * p;
        double eps = pap.trace().real() / dim;
        rep.slopes.push_back(eps);
        double res = std::sqrt((pap - p.scaled(CD(eps))).frob_norm2());
        if (res > rep.residual) {
            rep.residual = res;
            rep.worst_index = idx;
        }
    }
    return rep;
}

SlopeReport slope_exact(const QuantumGraph& g, const XSubspace& s) {
    if (g.mode != Mode::exact) throw std::invalid_argument("slope_exact: graph is not exact");
    if (s.dim() == 0) throw std::invalid_argument("slope: zero subspace");
    const int r = s.dim();
    SlopeReport rep;
    rep.mode = Mode::exact;
    rep.exact_zero = true;

    // With an orthonormal basis the compressed-form residual equals the
    // projector-form residual, so insist on Gram = I first.
    for (int i = 0; i < r; ++i) {
        for (int j = i; j < r; ++j) {
            SurdSum acc;
            for (int p = 0; p < g.n; ++p) {
                if (s.basis[i][p].is_zero() || s.basis[j][p].is_zero()) continue;
                acc.add_mul(*s.ctx, s.basis[i][p].conj(), s.basis[j][p]);
            }
            if (i == j) acc.add(XEntry(CRational(Rational(-1))));
            if (!acc.is_zero()) {
                throw std::invalid_argument("slope_exact: basis is not orthonormal");
            }
        }
    }

    for (int idx = 0; idx < g.basis_size(); ++idx) {
        const XMat& a = g.xbasis[idx];
        std::vector<SurdSum> m(static_cast<size_t>(r) * r);
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                SurdSum& acc = m[static_cast<size_t>(i) * r + j];
                for (int p = 0; p < g.n; ++p) {
                    if (s.basis[i][p].is_zero()) continue;
                    for (int q = 0; q < g.n; ++q) {
                        if (a.at(p, q).is_zero() || s.basis[j][q].is_zero()) continue;
                        XEntry t = entry_mul(*s.ctx, s.basis[i][p].conj(), s.basis[j][q]);
                        t.c = a.at(p, q) * t.c;
                        acc.add(t);
                    }
                }
            }
        }
        SurdSum trace;
        for (int i = 0; i < r; ++i)
            for (const auto& [rad, c] : m[static_cast<size_t>(i) * r + i].terms())
                trace.add(XEntry(c, rad));
        CRational tr;
        bool rational_trace = trace.rational_value(&tr);
        Rational eps = rational_trace ? tr.re / r : Rational(0);
        rep.slopes_q.push_back(eps);
        rep.slopes.push_back(rational_trace ? rat_to_double(eps)
                                            : trace.to_double(*s.ctx) / r);

        double res2 = 0.0;
        bool zero = rational_trace;
        for (int i = 0; i < r; ++i) {
            for (int j = 0; j < r; ++j) {
                SurdSum d = m[static_cast<size_t>(i) * r + j];
                if (i == j) d.add(XEntry(CRational(-eps)));
                if (!d.is_zero()) {
                    zero = false;
                    double v = d.to_double(*s.ctx);
                    res2 += v * v;
                }
            }
        }
        if (!zero) {
            rep.exact_zero = false;
            double res = std::sqrt(res2);
            if (res >= rep.residual) {
                rep.residual = res;
                rep.worst_index = idx;
            }
        }
    }
    if (rep.exact_zero) rep.residual = 0.0;
    return rep;
}

QuantumGraph to_float(const QuantumGraph& g) {
    if (g.mode == Mode::floating) return g;
    QuantumGraph out;
    out.mode = Mode::floating;
    out.n = g.n;
    out.metadata = g.metadata;
    out.ref_json = g.ref_json;
    for (const XMat& m : g.xbasis) out.fbasis.push_back(qgt::to_float(m));
    return out;
}

bool all_commute(const QuantumGraph& g, double tol) {
    int k = g.basis_size();
    if (g.mode == Mode::exact) {
        for (int i = 1; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                XMat c = g.xbasis[i] * g.xbasis[j] - g.xbasis[j] * g.xbasis[i];
                if (!(c.frob_norm2() == 0)) return false;
            }
        return true;
    }
    for (int i = 1; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            DMat c = g.fbasis[i] * g.fbasis[j] - g.fbasis[j] * g.fbasis[i];
            double scale = std::sqrt(g.fbasis[i].frob_norm2() * g.fbasis[j].frob_norm2());
            if (std::sqrt(c.frob_norm2()) > tol * std::max(1.0, scale)) return false;
        }
    }
    return true;
}

}  // namespace qgt
