#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgraph.hpp"

#include <cmath>
#include <set>

using namespace qgt;

namespace {

// Independent-set oracle: no edge inside the subset.
bool classically_independent(const Adjacency& adj, const std::vector<int>& subset) {
    for (size_t i = 0; i < subset.size(); ++i)
        for (size_t j = i + 1; j < subset.size(); ++j)
            if (adj[subset[i]][subset[j]]) return false;
    return true;
}

Adjacency path3() {
    Adjacency a(3, std::vector<char>(3, 0));
    a[0][1] = a[1][0] = 1;
    a[1][2] = a[2][1] = 1;
    return a;
}

QuantumGraph identity_graph(int n) {
    QuantumGraph g;
    g.mode = Mode::exact;
    g.n = n;
    g.xbasis.push_back(XMat::identity(n));
    return g;
}

QuantumGraph pauli_x_graph() {
    QuantumGraph g;
    g.mode = Mode::exact;
    g.n = 2;
    g.xbasis.push_back(XMat::identity(2));
    XMat x(2, 2);
    x.at(0, 1) = CRational(Rational(1));
    x.at(1, 0) = CRational(Rational(1));
    g.xbasis.push_back(std::move(x));
    return g;
}

}  // namespace

TEST_CASE("validate accepts and reports") {
    QuantumGraph g = identity_graph(4);
    ValidationReport r = validate(g);
    CHECK(r.ok);
    CHECK(r.valence == 0);

    QuantumGraph gx = pauli_x_graph();
    ValidationReport rx = validate(gx);
    CHECK(rx.ok);
    CHECK(rx.valence == 1);

    // {I, 2I} is linearly dependent.
    QuantumGraph bad = identity_graph(3);
    bad.xbasis.push_back(XMat::identity(3).scaled(CRational(Rational(2))));
    ValidationReport rb = validate(bad);
    CHECK_FALSE(rb.ok);
    REQUIRE(rb.violations.size() == 1);
    CHECK(rb.violations[0].find("dependent") != std::string::npos);

    // Non-Hermitian element is named with its entry pair.
    QuantumGraph nh = identity_graph(2);
    XMat m(2, 2);
    m.at(0, 1) = CRational(Rational(1));
    nh.xbasis.push_back(std::move(m));
    ValidationReport rn = validate(nh);
    CHECK_FALSE(rn.ok);
    CHECK(rn.violations[0].find("(0,1)") != std::string::npos);
}

TEST_CASE("from_classical shape and code correspondence") {
    // Edgeless graph: only the identity, every coordinate span is a code.
    Adjacency edgeless(3, std::vector<char>(3, 0));
    QuantumGraph ge = from_classical(edgeless);
    CHECK(ge.valence() == 0);
    CHECK(validate(ge).ok);

    // Single edge on 2 vertices: valence 2, only 1-dim codes.
    Adjacency k2(2, std::vector<char>(2, 0));
    k2[0][1] = k2[1][0] = 1;
    QuantumGraph gk = from_classical(k2);
    CHECK(gk.valence() == 2);
    XSubspace full = xsub_full(2);
    SlopeReport full_rep = slope_exact(gk, full);
    CHECK_FALSE(full_rep.exact_zero);
    XSubspace one = xsub_coordinates(2, {0});
    CHECK(slope_exact(gk, one).exact_zero);

    // Path 1-2-3: span{e1,e3} is a code, span{e1,e2} is not.
    QuantumGraph gp = from_classical(path3());
    CHECK(slope_exact(gp, xsub_coordinates(3, {0, 2})).exact_zero);
    SlopeReport bad = slope_exact(gp, xsub_coordinates(3, {0, 1}));
    CHECK_FALSE(bad.exact_zero);
    CHECK(bad.residual > 0.1);

    Adjacency asym(2, std::vector<char>(2, 0));
    asym[0][1] = 1;
    CHECK_THROWS(from_classical(asym));
}

TEST_CASE("from_classical round trip against the independence oracle") {
    // Exhaustive over all graphs on <= 4 vertices and seeded samples at 5-6;
    // checking all 2^(n(n-1)/2) graphs at 7 is out of test budget.
    NormalSampler rng(99);
    for (int n = 2; n <= 6; ++n) {
        int pairs = n * (n - 1) / 2;
        std::vector<uint64_t> masks;
        if (n <= 4) {
            for (uint64_t m = 0; m < (1ull << pairs); ++m) masks.push_back(m);
        } else {
            for (int t = 0; t < 40; ++t) masks.push_back(rng.next_u64() & ((1ull << pairs) - 1));
        }
        for (uint64_t mask : masks) {
            Adjacency adj(n, std::vector<char>(n, 0));
            int bit = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++bit)
                    if (mask & (1ull << bit)) adj[i][j] = adj[j][i] = 1;
            QuantumGraph g = from_classical(adj);
            for (uint64_t sub = 1; sub < (1ull << n); ++sub) {
                std::vector<int> coords;
                for (int i = 0; i < n; ++i)
                    if (sub & (1ull << i)) coords.push_back(i);
                bool indep = classically_independent(adj, coords);
                bool code = slope_exact(g, xsub_coordinates(n, coords)).exact_zero;
                REQUIRE(indep == code);
            }
        }
    }
}

TEST_CASE("induced subgraph basics") {
    QuantumGraph gx = pauli_x_graph();
    // Full space: same graph up to basis change.
    QuantumGraph full = induced_subgraph(gx, fsub_full(2));
    CHECK(full.n == 2);
    CHECK(full.valence() == 1);
    // Any 1-dim subspace: only the identity survives.
    QuantumGraph line = induced_subgraph(gx, fsub_coordinates(2, {0}));
    CHECK(line.n == 1);
    CHECK(line.valence() == 0);
    CHECK_THROWS(induced_subgraph(gx, FSubspace{2, {}}));

    // Diagonal exact compression keeps the stated basis.
    QuantumGraph qd = identity_graph(4);
    XMat d(4, 4);
    d.at(0, 0) = CRational(Rational(5));
    d.at(1, 1) = CRational(Rational(3));
    d.at(2, 2) = CRational(Rational(2));
    d.at(3, 3) = CRational(Rational(1));
    qd.xbasis.push_back(std::move(d));
    QuantumGraph sub = induced_subgraph_exact(qd, xsub_coordinates(4, {0, 1}));
    CHECK(sub.n == 2);
    REQUIRE(sub.valence() == 1);
    CHECK(sub.xbasis[1].at(0, 0) == CRational(Rational(5)));
    CHECK(sub.xbasis[1].at(1, 1) == CRational(Rational(3)));
}

TEST_CASE("induced subgraph never increases valence (property run)") {
    NormalSampler rng(4242);
    int draws = 0;
    while (draws < 1000) {
        int n = 3 + (int)(rng.next_u64() % 4);  // 3..6
        int m = (int)(rng.next_u64() % 4);
        QuantumGraph g = random_graph(n, m, rng.next_u64());
        int dim = 1 + (int)(rng.next_u64() % (n - 1));
        std::vector<DVec> vs;
        for (int k = 0; k < dim; ++k) {
            DVec v(n);
            for (int i = 0; i < n; ++i) v[i] = CD(rng.next(), rng.next());
            vs.push_back(std::move(v));
        }
        FSubspace s = fsub_from_vectors(n, vs);
        if (s.dim() == 0) continue;
        QuantumGraph sub = induced_subgraph(g, s);
        REQUIRE(sub.valence() <= g.valence());
        ++draws;
    }
}

TEST_CASE("tensor product arithmetic") {
    QuantumGraph gx = pauli_x_graph();
    QuantumGraph id2 = identity_graph(2);
    // G (x) {I} keeps the valence of G.
    QuantumGraph t0 = tensor_product(gx, id2);
    CHECK(t0.n == 4);
    CHECK(t0.valence() == gx.valence());
    // Q_{2,1} (x) Q_{2,1} has n=4, m=3: count of independent products.
    QuantumGraph t1 = tensor_product(gx, gx);
    CHECK(t1.n == 4);
    CHECK(t1.valence() == 3);
    CHECK(validate(t1).ok);
    // Order multiplies in general.
    QuantumGraph r1 = random_graph(2, 2, 5);
    QuantumGraph r2 = random_graph(3, 1, 6);
    QuantumGraph t2 = tensor_product(r1, r2);
    CHECK(t2.n == 6);
    CHECK(t2.valence() == (r1.valence() + 1) * (r2.valence() + 1) - 1);
}

TEST_CASE("random graphs are reproducible and validated") {
    QuantumGraph a = random_graph(4, 2, 7);
    QuantumGraph b = random_graph(4, 2, 7);
    REQUIRE(a.valence() == 2);
    for (int k = 0; k < a.basis_size(); ++k) {
        CHECK((a.fbasis[k] - b.fbasis[k]).frob_norm2() == 0.0);
    }
    CHECK(validate(a).ok);
    CHECK(random_graph(4, 0, 3).valence() == 0);
    CHECK_THROWS(random_graph(3, 9, 1));
    QuantumGraph c = random_graph(4, 2, 8);
    bool differs = false;
    for (int k = 0; k < a.basis_size(); ++k) {
        if ((a.fbasis[k] - c.fbasis[k]).frob_norm2() != 0.0) differs = true;
    }
    CHECK(differs);
}

TEST_CASE("slope reports") {
    // Single eigenvector of a diagonal graph: slope = eigenvalue, residual 0.
    QuantumGraph qd = identity_graph(3);
    XMat d(3, 3);
    d.at(0, 0) = CRational(Rational(4));
    d.at(1, 1) = CRational(Rational(2));
    d.at(2, 2) = CRational(Rational(1));
    qd.xbasis.push_back(std::move(d));
    SlopeReport r1 = slope_exact(qd, xsub_coordinates(3, {1}));
    CHECK(r1.exact_zero);
    CHECK(r1.slopes_q[0] == 1);
    CHECK(r1.slopes_q[1] == 2);
    // Full space with a non-scalar element: residual > 0.
    SlopeReport r2 = slope_exact(qd, xsub_full(3));
    CHECK_FALSE(r2.exact_zero);
    CHECK(r2.worst_index == 1);
    // Float agrees.
    SlopeReport rf = slope(qd, fsub_coordinates(3, {1}));
    CHECK(rf.residual < 1e-12);
    CHECK(rf.slopes[1] == doctest::Approx(2.0));
    // epsilon(I) = 1 on any nonzero subspace.
    CHECK(rf.slopes[0] == doctest::Approx(1.0));
}

TEST_CASE("slope linearity in the edge operator") {
    // eps(aA + bB) = a eps(A) + b eps(B) for the trace formula, exactly.
    QuantumGraph g = identity_graph(3);
    XMat a(3, 3), b(3, 3);
    a.at(0, 0) = CRational(Rational(2));
    a.at(1, 2) = CRational(Rational(1));
    a.at(2, 1) = CRational(Rational(1));
    b.at(1, 1) = CRational(Rational(-3));
    b.at(2, 2) = CRational(Rational(7));
    XMat combo = a.scaled(CRational(Rational(5))) + b.scaled(CRational(Rational(-2, 3)));
    g.xbasis.push_back(a);
    g.xbasis.push_back(b);
    g.xbasis.push_back(combo);
    XSubspace s = xsub_from_rational(
        3, {XCVec{CRational(Rational(1)), CRational(Rational(1)), CRational(Rational(0))},
            XCVec{CRational(Rational(0)), CRational(Rational(0)), CRational(Rational(1))}});
    SlopeReport rep = slope_exact(g, s);
    CHECK(rep.slopes_q[3] == Rational(5) * rep.slopes_q[1] + Rational(-2, 3) * rep.slopes_q[2]);
}

TEST_CASE("all_commute") {
    QuantumGraph qd = identity_graph(2);
    XMat z(2, 2);
    z.at(0, 0) = CRational(Rational(1));
    z.at(1, 1) = CRational(Rational(-1));
    qd.xbasis.push_back(std::move(z));
    CHECK(all_commute(qd));
    QuantumGraph gx = pauli_x_graph();
    gx.xbasis.push_back(qd.xbasis[1]);  // X and Z do not commute
    CHECK_FALSE(all_commute(gx));
    CHECK_FALSE(all_commute(random_graph(4, 2, 11)));
}
