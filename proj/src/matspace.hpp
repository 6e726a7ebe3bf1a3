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

#ifndef QGT_MATSPACE_HPP
#define QGT_MATSPACE_HPP

#include <memory>
#include <vector>

#include "linalg.hpp"
#include "surd.hpp"

namespace qgt {

// Orthonormal-basis subspace, floating backend.
struct FSubspace {
    int ambient = 0;
    std::vector<DVec> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

// Exact subspace. Each basis vector is a list of surd entries over the
// shared context. Vectors whose entries all carry the same radicand set
// ("scaled rational") admit exact projections and complements.
struct XSubspace {
    int ambient = 0;
    std::shared_ptr<SurdCtx> ctx = std::make_shared<SurdCtx>();
    std::vector<std::vector<XEntry>> basis;

    int dim() const { return static_cast<int>(basis.size()); }
};

FSubspace fsub_from_vectors(int ambient, std::vector<DVec> raw, double drop_tol = 1e-9);
FSubspace fsub_full(int ambient);
FSubspace fsub_coordinates(int ambient, const std::vector<int>& coords);
XSubspace xsub_coordinates(int ambient, const std::vector<int>& coords);
// Rational vectors, orthonormalized exactly (per-vector sqrt norms).
XSubspace xsub_from_rational(int ambient, const std::vector<XCVec>& raw);
XSubspace xsub_full(int ambient);
FSubspace to_float(const XSubspace& s);

// P = sum of |v><v| over the orthonormal basis.
DMat project(const FSubspace& s);
// Exact projection; requires scaled-rational basis vectors.
XMat project(const XSubspace& s);

FSubspace complement(const FSubspace& s);
XSubspace complement(const XSubspace& s);

FSubspace intersect(const FSubspace& a, const FSubspace& b, double tol = 1e-9);
XSubspace intersect(const XSubspace& a, const XSubspace& b);

double rayleigh(const DMat& a, const DVec& x);
Rational rayleigh(const XMat& a, const XCVec& x);

// Exact spectrum of a diagonal matrix, descending, with the permutation
// taking rank position k to the coordinate index perm[k].
struct DiagEigh {
    std::vector<Rational> values;
    std::vector<int> perm;
};
DiagEigh eigh_diagonal(const XMat& m);

// Exact Gram-Schmidt on rational vectors; returns surviving directions
// (not normalized) in scan order.
std::vector<XCVec> orthogonalize_rational(const std::vector<XCVec>& raw);

// Nullspace of an exact matrix (solutions of m x = 0), rational basis.
std::vector<XCVec> nullspace(const XMat& m);
int rank(const XMat& m);

}  // namespace qgt

#endif  // QGT_MATSPACE_HPP
