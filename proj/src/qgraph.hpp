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

// Quantum graphs: a vertex-space dimension together with a real-linearly
// independent list of Hermitian edge operators whose first element is the
// identity. Valence is the basis length minus one.

#ifndef QGT_QGRAPH_HPP
#define QGT_QGRAPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "matspace.hpp"

namespace qgt {

enum class Mode { exact, floating };

struct QuantumGraph {
    Mode mode = Mode::floating;
    int n = 0;
    std::vector<XMat> xbasis;  // exact edge basis, xbasis[0] = I
    std::vector<DMat> fbasis;  // floating edge basis, fbasis[0] = I
    std::string metadata;      // provenance tag: classical|tropical|kraus|random
    std::string ref_json;      // serialized constructor reference, may be empty

    int basis_size() const {
        return static_cast<int>(mode == Mode::exact ? xbasis.size() : fbasis.size());
    }
    int valence() const { return basis_size() - 1; }
    bool diagonal() const;
};

struct ValidationReport {
    bool ok = true;
    int n = 0;
    int valence = 0;
    std::vector<std::string> violations;
};

struct SlopeReport {
    Mode mode = Mode::floating;
    std::vector<double> slopes;     // numeric view, one per basis element
    std::vector<Rational> slopes_q; // exact mode only
    double residual = 0.0;
    bool exact_zero = false;        // exact mode: residual is formally zero
    int worst_index = -1;           // basis element with the largest residual
};

using Adjacency = std::vector<std::vector<char>>;  // symmetric 0/1, no self entries

ValidationReport validate(const QuantumGraph& g, double tol = 1e-9);

QuantumGraph induced_subgraph(const QuantumGraph& g, const FSubspace& s, double tol = 1e-9);
QuantumGraph induced_subgraph_exact(const QuantumGraph& g, const XSubspace& s);

QuantumGraph from_classical(const Adjacency& adj);

QuantumGraph tensor_product(const QuantumGraph& g, const QuantumGraph& h);

QuantumGraph random_graph(int n, int m, uint64_t seed);

SlopeReport slope(const QuantumGraph& g, const FSubspace& s);
SlopeReport slope_exact(const QuantumGraph& g, const XSubspace& s);

QuantumGraph to_float(const QuantumGraph& g);

bool all_commute(const QuantumGraph& g, double tol = 1e-9);

// Seeded standard normal via Box-Muller over mt19937_64 uniforms; pinned
// here so random draws are reproducible across platforms.
class NormalSampler {
  public:
    explicit NormalSampler(uint64_t seed) : state_(seed) {}
    double next();
    uint64_t next_u64();

  private:
    uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace qgt

#endif  // QGT_QGRAPH_HPP
