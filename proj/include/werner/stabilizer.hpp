// Copyright 2026 The Werner Diagrams Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "werner/diagrams.hpp"
#include "werner/linalg.hpp"
#include "werner/states.hpp"

namespace werner {

/// One element of su(2)^n: per qubit, the coefficients of (sigma_1, sigma_2, sigma_3)/i.
using LocalAlgebraElement = std::vector<std::array<double, 3>>;

struct StabilizerBasis {
    size_t n = 0;
    std::vector<LocalAlgebraElement> basis;  // orthonormal
    size_t dim() const {
        return basis.size();
    }
};

/// Flattens to 3n coordinates ordered (qubit, axis).
RVector flatten(const LocalAlgebraElement &x);
LocalAlgebraElement unflatten(std::span<const double> v, size_t n);

/// |sum_k [A_k at position k, rho]|_F for the element x.
double stabilizer_residual(const CMatrix &rho, const LocalAlgebraElement &x);

/// Real null space of (A_1..A_n) -> sum_k [A_k^(k), rho], a 3n-dimensional domain.
StabilizerBasis stabilizer_algebra(const CMatrix &rho, double rel_tol = kDefaultRankTol);

/// The generators of Delta_D: one per block and axis, equal on the block and zero elsewhere.
std::vector<LocalAlgebraElement> delta_generators(const Partition &d);
size_t delta_d_dimension(const Partition &d);

template <typename Diagram>
struct Term {
    Diagram diagram;
    double coeff = 0;
};

using PartitionTerm = Term<Partition>;
using MatchingTerm = Term<Matching>;

/// Parses "1 2 | 3 4 : 1.0 ; 1 4 | 2 3 : 1.0".
std::vector<PartitionTerm> parse_terms(std::string_view text);
std::vector<MatchingTerm> to_matching_terms(const std::vector<PartitionTerm> &terms);

/// Common coarsening of the diagrams whose |coeff| > tol.
Partition glb_prediction(std::span<const PartitionTerm> terms, double tol = 1e-12);

struct StabilizerReport {
    size_t n = 0;
    size_t computed_dim = 0;
    size_t predicted_dim = 0;
    Partition glb;
    bool containment_ok = false;
    double containment_residual = 0;
    bool match = false;
    double trace = 0;
    double min_eigenvalue = 0;
    bool convex = false;
    std::string scope = "identity component (Lie algebra)";
};

StabilizerReport stabilizer_conjecture_test(std::span<const PartitionTerm> terms, double tol = kDefaultResidualTol,
                                            double rel_tol = kDefaultRankTol);

/// True iff every bipartition of the qubits is crossed by a chord of some
/// matching with |coeff| > tol.
bool bipartition_criterion(std::span<const MatchingTerm> terms, double tol = 1e-12);

struct PureStabilizerReport {
    size_t n = 0;
    size_t computed_dim = 0;
    bool criterion = false;
    bool match = false;
};

/// Stabilizer algebra of psi = sum c_P |s_P> up to phase:
/// {(A_k) : sum_k A_k^(k) psi = i mu psi for some real mu}.
PureStabilizerReport pure_stabilizer_cross_check(std::span<const MatchingTerm> terms,
                                                 double rel_tol = kDefaultRankTol);

size_t pure_stabilizer_dimension(const PureState &psi, double rel_tol = kDefaultRankTol);

void to_json(nlohmann::json &j, const StabilizerReport &r);
void to_json(nlohmann::json &j, const PureStabilizerReport &r);

}  // namespace werner
