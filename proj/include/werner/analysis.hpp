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

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "werner/diagrams.hpp"
#include "werner/linalg.hpp"
#include "werner/pauli.hpp"
#include "werner/states.hpp"

namespace werner {

inline constexpr uint64_t kDefaultSeed = 20120403;

/// J_a = sum_k sigma_a at position k, a in {1,2,3}.
CMatrix collective_generator(size_t n, int a);

/// Haar-random SU(2) element from a normalized Gaussian quaternion.
CMatrix haar_su2(std::mt19937_64 &rng);

/// Applies g to every qubit: (g x ... x g) rho (g x ... x g)^dagger.
CMatrix conjugate_collective(const CMatrix &rho, const CMatrix &g);

/// max_a |[J_a, rho]|_F.
double werner_residual(const CMatrix &rho);

struct WernerReport {
    size_t n = 0;
    double residual = 0;
    double random_check_max = 0;
    bool is_werner = false;
    double tol = 0;
    size_t samples = 0;
    uint64_t seed = 0;
};

/// Algebra-level residual plus a group-level check over `samples` Haar draws.
WernerReport is_werner(const CMatrix &rho, double tol = kDefaultResidualTol, size_t samples = 20,
                       uint64_t seed = kDefaultSeed);

/// Average of g^n rho g^dagger^n over `samples` Haar draws of g.
CMatrix monte_carlo_twirl(const CMatrix &rho, size_t samples, uint64_t seed = kDefaultSeed);

/// max_a |J_a psi|_2.
double pure_werner_residual(const PureState &psi);

/// Stacked maps X -> i[J_a, X] for a = 1,2,3 in Pauli coordinates
/// (3 * 4^n rows by 4^n columns), built from Pauli structure constants.
RMatrix commutator_map(size_t n);

/// The Hermitian commutant of the collective SU(2) action in Pauli coordinates.
///
/// The map X -> i[J_a, X] never moves an identity factor, so it is block
/// diagonal over the set of non-identity positions. The null space is
/// assembled block by block; the result equals real_nullspace(commutator_map(n))
/// as a subspace.
class WernerSpace {
   public:
    explicit WernerSpace(size_t n, double rel_tol = kDefaultRankTol);

    size_t n() const {
        return n_;
    }
    size_t dimension() const {
        return basis_.size();
    }
    /// Orthonormal in coefficient space (hence Hilbert-Schmidt orthogonal).
    const std::vector<RVector> &basis() const {
        return basis_;
    }

    PauliVector project(const PauliVector &v) const;
    CMatrix project(const CMatrix &rho) const;
    /// |v - project(v)| in coefficient space.
    double distance(const PauliVector &v) const;

   private:
    size_t n_;
    std::vector<RVector> basis_;
};

size_t commutant_dimension(size_t n, double rel_tol = kDefaultRankTol);

/// Complex dimension of {psi : J_a psi = 0 for a = 1,2,3}.
size_t pure_werner_dimension(size_t n, double rel_tol = kDefaultRankTol);

/// Hilbert-Schmidt orthogonal projection onto the Werner space.
CMatrix twirl_project(const CMatrix &rho);

struct GramResult {
    CMatrix gram;
    RVector eigenvalues;  // ascending
    size_t rank = 0;
};

GramResult gram_rank_test(std::span<const CMatrix> states, double rel_tol = kDefaultRankTol);

/// Gram matrix <psi_j|psi_k> of state vectors and its numerical rank.
GramResult pure_gram_rank_test(std::span<const PureState> states, double rel_tol = kDefaultRankTol);

enum class Verdict { Consistent, RefutedIndependence, RefutedSpan };

std::string to_string(Verdict v);

struct ConjectureOptions {
    double rel_tol = kDefaultRankTol;
    double residual_tol = kDefaultResidualTol;
    /// Permits n > 5.
    bool allow_large = false;
};

struct ConjectureReport {
    size_t n = 0;
    size_t num_diagrams = 0;
    size_t gram_rank = 0;
    uint64_t catalan = 0;
    size_t commutant_dim = 0;
    Verdict verdict = Verdict::Consistent;
    /// Largest werner_residual over the diagram states.
    double max_werner_residual = 0;
    /// Largest Hilbert-Schmidt distance squared from a diagram state to the
    /// commutant, compared against rel_tol * lambda_max(Gram).
    double max_span_residual = 0;
    bool all_werner = false;
    bool all_in_span = false;
    std::vector<std::string> diagrams;
    GramResult gram;
};

/// Builds every non-crossing diagram state on n qubits and tests whether they
/// form a basis of the Werner space. A refutation is a finding, not an error.
ConjectureReport conjecture_test(size_t n, const ConjectureOptions &options = {});

struct RadialCheck {
    size_t m = 0;
    double werner_residual = 0;
    double permutation_defect = 0;
};

struct SymmetricReport {
    size_t n = 0;
    size_t expected_dim = 0;
    /// Rank of the twirl-projected sym elements.
    size_t symmetric_werner_dim = 0;
    /// Rank of the radial elements m = 0..n/2.
    size_t radial_rank = 0;
    /// Largest distance from a radial element to the span of the twirled sym elements.
    double radial_span_residual = 0;
    std::vector<RadialCheck> radial;
    bool ok = false;
};

SymmetricReport symmetric_werner_test(size_t n, double tol = kDefaultResidualTol,
                                      double rel_tol = kDefaultRankTol);

/// Largest |P rho P^dagger - rho|_F over adjacent qubit transpositions, which
/// generate every qubit permutation.
double permutation_defect(const CMatrix &rho);

void to_json(nlohmann::json &j, const WernerReport &r);
void to_json(nlohmann::json &j, const ConjectureReport &r);
void to_json(nlohmann::json &j, const SymmetricReport &r);

}  // namespace werner
