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
#include <vector>

#include "json.hpp"
#include "werner/linalg.hpp"

namespace werner {

/// A Pauli word i_1 i_2 ... i_n with each digit in {0,1,2,3}. Qubit 1 is the
/// most significant base-4 digit of the flat index.
class MultiIndex4 {
   public:
    explicit MultiIndex4(std::vector<uint8_t> digits);
    static MultiIndex4 from_flat(size_t flat, size_t n);

    size_t size() const {
        return digits_.size();
    }
    uint8_t operator[](size_t k) const {
        return digits_[k];
    }
    const std::vector<uint8_t> &digits() const {
        return digits_;
    }
    size_t flat() const;

   private:
    std::vector<uint8_t> digits_;
};

/// Real coefficients of sum_I s_I sigma_I, with s_I = 2^-n tr(sigma_I rho).
struct PauliVector {
    size_t n = 0;
    RVector coeffs;  // length 4^n

    static PauliVector zero(size_t n);
    double &operator[](size_t flat) {
        return coeffs[flat];
    }
    double operator[](size_t flat) const {
        return coeffs[flat];
    }
};

size_t pow4(size_t n);
size_t pow2(size_t n);

/// 2x2 identity (0), X (1), Y (2), Z (3).
CMatrix sigma(int i);
CMatrix sigma_tensor(const MultiIndex4 &index);

/// Embeds a single-qubit operator at 1-based position `qubit` of n.
CMatrix embed_single(const CMatrix &op, size_t qubit, size_t n);

/// Expansion in the Pauli basis. Throws on wrong dimension, non-Hermitian
/// input (entry defect > tol), or a projection with imaginary part > tol.
PauliVector expand(const CMatrix &rho, size_t n, double tol = 1e-12);
CMatrix reconstruct(const PauliVector &v);

/// Structure constant for i[sigma_a, sigma_b] = sum_c f(a,b,c) sigma_c with
/// a, b, c in {1,2,3}: returns -2 * epsilon_{abc}.
int commutator_coefficient(int a, int b, int c);

void to_json(nlohmann::json &j, const PauliVector &v);
void from_json(const nlohmann::json &j, PauliVector &v);

}  // namespace werner
