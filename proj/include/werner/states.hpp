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

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "werner/diagrams.hpp"
#include "werner/linalg.hpp"
#include "werner/pauli.hpp"

namespace werner {

/// Amplitudes over computational basis strings; qubit 1 is the most significant bit.
struct PureState {
    size_t n = 0;
    CVector amps;

    double norm() const {
        return vector_norm(amps);
    }
    CMatrix density() const {
        return outer(amps);
    }
};

/// A computational basis string b_1 ... b_n.
class BitString {
   public:
    explicit BitString(std::vector<uint8_t> bits);
    /// Parses "001"; throws std::invalid_argument on anything but 0/1.
    static BitString parse(std::string_view text);

    size_t size() const {
        return bits_.size();
    }
    uint8_t operator[](size_t k) const {
        return bits_[k];
    }
    /// Basis index with bit 1 most significant.
    size_t index() const;
    /// Contents shifted one position toward lower index, wrapping b_1 to b_n.
    BitString shifted() const;
    std::string to_string() const;

   private:
    std::vector<uint8_t> bits_;
};

PureState singlet();

/// Product of singlets (|01> - |10>)/sqrt(2) over the chords, the lower
/// qubit index carrying |0> in the positive term. Works for crossing matchings too.
PureState chord_state(const Matching &m);

/// Unnormalized sum_k omega^k |shift^k I> with omega = exp(2 pi i / n).
CVector cyclic_sum(const BitString &bits);

/// Normalized cyclic_sum, or nullopt when the sum vanishes.
std::optional<PureState> cyclic_state(const BitString &bits);

/// Normalized sum of the projectors onto every nonzero cyclic_state.
CMatrix cn_density(size_t n);

/// Tensor product of cn_density(|U|) over the blocks U, each placed on its
/// qubits in increasing order.
CMatrix diagram_density(const Partition &d);

/// Average of sigma_I over the distinct arrangements of the multiset with
/// n1 X's, n2 Y's, n3 Z's and n - n1 - n2 - n3 identities.
PauliVector sym_pauli(size_t n1, size_t n2, size_t n3, size_t n);
CMatrix sym_element(size_t n1, size_t n2, size_t n3, size_t n);

/// The image of (x^2 + y^2 + z^2)^m under the monomial-to-sym_element map.
PauliVector radial_pauli(size_t m, size_t n);
CMatrix radial_element(size_t m, size_t n);

/// Relabels qubits: qubit k of the input becomes qubit perm[k-1] of the output
/// (perm holds a permutation of 1..n).
CMatrix permute_qubits(const CMatrix &rho, std::span<const int> perm);
CVector permute_qubits(std::span<const Complex> amps, std::span<const int> perm);

/// Number of qubits for a 2^n-dimensional matrix; throws when not a power of two.
size_t qubit_count(const CMatrix &rho);
size_t qubit_count(size_t dim);

}  // namespace werner
