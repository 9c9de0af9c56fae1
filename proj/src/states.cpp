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

#include "werner/states.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

namespace werner {

BitString::BitString(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) {
        throw std::invalid_argument("bit string must be nonempty");
    }
    for (auto b : bits_) {
        if (b > 1) {
            throw std::invalid_argument("bit string entries must be 0 or 1");
        }
    }
}

BitString BitString::parse(std::string_view text) {
    std::vector<uint8_t> bits;
    for (size_t k = 0; k < text.size(); k++) {
        if (text[k] != '0' && text[k] != '1') {
            throw std::invalid_argument("bit string: unexpected character at column " + std::to_string(k + 1));
        }
        bits.push_back(text[k] == '1');
    }
    if (bits.size() > 20) {
        throw std::invalid_argument("bit string longer than 20 qubits");
    }
    return BitString(std::move(bits));
}

size_t BitString::index() const {
    size_t out = 0;
    for (auto b : bits_) {
        out = (out << 1) | b;
    }
    return out;
}

BitString BitString::shifted() const {
    std::vector<uint8_t> out(bits_.size());
    for (size_t k = 0; k < bits_.size(); k++) {
        out[k] = bits_[(k + 1) % bits_.size()];
    }
    return BitString(std::move(out));
}

std::string BitString::to_string() const {
    std::string out;
    for (auto b : bits_) {
        out += b ? '1' : '0';
    }
    return out;
}

size_t qubit_count(size_t dim) {
    size_t n = 0;
    while ((size_t{1} << n) < dim) {
        n++;
    }
    if ((size_t{1} << n) != dim || n == 0) {
        throw std::invalid_argument("dimension " + std::to_string(dim) + " is not 2^n with n >= 1");
    }
    return n;
}

size_t qubit_count(const CMatrix &rho) {
    if (!rho.is_square()) {
        throw std::invalid_argument("expected a square matrix, got " + describe_shape(rho.rows(), rho.cols()));
    }
    return qubit_count(rho.rows());
}

PureState singlet() {
    return chord_state(Matching(Partition(2, {{1, 2}})));
}

PureState chord_state(const Matching &m) {
    size_t n = static_cast<size_t>(m.n());
    PureState out{n, CVector(pow2(n))};
    double amp = std::pow(std::numbers::sqrt2, -static_cast<double>(m.chords().size()));
    for (size_t idx = 0; idx < out.amps.size(); idx++) {
        double sign = 1;
        for (const auto &chord : m.chords()) {
            bool lo = (idx >> (n - chord[0])) & 1;
            bool hi = (idx >> (n - chord[1])) & 1;
            if (lo == hi) {
                sign = 0;
                break;
            }
            if (lo) {
                sign = -sign;
            }
        }
        out.amps[idx] = sign * amp;
    }
    return out;
}

CVector cyclic_sum(const BitString &bits) {
    size_t n = bits.size();
    CVector out(pow2(n));
    BitString current = bits;
    for (size_t k = 0; k < n; k++) {
        double angle = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        out[current.index()] += std::polar(1.0, angle);
        current = current.shifted();
    }
    return out;
}

std::optional<PureState> cyclic_state(const BitString &bits) {
    CVector raw = cyclic_sum(bits);
    double nrm = vector_norm(raw);
    if (!(nrm > 1e-12 * static_cast<double>(bits.size()))) {
        return std::nullopt;
    }
    for (auto &x : raw) {
        x /= nrm;
    }
    return PureState{bits.size(), std::move(raw)};
}

CMatrix cn_density(size_t n) {
    if (n < 1 || n > 12) {
        throw std::invalid_argument("cn_density: n must be in 1..12");
    }
    size_t dim = pow2(n);
    CMatrix acc(dim, dim);
    for (size_t idx = 0; idx < dim; idx++) {
        std::vector<uint8_t> bits(n);
        for (size_t k = 0; k < n; k++) {
            bits[k] = (idx >> (n - 1 - k)) & 1;
        }
        auto state = cyclic_state(BitString(std::move(bits)));
        if (!state) {
            continue;
        }
        const auto &v = state->amps;
        for (size_t r = 0; r < dim; r++) {
            if (v[r] == Complex{}) {
                continue;
            }
            for (size_t c = 0; c < dim; c++) {
                acc(r, c) += v[r] * std::conj(v[c]);
            }
        }
    }
    double tr = trace(acc).real();
    if (!(tr > 0)) {
        throw NumericalError("cn_density: every cyclic state vanished");
    }
    acc *= Complex(1 / tr);
    return acc;
}

namespace {

// Basis index map for a qubit relabelling; validates perm.
std::vector<size_t> index_map(size_t n, std::span<const int> perm) {
    if (perm.size() != n) {
        throw std::invalid_argument("permute_qubits: permutation length does not match qubit count");
    }
    std::vector<bool> seen(n + 1, false);
    for (int p : perm) {
        if (p < 1 || static_cast<size_t>(p) > n || seen[p]) {
            throw std::invalid_argument("permute_qubits: not a permutation of 1..n");
        }
        seen[p] = true;
    }
    std::vector<size_t> map(pow2(n));
    for (size_t i = 0; i < map.size(); i++) {
        size_t j = 0;
        for (size_t k = 0; k < n; k++) {
            if ((i >> (n - 1 - k)) & 1) {
                j |= size_t{1} << (n - static_cast<size_t>(perm[k]));
            }
        }
        map[i] = j;
    }
    return map;
}

}  // namespace

CMatrix permute_qubits(const CMatrix &rho, std::span<const int> perm) {
    std::vector<size_t> map = index_map(qubit_count(rho), perm);
    CMatrix out(rho.rows(), rho.cols());
    for (size_t r = 0; r < rho.rows(); r++) {
        for (size_t c = 0; c < rho.cols(); c++) {
            out(map[r], map[c]) = rho(r, c);
        }
    }
    return out;
}

CVector permute_qubits(std::span<const Complex> amps, std::span<const int> perm) {
    std::vector<size_t> map = index_map(qubit_count(amps.size()), perm);
    CVector out(amps.size());
    for (size_t i = 0; i < amps.size(); i++) {
        out[map[i]] = amps[i];
    }
    return out;
}

CMatrix diagram_density(const Partition &d) {
    std::map<size_t, CMatrix> cache;
    CMatrix product = CMatrix::identity(1);
    std::vector<int> order;
    for (const auto &block : d.blocks()) {
        auto it = cache.find(block.size());
        if (it == cache.end()) {
            it = cache.emplace(block.size(), cn_density(block.size())).first;
        }
        product = kron(product, it->second);
        order.insert(order.end(), block.begin(), block.end());
    }
    return permute_qubits(product, order);
}

PauliVector sym_pauli(size_t n1, size_t n2, size_t n3, size_t n) {
    if (n < 1 || n1 + n2 + n3 > n) {
        throw std::invalid_argument("sym_element: need n >= 1 and n1 + n2 + n3 <= n");
    }
    std::vector<uint8_t> digits;
    digits.insert(digits.end(), n - n1 - n2 - n3, 0);
    digits.insert(digits.end(), n1, 1);
    digits.insert(digits.end(), n2, 2);
    digits.insert(digits.end(), n3, 3);
    PauliVector out = PauliVector::zero(n);
    size_t arrangements = 0;
    do {
        out[MultiIndex4(digits).flat()] = 1;
        arrangements++;
    } while (std::next_permutation(digits.begin(), digits.end()));
    for (auto &x : out.coeffs) {
        x /= static_cast<double>(arrangements);
    }
    return out;
}

CMatrix sym_element(size_t n1, size_t n2, size_t n3, size_t n) {
    return reconstruct(sym_pauli(n1, n2, n3, n));
}

PauliVector radial_pauli(size_t m, size_t n) {
    if (2 * m > n) {
        throw std::invalid_argument("radial_element: need 2m <= n");
    }
    auto factorial = [](size_t k) {
        double f = 1;
        for (size_t j = 2; j <= k; j++) {
            f *= static_cast<double>(j);
        }
        return f;
    };
    PauliVector out = PauliVector::zero(n);
    for (size_t a = 0; a <= m; a++) {
        for (size_t b = 0; a + b <= m; b++) {
            size_t c = m - a - b;
            double coeff = factorial(m) / (factorial(a) * factorial(b) * factorial(c));
            PauliVector term = sym_pauli(2 * a, 2 * b, 2 * c, n);
            for (size_t k = 0; k < out.coeffs.size(); k++) {
                out.coeffs[k] += coeff * term.coeffs[k];
            }
        }
    }
    return out;
}

CMatrix radial_element(size_t m, size_t n) {
    return reconstruct(radial_pauli(m, n));
}

}  // namespace werner
