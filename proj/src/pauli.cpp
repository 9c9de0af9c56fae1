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

#include "werner/pauli.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace werner {

namespace {

// sigma_I is a monomial matrix: row r has its single nonzero entry in column
// r ^ flip_mask, with a phase that is a product of per-qubit factors.
struct PauliRowEntry {
    size_t col;
    Complex value;
};

PauliRowEntry pauli_row_entry(size_t flat, size_t n, size_t row) {
    size_t col = row;
    Complex value = 1;
    for (size_t k = 0; k < n; k++) {
        size_t digit = (flat >> (2 * (n - 1 - k))) & 3;
        size_t bit_pos = n - 1 - k;
        bool bit = (row >> bit_pos) & 1;
        switch (digit) {
            case 0:
                break;
            case 1:
                col ^= size_t{1} << bit_pos;
                break;
            case 2:
                col ^= size_t{1} << bit_pos;
                value *= bit ? Complex(0, 1) : Complex(0, -1);
                break;
            case 3:
                if (bit) {
                    value = -value;
                }
                break;
        }
    }
    return {col, value};
}

}  // namespace

MultiIndex4::MultiIndex4(std::vector<uint8_t> digits) : digits_(std::move(digits)) {
    if (digits_.empty()) {
        throw std::invalid_argument("MultiIndex4 needs at least one digit");
    }
    for (auto d : digits_) {
        if (d > 3) {
            throw std::invalid_argument("MultiIndex4 digit out of range: " + std::to_string(d));
        }
    }
}

MultiIndex4 MultiIndex4::from_flat(size_t flat, size_t n) {
    if (n == 0 || flat >= pow4(n)) {
        throw std::invalid_argument("MultiIndex4::from_flat: index out of range");
    }
    std::vector<uint8_t> digits(n);
    for (size_t k = n; k-- > 0;) {
        digits[k] = static_cast<uint8_t>(flat & 3);
        flat >>= 2;
    }
    return MultiIndex4(std::move(digits));
}

size_t MultiIndex4::flat() const {
    size_t out = 0;
    for (auto d : digits_) {
        out = out * 4 + d;
    }
    return out;
}

size_t pow4(size_t n) {
    return size_t{1} << (2 * n);
}

size_t pow2(size_t n) {
    return size_t{1} << n;
}

PauliVector PauliVector::zero(size_t n) {
    return PauliVector{n, RVector(pow4(n), 0.0)};
}

CMatrix sigma(int i) {
    using namespace std::complex_literals;
    switch (i) {
        case 0:
            return CMatrix{{1, 0}, {0, 1}};
        case 1:
            return CMatrix{{0, 1}, {1, 0}};
        case 2:
            return CMatrix{{0, -1i}, {1i, 0}};
        case 3:
            return CMatrix{{1, 0}, {0, -1}};
        default:
            throw std::invalid_argument("sigma index must be 0..3, got " + std::to_string(i));
    }
}

CMatrix sigma_tensor(const MultiIndex4 &index) {
    CMatrix out = sigma(index[0]);
    for (size_t k = 1; k < index.size(); k++) {
        out = kron(out, sigma(index[k]));
    }
    return out;
}

CMatrix embed_single(const CMatrix &op, size_t qubit, size_t n) {
    if (qubit < 1 || qubit > n) {
        throw std::invalid_argument("embed_single: qubit position out of range");
    }
    CMatrix left = CMatrix::identity(pow2(qubit - 1));
    CMatrix right = CMatrix::identity(pow2(n - qubit));
    return kron(kron(left, op), right);
}

PauliVector expand(const CMatrix &rho, size_t n, double tol) {
    size_t dim = pow2(n);
    if (rho.rows() != dim || rho.cols() != dim) {
        throw std::invalid_argument("expand: expected " + describe_shape(dim, dim) + " matrix for n=" +
                                    std::to_string(n) + ", got " + describe_shape(rho.rows(), rho.cols()));
    }
    double scale = std::max(1.0, frobenius_norm(rho));
    if (hermiticity_defect(rho) > tol * scale) {
        throw std::invalid_argument("expand: input is not Hermitian");
    }
    PauliVector out = PauliVector::zero(n);
    double inv_dim = 1.0 / static_cast<double>(dim);
    for (size_t flat = 0; flat < out.coeffs.size(); flat++) {
        Complex acc{};
        for (size_t r = 0; r < dim; r++) {
            auto [c, value] = pauli_row_entry(flat, n, r);
            acc += value * rho(c, r);
        }
        acc *= inv_dim;
        if (std::abs(acc.imag()) > tol * scale) {
            throw std::invalid_argument("expand: Pauli projection has non-negligible imaginary part");
        }
        out.coeffs[flat] = acc.real();
    }
    return out;
}

CMatrix reconstruct(const PauliVector &v) {
    if (v.coeffs.size() != pow4(v.n)) {
        throw std::invalid_argument("reconstruct: coefficient vector length does not match 4^n");
    }
    size_t dim = pow2(v.n);
    CMatrix out(dim, dim);
    for (size_t flat = 0; flat < v.coeffs.size(); flat++) {
        double s = v.coeffs[flat];
        if (s == 0) {
            continue;
        }
        for (size_t r = 0; r < dim; r++) {
            auto [c, value] = pauli_row_entry(flat, v.n, r);
            out(r, c) += s * value;
        }
    }
    return out;
}

int commutator_coefficient(int a, int b, int c) {
    if (a == b || b == c || a == c) {
        return 0;
    }
    // Levi-Civita sign of (a, b, c) as a permutation of (1, 2, 3).
    int sign = ((b - a + 3) % 3 == 1) ? 1 : -1;
    return -2 * sign;
}

void to_json(nlohmann::json &j, const PauliVector &v) {
    j = nlohmann::json{{"n", v.n}, {"coeffs", v.coeffs}};
}

void from_json(const nlohmann::json &j, PauliVector &v) {
    v.n = j.at("n").get<size_t>();
    v.coeffs = j.at("coeffs").get<RVector>();
    if (v.n == 0 || v.n > 12 || v.coeffs.size() != pow4(v.n)) {
        throw std::invalid_argument("PauliVector JSON: coeffs length must equal 4^n");
    }
}

}  // namespace werner
