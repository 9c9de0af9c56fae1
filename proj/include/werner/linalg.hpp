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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace werner {

using Complex = std::complex<double>;

/// Raised when an iterative numerical routine fails to converge or a
/// self-check tolerance is violated. Malformed input uses std::invalid_argument.
class NumericalError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultRankTol = 1e-8;
inline constexpr double kDefaultResidualTol = 1e-10;

/// Dense row-major matrix. Used with T = Complex (CMatrix) and T = double (RMatrix).
template <typename T>
class DenseMatrix {
   public:
    DenseMatrix() = default;
    DenseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    }
    DenseMatrix(size_t rows, size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) {
            throw std::invalid_argument("matrix entries length does not equal rows*cols");
        }
    }
    DenseMatrix(std::initializer_list<std::initializer_list<T>> rows);

    static DenseMatrix identity(size_t n) {
        DenseMatrix m(n, n);
        for (size_t k = 0; k < n; k++) {
            m(k, k) = T(1);
        }
        return m;
    }

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    T &operator()(size_t r, size_t c) {
        return data_[r * cols_ + c];
    }
    const T &operator()(size_t r, size_t c) const {
        return data_[r * cols_ + c];
    }

    std::span<T> row(size_t r) {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<const T> row(size_t r) const {
        return {data_.data() + r * cols_, cols_};
    }

    std::span<T> entries() {
        return data_;
    }
    std::span<const T> entries() const {
        return data_;
    }

    DenseMatrix &operator+=(const DenseMatrix &other);
    DenseMatrix &operator-=(const DenseMatrix &other);
    DenseMatrix &operator*=(T scale);

    bool operator==(const DenseMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> data_;
};

using CMatrix = DenseMatrix<Complex>;
using RMatrix = DenseMatrix<double>;
using CVector = std::vector<Complex>;
using RVector = std::vector<double>;

template <typename T>
DenseMatrix<T> operator+(DenseMatrix<T> a, const DenseMatrix<T> &b) {
    a += b;
    return a;
}
template <typename T>
DenseMatrix<T> operator-(DenseMatrix<T> a, const DenseMatrix<T> &b) {
    a -= b;
    return a;
}
template <typename T>
DenseMatrix<T> operator*(T scale, DenseMatrix<T> a) {
    a *= scale;
    return a;
}

CMatrix kron(const CMatrix &a, const CMatrix &b);
CMatrix matmul(const CMatrix &a, const CMatrix &b);
CVector matvec(const CMatrix &a, std::span<const Complex> v);
CMatrix dagger(const CMatrix &a);
Complex trace(const CMatrix &a);
/// Hilbert-Schmidt pairing tr(a^dagger b); conjugate-linear in a.
Complex hs_inner(const CMatrix &a, const CMatrix &b);
CMatrix commutator(const CMatrix &a, const CMatrix &b);
CMatrix outer(std::span<const Complex> ket);

double frobenius_norm(const CMatrix &a);
double frobenius_norm(const RMatrix &a);
double vector_norm(std::span<const Complex> v);
double vector_norm(std::span<const double> v);
/// Largest entrywise modulus of a - a^dagger.
double hermiticity_defect(const CMatrix &a);

RMatrix transpose(const RMatrix &a);
RMatrix matmul(const RMatrix &a, const RMatrix &b);
RVector matvec(const RMatrix &a, std::span<const double> v);

/// Stacks blocks vertically; all must share a column count.
RMatrix vstack(std::span<const RMatrix> blocks);

/// Real image of a complex matrix: [[Re, -Im], [Im, Re]] acting on (Re x, Im x).
RMatrix realify(const CMatrix &a);

struct HermitianEigen {
    RVector values;   // ascending
    CMatrix vectors;  // column k pairs with values[k]
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
/// Throws std::invalid_argument when a deviates from Hermitian by more than tol.
HermitianEigen hermitian_eigen(const CMatrix &a, double tol = kDefaultResidualTol);
RVector hermitian_eigenvalues(const CMatrix &a, double tol = kDefaultResidualTol);

/// Number of eigenvalues above rel_tol * lambda_max; 0 when lambda_max <= 0.
size_t rank_psd(const CMatrix &gram, double rel_tol = kDefaultRankTol);

/// Orthonormal basis of {x : |m x| <= rel_tol |m| |x|}, computed by Householder
/// QR with column pivoting. The basis order is deterministic.
std::vector<RVector> real_nullspace(const RMatrix &m, double rel_tol = kDefaultRankTol);

/// Numerical rank from the same pivoted QR used by real_nullspace.
size_t real_rank(const RMatrix &m, double rel_tol = kDefaultRankTol);

std::string describe_shape(size_t rows, size_t cols);

}  // namespace werner
