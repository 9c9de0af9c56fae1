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

#include "werner/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace werner {

template <typename T>
DenseMatrix<T>::DenseMatrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
        if (r.size() != cols_) {
            throw std::invalid_argument("ragged matrix literal");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

template <typename T>
DenseMatrix<T> &DenseMatrix<T>::operator+=(const DenseMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix sum: dimension mismatch " + describe_shape(rows_, cols_) + " vs " +
                                    describe_shape(other.rows_, other.cols_));
    }
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

template <typename T>
DenseMatrix<T> &DenseMatrix<T>::operator-=(const DenseMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix difference: dimension mismatch " + describe_shape(rows_, cols_) +
                                    " vs " + describe_shape(other.rows_, other.cols_));
    }
    for (size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

template <typename T>
DenseMatrix<T> &DenseMatrix<T>::operator*=(T scale) {
    for (auto &x : data_) {
        x *= scale;
    }
    return *this;
}

template class DenseMatrix<Complex>;
template class DenseMatrix<double>;

std::string describe_shape(size_t rows, size_t cols) {
    return std::to_string(rows) + "x" + std::to_string(cols);
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t ar = 0; ar < a.rows(); ar++) {
        for (size_t ac = 0; ac < a.cols(); ac++) {
            Complex x = a(ar, ac);
            if (x == Complex{}) {
                continue;
            }
            for (size_t br = 0; br < b.rows(); br++) {
                for (size_t bc = 0; bc < b.cols(); bc++) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
                }
            }
        }
    }
    return out;
}

CMatrix matmul(const CMatrix &a, const CMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: dimension mismatch " + describe_shape(a.rows(), a.cols()) + " * " +
                                    describe_shape(b.rows(), b.cols()));
    }
    CMatrix out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        auto out_row = out.row(r);
        for (size_t k = 0; k < a.cols(); k++) {
            Complex x = a(r, k);
            if (x == Complex{}) {
                continue;
            }
            auto b_row = b.row(k);
            for (size_t c = 0; c < b.cols(); c++) {
                out_row[c] += x * b_row[c];
            }
        }
    }
    return out;
}

CVector matvec(const CMatrix &a, std::span<const Complex> v) {
    if (a.cols() != v.size()) {
        throw std::invalid_argument("matvec: dimension mismatch");
    }
    CVector out(a.rows());
    for (size_t r = 0; r < a.rows(); r++) {
        Complex acc{};
        auto row = a.row(r);
        for (size_t c = 0; c < a.cols(); c++) {
            acc += row[c] * v[c];
        }
        out[r] = acc;
    }
    return out;
}

CMatrix dagger(const CMatrix &a) {
    CMatrix out(a.cols(), a.rows());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(c, r) = std::conj(a(r, c));
        }
    }
    return out;
}

Complex trace(const CMatrix &a) {
    if (!a.is_square()) {
        throw std::invalid_argument("trace of non-square matrix " + describe_shape(a.rows(), a.cols()));
    }
    Complex acc{};
    for (size_t k = 0; k < a.rows(); k++) {
        acc += a(k, k);
    }
    return acc;
}

Complex hs_inner(const CMatrix &a, const CMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("hs_inner: dimension mismatch " + describe_shape(a.rows(), a.cols()) + " vs " +
                                    describe_shape(b.rows(), b.cols()));
    }
    Complex acc{};
    auto x = a.entries();
    auto y = b.entries();
    for (size_t k = 0; k < x.size(); k++) {
        acc += std::conj(x[k]) * y[k];
    }
    return acc;
}

CMatrix commutator(const CMatrix &a, const CMatrix &b) {
    return matmul(a, b) - matmul(b, a);
}

CMatrix outer(std::span<const Complex> ket) {
    CMatrix out(ket.size(), ket.size());
    for (size_t r = 0; r < ket.size(); r++) {
        for (size_t c = 0; c < ket.size(); c++) {
            out(r, c) = ket[r] * std::conj(ket[c]);
        }
    }
    return out;
}

double frobenius_norm(const CMatrix &a) {
    double acc = 0;
    for (const auto &x : a.entries()) {
        acc += std::norm(x);
    }
    return std::sqrt(acc);
}

double frobenius_norm(const RMatrix &a) {
    double acc = 0;
    for (double x : a.entries()) {
        acc += x * x;
    }
    return std::sqrt(acc);
}

double vector_norm(std::span<const Complex> v) {
    double acc = 0;
    for (const auto &x : v) {
        acc += std::norm(x);
    }
    return std::sqrt(acc);
}

double vector_norm(std::span<const double> v) {
    double acc = 0;
    for (double x : v) {
        acc += x * x;
    }
    return std::sqrt(acc);
}

double hermiticity_defect(const CMatrix &a) {
    if (!a.is_square()) {
        throw std::invalid_argument("hermiticity check on non-square matrix " + describe_shape(a.rows(), a.cols()));
    }
    double worst = 0;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = r; c < a.cols(); c++) {
            worst = std::max(worst, std::abs(a(r, c) - std::conj(a(c, r))));
        }
    }
    return worst;
}

RMatrix transpose(const RMatrix &a) {
    RMatrix out(a.cols(), a.rows());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            out(c, r) = a(r, c);
        }
    }
    return out;
}

RMatrix matmul(const RMatrix &a, const RMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: dimension mismatch " + describe_shape(a.rows(), a.cols()) + " * " +
                                    describe_shape(b.rows(), b.cols()));
    }
    RMatrix out(a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        auto out_row = out.row(r);
        for (size_t k = 0; k < a.cols(); k++) {
            double x = a(r, k);
            if (x == 0) {
                continue;
            }
            auto b_row = b.row(k);
            for (size_t c = 0; c < b.cols(); c++) {
                out_row[c] += x * b_row[c];
            }
        }
    }
    return out;
}

RVector matvec(const RMatrix &a, std::span<const double> v) {
    if (a.cols() != v.size()) {
        throw std::invalid_argument("matvec: dimension mismatch");
    }
    RVector out(a.rows());
    for (size_t r = 0; r < a.rows(); r++) {
        auto row = a.row(r);
        out[r] = std::inner_product(row.begin(), row.end(), v.begin(), 0.0);
    }
    return out;
}

RMatrix vstack(std::span<const RMatrix> blocks) {
    if (blocks.empty()) {
        return {};
    }
    size_t cols = blocks.front().cols();
    size_t rows = 0;
    for (const auto &b : blocks) {
        if (b.cols() != cols) {
            throw std::invalid_argument("vstack: column count mismatch");
        }
        rows += b.rows();
    }
    std::vector<double> data;
    data.reserve(rows * cols);
    for (const auto &b : blocks) {
        data.insert(data.end(), b.entries().begin(), b.entries().end());
    }
    return RMatrix(rows, cols, std::move(data));
}

RMatrix realify(const CMatrix &a) {
    size_t m = a.rows();
    size_t n = a.cols();
    RMatrix out(2 * m, 2 * n);
    for (size_t r = 0; r < m; r++) {
        for (size_t c = 0; c < n; c++) {
            double re = a(r, c).real();
            double im = a(r, c).imag();
            out(r, c) = re;
            out(r, c + n) = -im;
            out(r + m, c) = im;
            out(r + m, c + n) = re;
        }
    }
    return out;
}

HermitianEigen hermitian_eigen(const CMatrix &a, double tol) {
    if (!a.is_square()) {
        throw std::invalid_argument("hermitian_eigen: matrix is " + describe_shape(a.rows(), a.cols()));
    }
    double defect = hermiticity_defect(a);
    if (defect > tol) {
        throw std::invalid_argument("hermitian_eigen: input is not Hermitian (defect " + std::to_string(defect) +
                                    " > tol " + std::to_string(tol) + ")");
    }
    size_t n = a.rows();
    CMatrix work = a;
    for (size_t r = 0; r < n; r++) {
        work(r, r) = work(r, r).real();
        for (size_t c = r + 1; c < n; c++) {
            Complex avg = 0.5 * (work(r, c) + std::conj(work(c, r)));
            work(r, c) = avg;
            work(c, r) = std::conj(avg);
        }
    }
    CMatrix vecs = CMatrix::identity(n);

    double scale = frobenius_norm(work);
    auto off_norm = [&]() {
        double acc = 0;
        for (size_t r = 0; r < n; r++) {
            for (size_t c = r + 1; c < n; c++) {
                acc += std::norm(work(r, c));
            }
        }
        return std::sqrt(2 * acc);
    };

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    while (scale > 0 && off_norm() > 1e-15 * scale) {
        if (++sweep > kMaxSweeps) {
            throw NumericalError("hermitian_eigen: Jacobi iteration did not converge");
        }
        for (size_t p = 0; p + 1 < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                Complex apq = work(p, q);
                double mag = std::abs(apq);
                if (mag <= 1e-300 || mag < 1e-18 * scale) {
                    continue;
                }
                Complex phase = apq / mag;
                double app = work(p, p).real();
                double aqq = work(q, q).real();
                double theta = (aqq - app) / (2 * mag);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1);
                double s = t * c;

                // Rotation J = diag(1, conj(phase)) * [[c, s], [-s, c]] in the (p, q) plane.
                Complex jpp = c;
                Complex jpq = s;
                Complex jqp = -s * std::conj(phase);
                Complex jqq = c * std::conj(phase);

                for (size_t r = 0; r < n; r++) {
                    Complex xp = work(r, p);
                    Complex xq = work(r, q);
                    work(r, p) = xp * jpp + xq * jqp;
                    work(r, q) = xp * jpq + xq * jqq;
                    Complex vp = vecs(r, p);
                    Complex vq = vecs(r, q);
                    vecs(r, p) = vp * jpp + vq * jqp;
                    vecs(r, q) = vp * jpq + vq * jqq;
                }
                for (size_t c2 = 0; c2 < n; c2++) {
                    Complex xp = work(p, c2);
                    Complex xq = work(q, c2);
                    work(p, c2) = std::conj(jpp) * xp + std::conj(jqp) * xq;
                    work(q, c2) = std::conj(jpq) * xp + std::conj(jqq) * xq;
                }
                work(p, q) = 0;
                work(q, p) = 0;
                work(p, p) = work(p, p).real();
                work(q, q) = work(q, q).real();
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t x, size_t y) { return work(x, x).real() < work(y, y).real(); });
    HermitianEigen result{RVector(n), CMatrix(n, n)};
    for (size_t k = 0; k < n; k++) {
        result.values[k] = work(order[k], order[k]).real();
        for (size_t r = 0; r < n; r++) {
            result.vectors(r, k) = vecs(r, order[k]);
        }
    }
    return result;
}

RVector hermitian_eigenvalues(const CMatrix &a, double tol) {
    return hermitian_eigen(a, tol).values;
}

size_t rank_psd(const CMatrix &gram, double rel_tol) {
    if (gram.rows() == 0) {
        return 0;
    }
    // Gram matrices built from floating-point inner products carry roundoff-level asymmetry.
    double tol = std::max(kDefaultResidualTol, 1e-12 * frobenius_norm(gram));
    RVector values = hermitian_eigenvalues(gram, tol);
    double top = values.back();
    if (top <= 0) {
        return 0;
    }
    return static_cast<size_t>(
        std::count_if(values.begin(), values.end(), [&](double v) { return v > rel_tol * top; }));
}

namespace {

struct PivotedQR {
    size_t rows = 0;
    size_t cols = 0;
    size_t rank = 0;
    std::vector<double> a;  // column-major; upper triangle holds R
    std::vector<size_t> perm;

    double &at(size_t r, size_t c) {
        return a[c * rows + r];
    }
};

PivotedQR pivoted_qr(const RMatrix &m, double rel_tol) {
    PivotedQR qr;
    qr.rows = m.rows();
    qr.cols = m.cols();
    qr.a.resize(qr.rows * qr.cols);
    for (size_t r = 0; r < qr.rows; r++) {
        for (size_t c = 0; c < qr.cols; c++) {
            qr.at(r, c) = m(r, c);
        }
    }
    qr.perm.resize(qr.cols);
    std::iota(qr.perm.begin(), qr.perm.end(), 0);

    double threshold = rel_tol * frobenius_norm(m);
    std::vector<double> norm2(qr.cols, 0.0);
    for (size_t c = 0; c < qr.cols; c++) {
        const double *col = &qr.a[c * qr.rows];
        for (size_t r = 0; r < qr.rows; r++) {
            norm2[c] += col[r] * col[r];
        }
    }

    size_t limit = std::min(qr.rows, qr.cols);
    std::vector<double> v(qr.rows);
    size_t k = 0;
    for (; k < limit; k++) {
        size_t pivot = k;
        for (size_t c = k + 1; c < qr.cols; c++) {
            if (norm2[c] > norm2[pivot]) {
                pivot = c;
            }
        }
        if (!(std::sqrt(norm2[pivot]) > threshold)) {
            break;
        }
        if (pivot != k) {
            std::swap_ranges(qr.a.begin() + pivot * qr.rows, qr.a.begin() + (pivot + 1) * qr.rows,
                             qr.a.begin() + k * qr.rows);
            std::swap(norm2[pivot], norm2[k]);
            std::swap(qr.perm[pivot], qr.perm[k]);
        }

        double *col = &qr.a[k * qr.rows];
        double xnorm = 0;
        for (size_t r = k; r < qr.rows; r++) {
            xnorm += col[r] * col[r];
        }
        xnorm = std::sqrt(xnorm);
        double alpha = col[k] > 0 ? -xnorm : xnorm;
        double vtv = 0;
        for (size_t r = k; r < qr.rows; r++) {
            v[r] = col[r];
        }
        v[k] -= alpha;
        for (size_t r = k; r < qr.rows; r++) {
            vtv += v[r] * v[r];
        }
        col[k] = alpha;
        for (size_t r = k + 1; r < qr.rows; r++) {
            col[r] = 0;
        }
        for (size_t c = k + 1; c < qr.cols; c++) {
            double *other = &qr.a[c * qr.rows];
            if (vtv > 0) {
                double s = 0;
                for (size_t r = k; r < qr.rows; r++) {
                    s += v[r] * other[r];
                }
                s *= 2 / vtv;
                for (size_t r = k; r < qr.rows; r++) {
                    other[r] -= s * v[r];
                }
            }
            double tail = 0;
            for (size_t r = k + 1; r < qr.rows; r++) {
                tail += other[r] * other[r];
            }
            norm2[c] = tail;
        }
    }
    qr.rank = k;
    return qr;
}

void orthonormalize(std::vector<RVector> &basis) {
    for (size_t k = 0; k < basis.size(); k++) {
        // Two passes of modified Gram-Schmidt.
        for (int pass = 0; pass < 2; pass++) {
            for (size_t j = 0; j < k; j++) {
                double d = std::inner_product(basis[j].begin(), basis[j].end(), basis[k].begin(), 0.0);
                for (size_t r = 0; r < basis[k].size(); r++) {
                    basis[k][r] -= d * basis[j][r];
                }
            }
        }
        double nrm = vector_norm(basis[k]);
        if (!(nrm > 0)) {
            throw NumericalError("real_nullspace: degenerate null-space vector");
        }
        for (auto &x : basis[k]) {
            x /= nrm;
        }
    }
}

}  // namespace

std::vector<RVector> real_nullspace(const RMatrix &m, double rel_tol) {
    PivotedQR qr = pivoted_qr(m, rel_tol);
    size_t rank = qr.rank;
    size_t free = qr.cols - rank;
    std::vector<RVector> basis;
    basis.reserve(free);
    for (size_t f = 0; f < free; f++) {
        // Solve R11 y = -R12[:, f] by back substitution.
        RVector y(rank);
        for (size_t i = rank; i-- > 0;) {
            double acc = -qr.at(i, rank + f);
            for (size_t j = i + 1; j < rank; j++) {
                acc -= qr.at(i, j) * y[j];
            }
            y[i] = acc / qr.at(i, i);
        }
        RVector x(qr.cols, 0.0);
        for (size_t i = 0; i < rank; i++) {
            x[qr.perm[i]] = y[i];
        }
        x[qr.perm[rank + f]] = 1.0;
        basis.push_back(std::move(x));
    }
    orthonormalize(basis);
    return basis;
}

size_t real_rank(const RMatrix &m, double rel_tol) {
    return pivoted_qr(m, rel_tol).rank;
}

}  // namespace werner
