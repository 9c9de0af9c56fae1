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

// Independent reference implementations used only by the tests. Everything
// here is built on Eigen or on brute-force enumeration and shares no code
// path with the library beyond the plain data types.

#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include "werner/diagrams.hpp"
#include "werner/linalg.hpp"

namespace oracle {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXcd;
using cd = std::complex<double>;

inline MatrixXcd to_eigen(const werner::CMatrix &a) {
    MatrixXcd m(a.rows(), a.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            m(r, c) = a(r, c);
        }
    }
    return m;
}

inline MatrixXd to_eigen(const werner::RMatrix &a) {
    MatrixXd m(a.rows(), a.cols());
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c = 0; c < a.cols(); c++) {
            m(r, c) = a(r, c);
        }
    }
    return m;
}

inline werner::CMatrix from_eigen(const MatrixXcd &m) {
    werner::CMatrix a(m.rows(), m.cols());
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            a(r, c) = m(r, c);
        }
    }
    return a;
}

inline MatrixXcd pauli(int i) {
    MatrixXcd s(2, 2);
    const cd I(0, 1);
    switch (i) {
        case 0: s << 1, 0, 0, 1; break;
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, -I, I, 0; break;
        default: s << 1, 0, 0, -1; break;
    }
    return s;
}

inline MatrixXcd tensor_power(const MatrixXcd &g, size_t n) {
    MatrixXcd out = MatrixXcd::Identity(1, 1);
    for (size_t k = 0; k < n; k++) {
        out = Eigen::kroneckerProduct(out, g).eval();
    }
    return out;
}

inline MatrixXcd collective(size_t n, int a) {
    MatrixXcd sum = MatrixXcd::Zero(1 << n, 1 << n);
    for (size_t pos = 0; pos < n; pos++) {
        MatrixXcd term = MatrixXcd::Identity(1, 1);
        for (size_t k = 0; k < n; k++) {
            term = Eigen::kroneckerProduct(term, k == pos ? pauli(a) : pauli(0)).eval();
        }
        sum += term;
    }
    return sum;
}

/// Haar SU(2) from ZYZ Euler angles: density of beta is sin(beta)/2.
inline MatrixXcd haar_euler(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double alpha = 2 * std::numbers::pi * u(rng);
    double gamma = 2 * std::numbers::pi * u(rng);
    double beta = std::acos(1 - 2 * u(rng));
    auto rz = [](double t) {
        MatrixXcd m = MatrixXcd::Zero(2, 2);
        m(0, 0) = std::polar(1.0, -t / 2);
        m(1, 1) = std::polar(1.0, t / 2);
        return m;
    };
    MatrixXcd ry(2, 2);
    ry << std::cos(beta / 2), -std::sin(beta / 2), std::sin(beta / 2), std::cos(beta / 2);
    return rz(alpha) * ry * rz(gamma);
}

inline MatrixXcd monte_carlo_twirl(const MatrixXcd &rho, size_t n, size_t samples, uint64_t seed) {
    std::mt19937_64 rng(seed);
    MatrixXcd acc = MatrixXcd::Zero(rho.rows(), rho.cols());
    for (size_t s = 0; s < samples; s++) {
        MatrixXcd g = tensor_power(haar_euler(rng), n);
        acc += g * rho * g.adjoint();
    }
    return acc / static_cast<double>(samples);
}

inline size_t numeric_rank(const MatrixXcd &m, double rel_tol = 1e-8) {
    if (m.size() == 0) {
        return 0;
    }
    Eigen::BDCSVD<MatrixXcd> svd(m);
    auto s = svd.singularValues();
    double cut = rel_tol * std::max(1.0, s.size() ? s(0) : 0.0);
    size_t r = 0;
    for (Eigen::Index k = 0; k < s.size(); k++) {
        r += s(k) > cut;
    }
    return r;
}

inline size_t numeric_rank(const MatrixXd &m, double rel_tol = 1e-8) {
    return numeric_rank(MatrixXcd(m.cast<cd>()), rel_tol);
}

/// Complex dimension of {X : [J_a, X] = 0}; equals the real dimension of the
/// Hermitian commutant because the commutant is closed under adjoints.
inline size_t commutant_dimension(size_t n) {
    size_t d = size_t{1} << n;
    MatrixXcd stacked(3 * d * d, d * d);
    MatrixXcd id = MatrixXcd::Identity(d, d);
    for (int a = 1; a <= 3; a++) {
        MatrixXcd j = collective(n, a);
        // column-major vec: vec(JX - XJ) = (I kron J - J^T kron I) vec(X)
        stacked.middleRows((a - 1) * d * d, d * d) =
            Eigen::kroneckerProduct(id, j).eval() - Eigen::kroneckerProduct(j.transpose(), id).eval();
    }
    return d * d - numeric_rank(stacked);
}

inline size_t pure_dimension(size_t n) {
    size_t d = size_t{1} << n;
    MatrixXcd stacked(3 * d, d);
    for (int a = 1; a <= 3; a++) {
        stacked.middleRows((a - 1) * d, d) = collective(n, a);
    }
    return d - numeric_rank(stacked);
}

inline VectorXcd singlet() {
    VectorXcd v = VectorXcd::Zero(4);
    v(1) = 1 / std::numbers::sqrt2;
    v(2) = -1 / std::numbers::sqrt2;
    return v;
}

/// Product of singlets on (a1 b1)(a2 b2)... built in pair order, then the
/// qubits are relabelled onto their chord positions.
inline VectorXcd chord_state(const werner::Matching &m) {
    size_t n = static_cast<size_t>(m.n());
    VectorXcd prod = VectorXcd::Ones(1);
    std::vector<int> target;
    for (const auto &c : m.chords()) {
        prod = Eigen::kroneckerProduct(prod, singlet()).eval();
        target.push_back(c[0]);
        target.push_back(c[1]);
    }
    VectorXcd out = VectorXcd::Zero(prod.size());
    for (Eigen::Index idx = 0; idx < prod.size(); idx++) {
        size_t dest = 0;
        for (size_t pos = 0; pos < n; pos++) {
            size_t bit = (static_cast<size_t>(idx) >> (n - 1 - pos)) & 1;
            dest |= bit << (n - static_cast<size_t>(target[pos]));
        }
        out(dest) = prod(idx);
    }
    return out;
}

inline uint64_t catalan(int m) {
    std::vector<uint64_t> c(m + 1, 0);
    c[0] = 1;
    for (int k = 1; k <= m; k++) {
        for (int j = 0; j < k; j++) {
            c[k] += c[j] * c[k - 1 - j];
        }
    }
    return c[m];
}

/// All set partitions of {1..n} as block lists, via restricted growth strings.
inline std::vector<std::vector<std::vector<int>>> set_partitions(int n) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int used) {
        if (pos == n) {
            std::vector<std::vector<int>> blocks(used);
            for (int x = 0; x < n; x++) {
                blocks[rgs[x]].push_back(x + 1);
            }
            out.push_back(blocks);
            return;
        }
        for (int b = 0; b <= used; b++) {
            rgs[pos] = b;
            rec(pos + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

inline bool noncrossing(const std::vector<std::vector<int>> &blocks) {
    std::vector<int> owner(64, -1);
    int n = 0;
    for (size_t b = 0; b < blocks.size(); b++) {
        for (int x : blocks[b]) {
            owner[x] = static_cast<int>(b);
            n = std::max(n, x);
        }
    }
    for (int a = 1; a <= n; a++) {
        for (int b = a + 1; b <= n; b++) {
            for (int c = b + 1; c <= n; c++) {
                for (int d = c + 1; d <= n; d++) {
                    if (owner[a] == owner[c] && owner[b] == owner[d] && owner[a] != owner[b]) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

/// True when every proper bipartition (S, complement) is crossed by a chord
/// of some matching in the list.
inline bool every_cut_crossed(const std::vector<werner::Matching> &ms, int n) {
    for (uint32_t mask = 1; mask + 1 < (uint32_t{1} << n); mask++) {
        std::set<int> side;
        for (int x = 1; x <= n; x++) {
            if (mask & (uint32_t{1} << (x - 1))) {
                side.insert(x);
            }
        }
        bool crossed = false;
        for (const auto &m : ms) {
            for (const auto &c : m.chords()) {
                crossed = crossed || side.count(c[0]) != side.count(c[1]);
            }
        }
        if (!crossed) {
            return false;
        }
    }
    return true;
}

/// Connected components of the block-overlap graph, as sorted block lists.
inline std::set<std::set<int>> coarsening(const std::vector<werner::Partition> &ps, int n) {
    std::vector<std::set<int>> comps;
    for (int x = 1; x <= n; x++) {
        comps.push_back({x});
    }
    bool merged = true;
    while (merged) {
        merged = false;
        for (const auto &p : ps) {
            for (const auto &b : p.blocks()) {
                for (size_t i = 0; i < comps.size() && !merged; i++) {
                    for (size_t j = i + 1; j < comps.size() && !merged; j++) {
                        bool hit_i = false;
                        bool hit_j = false;
                        for (int x : b) {
                            hit_i = hit_i || comps[i].count(x);
                            hit_j = hit_j || comps[j].count(x);
                        }
                        if (hit_i && hit_j) {
                            comps[i].insert(comps[j].begin(), comps[j].end());
                            comps.erase(comps.begin() + static_cast<long>(j));
                            merged = true;
                        }
                    }
                }
            }
        }
    }
    return {comps.begin(), comps.end()};
}

inline std::set<std::set<int>> as_sets(const werner::Partition &p) {
    std::set<std::set<int>> out;
    for (const auto &b : p.blocks()) {
        out.insert({b.begin(), b.end()});
    }
    return out;
}

/// Permutation matrix sending qubit position k (0-based, in product order) to
/// qubit target[k] (1-based).
inline MatrixXcd relabel(const std::vector<int> &target) {
    size_t n = target.size();
    size_t d = size_t{1} << n;
    MatrixXcd p = MatrixXcd::Zero(d, d);
    for (size_t idx = 0; idx < d; idx++) {
        size_t dest = 0;
        for (size_t pos = 0; pos < n; pos++) {
            size_t bit = (idx >> (n - 1 - pos)) & 1;
            dest |= bit << (n - static_cast<size_t>(target[pos]));
        }
        p(dest, idx) = 1;
    }
    return p;
}

/// C_n as the normalized projector onto one eigenspace of the cyclic shift
/// (b1 b2 ... bn) -> (b2 ... bn b1). Only full-length orbits reach the
/// eigenvalue exp(-2 pi i / n), each contributing one direction.
inline MatrixXcd cn_from_shift(size_t n) {
    size_t d = size_t{1} << n;
    MatrixXcd shift = MatrixXcd::Zero(d, d);
    for (size_t idx = 0; idx < d; idx++) {
        size_t top = (idx >> (n - 1)) & 1;
        size_t rotated = ((idx << 1) & (d - 1)) | top;
        shift(rotated, idx) = 1;
    }
    cd w = std::polar(1.0, 2 * std::numbers::pi / static_cast<double>(n));
    MatrixXcd proj = MatrixXcd::Zero(d, d);
    MatrixXcd power = MatrixXcd::Identity(d, d);
    for (size_t k = 0; k < n; k++) {
        proj += std::pow(w, static_cast<double>(k)) * power;
        power = (shift * power).eval();
    }
    proj /= static_cast<double>(n);
    return proj / proj.trace();
}

/// Largest Frobenius norm of [J_a, rho] over a = 1..3.
inline double commutator_residual(const MatrixXcd &rho, size_t n) {
    double worst = 0;
    for (int a = 1; a <= 3; a++) {
        MatrixXcd j = collective(n, a);
        worst = std::max(worst, (j * rho - rho * j).norm());
    }
    return worst;
}

/// Real dimension of {(A_1..A_n) in su(2)^n : [sum_k A_k^(k), rho] = 0}.
inline size_t stabilizer_dimension(const MatrixXcd &rho, size_t n) {
    size_t d = size_t{1} << n;
    MatrixXd map(2 * d * d, 3 * n);
    for (size_t k = 0; k < n; k++) {
        for (int a = 1; a <= 3; a++) {
            MatrixXcd op = MatrixXcd::Identity(1, 1);
            for (size_t q = 0; q < n; q++) {
                op = Eigen::kroneckerProduct(op, q == k ? pauli(a) : pauli(0)).eval();
            }
            MatrixXcd c = op * rho - rho * op;
            Eigen::Map<const Eigen::VectorXcd> flat(c.data(), c.size());
            map.col(static_cast<Eigen::Index>(3 * k + (a - 1))) << flat.real(), flat.imag();
        }
    }
    return 3 * n - numeric_rank(map);
}

/// Same for a pure state up to phase, with Hermitian generators:
/// sum_k H_k^(k) psi = lambda psi for some real lambda.
inline size_t pure_stabilizer_dimension(const VectorXcd &psi, size_t n) {
    size_t d = size_t{1} << n;
    MatrixXd map(2 * d, 3 * n + 1);
    for (size_t k = 0; k < n; k++) {
        for (int a = 1; a <= 3; a++) {
            MatrixXcd op = MatrixXcd::Identity(1, 1);
            for (size_t q = 0; q < n; q++) {
                op = Eigen::kroneckerProduct(op, q == k ? pauli(a) : pauli(0)).eval();
            }
            VectorXcd v = op * psi;
            map.col(static_cast<Eigen::Index>(3 * k + (a - 1))) << v.real(), v.imag();
        }
    }
    map.col(static_cast<Eigen::Index>(3 * n)) << psi.real(), psi.imag();
    return 3 * n + 1 - numeric_rank(map);
}

}  // namespace oracle
