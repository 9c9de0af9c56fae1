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

#include "werner/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace werner {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

// Orthonormal basis for the span of `vectors`, dropping directions whose
// residual norm falls below rel_tol times the largest input norm.
std::vector<RVector> orthonormal_span(const std::vector<RVector> &vectors, double rel_tol) {
    double largest = 0;
    for (const auto &v : vectors) {
        largest = std::max(largest, vector_norm(v));
    }
    std::vector<RVector> basis;
    for (const auto &v : vectors) {
        RVector w = v;
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &b : basis) {
                double d = dot(b, w);
                for (size_t k = 0; k < w.size(); k++) {
                    w[k] -= d * b[k];
                }
            }
        }
        double nrm = vector_norm(w);
        if (nrm > rel_tol * largest) {
            for (auto &x : w) {
                x /= nrm;
            }
            basis.push_back(std::move(w));
        }
    }
    return basis;
}

double distance_to_span(const std::vector<RVector> &orthonormal, const RVector &v) {
    RVector w = v;
    for (const auto &b : orthonormal) {
        double d = dot(b, w);
        for (size_t k = 0; k < w.size(); k++) {
            w[k] -= d * b[k];
        }
    }
    return vector_norm(w);
}

// Gram matrix of Pauli coefficient vectors under the Hilbert-Schmidt pairing.
CMatrix pauli_gram(const std::vector<RVector> &vectors, size_t n) {
    CMatrix gram(vectors.size(), vectors.size());
    double scale = static_cast<double>(pow2(n));
    for (size_t j = 0; j < vectors.size(); j++) {
        for (size_t k = j; k < vectors.size(); k++) {
            double g = scale * dot(vectors[j], vectors[k]);
            gram(j, k) = g;
            gram(k, j) = g;
        }
    }
    return gram;
}

int digit_at(size_t flat, size_t n, size_t k) {
    return static_cast<int>((flat >> (2 * (n - 1 - k))) & 3);
}

size_t with_digit(size_t flat, size_t n, size_t k, int digit) {
    size_t shift = 2 * (n - 1 - k);
    return (flat & ~(size_t{3} << shift)) | (static_cast<size_t>(digit) << shift);
}

}  // namespace

CMatrix collective_generator(size_t n, int a) {
    if (a < 1 || a > 3) {
        throw std::invalid_argument("collective_generator: a must be 1, 2 or 3");
    }
    if (n < 1) {
        throw std::invalid_argument("collective_generator: n must be positive");
    }
    size_t dim = pow2(n);
    CMatrix out(dim, dim);
    CMatrix s = sigma(a);
    for (size_t k = 1; k <= n; k++) {
        out += embed_single(s, k, n);
    }
    return out;
}

CMatrix haar_su2(std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    double q[4];
    double nrm = 0;
    do {
        nrm = 0;
        for (double &x : q) {
            x = gauss(rng);
            nrm += x * x;
        }
    } while (nrm < 1e-24);
    nrm = std::sqrt(nrm);
    for (double &x : q) {
        x /= nrm;
    }
    return CMatrix{{Complex(q[0], q[1]), Complex(q[2], q[3])}, {Complex(-q[2], q[3]), Complex(q[0], -q[1])}};
}

CMatrix conjugate_collective(const CMatrix &rho, const CMatrix &g) {
    size_t n = qubit_count(rho);
    CMatrix big = g;
    for (size_t k = 1; k < n; k++) {
        big = kron(big, g);
    }
    return matmul(matmul(big, rho), dagger(big));
}

CMatrix monte_carlo_twirl(const CMatrix &rho, size_t samples, uint64_t seed) {
    if (samples == 0) {
        throw std::invalid_argument("monte_carlo_twirl: need at least one sample");
    }
    std::mt19937_64 rng(seed);
    CMatrix acc(rho.rows(), rho.cols());
    for (size_t s = 0; s < samples; s++) {
        acc += conjugate_collective(rho, haar_su2(rng));
    }
    acc *= Complex(1.0 / static_cast<double>(samples));
    return acc;
}

double werner_residual(const CMatrix &rho) {
    size_t n = qubit_count(rho);
    double worst = 0;
    for (int a = 1; a <= 3; a++) {
        worst = std::max(worst, frobenius_norm(commutator(collective_generator(n, a), rho)));
    }
    return worst;
}

WernerReport is_werner(const CMatrix &rho, double tol, size_t samples, uint64_t seed) {
    if (!(tol > 0)) {
        throw std::invalid_argument("is_werner: tol must be positive");
    }
    if (hermiticity_defect(rho) > 1e-10 * std::max(1.0, frobenius_norm(rho))) {
        throw std::invalid_argument("is_werner: input is not Hermitian");
    }
    WernerReport report;
    report.n = qubit_count(rho);
    report.tol = tol;
    report.samples = samples;
    report.seed = seed;
    report.residual = werner_residual(rho);
    std::mt19937_64 rng(seed);
    for (size_t s = 0; s < samples; s++) {
        CMatrix g = haar_su2(rng);
        report.random_check_max = std::max(report.random_check_max, frobenius_norm(conjugate_collective(rho, g) - rho));
    }
    report.is_werner = report.residual < tol && report.random_check_max < tol;
    return report;
}

double pure_werner_residual(const PureState &psi) {
    double worst = 0;
    for (int a = 1; a <= 3; a++) {
        worst = std::max(worst, vector_norm(matvec(collective_generator(psi.n, a), psi.amps)));
    }
    return worst;
}

RMatrix commutator_map(size_t n) {
    size_t dim = pow4(n);
    RMatrix out(3 * dim, dim);
    for (size_t col = 0; col < dim; col++) {
        for (int a = 1; a <= 3; a++) {
            for (size_t k = 0; k < n; k++) {
                int d = digit_at(col, n, k);
                if (d == 0 || d == a) {
                    continue;
                }
                int c = 6 - a - d;
                out((a - 1) * dim + with_digit(col, n, k, c), col) += commutator_coefficient(a, d, c);
            }
        }
    }
    return out;
}

WernerSpace::WernerSpace(size_t n, double rel_tol) : n_(n) {
    if (n < 1 || n > 8) {
        throw std::invalid_argument("WernerSpace: n must be in 1..8");
    }
    for (size_t support = 0; support < pow2(n); support++) {
        std::vector<size_t> positions;
        for (size_t k = 0; k < n; k++) {
            if (support & (size_t{1} << (n - 1 - k))) {
                positions.push_back(k);
            }
        }
        size_t width = positions.size();
        size_t count = 1;
        for (size_t j = 0; j < width; j++) {
            count *= 3;
        }
        // Local index: base-3 digits (d - 1) over the support positions.
        std::vector<size_t> flat_of(count);
        for (size_t local = 0; local < count; local++) {
            size_t flat = 0;
            size_t rest = local;
            for (size_t j = width; j-- > 0;) {
                flat = with_digit(flat, n, positions[j], static_cast<int>(rest % 3) + 1);
                rest /= 3;
            }
            flat_of[local] = flat;
        }
        auto local_of = [&](size_t flat) {
            size_t local = 0;
            for (size_t k : positions) {
                local = local * 3 + static_cast<size_t>(digit_at(flat, n, k) - 1);
            }
            return local;
        };
        RMatrix block(3 * count, count);
        for (size_t local = 0; local < count; local++) {
            size_t flat = flat_of[local];
            for (int a = 1; a <= 3; a++) {
                for (size_t k : positions) {
                    int d = digit_at(flat, n, k);
                    if (d == a) {
                        continue;
                    }
                    int c = 6 - a - d;
                    block((a - 1) * count + local_of(with_digit(flat, n, k, c)), local) +=
                        commutator_coefficient(a, d, c);
                }
            }
        }
        for (const auto &v : real_nullspace(block, rel_tol)) {
            RVector full(pow4(n), 0.0);
            for (size_t local = 0; local < count; local++) {
                full[flat_of[local]] = v[local];
            }
            basis_.push_back(std::move(full));
        }
    }
}

PauliVector WernerSpace::project(const PauliVector &v) const {
    if (v.n != n_ || v.coeffs.size() != pow4(n_)) {
        throw std::invalid_argument("WernerSpace::project: qubit count mismatch");
    }
    PauliVector out = PauliVector::zero(n_);
    for (const auto &b : basis_) {
        double d = dot(b, v.coeffs);
        for (size_t k = 0; k < b.size(); k++) {
            out.coeffs[k] += d * b[k];
        }
    }
    return out;
}

CMatrix WernerSpace::project(const CMatrix &rho) const {
    return reconstruct(project(expand(rho, n_, 1e-10)));
}

double WernerSpace::distance(const PauliVector &v) const {
    PauliVector p = project(v);
    double acc = 0;
    for (size_t k = 0; k < p.coeffs.size(); k++) {
        double d = v.coeffs[k] - p.coeffs[k];
        acc += d * d;
    }
    return std::sqrt(acc);
}

size_t commutant_dimension(size_t n, double rel_tol) {
    return WernerSpace(n, rel_tol).dimension();
}

size_t pure_werner_dimension(size_t n, double rel_tol) {
    if (n < 1 || n > 12) {
        throw std::invalid_argument("pure_werner_dimension: n must be in 1..12");
    }
    // J_3 is diagonal with entry (#zeros - #ones), so its kernel is spanned by
    // the balanced basis strings. J_1 and J_2 are stacked on that kernel; rows
    // they cannot reach are identically zero and are dropped.
    size_t dim = pow2(n);
    std::vector<size_t> columns;
    for (size_t idx = 0; idx < dim; idx++) {
        if (2 * static_cast<size_t>(std::popcount(idx)) == n) {
            columns.push_back(idx);
        }
    }
    if (columns.empty()) {
        return 0;
    }
    std::vector<size_t> row_of(dim, SIZE_MAX);
    size_t rows = 0;
    for (size_t idx = 0; idx < dim; idx++) {
        size_t w = static_cast<size_t>(std::popcount(idx));
        if (2 * w == n + 2 || 2 * w + 2 == n) {
            row_of[idx] = rows++;
        }
    }
    CMatrix stacked(2 * rows, columns.size());
    for (size_t j = 0; j < columns.size(); j++) {
        size_t idx = columns[j];
        for (size_t k = 0; k < n; k++) {
            size_t bit = size_t{1} << (n - 1 - k);
            size_t target = idx ^ bit;
            bool was_one = idx & bit;
            stacked(row_of[target], j) += 1;                                           // sigma_x
            stacked(rows + row_of[target], j) += was_one ? Complex(0, -1) : Complex(0, 1);  // sigma_y
        }
    }
    size_t real_dim = real_nullspace(realify(stacked), rel_tol).size();
    if (real_dim % 2 != 0) {
        throw NumericalError("pure_werner_dimension: realified null space has odd dimension");
    }
    return real_dim / 2;
}

CMatrix twirl_project(const CMatrix &rho) {
    return WernerSpace(qubit_count(rho)).project(rho);
}

GramResult gram_rank_test(std::span<const CMatrix> states, double rel_tol) {
    GramResult out;
    out.gram = CMatrix(states.size(), states.size());
    for (size_t j = 0; j < states.size(); j++) {
        for (size_t k = j; k < states.size(); k++) {
            Complex g = hs_inner(states[j], states[k]);
            out.gram(j, k) = g;
            out.gram(k, j) = std::conj(g);
        }
    }
    if (states.empty()) {
        return out;
    }
    out.eigenvalues = hermitian_eigenvalues(out.gram, std::max(kDefaultResidualTol, 1e-12 * frobenius_norm(out.gram)));
    out.rank = rank_psd(out.gram, rel_tol);
    return out;
}

GramResult pure_gram_rank_test(std::span<const PureState> states, double rel_tol) {
    GramResult out;
    out.gram = CMatrix(states.size(), states.size());
    for (size_t j = 0; j < states.size(); j++) {
        for (size_t k = j; k < states.size(); k++) {
            if (states[j].amps.size() != states[k].amps.size()) {
                throw std::invalid_argument("pure_gram_rank_test: states have different qubit counts");
            }
            Complex g{};
            for (size_t r = 0; r < states[j].amps.size(); r++) {
                g += std::conj(states[j].amps[r]) * states[k].amps[r];
            }
            out.gram(j, k) = g;
            out.gram(k, j) = std::conj(g);
        }
    }
    if (states.empty()) {
        return out;
    }
    out.eigenvalues = hermitian_eigenvalues(out.gram);
    out.rank = rank_psd(out.gram, rel_tol);
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Consistent:
            return "consistent";
        case Verdict::RefutedIndependence:
            return "refuted-independence";
        case Verdict::RefutedSpan:
            return "refuted-span";
    }
    return "unknown";
}

ConjectureReport conjecture_test(size_t n, const ConjectureOptions &options) {
    if (n < 1) {
        throw std::invalid_argument("conjecture_test: n must be positive");
    }
    if (n > 5 && !options.allow_large) {
        throw std::invalid_argument("conjecture_test: n > 5 needs allow_large (--force)");
    }
    ConjectureReport report;
    report.n = n;
    report.catalan = catalan(static_cast<int>(n));

    WernerSpace space(n, options.rel_tol);
    report.commutant_dim = space.dimension();

    std::vector<CMatrix> states;
    std::vector<double> span_distance;
    for (const auto &d : enumerate_noncrossing_partitions(static_cast<int>(n))) {
        report.diagrams.push_back(d.to_string());
        states.push_back(diagram_density(d));
        report.max_werner_residual = std::max(report.max_werner_residual, werner_residual(states.back()));
        span_distance.push_back(space.distance(expand(states.back(), n, 1e-10)));
    }
    report.num_diagrams = states.size();
    report.gram = gram_rank_test(states, options.rel_tol);
    report.gram_rank = report.gram.rank;

    double lambda_max = report.gram.eigenvalues.empty() ? 0.0 : report.gram.eigenvalues.back();
    for (double dist : span_distance) {
        report.max_span_residual = std::max(report.max_span_residual, static_cast<double>(pow2(n)) * dist * dist);
    }
    report.all_werner = report.max_werner_residual < options.residual_tol;
    report.all_in_span = report.max_span_residual <= options.rel_tol * lambda_max;

    if (!report.all_werner || !report.all_in_span) {
        report.verdict = Verdict::RefutedSpan;
    } else if (report.gram_rank < report.num_diagrams) {
        report.verdict = Verdict::RefutedIndependence;
    } else if (report.gram_rank != report.commutant_dim || report.num_diagrams != report.catalan) {
        report.verdict = Verdict::RefutedSpan;
    } else {
        report.verdict = Verdict::Consistent;
    }
    return report;
}

double permutation_defect(const CMatrix &rho) {
    size_t n = qubit_count(rho);
    double worst = 0;
    for (size_t k = 1; k < n; k++) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        std::swap(perm[k - 1], perm[k]);
        worst = std::max(worst, frobenius_norm(permute_qubits(rho, perm) - rho));
    }
    return worst;
}

SymmetricReport symmetric_werner_test(size_t n, double tol, double rel_tol) {
    if (n < 1 || n > 6) {
        throw std::invalid_argument("symmetric_werner_test: n must be in 1..6");
    }
    SymmetricReport report;
    report.n = n;
    report.expected_dim = n / 2 + 1;
    WernerSpace space(n, rel_tol);

    std::vector<RVector> twirled;
    for (size_t n1 = 0; n1 <= n; n1++) {
        for (size_t n2 = 0; n1 + n2 <= n; n2++) {
            for (size_t n3 = 0; n1 + n2 + n3 <= n; n3++) {
                twirled.push_back(space.project(sym_pauli(n1, n2, n3, n)).coeffs);
            }
        }
    }
    report.symmetric_werner_dim = rank_psd(pauli_gram(twirled, n), rel_tol);
    auto sym_span = orthonormal_span(twirled, std::sqrt(rel_tol));

    std::vector<RVector> radial;
    bool radial_ok = true;
    for (size_t m = 0; 2 * m <= n; m++) {
        PauliVector v = radial_pauli(m, n);
        CMatrix rho = reconstruct(v);
        RadialCheck check{m, werner_residual(rho), permutation_defect(rho)};
        radial_ok = radial_ok && check.werner_residual < tol && check.permutation_defect < tol;
        report.radial.push_back(check);
        report.radial_span_residual =
            std::max(report.radial_span_residual, distance_to_span(sym_span, v.coeffs) / vector_norm(v.coeffs));
        radial.push_back(std::move(v.coeffs));
    }
    report.radial_rank = rank_psd(pauli_gram(radial, n), rel_tol);
    report.ok = radial_ok && report.symmetric_werner_dim == report.expected_dim &&
                report.radial_rank == report.expected_dim && report.radial_span_residual < std::sqrt(rel_tol);
    return report;
}

void to_json(nlohmann::json &j, const WernerReport &r) {
    j = nlohmann::json{{"n", r.n},
                       {"residual", r.residual},
                       {"random_check_max", r.random_check_max},
                       {"is_werner", r.is_werner},
                       {"tol", r.tol},
                       {"samples", r.samples},
                       {"seed", r.seed}};
}

void to_json(nlohmann::json &j, const ConjectureReport &r) {
    j = nlohmann::json{{"n", r.n},
                       {"num_diagrams", r.num_diagrams},
                       {"gram_rank", r.gram_rank},
                       {"catalan", r.catalan},
                       {"commutant_dim", r.commutant_dim},
                       {"verdict", to_string(r.verdict)},
                       {"max_werner_residual", r.max_werner_residual},
                       {"max_span_residual", r.max_span_residual},
                       {"all_werner", r.all_werner},
                       {"all_in_span", r.all_in_span},
                       {"diagrams", r.diagrams},
                       {"gram_eigenvalues", r.gram.eigenvalues}};
}

void to_json(nlohmann::json &j, const SymmetricReport &r) {
    nlohmann::json radial = nlohmann::json::array();
    for (const auto &c : r.radial) {
        radial.push_back({{"m", c.m}, {"werner_residual", c.werner_residual}, {"permutation_defect", c.permutation_defect}});
    }
    j = nlohmann::json{{"n", r.n},
                       {"expected_dim", r.expected_dim},
                       {"symmetric_werner_dim", r.symmetric_werner_dim},
                       {"radial_rank", r.radial_rank},
                       {"radial_span_residual", r.radial_span_residual},
                       {"radial", radial},
                       {"ok", r.ok}};
}

}  // namespace werner
