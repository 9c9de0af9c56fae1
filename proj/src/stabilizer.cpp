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

#include "werner/stabilizer.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numeric>

#include "werner/pauli.hpp"

namespace werner {

namespace {

std::string_view trim(std::string_view s, size_t &offset) {
    size_t start = 0;
    while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) {
        start++;
    }
    size_t end = s.size();
    while (end > start && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
        end--;
    }
    offset += start;
    return s.substr(start, end - start);
}

}  // namespace

RVector flatten(const LocalAlgebraElement &x) {
    RVector out;
    out.reserve(3 * x.size());
    for (const auto &axes : x) {
        out.insert(out.end(), axes.begin(), axes.end());
    }
    return out;
}

LocalAlgebraElement unflatten(std::span<const double> v, size_t n) {
    if (v.size() != 3 * n) {
        throw std::invalid_argument("unflatten: expected 3n coordinates");
    }
    LocalAlgebraElement out(n);
    for (size_t k = 0; k < n; k++) {
        for (size_t b = 0; b < 3; b++) {
            out[k][b] = v[3 * k + b];
        }
    }
    return out;
}

double stabilizer_residual(const CMatrix &rho, const LocalAlgebraElement &x) {
    size_t n = qubit_count(rho);
    if (x.size() != n) {
        throw std::invalid_argument("stabilizer_residual: element has wrong qubit count");
    }
    CMatrix h(rho.rows(), rho.cols());
    for (size_t k = 0; k < n; k++) {
        CMatrix local(2, 2);
        for (int b = 1; b <= 3; b++) {
            local += Complex(0, -x[k][b - 1]) * sigma(b);
        }
        h += embed_single(local, k + 1, n);
    }
    return frobenius_norm(commutator(h, rho));
}

StabilizerBasis stabilizer_algebra(const CMatrix &rho, double rel_tol) {
    size_t n = qubit_count(rho);
    PauliVector s = expand(rho, n, 1e-10);
    size_t dim = pow4(n);
    RMatrix map(dim, 3 * n);
    for (size_t flat = 0; flat < dim; flat++) {
        double coeff = s[flat];
        if (coeff == 0) {
            continue;
        }
        MultiIndex4 index = MultiIndex4::from_flat(flat, n);
        for (size_t k = 0; k < n; k++) {
            int d = index[k];
            for (int b = 1; b <= 3; b++) {
                if (d == 0 || d == b) {
                    continue;
                }
                int c = 6 - b - d;
                size_t shift = 2 * (n - 1 - k);
                size_t target = (flat & ~(size_t{3} << shift)) | (static_cast<size_t>(c) << shift);
                map(target, 3 * k + (b - 1)) += commutator_coefficient(b, d, c) * coeff;
            }
        }
    }
    StabilizerBasis out;
    out.n = n;
    for (const auto &v : real_nullspace(map, rel_tol)) {
        out.basis.push_back(unflatten(v, n));
    }
    return out;
}

std::vector<LocalAlgebraElement> delta_generators(const Partition &d) {
    std::vector<LocalAlgebraElement> out;
    size_t n = static_cast<size_t>(d.n());
    for (const auto &block : d.blocks()) {
        for (size_t b = 0; b < 3; b++) {
            LocalAlgebraElement x(n, {0.0, 0.0, 0.0});
            for (int q : block) {
                x[q - 1][b] = 1.0;
            }
            out.push_back(std::move(x));
        }
    }
    return out;
}

size_t delta_d_dimension(const Partition &d) {
    return 3 * d.num_blocks();
}

std::vector<PartitionTerm> parse_terms(std::string_view text) {
    std::vector<PartitionTerm> out;
    size_t start = 0;
    while (start <= text.size()) {
        size_t stop = text.find(';', start);
        if (stop == std::string_view::npos) {
            stop = text.size();
        }
        std::string_view piece = text.substr(start, stop - start);
        size_t colon = piece.find(':');
        if (colon == std::string_view::npos) {
            throw ParseError(start, "term is missing ':' between diagram and coefficient");
        }
        size_t diagram_offset = start;
        std::string_view diagram_text = trim(piece.substr(0, colon), diagram_offset);
        size_t coeff_offset = start + colon + 1;
        std::string_view coeff_text = trim(piece.substr(colon + 1), coeff_offset);

        Partition diagram;
        try {
            diagram = parse_partition(diagram_text);
        } catch (const ParseError &e) {
            throw ParseError(diagram_offset + e.position(), e.detail());
        }
        double coeff = 0;
        auto [ptr, ec] = std::from_chars(coeff_text.data(), coeff_text.data() + coeff_text.size(), coeff);
        if (ec != std::errc() || ptr != coeff_text.data() + coeff_text.size() || !std::isfinite(coeff)) {
            throw ParseError(coeff_offset, "malformed coefficient '" + std::string(coeff_text) + "'");
        }
        if (!out.empty() && out.front().diagram.n() != diagram.n()) {
            throw ParseError(diagram_offset, "all diagrams in a term list must have the same number of points");
        }
        out.push_back({std::move(diagram), coeff});
        start = stop + 1;
    }
    return out;
}

std::vector<MatchingTerm> to_matching_terms(const std::vector<PartitionTerm> &terms) {
    std::vector<MatchingTerm> out;
    for (const auto &t : terms) {
        out.push_back({Matching(t.diagram), t.coeff});
    }
    return out;
}

Partition glb_prediction(std::span<const PartitionTerm> terms, double tol) {
    std::vector<Partition> active;
    for (const auto &t : terms) {
        if (std::abs(t.coeff) > tol) {
            active.push_back(t.diagram);
        }
    }
    if (active.empty()) {
        throw std::invalid_argument("glb_prediction: every coefficient is zero");
    }
    return common_coarsening(active);
}

StabilizerReport stabilizer_conjecture_test(std::span<const PartitionTerm> terms, double tol, double rel_tol) {
    StabilizerReport report;
    report.glb = glb_prediction(terms);
    report.n = static_cast<size_t>(report.glb.n());
    report.predicted_dim = delta_d_dimension(report.glb);
    report.convex = std::all_of(terms.begin(), terms.end(), [](const auto &t) { return t.coeff >= 0; });

    size_t dim = pow2(report.n);
    CMatrix rho(dim, dim);
    for (const auto &t : terms) {
        if (static_cast<size_t>(t.diagram.n()) != report.n) {
            throw std::invalid_argument("stabilizer_conjecture_test: diagrams have different sizes");
        }
        if (t.coeff != 0) {
            rho += Complex(t.coeff) * diagram_density(t.diagram);
        }
    }
    double tr = trace(rho).real();
    if (std::abs(tr) > 1e-12) {
        rho *= Complex(1 / tr);
        report.trace = 1;
    } else {
        report.trace = tr;
    }
    report.min_eigenvalue = hermitian_eigenvalues(rho).front();

    StabilizerBasis computed = stabilizer_algebra(rho, rel_tol);
    report.computed_dim = computed.dim();
    std::vector<RVector> flat_basis;
    for (const auto &b : computed.basis) {
        flat_basis.push_back(flatten(b));
    }
    for (const auto &g : delta_generators(report.glb)) {
        RVector v = flatten(g);
        double nrm = vector_norm(v);
        for (auto &x : v) {
            x /= nrm;
        }
        for (const auto &b : flat_basis) {
            double d = std::inner_product(b.begin(), b.end(), v.begin(), 0.0);
            for (size_t k = 0; k < v.size(); k++) {
                v[k] -= d * b[k];
            }
        }
        report.containment_residual = std::max(report.containment_residual, vector_norm(v));
    }
    report.containment_ok = report.containment_residual < tol;
    report.match = report.computed_dim == report.predicted_dim;
    return report;
}

bool bipartition_criterion(std::span<const MatchingTerm> terms, double tol) {
    if (terms.empty()) {
        throw std::invalid_argument("bipartition_criterion: no terms");
    }
    int n = terms.front().diagram.n();
    if (n > 12) {
        throw std::invalid_argument("bipartition_criterion: n is capped at 12");
    }
    std::vector<const Matching *> active;
    for (const auto &t : terms) {
        if (t.diagram.n() != n) {
            throw std::invalid_argument("bipartition_criterion: matchings have different sizes");
        }
        if (std::abs(t.coeff) > tol) {
            active.push_back(&t.diagram);
        }
    }
    // Bit (x - 1) set means point x is on the side containing point 1.
    uint32_t full = (uint32_t{1} << n) - 1;
    for (uint32_t side = 1; side < full; side += 2) {
        bool crossed = false;
        for (const auto *m : active) {
            for (const auto &chord : m->chords()) {
                bool a = side & (uint32_t{1} << (chord[0] - 1));
                bool b = side & (uint32_t{1} << (chord[1] - 1));
                if (a != b) {
                    crossed = true;
                    break;
                }
            }
            if (crossed) {
                break;
            }
        }
        if (!crossed) {
            return false;
        }
    }
    return true;
}

size_t pure_stabilizer_dimension(const PureState &psi, double rel_tol) {
    size_t n = psi.n;
    size_t dim = pow2(n);
    if (psi.amps.size() != dim) {
        throw std::invalid_argument("pure_stabilizer_dimension: amplitude count is not 2^n");
    }
    // Columns: -i sigma_b^(k) psi for each (k, b), then -i psi for the phase.
    RMatrix map(2 * dim, 3 * n + 1);
    auto put = [&](size_t col, const CVector &v) {
        for (size_t r = 0; r < dim; r++) {
            Complex z = Complex(0, -1) * v[r];
            map(r, col) = z.real();
            map(dim + r, col) = z.imag();
        }
    };
    for (size_t k = 0; k < n; k++) {
        for (int b = 1; b <= 3; b++) {
            put(3 * k + (b - 1), matvec(embed_single(sigma(b), k + 1, n), psi.amps));
        }
    }
    put(3 * n, psi.amps);
    return real_nullspace(map, rel_tol).size();
}

PureStabilizerReport pure_stabilizer_cross_check(std::span<const MatchingTerm> terms, double rel_tol) {
    if (terms.empty()) {
        throw std::invalid_argument("pure_stabilizer_cross_check: no terms");
    }
    PureStabilizerReport report;
    report.n = static_cast<size_t>(terms.front().diagram.n());
    PureState psi{report.n, CVector(pow2(report.n))};
    for (const auto &t : terms) {
        if (static_cast<size_t>(t.diagram.n()) != report.n) {
            throw std::invalid_argument("pure_stabilizer_cross_check: matchings have different sizes");
        }
        PureState part = chord_state(t.diagram);
        for (size_t k = 0; k < psi.amps.size(); k++) {
            psi.amps[k] += t.coeff * part.amps[k];
        }
    }
    double nrm = psi.norm();
    if (!(nrm > 1e-12)) {
        throw std::invalid_argument("pure_stabilizer_cross_check: the combination is the zero vector");
    }
    for (auto &x : psi.amps) {
        x /= nrm;
    }
    report.computed_dim = pure_stabilizer_dimension(psi, rel_tol);
    report.criterion = bipartition_criterion(terms);
    report.match = (report.computed_dim == 3) == report.criterion;
    return report;
}

void to_json(nlohmann::json &j, const StabilizerReport &r) {
    j = nlohmann::json{{"n", r.n},
                       {"computed_dim", r.computed_dim},
                       {"predicted_dim", r.predicted_dim},
                       {"glb", r.glb.to_string()},
                       {"containment_ok", r.containment_ok},
                       {"containment_residual", r.containment_residual},
                       {"match", r.match},
                       {"trace", r.trace},
                       {"min_eigenvalue", r.min_eigenvalue},
                       {"convex", r.convex},
                       {"scope", r.scope}};
}

void to_json(nlohmann::json &j, const PureStabilizerReport &r) {
    j = nlohmann::json{{"n", r.n}, {"computed_dim", r.computed_dim}, {"criterion", r.criterion}, {"match", r.match}};
}

}  // namespace werner
