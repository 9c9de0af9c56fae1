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

#include "werner/suite.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>

#include "werner/stabilizer.hpp"

namespace werner {

namespace {

constexpr double kResidualTol = 1e-10;
constexpr double kMachineTol = 1e-12;
constexpr double kTwirlTol = 1e-2;

CheckResult make_result(int id, std::string title) {
    CheckResult r;
    r.id = id;
    r.title = std::move(title);
    return r;
}

std::string join(const std::vector<std::string> &parts, const std::string &sep) {
    std::string out;
    for (size_t k = 0; k < parts.size(); k++) {
        out += (k ? sep : "") + parts[k];
    }
    return out;
}

// Set partitions of {1..n} via restricted growth strings.
std::vector<Partition> all_set_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int used) {
        if (pos == n) {
            std::vector<Block> blocks(used);
            for (int x = 0; x < n; x++) {
                blocks[rgs[x]].push_back(x + 1);
            }
            out.emplace_back(n, std::move(blocks));
            return;
        }
        for (int b = 0; b <= used && b < n; b++) {
            rgs[pos] = b;
            rec(pos + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

bool crossing_by_quadruples(const Partition &p) {
    int n = p.n();
    for (int a = 1; a <= n; a++) {
        for (int b = a + 1; b <= n; b++) {
            for (int c = b + 1; c <= n; c++) {
                for (int d = c + 1; d <= n; d++) {
                    size_t ac = p.block_of(a);
                    size_t bd = p.block_of(b);
                    if (ac != bd && p.block_of(c) == ac && p.block_of(d) == bd) {
                        return true;
                    }
                }
            }
        }
    }
    return false;
}

bool bipartitions_all_crossed(const std::vector<Matching> &active, int n) {
    // Enumerate sides S containing point 1 as explicit sets.
    std::vector<std::set<int>> sides{{1}};
    for (int x = 2; x <= n; x++) {
        std::vector<std::set<int>> next;
        for (const auto &s : sides) {
            next.push_back(s);
            auto with = s;
            with.insert(x);
            next.push_back(with);
        }
        sides = std::move(next);
    }
    for (const auto &s : sides) {
        if (static_cast<int>(s.size()) == n) {
            continue;
        }
        bool crossed = false;
        for (const auto &m : active) {
            for (const auto &chord : m.chords()) {
                crossed = crossed || (s.count(chord[0]) != s.count(chord[1]));
            }
        }
        if (!crossed) {
            return false;
        }
    }
    return true;
}

CMatrix random_density(size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    size_t dim = pow2(n);
    CMatrix a(dim, dim);
    for (auto &x : a.entries()) {
        x = Complex(gauss(rng), gauss(rng));
    }
    CMatrix rho = matmul(a, dagger(a));
    rho *= Complex(1 / trace(rho).real());
    return rho;
}

CheckResult check_commutant_dimension() {
    CheckResult r = make_result(1, "Catalan dimension, mixed (commutant)");
    const std::vector<size_t> expected{1, 2, 5, 14, 42};
    std::vector<std::string> got;
    r.passed = true;
    for (size_t n = 1; n <= 5; n++) {
        size_t dim = commutant_dimension(n, kDefaultRankTol);
        got.push_back(std::to_string(dim));
        r.passed = r.passed && dim == expected[n - 1] && dim == catalan(static_cast<int>(n));
    }
    r.detail = "n=1..5 -> " + join(got, ",");
    return r;
}

CheckResult check_pure_dimension() {
    CheckResult r = make_result(2, "Catalan dimension, pure");
    r.passed = true;
    std::vector<std::string> got;
    for (size_t n = 1; n <= 8; n++) {
        size_t dim = pure_werner_dimension(n);
        size_t want = n % 2 ? 0 : catalan(static_cast<int>(n / 2));
        got.push_back(std::to_string(dim));
        r.passed = r.passed && dim == want;
    }
    r.detail = "n=1..8 -> " + join(got, ",");
    return r;
}

CheckResult check_chord_basis() {
    CheckResult r = make_result(3, "Chord-diagram states form a basis of pure Werner states");
    r.passed = true;
    std::vector<std::string> got;
    double worst = 0;
    for (int n = 2; n <= 8; n += 2) {
        std::vector<PureState> states;
        for (const auto &m : enumerate_noncrossing_matchings(n)) {
            states.push_back(chord_state(m));
            worst = std::max(worst, pure_werner_residual(states.back()));
        }
        size_t rank = pure_gram_rank_test(states).rank;
        got.push_back(std::to_string(rank));
        r.passed = r.passed && rank == catalan(n / 2) && states.size() == catalan(n / 2);
    }
    r.passed = r.passed && worst < kResidualTol;
    std::ostringstream os;
    os << "ranks for n=2,4,6,8 -> " << join(got, ",") << "; max residual " << worst;
    r.detail = os.str();
    return r;
}

CheckResult check_cn_family() {
    CheckResult r = make_result(4, "C_n family is trace-1, PSD and Werner");
    CMatrix c2 = cn_density(2);
    CMatrix proj = singlet().density();
    double diff = 0;
    for (size_t k = 0; k < c2.entries().size(); k++) {
        diff = std::max(diff, std::abs(c2.entries()[k] - proj.entries()[k]));
    }
    r.passed = diff < kMachineTol;
    std::ostringstream os;
    os << "|C_2 - singlet projector|_max = " << diff;
    for (size_t n = 1; n <= 5; n++) {
        CMatrix c = cn_density(n);
        double tr = trace(c).real();
        double min_eig = hermitian_eigenvalues(c).front();
        double res = werner_residual(c);
        r.passed = r.passed && std::abs(tr - 1) < kMachineTol && min_eig >= -kResidualTol && res < kResidualTol;
        os << "; n=" << n << " min_eig=" << min_eig << " residual=" << res;
    }
    r.detail = os.str();
    return r;
}

CheckResult check_cyclic_example() {
    CheckResult r = make_result(5, "C(001) matches the worked example; C(00), C(11) vanish");
    auto c = cyclic_state(BitString::parse("001"));
    double diff = 1;
    if (c) {
        CVector expected(8);
        double a = 1 / std::sqrt(3.0);
        expected[0b001] = a;
        expected[0b010] = a * std::polar(1.0, 2 * std::numbers::pi / 3);
        expected[0b100] = a * std::polar(1.0, 4 * std::numbers::pi / 3);
        diff = 0;
        for (size_t k = 0; k < 8; k++) {
            diff = std::max(diff, std::abs(c->amps[k] - expected[k]));
        }
    }
    bool zeros = !cyclic_state(BitString::parse("00")) && !cyclic_state(BitString::parse("11"));
    r.passed = diff < kMachineTol && zeros;
    std::ostringstream os;
    os << "max amplitude error " << diff << "; zero cases " << (zeros ? "ok" : "wrong");
    r.detail = os.str();
    return r;
}

CheckResult check_main_conjecture() {
    CheckResult r = make_result(6, "Diagram states as a basis of the Werner space");
    r.passed = true;
    std::vector<std::string> parts;
    for (size_t n = 2; n <= 5; n++) {
        ConjectureReport c = conjecture_test(n);
        r.passed = r.passed && c.num_diagrams == c.catalan && c.catalan == c.commutant_dim;
        parts.push_back("n=" + std::to_string(n) + " rank " + std::to_string(c.gram_rank) + "/" +
                        std::to_string(c.catalan));
        r.findings.push_back("conjecture n=" + std::to_string(n) + ": " + to_string(c.verdict));
    }
    r.detail = join(parts, "; ");
    return r;
}

CheckResult check_symmetric() {
    CheckResult r = make_result(7, "Radial elements are symmetric Werner; symmetric dimension floor(n/2)+1");
    r.passed = true;
    std::ostringstream os;
    for (size_t n = 1; n <= 4; n++) {
        for (size_t m = 0; 2 * m <= n; m++) {
            CMatrix rho = radial_element(m, n);
            r.passed = r.passed && werner_residual(rho) < kResidualTol && permutation_defect(rho) < kResidualTol;
        }
    }
    for (size_t n = 2; n <= 4; n++) {
        SymmetricReport s = symmetric_werner_test(n);
        r.passed = r.passed && s.ok;
        os << "n=" << n << " dim " << s.symmetric_werner_dim << " (expected " << s.expected_dim << ") ";
    }
    r.detail = os.str();
    return r;
}

CheckResult check_stabilizer_baseline() {
    CheckResult r = make_result(8, "Stabilizer of each diagram state is Delta_D");
    r.passed = true;
    size_t count = 0;
    double worst = 0;
    for (int n = 1; n <= 4; n++) {
        for (const auto &d : enumerate_noncrossing_partitions(n)) {
            std::vector<PartitionTerm> terms{{d, 1.0}};
            StabilizerReport s = stabilizer_conjecture_test(terms);
            worst = std::max(worst, s.containment_residual);
            r.passed = r.passed && s.computed_dim == 3 * d.num_blocks() && s.containment_residual < kResidualTol;
            count++;
        }
    }
    std::ostringstream os;
    os << count << " diagrams; max containment residual " << worst;
    r.detail = os.str();
    return r;
}

CheckResult check_glb_conjecture() {
    CheckResult r = make_result(9, "Stabilizer of two-diagram mixtures vs lattice glb");
    r.passed = true;
    std::ostringstream os;
    for (int n = 3; n <= 4; n++) {
        auto ps = enumerate_noncrossing_partitions(n);
        size_t pairs = 0;
        size_t equal = 0;
        for (size_t i = 0; i < ps.size(); i++) {
            for (size_t j = i + 1; j < ps.size(); j++) {
                std::vector<PartitionTerm> terms{{ps[i], 0.5}, {ps[j], 0.5}};
                StabilizerReport s = stabilizer_conjecture_test(terms);
                r.passed = r.passed && s.containment_ok;
                pairs++;
                if (s.match) {
                    equal++;
                } else {
                    r.findings.push_back("n=" + std::to_string(n) + " {" + ps[i].to_string() + "} + {" +
                                         ps[j].to_string() + "}: computed " + std::to_string(s.computed_dim) +
                                         " predicted " + std::to_string(s.predicted_dim));
                }
            }
        }
        os << "n=" << n << " " << equal << "/" << pairs << " pairs match ";
        r.findings.push_back("glb conjecture n=" + std::to_string(n) + ": " + std::to_string(equal) + "/" +
                             std::to_string(pairs) + " pairs match");
    }
    r.detail = os.str();
    return r;
}

CheckResult check_bipartition() {
    CheckResult r = make_result(10, "Pure-state bipartition criterion at n=4");
    auto ms = enumerate_noncrossing_matchings(4);
    r.passed = true;
    std::ostringstream os;
    for (const auto &m : ms) {
        std::vector<MatchingTerm> terms{{m, 1.0}};
        PureStabilizerReport p = pure_stabilizer_cross_check(terms);
        r.passed = r.passed && p.computed_dim == 6 && !p.criterion;
        os << "{" << m.to_string() << "} dim " << p.computed_dim << "; ";
    }
    std::vector<MatchingTerm> combo{{ms[0], 1.0}, {ms[1], 2.0}};
    PureStabilizerReport p = pure_stabilizer_cross_check(combo);
    r.passed = r.passed && p.computed_dim == 3 && p.criterion;
    os << "combination dim " << p.computed_dim << " criterion " << (p.criterion ? "true" : "false");
    r.detail = os.str();
    return r;
}

CheckResult check_oracles(const SuiteOptions &options) {
    CheckResult r = make_result(11, "Oracle cross-checks (Monte Carlo twirl, crossing, bipartitions)");
    r.passed = true;
    std::mt19937_64 rng(options.seed);
    double worst_twirl = 0;
    for (size_t n : {2, 2, 2, 3, 3}) {
        CMatrix rho = random_density(n, rng);
        CMatrix exact = twirl_project(rho);
        CMatrix sampled = monte_carlo_twirl(rho, options.twirl_samples, rng());
        worst_twirl = std::max(worst_twirl, frobenius_norm(exact - sampled));
    }
    r.passed = worst_twirl < kTwirlTol;

    size_t partitions = 0;
    for (int n = 1; n <= 6; n++) {
        for (const auto &p : all_set_partitions(n)) {
            r.passed = r.passed && is_noncrossing(p) == !crossing_by_quadruples(p);
            partitions++;
        }
    }

    size_t subsets = 0;
    for (int n = 2; n <= 6; n += 2) {
        auto ms = enumerate_all_matchings(n);
        for (uint32_t mask = 1; mask < (uint32_t{1} << ms.size()); mask++) {
            std::vector<MatchingTerm> terms;
            std::vector<Matching> active;
            for (size_t k = 0; k < ms.size(); k++) {
                bool on = mask & (uint32_t{1} << k);
                terms.push_back({ms[k], on ? 1.0 : 0.0});
                if (on) {
                    active.push_back(ms[k]);
                }
            }
            r.passed = r.passed && bipartition_criterion(terms) == bipartitions_all_crossed(active, n);
            subsets++;
        }
    }
    std::ostringstream os;
    os << "max twirl deviation " << worst_twirl << "; " << partitions << " partitions and " << subsets
       << " matching sets agree with brute force";
    r.detail = os.str();
    return r;
}

}  // namespace

std::vector<CheckResult> run_suite(const SuiteOptions &options) {
    std::vector<std::function<CheckResult()>> checks{
        check_commutant_dimension,
        check_pure_dimension,
        check_chord_basis,
        check_cn_family,
        check_cyclic_example,
        check_main_conjecture,
        check_symmetric,
        check_stabilizer_baseline,
        check_glb_conjecture,
        check_bipartition,
        [&] { return check_oracles(options); },
    };
    std::vector<CheckResult> out;
    for (size_t k = 0; k < checks.size(); k++) {
        auto start = std::chrono::steady_clock::now();
        CheckResult r;
        try {
            r = checks[k]();
        } catch (const std::exception &e) {
            r.id = static_cast<int>(k + 1);
            r.title = "check " + std::to_string(k + 1);
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(r));
    }
    return out;
}

void to_json(nlohmann::json &j, const CheckResult &r) {
    j = nlohmann::json{{"id", r.id},       {"title", r.title},       {"passed", r.passed},
                       {"detail", r.detail}, {"findings", r.findings}, {"seconds", r.seconds}};
}

}  // namespace werner
