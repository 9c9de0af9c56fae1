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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "oracles.hpp"
#include "werner/stabilizer.hpp"

using namespace werner;

namespace {

std::vector<PartitionTerm> single(const Partition &p, double c = 1.0) {
    return {{p, c}};
}

Eigen::VectorXcd to_eigen(const CVector &v) {
    Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
    for (size_t k = 0; k < v.size(); k++) {
        out(static_cast<Eigen::Index>(k)) = v[k];
    }
    return out;
}

}  // namespace

TEST_CASE("flatten and unflatten") {
    LocalAlgebraElement x{{1, 2, 3}, {4, 5, 6}};
    RVector flat = flatten(x);
    CHECK(flat == RVector{1, 2, 3, 4, 5, 6});
    CHECK(unflatten(flat, 2) == x);
    CHECK_THROWS_AS(unflatten(flat, 3), std::invalid_argument);
}

TEST_CASE("stabilizer algebra of simple states") {
    for (size_t n = 1; n <= 3; n++) {
        CMatrix mixed = CMatrix::identity(pow2(n));
        CHECK(stabilizer_algebra(mixed).dim() == 3 * n);
    }
    CMatrix s = singlet().density();
    CHECK(stabilizer_algebra(s).dim() == 3);
    CHECK(stabilizer_algebra(diagram_density(Partition(4, {{1, 2}, {3, 4}}))).dim() == 6);
    CMatrix p00(4, 4);
    p00(0, 0) = 1;
    CHECK(stabilizer_algebra(p00).dim() == 2);

    StabilizerBasis b = stabilizer_algebra(cn_density(3));
    for (const auto &x : b.basis) {
        CHECK(stabilizer_residual(cn_density(3), x) < 1e-10);
        RVector f = flatten(x);
        double nrm = std::sqrt(std::inner_product(f.begin(), f.end(), f.begin(), 0.0));
        CHECK(nrm == doctest::Approx(1));
    }
}

TEST_CASE("stabilizer algebra agrees with a dense oracle") {
    for (int n = 1; n <= 4; n++) {
        for (const auto &d : enumerate_noncrossing_partitions(n)) {
            CMatrix rho = diagram_density(d);
            size_t dim = stabilizer_algebra(rho).dim();
            CHECK(dim == oracle::stabilizer_dimension(oracle::to_eigen(rho), n));
            CHECK(dim == delta_d_dimension(d));
        }
    }
    // crossing partition and a pair mixture
    CMatrix crossing = diagram_density(Partition(4, {{1, 3}, {2, 4}}));
    CHECK(stabilizer_algebra(crossing).dim() == oracle::stabilizer_dimension(oracle::to_eigen(crossing), 4));
}

TEST_CASE("stabilizer dimension is invariant under qubit relabelling") {
    CMatrix rho = diagram_density(Partition(4, {{1, 2, 3}, {4}})) + diagram_density(Partition(4, {{1}, {2, 3}, {4}}));
    std::vector<int> perm{2, 4, 1, 3};
    CHECK(stabilizer_algebra(permute_qubits(rho, perm)).dim() == stabilizer_algebra(rho).dim());
}

TEST_CASE("Delta_D generators") {
    CHECK(delta_d_dimension(Partition::whole(5)) == 3);
    CHECK(delta_d_dimension(Partition::singletons(4)) == 12);
    CHECK(delta_d_dimension(Partition(5, {{1, 2, 4}, {3}, {5}})) == 9);
    auto gens = delta_generators(Partition(3, {{1, 3}, {2}}));
    CHECK(gens.size() == 6);
    CMatrix rho = diagram_density(Partition(3, {{1, 3}, {2}}));
    for (const auto &x : gens) {
        CHECK(stabilizer_residual(rho, x) < 1e-12);
    }
}

TEST_CASE("term list parser") {
    auto t = parse_terms("1 2 | 3 4 : 1.0 ; 1 4 | 2 3 : -0.5");
    REQUIRE(t.size() == 2);
    CHECK(t[0].diagram == Partition(4, {{1, 2}, {3, 4}}));
    CHECK(t[1].coeff == -0.5);
    CHECK(parse_terms("1 2:2").front().coeff == 2.0);
    CHECK_THROWS_AS(parse_terms("1 2 | 3 4"), ParseError);
    CHECK_THROWS_AS(parse_terms("1 2 : abc"), ParseError);
    CHECK_THROWS_AS(parse_terms("1 2 : 1 ; 1 2 3 : 1"), ParseError);
    CHECK_THROWS_AS(parse_terms(""), ParseError);
    try {
        parse_terms("1 2 : 1 ; 1 x : 1");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.position() == 12);
    }
    auto m = to_matching_terms(t);
    CHECK(m[1].diagram.to_string() == "1 4 | 2 3");
    CHECK_THROWS_AS(to_matching_terms(parse_terms("1 2 3 : 1")), std::invalid_argument);
}

TEST_CASE("glb prediction") {
    Partition a(4, {{1, 2}, {3, 4}});
    Partition b(4, {{1, 4}, {2, 3}});
    CHECK(glb_prediction(single(a)) == a);
    std::vector<PartitionTerm> both{{a, 1.0}, {b, 1.0}};
    CHECK(glb_prediction(both) == Partition::whole(4));
    std::vector<PartitionTerm> zero{{a, 1.0}, {b, 0.0}};
    CHECK(glb_prediction(zero) == a);
    std::vector<PartitionTerm> swapped{{b, 1.0}, {a, 1.0}};
    CHECK(glb_prediction(swapped) == glb_prediction(both));
    std::vector<PartitionTerm> none{{a, 0.0}};
    CHECK_THROWS_AS(glb_prediction(none), std::invalid_argument);
}

TEST_CASE("stabilizer conjecture test") {
    StabilizerReport r = stabilizer_conjecture_test(single(Partition(2, {{1, 2}})));
    CHECK(r.computed_dim == 3);
    CHECK(r.predicted_dim == 3);
    CHECK(r.match);
    CHECK(r.containment_ok);
    StabilizerReport m = stabilizer_conjecture_test(single(Partition::singletons(2)));
    CHECK(m.computed_dim == 6);
    CHECK(m.predicted_dim == 6);
    std::vector<PartitionTerm> mix{{Partition(4, {{1, 2}, {3, 4}}), 0.5}, {Partition(4, {{1, 4}, {2, 3}}), 0.5}};
    StabilizerReport x = stabilizer_conjecture_test(mix);
    CHECK(x.predicted_dim == 3);
    CHECK(x.containment_ok);
    CHECK(x.convex);
    CHECK(x.trace == doctest::Approx(1));
    CHECK(x.computed_dim >= 3);

    // signed combinations are allowed and flagged
    std::vector<PartitionTerm> signed_mix{{Partition::singletons(2), 1.0}, {Partition(2, {{1, 2}}), -0.5}};
    StabilizerReport sr = stabilizer_conjecture_test(signed_mix);
    CHECK_FALSE(sr.convex);
    CHECK(sr.containment_ok);

    // every pair at n = 3, 4 checked against the dense oracle
    for (int n = 3; n <= 4; n++) {
        auto ps = enumerate_noncrossing_partitions(n);
        for (size_t i = 0; i < ps.size(); i++) {
            for (size_t k = i + 1; k < ps.size(); k++) {
                std::vector<PartitionTerm> t{{ps[i], 0.5}, {ps[k], 0.5}};
                StabilizerReport rep = stabilizer_conjecture_test(t);
                CHECK(rep.containment_ok);
                CHECK(rep.computed_dim >= 3);
                CMatrix rho = diagram_density(ps[i]) + diagram_density(ps[k]);
                CHECK(rep.computed_dim == oracle::stabilizer_dimension(oracle::to_eigen(rho), n));
                CHECK(oracle::as_sets(rep.glb) == oracle::coarsening({ps[i], ps[k]}, n));
            }
        }
    }
    nlohmann::json j = r;
    CHECK(j["glb"] == "1 2");
    CHECK(j.contains("scope"));
}

TEST_CASE("bipartition criterion") {
    Matching a(Partition(4, {{1, 2}, {3, 4}}));
    Matching b(Partition(4, {{1, 4}, {2, 3}}));
    std::vector<MatchingTerm> only_a{{a, 1.0}};
    CHECK_FALSE(bipartition_criterion(only_a));
    std::vector<MatchingTerm> both{{a, 1.0}, {b, 2.0}};
    CHECK(bipartition_criterion(both));
    std::vector<MatchingTerm> dead{{a, 1.0}, {b, 0.0}};
    CHECK_FALSE(bipartition_criterion(dead));
    std::vector<MatchingTerm> s{{Matching(Partition(2, {{1, 2}})), 1.0}};
    CHECK(bipartition_criterion(s));

    for (int n = 2; n <= 6; n += 2) {
        auto ms = enumerate_all_matchings(n);
        for (uint32_t mask = 1; mask < (uint32_t{1} << ms.size()); mask++) {
            std::vector<MatchingTerm> terms;
            std::vector<Matching> active;
            for (size_t k = 0; k < ms.size(); k++) {
                bool on = mask & (uint32_t{1} << k);
                terms.push_back({ms[k], on ? 0.7 : 0.0});
                if (on) {
                    active.push_back(ms[k]);
                }
            }
            CHECK(bipartition_criterion(terms) == oracle::every_cut_crossed(active, n));
        }
    }
}

TEST_CASE("pure-state stabilizer") {
    CHECK(pure_stabilizer_dimension(singlet()) == 3);
    Matching a(Partition(4, {{1, 2}, {3, 4}}));
    Matching b(Partition(4, {{1, 4}, {2, 3}}));
    std::vector<MatchingTerm> one{{a, 1.0}};
    PureStabilizerReport r1 = pure_stabilizer_cross_check(one);
    CHECK(r1.computed_dim == 6);
    CHECK_FALSE(r1.criterion);
    std::vector<MatchingTerm> two{{a, 1.0}, {b, 2.0}};
    PureStabilizerReport r2 = pure_stabilizer_cross_check(two);
    CHECK(r2.computed_dim == 3);
    CHECK(r2.criterion);
    CHECK(r2.match);
    std::vector<MatchingTerm> s{{Matching(Partition(2, {{1, 2}})), 1.0}};
    CHECK(pure_stabilizer_cross_check(s).computed_dim == 3);

    for (int n = 2; n <= 6; n += 2) {
        for (const auto &m : enumerate_noncrossing_matchings(n)) {
            PureState psi = chord_state(m);
            CHECK(pure_stabilizer_dimension(psi) == oracle::pure_stabilizer_dimension(to_eigen(psi.amps), n));
        }
    }
    PureState zz{2, CVector{1, 0, 0, 0}};
    CHECK(pure_stabilizer_dimension(zz) == oracle::pure_stabilizer_dimension(to_eigen(zz.amps), 2));
}
