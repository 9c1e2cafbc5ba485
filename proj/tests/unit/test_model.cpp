// Copyright 2026 The lzs-lattice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <random>

#include "lzs/error.hpp"
#include "lzs/model/model.hpp"

using namespace lzs::model;
using lzs::numerics::kPi;

namespace {

const BandParameters kReference = BandParameters::from_drive(4.39, -0.682, -0.14);

}  // namespace

TEST_CASE("LZS Hamiltonian simple cases") {
    auto h = lzs_hamiltonian({1.0, 0.0, 1.0, 0.0}, 0.3);
    CHECK(h(0, 0).real() == doctest::Approx(-0.5));
    CHECK(h(1, 1).real() == doctest::Approx(0.5));
    h = lzs_hamiltonian({0.0, 2.0, 1.0, 0.0}, kPi / 2);
    CHECK(h(0, 0).real() == doctest::Approx(-1.0));
    CHECK(h(1, 1).real() == doctest::Approx(1.0));

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 20; ++i) {
        const auto r = lzs_hamiltonian({u(rng), u(rng), std::abs(u(rng)) + 0.1, u(rng)}, u(rng));
        CHECK(std::abs(r(0, 0) + r(1, 1)) <= 1e-14);
    }
}

TEST_CASE("k-space Hamiltonian entries and periodicity") {
    DrivenTwoBandParameters p{kReference, 1.0, 0.0};
    const auto h = hamiltonian_k(p, 0.0);
    CHECK(h(0, 1).real() == doctest::Approx(-0.14));
    CHECK(h(0, 0).real() == doctest::Approx(-4.39 / 2 - kReference.Ja));

    p.F = 1.7;
    p.k = 0.4;
    for (double t : {0.0, 0.37, 2.9}) {
        const auto a = hamiltonian_k(p, t);
        const auto b = hamiltonian_k(p, t + p.bloch_period());
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(std::abs(a(i, j) - b(i, j)) <= 1e-12);
    }
}

TEST_CASE("no hopping gives a static two-level system") {
    const DrivenTwoBandParameters p{{3.0, 0.0, 0.0, 0.0}, 1.0, 0.2};
    for (double t : {0.0, 1.0, 5.0}) {
        const auto h = hamiltonian_k(p, t);
        CHECK(h(1, 1).real() - h(0, 0).real() == doctest::Approx(3.0));
    }
}

TEST_CASE("map_to_lzs") {
    const auto m = map_to_lzs(kReference, 1.0);
    CHECK(m.lzs.eps0 == doctest::Approx(4.39));
    CHECK(m.lzs.A == doctest::Approx(-0.682));
    CHECK(m.lzs.omega == doctest::Approx(1.0));
    CHECK(m.lzs.DeltaT == doctest::Approx(0.28));
    const auto m2 = map_to_lzs(kReference, 2.0);
    CHECK(m2.lzs.omega == doctest::Approx(2 * m.lzs.omega));
    CHECK(m2.lzs.DeltaT == doctest::Approx(2 * m.lzs.DeltaT));
    CHECK(map_to_lzs({4.39, 0.1, -0.5, 0.0}, 1.0).lzs.DeltaT == 0.0);
}

TEST_CASE("interband phase") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 10; ++i) {
        const DrivenTwoBandParameters p{kReference, 0.5 + std::abs(u(rng)), u(rng)};
        CHECK(phase_phi(p, 0.0) == 0.0);
        CHECK(phase_phi(p, p.bloch_period()) == doctest::Approx(4.39 * p.bloch_period()).epsilon(1e-12));
    }
    const DrivenTwoBandParameters flat{{2.0, 0.3, 0.3, -0.1}, 1.3, 0.7};
    CHECK(phase_phi(flat, 2.5) == doctest::Approx(5.0));
}

TEST_CASE("LZS form reproduces the k-space Hamiltonian") {
    std::mt19937_64 rng(19);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> ts;
    for (int i = 0; i < 100; ++i) ts.push_back(50.0 * u(rng));
    CHECK(equivalence_check({kReference, 1.0, 0.0}, ts) <= 1e-12);
    for (int i = 0; i < 20; ++i) {
        const BandParameters b{6 * u(rng), u(rng) - 0.5, u(rng) - 0.5, -0.3 * u(rng)};
        const DrivenTwoBandParameters p{b, 0.2 + 3 * u(rng), 2 * kPi * u(rng) - kPi};
        CHECK(equivalence_check(p, ts) <= 1e-12);
    }
}

TEST_CASE("equal hoppings leave a static traceless part") {
    const DrivenTwoBandParameters p{{2.0, 0.4, 0.4, -0.2}, 1.0, 0.3};
    CHECK(map_to_lzs(p.bands, p.F).lzs.A == 0.0);
    CHECK(scalar_shift(p, 0.5) == doctest::Approx(-0.4 * std::cos(0.3 + 0.5)));
}

TEST_CASE("driven parameters validation") {
    CHECK_THROWS_AS(DrivenTwoBandParameters({kReference, 0.0, 0.0}).validate(), lzs::ContractViolation);
    CHECK_THROWS_AS(DrivenTwoBandParameters({kReference, 1.0, NAN}).validate(), lzs::ContractViolation);
}
