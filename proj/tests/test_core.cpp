// Copyright 2026 The shadowlab Authors
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


#include <cmath>
#include <numbers>
#include <set>

#include "doctest.h"
#include "shadowlab/circuit.hpp"
#include "shadowlab/errors.hpp"
#include "shadowlab/numeric.hpp"
#include "shadowlab/pauli.hpp"
#include "shadowlab/rng.hpp"

using namespace shadowlab;

TEST_CASE("rng substreams are reproducible and distinct") {
    Rng a = Rng::substream(7, 3);
    Rng b = Rng::substream(7, 3);
    Rng c = Rng::substream(7, 4);
    Rng d = Rng::substream(8, 3);
    for (int i = 0; i < 16; ++i) {
        const uint64_t va = a.next();
        CHECK(va == b.next());
        const uint64_t vc = c.next();
        const uint64_t vd = d.next();
        CHECK(va != vc);
        CHECK(va != vd);
    }
}

TEST_CASE("rng uniform and below stay in range") {
    Rng rng(1);
    double sum = 0.0;
    std::vector<int> counts(7, 0);
    const int draws = 70000;
    for (int i = 0; i < draws; ++i) {
        const double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        const uint64_t k = rng.below(7);
        REQUIRE(k < 7);
        ++counts[k];
    }
    CHECK(sum / draws == doctest::Approx(0.5).epsilon(0.01));
    for (int c : counts) {
        // 10000 expected, sd ~ 93
        CHECK(std::abs(c - 10000) < 500);
    }
}

TEST_CASE("ceil_count snaps near-integers") {
    CHECK(ceil_count(612.0 / 0.04) == 15300);
    CHECK(ceil_count(13.42) == 14);
    CHECK(ceil_count(0.0) == 0);
    CHECK_THROWS_AS(ceil_count(-1.0), ValidationError);
    CHECK_THROWS_AS(ceil_count(std::nan("")), ValidationError);
}

TEST_CASE("pauli strings parse and expose masks") {
    const auto p = PauliString::parse("XIYZ");
    CHECK(p.num_qubits() == 4);
    CHECK(p.locality() == 3);
    CHECK(p.support() == std::vector<std::size_t>{0, 2, 3});
    CHECK(p.str() == "XIYZ");
    // qubit q sits at bit (n-1-q)
    CHECK(p.flip_mask() == 0b1010);
    CHECK(p.phase_mask() == 0b0011);
    CHECK(p.y_count() == 1);
    CHECK(PauliString::identity(3).locality() == 0);
    CHECK_THROWS_AS(PauliString::parse("XQ"), ValidationError);
}

TEST_CASE("circuit validation rejects bad gates") {
    CircuitSpec c(2);
    CHECK_THROWS_AS(c.h(2), ValidationError);
    CHECK_THROWS_AS(c.cnot(1, 1), ValidationError);
    CHECK_THROWS_AS(c.ry(0, std::numeric_limits<double>::infinity()), ValidationError);
    CHECK(c.empty());
    CircuitSpec other(3);
    CHECK_THROWS_AS(c.append(other), ValidationError);
}

TEST_CASE("circuit inverse reverses and daggers") {
    CircuitSpec c(2);
    c.ry(0, 0.3).s(1).cnot(0, 1).h(0);
    const CircuitSpec inv = c.inverse();
    REQUIRE(inv.gates().size() == 4);
    CHECK(inv.gates()[0].kind == GateKind::H);
    CHECK(inv.gates()[1].kind == GateKind::CNOT);
    CHECK(inv.gates()[2].kind == GateKind::Sdg);
    CHECK(inv.gates()[3].angle == -0.3);
    CHECK(inv.inverse() == c);
}

TEST_CASE("templates bind angles from the input") {
    CircuitTemplate t(2);
    t.add_bound_ry(1, {2, 2.0, 0.5});
    t.add({GateKind::H, {0, 0}, 0.0});
    CHECK(t.input_dim() == 3);
    const std::vector<double> x{0.0, 0.0, 0.25};
    const CircuitSpec c = t.bind(x);
    CHECK(c.gates()[0].angle == doctest::Approx(1.0));
    const std::vector<double> short_x{1.0};
    CHECK_THROWS_AS(t.bind(short_x), ValidationError);
}
