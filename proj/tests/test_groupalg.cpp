/*
   Copyright 2026 The gdet authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gdet/groupalg.hpp"

using namespace gdet;

namespace {

Assignment indicator(std::size_t n, std::size_t i) {
    Assignment a(n, BigInt(0));
    a[i] = 1;
    return a;
}

Assignment random_assignment(std::mt19937_64& rng, std::size_t n, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    Assignment a(n);
    for (auto& v : a) v = d(rng);
    return a;
}

}  // namespace

TEST_CASE("build_cayley basics") {
    CayleyTable t1 = build_cayley(Cyclic{1});
    CHECK(t1.order == 1);
    CHECK(t1.table[0][0] == 0);

    // R * F = F R^{n-1} for n = 3: index 1 * index 3 = index 5
    CayleyTable d3 = build_cayley(Dihedral{3});
    CHECK(d3.order == 6);
    CHECK(d3.mul(1, 3) == 5);

    // Klein four-group: every element self-inverse
    CayleyTable k4 = build_cayley(AbelianProduct{{2, 2}});
    for (std::size_t i = 0; i < 4; ++i) CHECK(k4.mul(i, i) == 0);
}

TEST_CASE("tables validate for all specs up to order 64") {
    std::vector<GroupSpec> specs;
    for (std::size_t n = 1; n <= 32; ++n) specs.push_back(Dihedral{n});
    for (std::size_t n = 1; n <= 64; ++n) specs.push_back(Cyclic{n});
    specs.push_back(AbelianProduct{{2, 2}});
    specs.push_back(AbelianProduct{{4, 3}});
    specs.push_back(AbelianProduct{{2, 3, 4}});
    specs.push_back(AbelianProduct{{10, 2}});
    for (const auto& s : specs) {
        CayleyTable t = build_cayley(s);
        REQUIRE(t.order <= 64);
        CHECK_NOTHROW(validate_table(t));
    }
}

TEST_CASE("explicit tables accepted and re-validated") {
    CayleyTable d4 = build_cayley(Dihedral{4});
    CayleyTable again = build_cayley(Explicit{d4});
    CHECK(again.table == d4.table);

    CayleyTable broken = d4;
    broken.table[1][1] = 0;  // clobber the Latin property
    CHECK_THROWS_AS(build_cayley(Explicit{broken}), std::invalid_argument);
}

TEST_CASE("convolve identity and dihedral relation") {
    GroupSpec d3 = Dihedral{3};
    std::mt19937_64 rng(99);
    Assignment v = random_assignment(rng, 6, 3);
    CHECK(convolve(d3, indicator(6, 0), v) == v);
    CHECK(convolve(d3, v, indicator(6, 0)) == v);
    // indicator(R) * indicator(F) = indicator(FR^2)
    CHECK(convolve(d3, indicator(6, 1), indicator(6, 3)) == indicator(6, 5));
    CHECK_THROWS_AS(convolve(d3, indicator(4, 0), v), std::invalid_argument);
}

TEST_CASE("convolve is associative") {
    std::mt19937_64 rng(2024);
    std::vector<GroupSpec> specs = {Dihedral{4}, Cyclic{7}, AbelianProduct{{2, 3}},
                                    Dihedral{8}};
    for (const auto& s : specs) {
        std::size_t n = group_order(s);
        for (int iter = 0; iter < 25; ++iter) {
            Assignment u = random_assignment(rng, n, 3);
            Assignment v = random_assignment(rng, n, 3);
            Assignment w = random_assignment(rng, n, 3);
            CHECK(convolve(s, convolve(s, u, v), w) == convolve(s, u, convolve(s, v, w)));
        }
    }
}

TEST_CASE("translate") {
    CayleyTable d2 = build_cayley(Dihedral{2});
    std::mt19937_64 rng(5);
    Assignment a = random_assignment(rng, 4, 4);
    CHECK(translate(d2, a, 0) == a);

    // translating by F swaps the rotation and reflection blocks
    Assignment byF = translate(d2, a, 2);
    CHECK(byF[0] == a[2]);
    CHECK(byF[1] == a[3]);
    CHECK(byF[2] == a[0]);
    CHECK(byF[3] == a[1]);

    CayleyTable d5 = build_cayley(Dihedral{5});
    Assignment b = random_assignment(rng, 10, 4);
    for (std::size_t h = 0; h < 10; ++h) {
        Assignment once = translate(d5, b, h);
        CHECK(translate(d5, once, d5.inv(h)) == b);
    }
}

TEST_CASE("table JSON round trip") {
    CayleyTable d3 = build_cayley(Dihedral{3});
    auto j = table_to_json(d3);
    CayleyTable back = table_from_json(j);
    CHECK(back.order == d3.order);
    CHECK(back.identity == d3.identity);
    CHECK(back.table == d3.table);
}
