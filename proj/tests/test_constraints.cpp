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

#include <numeric>
#include <random>

#include "gdet/constraints.hpp"

using namespace gdet;

TEST_CASE("factorize") {
    Factorization f12 = factorize(12);
    REQUIRE(f12.factors.size() == 2);
    CHECK(f12.factors[0].p == 2);
    CHECK(f12.factors[0].alpha == 2);
    CHECK(f12.factors[1].p == 3);
    CHECK(f12.factors[1].alpha == 1);

    Factorization f = factorize(30030);
    REQUIRE(f.factors.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(f.factors[i].p == std::vector<int>{2, 3, 5, 7, 11, 13}[i]);
        CHECK(f.factors[i].alpha == 1);
    }

    CHECK(factorize(1).factors.empty());
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);

    // large prime cofactor is fine, semiprime beyond trial division is not
    BigInt p1("1000000000039"), p2("1000000000061");
    CHECK(factorize(p1).factors.size() == 1);
    CHECK_THROWS_AS(factorize(p1 * p2), std::runtime_error);
}

TEST_CASE("parse_factored") {
    Factorization f = parse_factored("2^2*3*5^1*7*11*13");
    CHECK(f.n == 60060);
    CHECK(f.exponent_of(2) == 2);
    CHECK(f.exponent_of(13) == 1);
    CHECK(f.exponent_of(17) == 0);

    CHECK(parse_factored("3*3*2").n == 18);
    CHECK(parse_factored("3*3*2").exponent_of(3) == 2);
    CHECK_THROWS_AS(parse_factored("4^2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_factored(""), std::invalid_argument);

    // authoritative factored form of a number trial division cannot crack
    BigInt p1("1000000000039"), p2("1000000000061");
    Factorization hard = parse_factored(p1.str() + "*" + p2.str());
    CHECK(hard.n == p1 * p2);
}

TEST_CASE("admissible on the worked examples") {
    Factorization n3 = factorize(3), n6 = factorize(6), n2 = factorize(2);
    CHECK_FALSE(admissible(2, n3).admissible);
    CHECK_FALSE(admissible(3, n3).admissible);
    CHECK(admissible(4, n3).admissible);
    CHECK_FALSE(admissible(-5, n6).admissible);
    CHECK(admissible(5, n6).admissible);
    CHECK_FALSE(admissible(32, n2).admissible);
    CHECK(admissible(16, n2).admissible);
    CHECK(admissible(-64, n2).admissible);
    CHECK_THROWS_AS(admissible(1, n3), std::invalid_argument);

    // rejected iff reasons non-empty
    for (long v : {2, 3, 4, 5, -5, 16, 27, 32}) {
        for (const Factorization* nf : {&n3, &n6, &n2}) {
            auto rep = admissible(v, *nf);
            CHECK(rep.admissible == rep.reasons.empty());
        }
    }

    // alpha >= 2 rule: n = 12 requires v2 >= 8 on even values
    Factorization n12 = factorize(12);
    CHECK_FALSE(admissible(128, n12).admissible);
    CHECK(admissible(256, n12).admissible);
}

TEST_CASE("admissible is metamorphic under coprime 1-mod-4 scaling") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> vd(2, 4000);
    for (long nval : {3L, 4L, 6L, 12L, 18L, 20L}) {
        Factorization nf = factorize(nval);
        std::vector<long> units;
        for (long u = 5; units.size() < 4; u += 4)
            if (std::gcd(u, 2 * nval) == 1) units.push_back(u);
        for (int iter = 0; iter < 200; ++iter) {
            BigInt v = vd(rng);
            if (rng() & 1) v = -v;
            bool base = admissible(v, nf).admissible;
            for (long u : units) CHECK(admissible(v * u, nf).admissible == base);
        }
    }
}

TEST_CASE("lambda_lower_bound table entries") {
    CHECK(lambda_lower_bound(factorize(4)) == 3);
    CHECK(lambda_lower_bound(factorize(3)) == 4);
    CHECK(lambda_lower_bound(factorize(6)) == 5);
    CHECK(lambda_lower_bound(factorize(30)) == 7);
    CHECK(lambda_lower_bound(factorize(30030)) == 16);
    CHECK(lambda_lower_bound(parse_factored("2^2*3*5*7*11*13")) == 17);

    // the open boundary case: lower bound 125 for the full prime product
    std::string huge = "2^2*3^2";
    for (long p : {5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
                   61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113})
        huge += "*" + std::to_string(p);
    CHECK(lambda_lower_bound(parse_factored(huge)) == 125);
}
