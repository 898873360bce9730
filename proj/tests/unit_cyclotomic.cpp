/*
   Copyright 2026 The coxgrowth authors

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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <vector>

#include "coxgrowth/cyclotomic.hpp"

using namespace coxgrowth;

TEST_CASE("blocks") {
    CHECK(block(1) == IntPoly::one());
    CHECK(block(2) == IntPoly{1, 1});
    CHECK(block(5) == IntPoly{1, 1, 1, 1, 1});
    CHECK(block_product({2, 3}) == IntPoly{1, 2, 2, 1});
    CHECK(block_product({}) == IntPoly::one());
    // [k](1) = k
    CHECK(block_product({2, 6, 10}).eval(BigInt(1)) == 120);
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(30) == 8);
    CHECK(euler_phi(97) == 96);
    CHECK(euler_phi(105) == 48);
}

TEST_CASE("small cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPoly{-1, 1});
    CHECK(cyclotomic(2) == IntPoly{1, 1});
    CHECK(cyclotomic(3) == IntPoly{1, 1, 1});
    CHECK(cyclotomic(4) == IntPoly{1, 0, 1});
    CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
    CHECK(cyclotomic(8) == IntPoly{1, 0, 0, 0, 1});
    CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
    // first index with a coefficient outside {-1, 0, 1}
    const IntPoly& p105 = cyclotomic(105);
    CHECK(p105.degree() == 48);
    CHECK(p105.coeff(7) == -2);
    CHECK(p105.coeff(41) == -2);
}

TEST_CASE("x^n - 1 factors into cyclotomics over divisors") {
    for (unsigned n : {1u, 2u, 6u, 12u, 30u}) {
        IntPoly prod = IntPoly::one();
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0) prod *= cyclotomic(d);
        IntPoly target = IntPoly::monomial(BigInt(1), n) - IntPoly::one();
        CHECK(prod == target);
    }
}

TEST_CASE("block equals product of cyclotomics over divisors > 1") {
    for (unsigned k : {2u, 8u, 12u, 20u, 30u}) {
        IntPoly prod = IntPoly::one();
        for (unsigned d = 2; d <= k; ++d)
            if (k % d == 0) prod *= cyclotomic(d);
        CHECK(prod == block(k));
    }
}

TEST_CASE("cyclotomic factorization roundtrip") {
    IntPoly lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
    IntPoly p = block_product({2, 12}) * lehmer;
    CycFactorization f = cyclotomic_factor(p);
    CHECK(f.unit == 1);
    CHECK(f.remainder == lehmer);
    std::map<unsigned, unsigned> expect{{2, 2}, {3, 1}, {4, 1}, {6, 1}, {12, 1}};
    CHECK(f.exponents == expect);
    CHECK(f.reassemble() == p);
    CHECK(f.cyclotomic_part() == block_product({2, 12}));
}

TEST_CASE("factorization of a pure non-cyclotomic polynomial") {
    IntPoly salem{1, -3, 1};  // x^2 - 3x + 1, reciprocal but not cyclotomic
    CycFactorization f = cyclotomic_factor(salem);
    CHECK(f.exponents.empty());
    CHECK(f.remainder == salem);
    CHECK(f.unit == 1);
}

TEST_CASE("factorization tracks sign and multiplicity") {
    IntPoly p = cyclotomic(2).pow(3).scaled(BigInt(-1));
    CycFactorization f = cyclotomic_factor(p);
    CHECK(f.unit == -1);
    CHECK(f.exponents == std::map<unsigned, unsigned>{{2, 3}});
    CHECK(f.remainder == IntPoly::one());
    CHECK(f.reassemble() == p);
}

TEST_CASE("block exponent table matches direct factorization") {
    std::vector<std::vector<unsigned>> cases = {
        {2, 8, 12, 20, 30}, {2, 6, 10}, {2, 2, 2, 2}, {2, 12, 20, 30}, {3, 4, 5, 6}};
    for (const auto& blocks : cases) {
        std::map<unsigned, unsigned> table = block_cyclotomic_exponents(blocks);
        CycFactorization f = cyclotomic_factor(block_product(blocks));
        CHECK(f.remainder == IntPoly::one());
        CHECK(table == f.exponents);
    }
}

TEST_CASE("extended block list of the 5334 simplex group") {
    std::map<unsigned, unsigned> t = block_cyclotomic_exponents({2, 8, 12, 20, 30});
    std::map<unsigned, unsigned> expect{{2, 5}, {3, 2},  {4, 3},  {5, 2},  {6, 2}, {8, 1},
                                        {10, 2}, {12, 1}, {15, 1}, {20, 1}, {30, 1}};
    CHECK(t == expect);
}
