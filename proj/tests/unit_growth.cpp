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

#include "coxgrowth/catalog.hpp"
#include "coxgrowth/growth.hpp"

using namespace coxgrowth;

namespace {

CoxeterSystem catalog_system(const std::string& key) {
    auto e = catalog_find(key);
    REQUIRE(e.has_value());
    REQUIRE(e->system.has_value());
    return *e->system;
}

GrowthSeries analyzed(const std::string& key) {
    auto e = catalog_find(key);
    REQUIRE(e.has_value());
    return analyze_growth(*e->system, e->dimension);
}

} // namespace

TEST_CASE("steinberg series of a finite dihedral group is its Poincare polynomial") {
    CoxeterSystem a2 = CoxeterSystem::from_edges(2, {{0, 1, 3}});
    FiniteLattice lat = enumerate_finite_subsets(a2);
    RatFunc f = steinberg_series(a2, lat);
    CHECK(f.is_polynomial());
    CHECK(f.as_polynomial() == IntPoly{1, 2, 2, 1});  // [2][3]
}

TEST_CASE("steinberg series of the right-angled hexagon group") {
    CoxeterSystem hex = make_right_angled_polygon(6);
    FiniteLattice lat = enumerate_finite_subsets(hex);
    RatFunc f = steinberg_series(hex, lat);
    CHECK(f.num() == IntPoly{1, 2, 1});
    CHECK(f.den() == IntPoly{1, -4, 1});
}

TEST_CASE("full analysis of the [5,3,3,4] simplex group") {
    GrowthSeries s = analyzed("lanner-5334");
    CHECK_FALSE(s.finiteGroup);
    CHECK(s.paritySign == 1);

    // virgin form: least common multiple of the subgroup polynomials
    IntPoly virgin = block_product({2, 12, 20, 30}) * cyclotomic(8);
    CHECK(s.virgin.poly == virgin);
    std::map<unsigned, unsigned> vexp{{2, 4}, {3, 2},  {4, 2},  {5, 2},  {6, 2}, {8, 1},
                                      {10, 2}, {12, 1}, {15, 1}, {20, 1}, {30, 1}};
    CHECK(s.virgin.factors.exponents == vexp);
    CHECK(s.virgin.factors.remainder == IntPoly::one());

    // minimal block-product extension
    REQUIRE(s.extension.available);
    CHECK(s.extension.blocks == std::vector<unsigned>{2, 8, 12, 20, 30});
    CHECK(s.extension.ext == block_product({2, 8, 12, 20, 30}));
    CHECK(s.extension.R == IntPoly{1, 1, 1, 1});
    CHECK_FALSE(s.extension.multipleOptima);
    CHECK(s.r() == 5);

    // complete form
    CHECK(s.P == s.extension.ext);
    CHECK(s.P.degree() == 67);
    CHECK(s.Q.degree() == 67);
    std::vector<BigInt> qHead{1, 0, 0, -1, 0, -1, 0, -2, -1, -2, 0, -2};
    for (size_t k = 0; k < qHead.size(); ++k) CHECK(s.Q.coeff(k) == qHead[k]);
    CHECK(s.Q.palindromic());

    // the reduced denominator has no cyclotomic factor here, so the reduced
    // numerator coincides with the virgin form
    CHECK(s.reduced.num() == virgin);
    CHECK(s.reduced.den().degree() == 64);
    CHECK(cyclotomic_factor(s.reduced.den()).exponents.empty());

    // b_1 = r - |S|
    CHECK(s.Q.coeff(1) == BigInt(static_cast<long long>(s.r())) - s.system.rank());

    // P/Q and the reduced quotient agree as rational functions
    CHECK(RatFunc(s.P, s.Q) == s.reduced);
}

TEST_CASE("parity falls back to denominator symmetry without a hint") {
    auto e = catalog_find("lanner-5334");
    GrowthSeries s = analyze_growth(*e->system);  // no dimension hint
    CHECK(s.paritySign == 1);
    CHECK_FALSE(s.dimensionHint.has_value());

    auto d = catalog_find("ra-dodecahedron");
    GrowthSeries t = analyze_growth(*d->system);
    CHECK(t.paritySign == -1);  // antipalindromic reduced denominator
}

TEST_CASE("finite group analysis short-circuits to the Poincare polynomial") {
    GrowthSeries s = analyzed("finite-h4");
    CHECK(s.finiteGroup);
    CHECK(s.Q == IntPoly::one());
    CHECK(s.P == block_product({2, 12, 20, 30}));
    CHECK(s.reduced.as_polynomial() == s.P);
    CHECK(s.P.eval(BigInt(1)) == 14400);
}

TEST_CASE("coefficient recursion reproduces every verified denominator") {
    for (const std::string& key :
         {"lanner-5334", "lanner-5333", "ra-hexagon", "ra-dodecahedron",
          "prism-5-3-7", "prism-3-3-7", "triangle-2-3-7"}) {
        CAPTURE(key);
        GrowthSeries s = analyzed(key);
        REQUIRE(s.extension.available);
        unsigned upTo = static_cast<unsigned>(s.Q.degree());
        RecursionResult rec = recursion_coefficients(s, upTo);
        REQUIRE(rec.b.size() == upTo + 1);
        for (unsigned k = 0; k <= upTo; ++k) {
            CAPTURE(k);
            CHECK(rec.b[k] == s.Q.coeff(k));
        }
    }
}

TEST_CASE("recursion state exposes the block census") {
    GrowthSeries s = analyzed("lanner-5334");
    RecursionResult rec = recursion_coefficients(s, 3);
    // N_k = number of blocks exceeding k
    CHECK(rec.state.Nk[0] == 5);
    CHECK(rec.state.Nk[1] == 5);
    CHECK(rec.state.Nk[2] == 4);
    CHECK(rec.state.Nk[3] == 4);
    CHECK(rec.state.sigma == sigma_table(s.extension.blocks));
    CHECK_FALSE(rec.state.perSubgroup.empty());
}

TEST_CASE("sigma table is the coefficient list of prod (1 - y^n_i)") {
    std::vector<unsigned> blocks{2, 3};
    std::vector<BigInt> sigma = sigma_table(blocks);
    // (1 - y^2)(1 - y^3) = 1 - y^2 - y^3 + y^5
    CHECK(sigma == std::vector<BigInt>{1, 0, -1, -1, 0, 1});
    // epsilon sums are suffix sums with flipped sign
    CHECK(epsilon_sum(sigma, 0) == 1);
    CHECK(epsilon_sum(sigma, 1) == 1);
    CHECK(epsilon_sum(sigma, 2) == 0);
    CHECK(epsilon_sum(sigma, 3) == -1);
    CHECK(epsilon_sum(sigma, 5) == 0);
}

TEST_CASE("derivatives of the block product at zero, three ways") {
    std::vector<std::vector<unsigned>> cases = {
        {2, 3}, {2, 6, 10}, {2, 8, 12, 20, 30}, {2, 2, 2, 2}, {4, 5, 6}};
    for (const auto& blocks : cases) {
        CAPTURE(blocks.size());
        IntPoly g = block_product(blocks);
        for (unsigned l = 0; l <= 8; ++l) {
            BigInt direct = product_derivative_at0(blocks, l);
            CHECK(direct == product_derivative_recursive(blocks, l));
            // l-th derivative at 0 equals l! times the l-th coefficient
            CHECK(direct == factorial(l) * g.coeff(l));
        }
        std::array<BigInt, 3> low = low_derivatives(blocks);
        CHECK(low[0] == product_derivative_at0(blocks, 1));
        CHECK(low[1] == product_derivative_at0(blocks, 2));
        CHECK(low[2] == product_derivative_at0(blocks, 3));
    }
}

TEST_CASE("block count census") {
    std::vector<unsigned> blocks{2, 8, 12};
    CHECK(block_count_above(blocks, 1) == 3);
    CHECK(block_count_above(blocks, 2) == 2);
    CHECK(block_count_above(blocks, 8) == 1);
    CHECK(block_count_above(blocks, 12) == 0);
}

TEST_CASE("series inversion by Leibniz") {
    CHECK(inverse_series(IntPoly{1, -1}, 5) ==
          std::vector<BigInt>{1, 1, 1, 1, 1, 1});
    CHECK(inverse_series(IntPoly{1, -2, 1}, 5) ==
          std::vector<BigInt>{1, 2, 3, 4, 5, 6});
    // defining identity: g * (sum a_k x^k) = 1 mod x^13
    IntPoly g = block_product({2, 3});
    std::vector<BigInt> inv = inverse_series(g, 12);
    IntPoly partial{std::vector<BigInt>(inv)};
    IntPoly prod = g * partial;
    CHECK(prod.coeff(0) == 1);
    for (unsigned k = 1; k <= 12; ++k) CHECK(prod.coeff(k) == 0);
}

TEST_CASE("taylor expansion basics") {
    // Fibonacci generating function
    std::vector<BigInt> fib = taylor_coefficients(RatFunc(IntPoly::one(), IntPoly{1, -1, -1}), 7);
    CHECK(fib == std::vector<BigInt>{1, 1, 2, 3, 5, 8, 13, 21});

    std::vector<BigInt> hex = taylor_coefficients(analyzed("ra-hexagon"), 10);
    CHECK(hex == std::vector<BigInt>{1, 6, 24, 90, 336, 1254, 4680, 17466, 65184, 243270, 907896});

    std::vector<BigInt> lan = taylor_coefficients(analyzed("lanner-5334"), 7);
    CHECK(lan == std::vector<BigInt>{1, 5, 14, 31, 60, 106, 176, 280});
}

TEST_CASE("taylor coefficients of a growth series are positive integers") {
    for (const std::string& key : {"lanner-5333", "prism-5-3-7", "triangle-2-3-7"}) {
        CAPTURE(key);
        std::vector<BigInt> a = taylor_coefficients(analyzed(key), 24);
        CHECK(a[0] == 1);
        for (const BigInt& v : a) CHECK(v > 0);
    }
}

TEST_CASE("reciprocity of the growth function") {
    // even dimension: f(1/x) = f(x); odd: f(1/x) = -f(x)
    for (const std::string& key : {"lanner-5334", "lanner-5333"}) {
        CAPTURE(key);
        RatFunc f = analyzed(key).reduced;
        CHECK(f.reciprocal_substitution() == f);
    }
    for (const std::string& key : {"ra-dodecahedron", "prism-5-3-7"}) {
        CAPTURE(key);
        RatFunc f = analyzed(key).reduced;
        CHECK(f.reciprocal_substitution() == -f);
    }
}

TEST_CASE("euler characteristic and covolume") {
    // right-angled hexagon: chi = -1/2, area = pi
    EulerVolume hex = euler_and_volume(analyzed("ra-hexagon"), 2);
    CHECK(hex.chi == BigRat(-1, 2));
    CHECK_FALSE(hex.poleAtOne);
    REQUIRE(hex.volumeCoeff.has_value());
    CHECK(*hex.volumeCoeff == 1);

    // odd dimension: chi = 0 and the growth function has a pole at 1
    EulerVolume dod = euler_and_volume(analyzed("ra-dodecahedron"), 3);
    CHECK(dod.chi == 0);
    CHECK(dod.poleAtOne);
    CHECK_FALSE(dod.volumeCoeff.has_value());

    EulerVolume pri = euler_and_volume(analyzed("prism-5-3-7"), 3);
    CHECK(pri.chi == 0);
    CHECK(pri.poleAtOne);
}

TEST_CASE("subgroup distribution identity") {
    // identity: sum over finite T of (-1)^|T| |T| = (-1)^n |S|, and the
    // complementary sum over infinite T = (-1)^{n+1} |S|
    struct Case { const char* key; unsigned n; };
    for (Case c : {Case{"lanner-5334", 4}, Case{"lanner-5333", 4},
                   Case{"ra-hexagon", 2}, Case{"ra-dodecahedron", 3},
                   Case{"prism-5-3-7", 3}, Case{"prism-3-3-7", 3},
                   Case{"triangle-2-3-7", 2}}) {
        CAPTURE(c.key);
        CoxeterSystem s = catalog_system(c.key);
        FiniteLattice lat = enumerate_finite_subsets(s);
        SubgroupDistribution d = subgroup_distribution(s, lat, c.n);
        CHECK(d.check);
        long long sign = (c.n % 2 ? -1 : 1);
        CHECK(d.finiteSum == sign * static_cast<long long>(s.rank()));
        CHECK(d.infiniteSum == -sign * static_cast<long long>(s.rank()));
    }
}

TEST_CASE("prism infinite-subset census") {
    CoxeterSystem s = catalog_system("prism-3-3-7");
    FiniteLattice lat = enumerate_finite_subsets(s);
    SubgroupDistribution d = subgroup_distribution(s, lat, 3);
    REQUIRE(d.infiniteBySize.size() == 6);
    CHECK(d.infiniteBySize[2] == 1);
    CHECK(d.infiniteBySize[3] == 4);
    CHECK(d.infiniteBySize[4] == 5);
    CHECK(d.infiniteBySize[5] == 1);
    // 2*1 - 3*4 + 4*5 - 5*1 = 5
    CHECK(d.infiniteSum == 5);
    CHECK(d.finiteBySize == std::vector<BigInt>{1, 5, 9, 6, 0, 0});
}

TEST_CASE("rebasing the numerator onto a larger block list") {
    GrowthSeries s = analyzed("lanner-5334");
    RebaseResult rb = rebase_numerator(s, {2, 6, 8, 12, 20, 30});
    CHECK(rb.num == block_product({2, 6, 8, 12, 20, 30}));
    CHECK(rb.multiplier == block(6));
    CHECK(rb.den == s.Q * rb.multiplier);
    CHECK(RatFunc(rb.num, rb.den) == s.reduced);

    CHECK_THROWS_AS(rebase_numerator(s, {2, 6, 12, 20, 30}), InputError);
}

TEST_CASE("virgin and extended forms are consistent on every verified system") {
    for (const CatalogEntry& e : catalog_entries()) {
        if (!e.verified || !e.system) continue;
        CAPTURE(e.key);
        GrowthSeries s = analyze_growth(*e.system, e.dimension);
        // ext = virgin * R, with every subgroup polynomial dividing virgin
        REQUIRE(s.extension.available);
        CHECK(s.extension.ext == s.virgin.poly * s.extension.R);
        for (const LatticeEntry& le : s.lattice.entries) {
            IntPoly fT = poincare_polynomial(le.types);
            CHECK(s.virgin.poly.divisible_by(fT));
        }
        if (!s.finiteGroup) {
            CHECK(s.Q.degree() == s.P.degree());
            // complete form equals the Steinberg quotient exactly
            CHECK(RatFunc(s.P, s.Q) == s.reduced);
        }
    }
}
