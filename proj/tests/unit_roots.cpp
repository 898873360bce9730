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

#include <cmath>

#include "coxgrowth/cyclotomic.hpp"
#include "coxgrowth/root_isolation.hpp"

using namespace coxgrowth;

namespace {

bool contains(const IsolatedRoot& r, double v) {
    return r.lo.convert_to<double>() <= v && v <= r.hi.convert_to<double>();
}

} // namespace

TEST_CASE("sturm chain counts roots of x^2 - 2") {
    IntPoly p{-2, 0, 1};
    std::vector<IntPoly> chain = sturm_chain(p);
    REQUIRE(chain.size() >= 2);
    CHECK(count_roots(chain, BigRat(0), BigRat(2)) == 1);
    CHECK(count_roots(chain, BigRat(-2), BigRat(2)) == 2);
    CHECK(count_roots(chain, BigRat(2), BigRat(3)) == 0);
    CHECK(sign_variations(chain, BigRat(0)) > sign_variations(chain, BigRat(2)));
}

TEST_CASE("cauchy bound dominates every real root") {
    IntPoly p = IntPoly{-2, 0, 1} * IntPoly{-9, 1} * IntPoly{5, 1};
    BigRat b = cauchy_bound(p);
    for (const IsolatedRoot& r : isolate_real_roots(p)) {
        CHECK(r.lo > -b);
        CHECK(r.hi < b);
    }
}

TEST_CASE("isolation separates close roots and orders them") {
    // roots 1, 10/9, 5/4: denominators force narrow isolation
    IntPoly p = IntPoly{-1, 1} * IntPoly{-10, 9} * IntPoly{-5, 4};
    std::vector<IsolatedRoot> roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 3);
    CHECK(contains(roots[0], 1.0));
    CHECK(contains(roots[1], 10.0 / 9.0));
    CHECK(contains(roots[2], 1.25));
    for (size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi <= roots[i + 1].lo);
}

TEST_CASE("no real roots") {
    CHECK(isolate_real_roots(IntPoly{1, 0, 1}).empty());
    CHECK(isolate_real_roots(cyclotomic(8)).empty());
}

TEST_CASE("multiplicities from the squarefree decomposition") {
    IntPoly p = IntPoly{-1, 1}.pow(2) * IntPoly{3, 1}.pow(3);
    std::vector<IsolatedRoot> roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].multiplicity == 3);
    CHECK(contains(roots[0], -3.0));
    CHECK(roots[1].multiplicity == 2);
    CHECK(contains(roots[1], 1.0));
}

TEST_CASE("window restriction") {
    IntPoly p = IntPoly{-1, 1} * IntPoly{-2, 1} * IntPoly{-3, 1};
    std::vector<IsolatedRoot> roots =
        isolate_real_roots(p, BigRat(3, 2), BigRat(5, 2));
    REQUIRE(roots.size() == 1);
    CHECK(contains(roots[0], 2.0));
}

TEST_CASE("refinement shrinks to the requested width") {
    IntPoly p{-2, 0, 1};
    std::vector<IsolatedRoot> roots = isolate_real_roots(p, BigRat(0), std::nullopt);
    REQUIRE(roots.size() == 1);
    BigRat eps(1, BigInt("1000000000000"));
    IsolatedRoot r = refine_root(p, roots[0], eps);
    CHECK(r.hi - r.lo <= eps);
    CHECK(r.approx() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-11));
}

TEST_CASE("refinement tolerates multiplicities in the input polynomial") {
    IntPoly p = IntPoly{-2, 0, 1}.pow(2);
    std::vector<IsolatedRoot> roots = isolate_real_roots(p, BigRat(0), std::nullopt);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].multiplicity == 2);
    IsolatedRoot r = refine_root(p, roots[0], BigRat(1, 1000000));
    CHECK(r.approx() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-5));
}

TEST_CASE("golden ratio quadratic") {
    // x^2 - x - 1: roots phi and -1/phi
    IntPoly p{-1, -1, 1};
    std::vector<IsolatedRoot> roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    IsolatedRoot phi = refine_root(p, roots[1], BigRat(1, BigInt("10000000000")));
    CHECK(phi.approx() == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-9));
    IsolatedRoot neg = refine_root(p, roots[0], BigRat(1, 1000000));
    CHECK(neg.approx() == doctest::Approx((1 - std::sqrt(5.0)) / 2).epsilon(1e-5));
}

TEST_CASE("degree one and constant edge cases") {
    std::vector<IsolatedRoot> r = isolate_real_roots(IntPoly{-6, 2});
    REQUIRE(r.size() == 1);
    CHECK(contains(r[0], 3.0));
    CHECK(isolate_real_roots(IntPoly{5}).empty());
}
