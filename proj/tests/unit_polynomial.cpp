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

#include "coxgrowth/bigint.hpp"
#include "coxgrowth/polynomial.hpp"
#include "coxgrowth/rational_function.hpp"

using namespace coxgrowth;

TEST_CASE("bigint helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigInt("2432902008176640000"));
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(10, 11) == 0);
    CHECK(binomial(10, -1) == 0);
    CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
    CHECK(big_gcd(BigInt(48), BigInt(-36)) == 12);
    CHECK(exact_div(BigInt(-12), BigInt(4)) == -3);
    CHECK_THROWS(exact_div(BigInt(7), BigInt(2)));
    CHECK_THROWS(exact_div(BigInt(7), BigInt(0)));
}

TEST_CASE("poly basics and degree conventions") {
    IntPoly z = IntPoly::zero();
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK(z.coeff(5) == 0);

    IntPoly p{1, 0, -3, 0, 0};  // trailing zeros trimmed
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(2) == -3);
    CHECK(p.coeff(7) == 0);
    CHECK(p.leading() == -3);
    CHECK(p.constant() == 1);

    CHECK(IntPoly::monomial(BigInt(5), 3) == IntPoly{0, 0, 0, 5});
    CHECK(IntPoly::monomial(BigInt(0), 3).is_zero());
    CHECK(IntPoly::x() * IntPoly::x() == IntPoly{0, 0, 1});
}

TEST_CASE("poly ring arithmetic") {
    IntPoly a{1, 1};           // 1 + x
    IntPoly b{1, -1};          // 1 - x
    CHECK(a * b == IntPoly{1, 0, -1});
    CHECK(a + b == IntPoly{2});
    CHECK(a - a == IntPoly::zero());
    CHECK(-a == IntPoly{-1, -1});
    CHECK(a.pow(0) == IntPoly::one());
    CHECK(a.pow(4) == IntPoly{1, 4, 6, 4, 1});
    CHECK(a.scaled(BigInt(3)) == IntPoly{3, 3});
    CHECK(a.shifted(2) == IntPoly{0, 0, 1, 1});

    // distributivity spot check on asymmetric operands
    IntPoly c{2, 0, 0, -7, 1};
    CHECK(c * (a + b) == c * a + c * b);
}

TEST_CASE("poly evaluation in three domains") {
    IntPoly p{3, -2, 1};  // 3 - 2x + x^2
    CHECK(p.eval(BigInt(10)) == 83);
    CHECK(p.eval(BigRat(1, 2)) == BigRat(9, 4));
    CHECK(p.eval(2.0) == doctest::Approx(3.0));
    CHECK(IntPoly::zero().eval(BigInt(5)) == 0);
}

TEST_CASE("derivative, reversal, palindromy") {
    IntPoly p{5, 0, -3, 2};
    CHECK(p.derivative() == IntPoly{0, -6, 6});
    CHECK(IntPoly{7}.derivative().is_zero());
    CHECK(IntPoly::zero().derivative().is_zero());

    CHECK(p.reversed() == IntPoly{2, -3, 0, 5});
    CHECK(p.reversed().reversed() == p);  // p(0) != 0 here
    CHECK(IntPoly::zero().reversed().is_zero());

    CHECK(IntPoly{1, 4, 1}.palindromic());
    CHECK(IntPoly{1, 0, -1}.antipalindromic());
    CHECK_FALSE(IntPoly{1, 2}.palindromic());
    CHECK_FALSE(IntPoly{1, 4, 1}.antipalindromic());
}

TEST_CASE("content and primitive part keep leading sign") {
    IntPoly p{-6, 0, -9};
    CHECK(p.content() == 3);
    CHECK(p.primitive_part() == IntPoly{-2, 0, -3});
    CHECK(IntPoly::zero().content() == 0);

    IntPoly q{4, -8, 12};
    CHECK(q.primitive_part() == IntPoly{1, -2, 3});
}

TEST_CASE("pseudo division identity") {
    IntPoly p{3, -5, 0, 7, 2};
    IntPoly d{1, 0, 3};
    IntPoly::DivMod dm = p.pseudo_divmod(d);
    BigInt lc = d.leading();
    // lc^(deg p - deg d + 1) * p = quot * d + rem
    IntPoly lhs = p.scaled(lc * lc * lc);
    CHECK(lhs == dm.quot * d + dm.rem);
    CHECK(dm.rem.degree() < d.degree());
}

TEST_CASE("exact quotient over Z") {
    IntPoly a{1, 1};
    IntPoly b{1, -3, 1};
    IntPoly prod = a * a * b;
    auto q = prod.exact_quotient(a);
    REQUIRE(q.has_value());
    CHECK(*q == a * b);
    CHECK(prod.divisible_by(b));
    CHECK_FALSE(prod.divisible_by(IntPoly{1, 1, 1}));
    // non-monic divisor with non-integral quotient
    CHECK_FALSE(IntPoly{0, 1}.exact_quotient(IntPoly{0, 2}).has_value());
    CHECK(IntPoly{0, 2}.exact_quotient(IntPoly{0, 1}).value() == IntPoly{2});
}

TEST_CASE("polynomial gcd is primitive with positive leading coefficient") {
    IntPoly common{-1, 1};  // x - 1
    IntPoly a = common * IntPoly{2, 1};
    IntPoly b = common * IntPoly{3, 1};
    CHECK(gcd(a, b) == common);
    CHECK(gcd(a.scaled(BigInt(-4)), b.scaled(BigInt(6))) == common);
    CHECK(gcd(a, IntPoly::zero()) == a.primitive_part());
    // coprime pair
    CHECK(gcd(IntPoly{1, 1}, IntPoly{1, -1}).degree() == 0);
}

TEST_CASE("squarefree decomposition recovers multiplicities") {
    IntPoly u1{1, 1};       // x + 1
    IntPoly u2{-1, 1};      // x - 1
    IntPoly u3{1, 0, 1};    // x^2 + 1
    IntPoly p = u1 * u2 * u2 * u3 * u3 * u3;
    std::vector<IntPoly> dec = squarefree_decomposition(p);
    REQUIRE(dec.size() == 3);
    CHECK(dec[0] == u1);
    CHECK(dec[1] == u2);
    CHECK(dec[2] == u3);
    CHECK(squarefree_part(p) == u1 * u2 * u3);

    // reassembly
    IntPoly back = IntPoly::one();
    for (size_t i = 0; i < dec.size(); ++i)
        back *= dec[i].pow(static_cast<unsigned>(i + 1));
    CHECK(back == p.primitive_part());
}

TEST_CASE("string rendering") {
    CHECK(IntPoly::zero().str() == "0");
    CHECK(IntPoly{1, 0, -2}.str("t") == "1 - 2*t^2");
}

TEST_CASE("rational function normalization") {
    RatFunc f(IntPoly{2, 2}, IntPoly{0, 4});  // (2+2x)/4x
    CHECK(f.num() == IntPoly{1, 1});
    CHECK(f.den() == IntPoly{0, 2});

    // den(0) > 0 sign convention
    RatFunc g(IntPoly{1}, IntPoly{-1, -1});
    CHECK(g.den() == IntPoly{1, 1});
    CHECK(g.num() == IntPoly{-1});

    // common factor cancelled
    RatFunc h(IntPoly{1, 2, 1}, IntPoly{1, 1});
    CHECK(h.is_polynomial());
    CHECK(h.as_polynomial() == IntPoly{1, 1});
}

TEST_CASE("rational function field operations") {
    RatFunc f(IntPoly::one(), IntPoly{1, -1});   // 1/(1-x)
    RatFunc g(IntPoly::one(), IntPoly{1, 1});    // 1/(1+x)
    RatFunc s = f + g;
    CHECK(s.num() == IntPoly{2});
    CHECK(s.den() == IntPoly{1, 0, -1});
    CHECK(f - f == RatFunc());
    CHECK((f * g).den() == IntPoly{1, 0, -1});
    CHECK(f / f == RatFunc::one());
    CHECK((-f).num() == IntPoly{-1});

    CHECK(f.eval(BigRat(1, 2)).value() == BigRat(2));
    CHECK_FALSE(f.eval(BigRat(1)).has_value());  // pole
}

TEST_CASE("reciprocal substitution is exact") {
    RatFunc f(IntPoly::one(), IntPoly{1, -1});  // 1/(1-x)
    RatFunc r = f.reciprocal_substitution();
    // f(1/x) = x/(x-1) = -x/(1-x); den normalized to den(0) > 0
    CHECK(r.num() == IntPoly{0, -1});
    CHECK(r.den() == IntPoly{1, -1});
    // involution
    CHECK(r.reciprocal_substitution() == f);

    // reciprocity of a palindromic quotient: f(1/x) == f(x) for
    // P/Q with both palindromic of equal degree
    RatFunc pal(IntPoly{1, 3, 1}, IntPoly{1, -5, 1});
    CHECK(pal.reciprocal_substitution() == pal);
}
