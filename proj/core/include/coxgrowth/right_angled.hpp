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

#ifndef COXGROWTH_RIGHT_ANGLED_HPP
#define COXGROWTH_RIGHT_ANGLED_HPP

#include <array>
#include <string>

#include "coxgrowth/growth.hpp"
#include "coxgrowth/root_isolation.hpp"

namespace coxgrowth {

// face vector (f_0, ..., f_{n-1}) of an n-polytope
struct FVector {
    unsigned n = 0;
    std::vector<long long> f;

    // alternating sum = 1 - (-1)^n
    bool euler_ok() const;
};

bool is_right_angled(const CoxeterSystem& system);

struct RaCoefficients {
    BigInt b1;
    std::optional<BigInt> b2;  // defined for n = 4
};
RaCoefficients ra_coefficients(const CoxeterSystem& system, unsigned n,
                               unsigned maxRank = 24);

struct ClosedForm {
    IntPoly P, Q;
    RatFunc reduced;
};

struct Ra4Result {
    FVector fv;
    ClosedForm form;   // [2]^4 / quartic
    bool simpleLint;   // f_1 = 2 f_0 (simple 4-polytope)
    bool pentagonLint; // f_0 >= 5 f_3
};
Ra4Result ra4_series(const FVector& fv);

struct SurdPole {
    std::string surd;        // nested-radical closed form
    double approx = 0;
    IsolatedRoot certified;  // isolating interval from the quartic itself
};

struct RAQuarticPoles {
    BigInt alpha, beta, gamma;
    std::array<SurdPole, 4> poles;  // ascending
    bool simpleCertified = false;   // gcd(Q, Q') = 1
    bool surdsMatch = false;        // radicals agree with isolation within 1e-9
};
RAQuarticPoles ra4_poles(const FVector& fv);

struct Ra3Result {
    unsigned facets = 0;
    ClosedForm form;  // [2]^3 / (1-x)(1 - (k-4)x + x^2)
    IsolatedRoot tau; // certified interval for the growth rate, width < 1e-8
    double tauApprox = 0;
    // The closed form is parameterized by the facet count k = |S| (this makes
    // a_1 = |S| and matches the Steinberg computation); a vertex-count
    // parameterization of the same shape would give a_1 = f_0 = 2(k-2).
    struct Discrepancy {
        unsigned facetParameter = 0;
        long long vertexParameter = 0;  // 2(k-2) for a simple 3-polytope
        BigInt a1FromFacets, a1FromVertices;
        std::string note;
    } discrepancy;
};
Ra3Result ra3_series(unsigned numFacets);

struct FVectorEstimate {
    FVector fv;        // f_{n-l} = number of finite subsets of size l
    bool eulerOk = false;
    // n = 4 only: sum over F' of (-1)^{|T|}|T|(|T|+1) against 6 f_3 + 2 f_0
    std::optional<bool> identityOk;
    BigInt identityLhs = 0, identityRhs = 0;
};
FVectorEstimate f_vector_estimate(const CoxeterSystem& system, unsigned n,
                                  unsigned maxRank = 24);

} // namespace coxgrowth

#endif
