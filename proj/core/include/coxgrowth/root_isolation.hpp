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

#ifndef COXGROWTH_ROOT_ISOLATION_HPP
#define COXGROWTH_ROOT_ISOLATION_HPP

#include <optional>
#include <vector>

#include "coxgrowth/polynomial.hpp"

namespace coxgrowth {

// An isolating interval for a single distinct real root. lo == hi pins an
// exact rational root; otherwise the open interval (lo, hi) contains exactly
// one distinct root of the polynomial and neither endpoint is a root.
struct IsolatedRoot {
    BigRat lo, hi;
    unsigned multiplicity = 1;

    bool exact() const { return lo == hi; }
    BigRat midpoint() const { return (lo + hi) / 2; }
    double approx() const { return midpoint().convert_to<double>(); }
};

// Sturm chain of a squarefree polynomial (primitive parts, signs preserved)
std::vector<IntPoly> sturm_chain(const IntPoly& squarefree);

// sign variation count of the chain at v
unsigned sign_variations(const std::vector<IntPoly>& chain, const BigRat& v);

// number of distinct real roots in (lo, hi]; chain from sturm_chain
unsigned count_roots(const std::vector<IntPoly>& chain, const BigRat& lo, const BigRat& hi);

// Cauchy root bound: every real root lies in (-B, B)
BigRat cauchy_bound(const IntPoly& p);

// All real roots of p in (lo, hi) (whole line when unbounded), sorted
// ascending, with multiplicities recovered from the squarefree decomposition.
std::vector<IsolatedRoot> isolate_real_roots(
    const IntPoly& p,
    std::optional<BigRat> lo = std::nullopt,
    std::optional<BigRat> hi = std::nullopt);

// Shrink an isolating interval until hi - lo <= eps; returns the refined
// interval. `p` may carry multiplicities; refinement runs on its squarefree
// part, which must change sign across the interval unless the root is pinned.
IsolatedRoot refine_root(const IntPoly& p, IsolatedRoot interval, const BigRat& eps);

} // namespace coxgrowth

#endif
