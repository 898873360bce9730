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

#ifndef COXGROWTH_GROWTH_HPP
#define COXGROWTH_GROWTH_HPP

#include <array>
#include <optional>
#include <vector>

#include "coxgrowth/coxeter.hpp"
#include "coxgrowth/cyclotomic.hpp"
#include "coxgrowth/rational_function.hpp"

namespace coxgrowth {

struct VirginForm {
    IntPoly poly;
    CycFactorization factors;
};

struct ExtendedForm {
    bool available = false;  // false = virgin-only mode (block search failed)
    std::vector<unsigned> blocks;  // n_1 <= ... <= n_r with prod [n_i] = ext
    IntPoly ext;
    IntPoly R;  // ext / virgin
    bool multipleOptima = false;  // ties under the (r, sum, lex) order
};

// Everything the pipeline derives from one Coxeter system. The reduced form
// f_S = p/q always exists; the complete form P/Q only when the block search
// succeeded (it always does for genuine systems).
struct GrowthSeries {
    CoxeterSystem system;
    FiniteLattice lattice;
    RatFunc reduced;
    VirginForm virgin;
    ExtendedForm extension;
    IntPoly P, Q;
    std::optional<unsigned> dimensionHint;
    // +1 when the ambient dimension is even, -1 when odd; resolved from the
    // hint, else from the (anti)palindromy of the reduced denominator
    std::optional<int> paritySign;
    bool finiteGroup = false;

    unsigned r() const { return static_cast<unsigned>(extension.blocks.size()); }
};

RatFunc steinberg_series(const CoxeterSystem& system, const FiniteLattice& lattice);
VirginForm virgin_form(const FiniteLattice& lattice);
ExtendedForm extended_form(const VirginForm& virg, const FiniteLattice& lattice);

GrowthSeries analyze_growth(const CoxeterSystem& system,
                            std::optional<unsigned> dimensionHint = {},
                            unsigned maxRank = 24);

// ---- exact derivative helpers ----

// coefficients of prod_i (1 - y^{n_i}); index s = signed subset count sigma_s
std::vector<BigInt> sigma_table(const std::vector<unsigned>& blocks);
// E_j = sum over nonempty X of (-1)^{|X|+1} eps_j(n_X) = -sum_{s>j} sigma_s
BigInt epsilon_sum(const std::vector<BigInt>& sigma, unsigned j);
// l-th derivative of g = prod [n_i] at 0, by the signed subset-sum expansion
BigInt product_derivative_at0(const std::vector<unsigned>& blocks, unsigned l);
// same value by the recursive form (complement-count reading)
BigInt product_derivative_recursive(const std::vector<unsigned>& blocks, unsigned l);
// g'(0), g''(0), g'''(0) in closed form via N_2, N_3
std::array<BigInt, 3> low_derivatives(const std::vector<unsigned>& blocks);
// N_k = card{ n_i > k }
BigInt block_count_above(const std::vector<unsigned>& blocks, unsigned k);
// Taylor coefficients of 1/g for g with g(0) = 1, by Leibniz inversion
std::vector<BigInt> inverse_series(const IntPoly& g, unsigned upTo);

struct RecursionState {
    std::vector<BigInt> Pk;     // (1/P)^{(k)}(0), k-factorial scaled
    std::vector<BigInt> PkTau;  // signed sum over F' of (1/f_T)^{(k)}(0)
    std::vector<BigInt> Bk;
    std::vector<BigInt> Nk;     // N_0..N_upTo
    std::vector<BigInt> sigma;
    // per finite T with |T| >= 2: the subset and its C_2, C_3 counts
    struct SubgroupCounts {
        std::vector<unsigned> subset;
        std::vector<unsigned> cBlocks;
        unsigned C2 = 0, C3 = 0;
    };
    std::vector<SubgroupCounts> perSubgroup;
};

struct RecursionResult {
    std::vector<BigInt> b;  // b_0..b_upTo
    RecursionState state;
};

// denominator coefficients via the coefficient recursion, independent of the
// exact-division path; requires blocks and a resolved parity
RecursionResult recursion_coefficients(const GrowthSeries& series, unsigned upTo);

std::vector<BigInt> taylor_coefficients(const RatFunc& f, unsigned upTo);
std::vector<BigInt> taylor_coefficients(const GrowthSeries& series, unsigned upTo);

struct EulerVolume {
    BigRat chi;
    bool poleAtOne = false;
    // coefficient of pi^{n/2} in the covolume, present for even n
    std::optional<BigRat> volumeCoeff;
};
EulerVolume euler_and_volume(const GrowthSeries& series, unsigned n);

struct RebaseResult {
    IntPoly multiplier;  // prod [target] / P
    IntPoly num;         // prod [target]
    IntPoly den;         // Q * multiplier
};
RebaseResult rebase_numerator(const GrowthSeries& series,
                              const std::vector<unsigned>& targetBlocks);

struct SubgroupDistribution {
    BigInt finiteSum = 0;    // sum over finite T of (-1)^{|T|} |T|
    BigInt infiniteSum = 0;  // same over infinite T
    bool check = false;      // against (-1)^n |S| and (-1)^{n+1} |S|
    std::vector<BigInt> finiteBySize;    // index = |T|
    std::vector<BigInt> infiniteBySize;
};
SubgroupDistribution subgroup_distribution(const CoxeterSystem& system,
                                           const FiniteLattice& lattice, unsigned n);

} // namespace coxgrowth

#endif
