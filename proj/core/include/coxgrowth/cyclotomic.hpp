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

#ifndef COXGROWTH_CYCLOTOMIC_HPP
#define COXGROWTH_CYCLOTOMIC_HPP

#include <map>
#include <vector>

#include "coxgrowth/polynomial.hpp"

namespace coxgrowth {

// [k] = 1 + x + ... + x^{k-1}, k >= 1
IntPoly block(unsigned k);
IntPoly block_product(const std::vector<unsigned>& ks);

// Phi_d, memoized; thread safe
const IntPoly& cyclotomic(unsigned d);

unsigned euler_phi(unsigned n);

// p = unit * prod_d Phi_d^{e_d} * remainder, remainder with positive leading
// coefficient and no cyclotomic factors, unit in {+1, -1}
struct CycFactorization {
    int unit = 1;
    std::map<unsigned, unsigned> exponents;
    IntPoly remainder;

    IntPoly reassemble() const;
    IntPoly cyclotomic_part() const;
};

CycFactorization cyclotomic_factor(const IntPoly& p);

// exponent of Phi_d in prod [n_i]: the number of n_i divisible by d (d >= 2)
std::map<unsigned, unsigned> block_cyclotomic_exponents(const std::vector<unsigned>& blocks);

} // namespace coxgrowth

#endif
