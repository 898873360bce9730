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

#include "coxgrowth/cyclotomic.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace coxgrowth {

IntPoly block(unsigned k) {
    if (k == 0) throw std::invalid_argument("block size must be >= 1");
    std::vector<BigInt> v(k, BigInt(1));
    return IntPoly(std::move(v));
}

IntPoly block_product(const std::vector<unsigned>& ks) {
    IntPoly p = IntPoly::one();
    for (unsigned k : ks) p *= block(k);
    return p;
}

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

std::mutex cycMutex;
std::unordered_map<unsigned, IntPoly> cycTable;

IntPoly compute_cyclotomic(unsigned d) {
    // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e
    std::vector<BigInt> v(d + 1, BigInt(0));
    v[0] = -1;
    v[d] = 1;
    IntPoly p(std::move(v));
    for (unsigned e = 1; e < d; ++e) {
        if (d % e != 0) continue;
        auto q = p.exact_quotient(cyclotomic(e));
        if (!q) throw std::logic_error("cyclotomic recursion failed");
        p = *q;
    }
    return p;
}

} // namespace

const IntPoly& cyclotomic(unsigned d) {
    if (d == 0) throw std::invalid_argument("cyclotomic index must be >= 1");
    {
        std::lock_guard<std::mutex> lock(cycMutex);
        auto it = cycTable.find(d);
        if (it != cycTable.end()) return it->second;
    }
    IntPoly p = d == 1 ? IntPoly{BigInt(-1), BigInt(1)} : compute_cyclotomic(d);
    std::lock_guard<std::mutex> lock(cycMutex);
    return cycTable.emplace(d, std::move(p)).first->second;
}

IntPoly CycFactorization::cyclotomic_part() const {
    IntPoly p = IntPoly::one();
    for (const auto& [d, e] : exponents) p *= cyclotomic(d).pow(e);
    return p;
}

IntPoly CycFactorization::reassemble() const {
    IntPoly p = cyclotomic_part() * remainder;
    return unit < 0 ? -p : p;
}

CycFactorization cyclotomic_factor(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("cyclotomic_factor of zero");
    CycFactorization out;
    IntPoly rem = p;
    // ascending d, greedy maximal exponent; phi(d) <= deg bounds the search
    // via phi(d) >= sqrt(d/2), i.e. d <= 2 deg^2
    for (unsigned d = 1; rem.degree() > 0; ++d) {
        unsigned long deg = static_cast<unsigned long>(rem.degree());
        if (static_cast<unsigned long>(d) > 2 * deg * deg) break;
        if (euler_phi(d) > deg) continue;
        const IntPoly& phi = cyclotomic(d);
        while (true) {
            auto q = rem.exact_quotient(phi);
            if (!q) break;
            out.exponents[d] += 1;
            rem = *q;
        }
    }
    if (rem.leading() < 0) {
        out.unit = -1;
        rem = -rem;
    }
    out.remainder = rem;
    return out;
}

std::map<unsigned, unsigned> block_cyclotomic_exponents(const std::vector<unsigned>& blocks) {
    std::map<unsigned, unsigned> out;
    for (unsigned n : blocks) {
        for (unsigned d = 2; d <= n; ++d) {
            if (n % d == 0) out[d] += 1;
        }
    }
    return out;
}

} // namespace coxgrowth
