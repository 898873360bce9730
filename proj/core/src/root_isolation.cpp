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

#include "coxgrowth/root_isolation.hpp"

#include <algorithm>
#include <stdexcept>

namespace coxgrowth {

std::vector<IntPoly> sturm_chain(const IntPoly& squarefree) {
    std::vector<IntPoly> chain;
    if (squarefree.is_zero()) return chain;
    chain.push_back(squarefree);
    if (squarefree.degree() == 0) return chain;
    chain.push_back(squarefree.derivative());
    while (chain.back().degree() > 0) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        IntPoly rem = a.pseudo_divmod(b).rem;
        if (rem.is_zero()) break;
        // pseudo division scaled the dividend by lc(b)^steps; a negative odd
        // scale flips the sign, which Sturm chains must not do
        long steps = a.degree() - b.degree() + 1;
        bool flipped = b.leading() < 0 && (steps % 2 != 0);
        IntPoly next = rem.primitive_part();
        if (flipped) next = -next;
        chain.push_back(-next);
    }
    return chain;
}

namespace {

int sign_at(const IntPoly& p, const BigRat& v) {
    return sign_of(p.eval(v));
}

unsigned variations(const std::vector<int>& signs) {
    unsigned count = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

} // namespace

unsigned sign_variations(const std::vector<IntPoly>& chain, const BigRat& v) {
    std::vector<int> signs;
    signs.reserve(chain.size());
    for (const auto& p : chain) signs.push_back(sign_at(p, v));
    return variations(signs);
}

unsigned count_roots(const std::vector<IntPoly>& chain, const BigRat& lo, const BigRat& hi) {
    if (lo > hi) throw std::invalid_argument("count_roots: empty interval");
    unsigned a = sign_variations(chain, lo);
    unsigned b = sign_variations(chain, hi);
    return a - b;
}

BigRat cauchy_bound(const IntPoly& p) {
    if (p.is_zero() || p.degree() == 0) return BigRat(1);
    BigInt maxc = 0;
    for (long i = 0; i < p.degree(); ++i) {
        BigInt a = p.coeff(static_cast<std::size_t>(i));
        if (a < 0) a = -a;
        if (a > maxc) maxc = a;
    }
    BigInt lead = p.leading();
    if (lead < 0) lead = -lead;
    return BigRat(1) + BigRat(maxc, lead);
}

namespace {

struct Isolator {
    std::vector<IntPoly> chain;
    const IntPoly* sf;
    std::vector<std::pair<BigRat, BigRat>> found;  // lo==hi pins exact root

    // (lo, hi) with sf(lo) != 0 != sf(hi); count via Sturm
    void isolate(const BigRat& lo, const BigRat& hi) {
        unsigned n = count_roots(chain, lo, hi);
        if (n == 0) return;
        if (n == 1) {
            found.emplace_back(lo, hi);
            return;
        }
        BigRat mid = (lo + hi) / 2;
        if (sf->eval(mid) == 0) {
            found.emplace_back(mid, mid);
            // nudge around the exact root so sub-interval endpoints are not roots
            BigRat delta = (hi - lo) / 4;
            while (true) {
                BigRat l = mid - delta, r = mid + delta;
                if (sf->eval(l) != 0 && sf->eval(r) != 0 &&
                    count_roots(chain, l, r) == 1) {
                    isolate(lo, l);
                    isolate(r, hi);
                    return;
                }
                delta /= 2;
            }
        }
        isolate(lo, mid);
        isolate(mid, hi);
    }
};

} // namespace

std::vector<IsolatedRoot> isolate_real_roots(
    const IntPoly& p, std::optional<BigRat> lo, std::optional<BigRat> hi) {
    if (p.is_zero()) throw std::invalid_argument("isolate_real_roots of zero polynomial");
    std::vector<IsolatedRoot> out;
    if (p.degree() == 0) return out;

    std::vector<IntPoly> yun = squarefree_decomposition(p);
    IntPoly sf = IntPoly::one();
    for (const auto& u : yun) sf *= u;

    BigRat bound = cauchy_bound(p);
    BigRat a = lo.value_or(-bound);
    BigRat b = hi.value_or(bound);
    if (a >= b) return out;
    // endpoints must not be roots; shrink inward toward the bound edge if so
    // (callers pass open intervals, so dropping an endpoint root is correct)
    BigRat step = (b - a) / 1024;
    while (sf.eval(a) == 0) a += step, step /= 2;
    step = (b - a) / 1024;
    while (sf.eval(b) == 0) b -= step, step /= 2;
    if (a >= b) return out;

    Isolator iso;
    iso.chain = sturm_chain(sf);
    iso.sf = &sf;
    iso.isolate(a, b);
    std::sort(iso.found.begin(), iso.found.end());

    for (auto& [l, h] : iso.found) {
        IsolatedRoot r;
        r.lo = l;
        r.hi = h;
        r.multiplicity = 0;
        for (std::size_t i = 0; i < yun.size(); ++i) {
            const IntPoly& u = yun[i];
            bool hit = l == h ? u.eval(l) == 0
                              : sign_of(u.eval(l)) * sign_of(u.eval(h)) < 0;
            if (hit) {
                r.multiplicity = static_cast<unsigned>(i + 1);
                break;
            }
        }
        if (r.multiplicity == 0) throw std::logic_error("isolate_real_roots: multiplicity not found");
        out.push_back(std::move(r));
    }
    return out;
}

IsolatedRoot refine_root(const IntPoly& p, IsolatedRoot interval, const BigRat& eps) {
    if (interval.exact()) return interval;
    IntPoly sf = squarefree_part(p);
    int slo = sign_of(sf.eval(interval.lo));
    int shi = sign_of(sf.eval(interval.hi));
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::invalid_argument("refine_root: interval does not bracket a sign change");
    while (interval.hi - interval.lo > eps) {
        BigRat mid = interval.midpoint();
        int sm = sign_of(sf.eval(mid));
        if (sm == 0) {
            interval.lo = interval.hi = mid;
            return interval;
        }
        if (sm == slo) {
            interval.lo = mid;
        } else {
            interval.hi = mid;
        }
    }
    return interval;
}

} // namespace coxgrowth
