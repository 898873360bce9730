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

#include "coxgrowth/growth.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace coxgrowth {

RatFunc steinberg_series(const CoxeterSystem& system, const FiniteLattice& lattice) {
    (void)system;
    // g(x) = sum over finite T of (-1)^{|T|} / f_T(x), f_empty = 1
    RatFunc g;
    for (const LatticeEntry& e : lattice.entries) {
        RatFunc term(IntPoly::one(), poincare_polynomial(e.types));
        if (e.subset.size() % 2)
            g = g - term;
        else
            g = g + term;
    }
    if (g.num().is_zero()) throw IntegrityError("Steinberg sum vanished identically");
    // f_S(x) = 1 / g(1/x)
    RatFunc ginv = g.reciprocal_substitution();
    return RatFunc(ginv.den(), ginv.num());
}

VirginForm virgin_form(const FiniteLattice& lattice) {
    std::map<unsigned, unsigned> exps;
    for (const LatticeEntry& e : lattice.entries) {
        std::map<unsigned, unsigned> local = block_cyclotomic_exponents(type_blocks(e.types));
        for (auto [d, k] : local) {
            unsigned& cur = exps[d];
            cur = std::max(cur, k);
        }
    }
    VirginForm v;
    v.factors.unit = 1;
    v.factors.exponents = exps;
    v.factors.remainder = IntPoly::one();
    v.poly = v.factors.reassemble();
    return v;
}

namespace {

// deterministic branch-and-bound over block multisets covering a cyclotomic
// exponent vector; order: least count, then least size sum, then lex least
struct BlockSearch {
    std::vector<unsigned> pool;  // candidate sizes, ascending, with multiplicity
    std::vector<std::pair<unsigned, unsigned>> target;  // (d, exponent), unmet part
    std::vector<unsigned> best;
    bool haveBest = false;
    bool tie = false;

    static std::map<unsigned, unsigned> coverage(const std::vector<unsigned>& blocks) {
        return block_cyclotomic_exponents(blocks);
    }

    bool covers(const std::vector<unsigned>& blocks) const {
        std::map<unsigned, unsigned> cov = coverage(blocks);
        for (auto [d, k] : target) {
            auto it = cov.find(d);
            if (it == cov.end() || it->second < k) return false;
        }
        return true;
    }

    static unsigned long sum_of(const std::vector<unsigned>& v) {
        unsigned long s = 0;
        for (unsigned x : v) s += x;
        return s;
    }

    // enumerate multisets of exactly `extra` further blocks from pool[from..]
    void extend(std::vector<unsigned>& cur, size_t from, unsigned extra) {
        if (extra == 0) {
            if (!covers(cur)) return;
            if (!haveBest) {
                best = cur;
                haveBest = true;
                return;
            }
            unsigned long sc = sum_of(cur), sb = sum_of(best);
            if (sc < sb) {
                best = cur;
                tie = false;
            } else if (sc == sb) {
                std::vector<unsigned> a = cur, b = best;
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                if (a != b) tie = true;
                if (a < b) best = cur;
            }
            return;
        }
        for (size_t i = from; i < pool.size(); ++i) {
            if (i > from && pool[i] == pool[i - 1]) continue;  // skip equal starts
            cur.push_back(pool[i]);
            extend(cur, i + 1, extra - 1);
            cur.pop_back();
        }
    }
};

} // namespace

ExtendedForm extended_form(const VirginForm& virg, const FiniteLattice& lattice) {
    ExtendedForm ext;
    if (virg.poly.degree() <= 0) {  // trivial lattice: only the empty set
        ext.available = true;
        ext.ext = IntPoly::one();
        ext.R = IntPoly::one();
        return ext;
    }

    // candidate pool: per-size maximum multiplicity over the f_T block lists
    std::map<unsigned, unsigned> poolCount;
    for (const LatticeEntry& e : lattice.entries) {
        std::map<unsigned, unsigned> local;
        for (unsigned b : type_blocks(e.types)) ++local[b];
        for (auto [s, k] : local) {
            unsigned& cur = poolCount[s];
            cur = std::max(cur, k);
        }
    }

    BlockSearch search;
    for (auto [d, k] : virg.factors.exponents) search.target.push_back({d, k});
    // the smallest exponent of every finite Coxeter group is 1, so the block
    // n_1 = m_1 + 1 = 2 is always part of the extension
    std::vector<unsigned> forced{2};
    if (poolCount.count(2)) --poolCount[2];
    for (auto [s, k] : poolCount)
        for (unsigned i = 0; i < k; ++i) search.pool.push_back(s);

    for (unsigned extra = 0; extra <= search.pool.size(); ++extra) {
        std::vector<unsigned> cur = forced;
        search.extend(cur, 0, extra);
        if (search.haveBest) break;
    }
    if (!search.haveBest) return ext;  // virgin-only mode

    ext.available = true;
    ext.blocks = search.best;
    std::sort(ext.blocks.begin(), ext.blocks.end());
    ext.multipleOptima = search.tie;
    ext.ext = block_product(ext.blocks);
    std::optional<IntPoly> r = ext.ext.exact_quotient(virg.poly);
    if (!r) throw IntegrityError("extension does not contain the virgin form");
    ext.R = *r;
    return ext;
}

GrowthSeries analyze_growth(const CoxeterSystem& system,
                            std::optional<unsigned> dimensionHint, unsigned maxRank) {
    GrowthSeries s{system};
    s.lattice = enumerate_finite_subsets(system, maxRank);
    s.reduced = steinberg_series(system, s.lattice);
    s.virgin = virgin_form(s.lattice);
    s.extension = extended_form(s.virgin, s.lattice);
    s.dimensionHint = dimensionHint;
    s.finiteGroup = s.reduced.den().degree() == 0;

    if (s.extension.available) {
        s.P = s.extension.ext;
        IntPoly pq = s.P * s.reduced.den();
        std::optional<IntPoly> q = pq.exact_quotient(s.reduced.num());
        if (!q) throw IntegrityError("complete-form division P*q/p failed");
        s.Q = *q;
        // infinite groups: equal degrees by reciprocity; finite groups: Q = 1
        if (!s.finiteGroup && s.Q.degree() != s.P.degree())
            throw IntegrityError("complete form degree mismatch");
        if (s.finiteGroup && s.Q.degree() != 0)
            throw IntegrityError("finite group with non-constant denominator");
        if (s.Q.constant() != 1)
            throw IntegrityError("complete form does not start at 1");
    }

    if (dimensionHint) {
        s.paritySign = (*dimensionHint % 2 == 0) ? 1 : -1;
    } else if (s.reduced.den().palindromic()) {
        s.paritySign = 1;
    } else if (s.reduced.den().antipalindromic()) {
        s.paritySign = -1;
    }
    return s;
}

// ---- derivative helpers ----

std::vector<BigInt> sigma_table(const std::vector<unsigned>& blocks) {
    std::vector<BigInt> sigma{1};
    for (unsigned n : blocks) {
        std::vector<BigInt> next(sigma.size() + n, 0);
        for (size_t i = 0; i < sigma.size(); ++i) {
            next[i] += sigma[i];
            next[i + n] -= sigma[i];
        }
        sigma = std::move(next);
    }
    return sigma;
}

BigInt epsilon_sum(const std::vector<BigInt>& sigma, unsigned j) {
    BigInt tail = 0;
    for (size_t s = j + 1; s < sigma.size(); ++s) tail += sigma[s];
    return -tail;
}

namespace {

// bracket_j = E_j + sum_{i<j} C(r-2+j-i, j-i) E_i; equals [x^j] prod [n_i]
std::vector<BigInt> bracket_coeffs(const std::vector<unsigned>& blocks, unsigned upTo) {
    std::vector<BigInt> sigma = sigma_table(blocks);
    long long r = static_cast<long long>(blocks.size());
    std::vector<BigInt> E(upTo + 1);
    for (unsigned j = 0; j <= upTo; ++j) E[j] = epsilon_sum(sigma, j);
    std::vector<BigInt> G(upTo + 1);
    for (unsigned j = 0; j <= upTo; ++j) {
        BigInt g = E[j];
        for (unsigned i = 0; i < j; ++i) g += binomial(r - 2 + (j - i), j - i) * E[i];
        G[j] = g;
    }
    return G;
}

} // namespace

BigInt product_derivative_at0(const std::vector<unsigned>& blocks, unsigned l) {
    std::vector<BigInt> G = bracket_coeffs(blocks, l);
    return factorial(l) * G[l];
}

BigInt product_derivative_recursive(const std::vector<unsigned>& blocks, unsigned l) {
    std::vector<BigInt> sigma = sigma_table(blocks);
    long long r = static_cast<long long>(blocks.size());
    std::vector<BigInt> g(l + 1);
    g[0] = 1;
    for (unsigned m = 1; m <= l; ++m) {
        BigInt val = factorial(m) * epsilon_sum(sigma, m);
        for (unsigned j = 1; j <= m; ++j) {
            BigInt falling = 1;
            for (unsigned k = 1; k <= j; ++k) falling *= (r - static_cast<long long>(k));
            BigInt term = binomial(m, j) * falling * g[m - j];
            if (j % 2 == 0) term = -term;
            val += term;
        }
        g[m] = val;
    }
    return g[l];
}

BigInt block_count_above(const std::vector<unsigned>& blocks, unsigned k) {
    long long c = 0;
    for (unsigned n : blocks)
        if (n > k) ++c;
    return c;
}

std::array<BigInt, 3> low_derivatives(const std::vector<unsigned>& blocks) {
    BigInt r = static_cast<long long>(blocks.size());
    BigInt N2 = block_count_above(blocks, 2), N3 = block_count_above(blocks, 3);
    return {r, r * (r - 1) + 2 * N2, r * (r - 1) * (r - 2) + 6 * (r - 1) * N2 + 6 * N3};
}

std::vector<BigInt> inverse_series(const IntPoly& g, unsigned upTo) {
    if (g.constant() != 1)
        throw std::invalid_argument("inverse_series needs g(0) = 1");
    std::vector<BigInt> u(upTo + 1, 0);
    u[0] = 1;
    for (unsigned k = 1; k <= upTo; ++k) {
        BigInt acc = 0;
        for (unsigned j = 1; j <= k && static_cast<long long>(j) <= g.degree(); ++j)
            acc += g.coeff(j) * u[k - j];
        u[k] = -acc;
    }
    return u;
}

RecursionResult recursion_coefficients(const GrowthSeries& series, unsigned upTo) {
    if (!series.extension.available)
        throw InputError("recursion requires the complete form (virgin-only mode)");
    if (!series.paritySign)
        throw InputError("recursion requires the ambient parity (set a dimension hint)");
    if (static_cast<long long>(upTo) > series.Q.degree())
        throw InputError("recursion index exceeds deg Q");

    const std::vector<unsigned>& blocks = series.extension.blocks;
    const long long r = static_cast<long long>(blocks.size());
    const BigInt S = static_cast<long long>(series.system.rank());
    const int sgn = *series.paritySign;  // (-1)^n

    RecursionResult res;
    RecursionState& st = res.state;
    st.sigma = sigma_table(blocks);
    for (unsigned k = 0; k <= upTo; ++k) st.Nk.push_back(block_count_above(blocks, k));

    // F' = finite subsets of size >= 2, with their f_T block sizes
    BigInt sum1 = 0;   // sum (-1)^{|T|} |T|(|T|+1)
    BigInt sum2 = 0;   // sum (-1)^{|T|} C_2
    BigInt sum3 = 0;   // sum (-1)^{|T|} |T|(|T|+1)(|T|+2)
    BigInt sum4 = 0;   // sum (-1)^{|T|} (-C_3 + (|T|+1) C_2)
    std::vector<std::vector<BigInt>> invT;  // series of 1/f_T per T in F'
    std::vector<int> signT;
    for (const LatticeEntry& e : series.lattice.entries) {
        if (e.subset.size() < 2) continue;
        RecursionState::SubgroupCounts sc;
        sc.subset = e.subset;
        sc.cBlocks = type_blocks(e.types);
        sc.C2 = static_cast<unsigned>(block_count_above(sc.cBlocks, 2).convert_to<long long>());
        sc.C3 = static_cast<unsigned>(block_count_above(sc.cBlocks, 3).convert_to<long long>());
        long long t = static_cast<long long>(e.subset.size());
        int sg = (t % 2 == 0) ? 1 : -1;
        sum1 += sg * BigInt(t * (t + 1));
        sum2 += sg * BigInt(sc.C2);
        sum3 += sg * BigInt(t * (t + 1) * (t + 2));
        sum4 += sg * (BigInt(t + 1) * sc.C2 - BigInt(sc.C3));
        invT.push_back(inverse_series(poincare_polynomial(e.types), upTo));
        signT.push_back(sg);
        st.perSubgroup.push_back(std::move(sc));
    }

    std::vector<BigInt>& b = res.b;
    b.assign(upTo + 1, 0);
    b[0] = 1;
    const BigInt N2 = st.Nk.size() > 2 ? st.Nk[2] : block_count_above(blocks, 2);
    const BigInt N3 = st.Nk.size() > 3 ? st.Nk[3] : block_count_above(blocks, 3);

    if (upTo >= 1) b[1] = BigInt(r) - S;
    if (upTo >= 2) {
        BigInt twoB2 = sgn * (-2 * S + sum1 - 2 * sum2) - BigInt(r) * (r + 1) + 2 * N2 +
                       2 * BigInt(r) * b[1];
        b[2] = exact_div(twoB2, 2);
    }
    if (upTo >= 3) {
        BigInt sixB3 = sgn * (6 * S - sum3 + 6 * sum4) + BigInt(r) * (r + 1) * (r + 2) +
                       6 * N3 - 6 * BigInt(r + 1) * N2 +
                       3 * (2 * N2 - BigInt(r) * (r + 1)) * b[1] + 6 * BigInt(r) * b[2];
        b[3] = exact_div(sixB3, 6);
    }

    // u_k = [x^k](1/P) via the signed subset-sum brackets; the k!-scaled
    // values P_k, P_k^tau, B_k are reported in the state
    if (upTo >= 1) {
        std::vector<BigInt> G = bracket_coeffs(blocks, upTo);
        std::vector<BigInt> u(upTo + 1, 0);
        u[0] = 1;
        for (unsigned k = 1; k <= upTo; ++k) {
            BigInt acc = 0;
            for (unsigned j = 1; j <= k; ++j) acc += G[j] * u[k - j];
            u[k] = -acc;
        }

        for (unsigned k = 4; k <= upTo; ++k) {
            BigInt tau = 0;
            for (size_t t = 0; t < invT.size(); ++t) tau += signT[t] * invT[t][k];
            BigInt bsum = 0;
            for (unsigned j = 1; j + 1 <= k; ++j) bsum += b[j] * u[k - j];
            int headSign = ((k % 2 == 0) ? sgn : -sgn);  // (-1)^{n+k+1} = -(-1)^n(-1)^k
            b[k] = -headSign * S - u[k] + sgn * tau - bsum;
        }

        st.Pk.assign(upTo + 1, 0);
        st.PkTau.assign(upTo + 1, 0);
        st.Bk.assign(upTo + 1, 0);
        for (unsigned k = 0; k <= upTo; ++k) {
            st.Pk[k] = factorial(k) * u[k];
            BigInt tau = 0;
            for (size_t t = 0; t < invT.size(); ++t)
                tau += signT[t] * (k < invT[t].size() ? invT[t][k] : BigInt(0));
            st.PkTau[k] = factorial(k) * tau;
            BigInt bsum = 0;
            for (unsigned j = 1; j < k; ++j) bsum += b[j] * u[k - j];
            st.Bk[k] = -factorial(k) * bsum;
        }
    }
    return res;
}

std::vector<BigInt> taylor_coefficients(const RatFunc& f, unsigned upTo) {
    const IntPoly& p = f.num();
    const IntPoly& q = f.den();
    if (q.constant() != 1)
        throw IntegrityError("series denominator must have constant term 1");
    std::vector<BigInt> a(upTo + 1, 0);
    for (unsigned k = 0; k <= upTo; ++k) {
        BigInt acc = (static_cast<long long>(k) <= p.degree()) ? p.coeff(k) : BigInt(0);
        for (unsigned j = 1; j <= k && static_cast<long long>(j) <= q.degree(); ++j)
            acc -= q.coeff(j) * a[k - j];
        if (acc < 0)
            throw IntegrityError("negative growth coefficient a_" + std::to_string(k));
        a[k] = acc;
    }
    return a;
}

std::vector<BigInt> taylor_coefficients(const GrowthSeries& series, unsigned upTo) {
    return taylor_coefficients(series.reduced, upTo);
}

EulerVolume euler_and_volume(const GrowthSeries& series, unsigned n) {
    EulerVolume ev;
    BigRat p1(series.reduced.num().eval(BigInt(1)));
    BigRat q1(series.reduced.den().eval(BigInt(1)));
    if (p1 == 0) throw IntegrityError("reduced numerator vanishes at 1");
    ev.poleAtOne = (q1 == 0);
    if (n % 2 == 1) {
        ev.chi = 0;  // odd-dimensional closed: Euler characteristic vanishes
        if (!ev.poleAtOne)
            throw IntegrityError("expected a pole of the growth function at 1 for odd dimension");
        return ev;
    }
    if (q1 == 0) throw IntegrityError("reduced denominator vanishes at 1 in even dimension");
    ev.chi = q1 / p1;
    // vol_n = chi * (-1)^{n/2} 4^{n/2} (n/2)! / n! * pi^{n/2}
    unsigned m = n / 2;
    BigRat coef(1);
    for (unsigned i = 0; i < m; ++i) coef *= 4;
    coef *= BigRat(factorial(m), factorial(n));
    if (m % 2 == 1) coef = -coef;
    ev.volumeCoeff = ev.chi * coef;
    return ev;
}

RebaseResult rebase_numerator(const GrowthSeries& series,
                              const std::vector<unsigned>& targetBlocks) {
    if (!series.extension.available)
        throw InputError("rebase requires the complete form");
    // divisibility on cyclotomic exponent vectors
    std::map<unsigned, unsigned> have = block_cyclotomic_exponents(targetBlocks);
    std::map<unsigned, unsigned> need = block_cyclotomic_exponents(series.extension.blocks);
    for (auto [d, k] : need) {
        auto it = have.find(d);
        if (it == have.end() || it->second < k)
            throw InputError("target blocks are not divisible by the complete numerator");
    }
    RebaseResult rb;
    rb.num = block_product(targetBlocks);
    std::optional<IntPoly> mult = rb.num.exact_quotient(series.P);
    if (!mult) throw IntegrityError("rebase exponent check passed but division failed");
    rb.multiplier = *mult;
    rb.den = series.Q * rb.multiplier;
    return rb;
}

SubgroupDistribution subgroup_distribution(const CoxeterSystem& system,
                                           const FiniteLattice& lattice, unsigned n) {
    SubgroupDistribution d;
    unsigned S = system.rank();
    d.finiteBySize.assign(S + 1, 0);
    d.infiniteBySize.assign(S + 1, 0);
    for (const LatticeEntry& e : lattice.entries) ++d.finiteBySize[e.subset.size()];
    for (unsigned k = 0; k <= S; ++k) {
        d.infiniteBySize[k] = binomial(S, k) - d.finiteBySize[k];
        BigInt f = d.finiteBySize[k] * BigInt(k);
        BigInt i = d.infiniteBySize[k] * BigInt(k);
        if (k % 2) {
            d.finiteSum -= f;
            d.infiniteSum -= i;
        } else {
            d.finiteSum += f;
            d.infiniteSum += i;
        }
    }
    BigInt expect = static_cast<long long>(S);
    if (n % 2) expect = -expect;
    d.check = (d.finiteSum == expect) && (d.infiniteSum == -expect);
    return d;
}

} // namespace coxgrowth
