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

#include "coxgrowth/right_angled.hpp"

#include <cmath>
#include <sstream>

namespace coxgrowth {

bool FVector::euler_ok() const {
    if (f.size() != n) return false;
    long long acc = 0;
    for (unsigned i = 0; i < n; ++i) acc += (i % 2 ? -f[i] : f[i]);
    return acc == 1 - (n % 2 ? -1 : 1);
}

bool is_right_angled(const CoxeterSystem& system) {
    return system.right_angled();
}

RaCoefficients ra_coefficients(const CoxeterSystem& system, unsigned n, unsigned maxRank) {
    if (!system.right_angled()) throw InputError("system is not right-angled");
    if (n > 4) throw InputError("closed-form coefficients cover dimensions up to 4");
    FiniteLattice lat = enumerate_finite_subsets(system, maxRank);
    RaCoefficients rc;
    rc.b1 = BigInt(static_cast<long long>(n)) - static_cast<long long>(system.rank());
    if (n == 4) {
        BigInt S = static_cast<long long>(system.rank());
        BigInt sum = 0;
        for (const LatticeEntry& e : lat.entries) {
            long long t = static_cast<long long>(e.subset.size());
            if (t < 2) continue;
            BigInt term = BigInt(t) * (t + 1);
            sum += (t % 2 ? -term : term);
        }
        BigInt twoB2 = BigInt(n) * (BigInt(n) - 2 * S - 1) + (sum - 2 * S);
        rc.b2 = exact_div(twoB2, 2);
    }
    return rc;
}

Ra4Result ra4_series(const FVector& fv) {
    if (fv.n != 4 || fv.f.size() != 4) throw InputError("expected a 4-dimensional f-vector");
    if (!fv.euler_ok()) throw InputError("f-vector violates the Euler relation");
    long long f0 = fv.f[0], f1 = fv.f[1], f3 = fv.f[3];
    Ra4Result r;
    r.fv = fv;
    r.simpleLint = (f1 == 2 * f0);
    r.pentagonLint = (f0 >= 5 * f3);
    r.form.P = block_product({2, 2, 2, 2});
    r.form.Q = IntPoly({1, 4 - f3, f0 - 2 * f3 + 6, 4 - f3, 1});
    r.form.reduced = RatFunc(r.form.P, r.form.Q);
    return r;
}

RAQuarticPoles ra4_poles(const FVector& fv) {
    Ra4Result base = ra4_series(fv);
    long long f0 = fv.f[0], f3 = fv.f[3];
    RAQuarticPoles out;
    out.alpha = BigInt(f3) - 4;
    out.gamma = BigInt(f3) * f3 - 4 * f0;
    out.beta = 2 * out.alpha * f3 - 4 * f0;
    if (out.gamma <= 0)
        throw InputError("f_3^2 - 4 f_0 <= 0: not realizable as a compact right-angled 4-polytope");

    const IntPoly& Q = base.form.Q;
    out.simpleCertified = gcd(Q, Q.derivative()).degree() == 0;

    std::vector<IsolatedRoot> roots = isolate_real_roots(Q);
    if (roots.size() != 4) throw IntegrityError("quartic does not have four real roots");
    BigRat eps(1, BigInt("100000000000"));  // 1e-11
    for (IsolatedRoot& r : roots) r = refine_root(Q, r, eps);

    // nested radicals x = (alpha +- sqrt(gamma) +- sqrt(beta +- 2 alpha sqrt(gamma)))/4,
    // from the palindromic reduction y = x + 1/x, y^2 - alpha y + (b2 - 2) = 0
    double a = static_cast<double>(out.alpha.convert_to<long long>());
    double g = std::sqrt(static_cast<double>(out.gamma.convert_to<long long>()));
    double b = static_cast<double>(out.beta.convert_to<long long>());
    struct Cand { double v; std::string s; };
    std::vector<Cand> cands;
    for (int s1 : {-1, 1}) {
        double inner = b + 2 * a * g * s1;
        if (inner < 0) inner = 0;  // rounding guard; genuine inputs stay positive
        for (int s2 : {-1, 1}) {
            double v = (a + s1 * g + s2 * std::sqrt(inner)) / 4.0;
            std::ostringstream os;
            os << "(" << out.alpha << (s1 > 0 ? " + " : " - ") << "sqrt(" << out.gamma << ")"
               << (s2 > 0 ? " + " : " - ") << "sqrt(" << out.beta << (s1 > 0 ? " + " : " - ")
               << "2*" << out.alpha << "*sqrt(" << out.gamma << ")))/4";
            cands.push_back({v, os.str()});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.v < y.v; });

    out.surdsMatch = true;
    for (size_t i = 0; i < 4; ++i) {
        SurdPole sp;
        sp.certified = roots[i];
        sp.approx = roots[i].approx();
        sp.surd = cands[i].s;
        if (std::abs(cands[i].v - sp.approx) > 1e-9) out.surdsMatch = false;
        out.poles[i] = sp;
    }
    return out;
}

Ra3Result ra3_series(unsigned k) {
    if (k < 12)
        throw InputError("no compact right-angled 3-polytope has fewer than 12 facets");
    Ra3Result r;
    r.facets = k;
    long long c = static_cast<long long>(k) - 3;
    r.form.P = block_product({2, 2, 2});
    r.form.Q = IntPoly({1, -c, c, -1});
    r.form.reduced = RatFunc(r.form.P, r.form.Q);

    // growth rate: largest root of x^2 - (k-4)x + 1 (reversed quadratic factor)
    IntPoly quad({1, -(static_cast<long long>(k) - 4), 1});
    std::vector<IsolatedRoot> roots = isolate_real_roots(quad);
    if (roots.size() != 2) throw IntegrityError("growth-rate quadratic is not split");
    IsolatedRoot big = roots.back();
    big = refine_root(quad, big, BigRat(1, BigInt("10000000000")));  // 1e-10 < 1e-8 budget
    r.tau = big;
    double km4 = static_cast<double>(k) - 4.0;
    r.tauApprox = (km4 + std::sqrt(km4 * km4 - 4.0)) / 2.0;

    r.discrepancy.facetParameter = k;
    r.discrepancy.vertexParameter = 2 * (static_cast<long long>(k) - 2);
    r.discrepancy.a1FromFacets = static_cast<long long>(k);
    r.discrepancy.a1FromVertices = r.discrepancy.vertexParameter;
    r.discrepancy.note =
        "closed form parameterized by the facet count k = |S|: a_1 = k matches the "
        "Steinberg series; a vertex-count parameter would force a_1 = 2(k-2) != |S|";
    return r;
}

FVectorEstimate f_vector_estimate(const CoxeterSystem& system, unsigned n, unsigned maxRank) {
    if (!system.right_angled()) throw InputError("system is not right-angled");
    if (n == 0) throw InputError("dimension must be positive");
    FiniteLattice lat = enumerate_finite_subsets(system, maxRank);
    FVectorEstimate est;
    est.fv.n = n;
    est.fv.f.assign(n, 0);
    for (const LatticeEntry& e : lat.entries) {
        size_t l = e.subset.size();
        if (l >= 1 && l <= n) ++est.fv.f[n - l];
    }
    est.eulerOk = est.fv.euler_ok();
    if (n == 4) {
        BigInt sum = 0;
        for (const LatticeEntry& e : lat.entries) {
            long long t = static_cast<long long>(e.subset.size());
            if (t < 2) continue;
            BigInt term = BigInt(t) * (t + 1);
            sum += (t % 2 ? -term : term);
        }
        est.identityLhs = sum;
        est.identityRhs = 6 * BigInt(est.fv.f[3]) + 2 * BigInt(est.fv.f[0]);
        est.identityOk = (est.identityLhs == est.identityRhs);
    }
    return est;
}

} // namespace coxgrowth
