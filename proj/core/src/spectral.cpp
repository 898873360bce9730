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

#include "coxgrowth/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <sstream>

#include "coxgrowth/coxeter.hpp"

namespace coxgrowth {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// isolating-interval refinement target for reported poles
const BigRat& report_eps() {
    static const BigRat eps(BigInt(1), BigInt("100000000000"));  // 1e-11
    return eps;
}

unsigned root_multiplicity(IntPoly p, const BigInt& root) {
    const IntPoly factor{-root, BigInt(1)};  // x - root
    unsigned k = 0;
    while (p.degree() > 0) {
        auto q = p.exact_quotient(factor);
        if (!q) break;
        p = *q;
        ++k;
    }
    return k;
}

// ------------------------------------------------------------------
// Deterministic simultaneous root iteration (Durand-Kerner) with a
// posteriori bounds: every root of p lies in the union of the disks
// centered at z_k with radius deg * |w_k|, w_k the Weierstrass correction.
// ------------------------------------------------------------------

struct DkRoot {
    std::complex<double> z;
    double residualBound = 0;
};

std::complex<double> horner(const std::vector<double>& monic, std::complex<double> z) {
    std::complex<double> v(0.0, 0.0);
    for (std::size_t i = monic.size(); i-- > 0;) v = v * z + monic[i];
    return v;
}

std::vector<DkRoot> durand_kerner(const IntPoly& p) {
    const int deg = p.degree();
    std::vector<DkRoot> out;
    if (deg <= 0) return out;

    const double lead = p.leading().convert_to<double>();
    std::vector<double> monic(static_cast<std::size_t>(deg) + 1);
    for (int i = 0; i <= deg; ++i)
        monic[static_cast<std::size_t>(i)] = p.coeff(static_cast<std::size_t>(i)).convert_to<double>() / lead;

    double bound = 0;
    for (int i = 0; i < deg; ++i) bound = std::max(bound, std::abs(monic[static_cast<std::size_t>(i)]));
    bound += 1.0;  // Cauchy: all roots inside |z| < bound

    // fixed seed ordering: powers of a non-real point of modulus < 1,
    // scaled to the root bound
    const std::complex<double> seed(0.4, 0.9);
    std::vector<std::complex<double>> z(static_cast<std::size_t>(deg));
    std::complex<double> acc(1.0, 0.0);
    for (int k = 0; k < deg; ++k) {
        acc *= seed;
        z[static_cast<std::size_t>(k)] = bound * acc;
    }

    std::vector<std::complex<double>> w(z.size());
    for (int sweep = 0; sweep < 1000; ++sweep) {
        double worst = 0;
        for (std::size_t k = 0; k < z.size(); ++k) {
            std::complex<double> denom(1.0, 0.0);
            for (std::size_t j = 0; j < z.size(); ++j)
                if (j != k) denom *= (z[k] - z[j]);
            w[k] = horner(monic, z[k]) / denom;
            worst = std::max(worst, std::abs(w[k]) / std::max(1.0, std::abs(z[k])));
        }
        for (std::size_t k = 0; k < z.size(); ++k) z[k] -= w[k];
        if (worst < 1e-15) break;
    }

    out.reserve(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) {
        std::complex<double> denom(1.0, 0.0);
        for (std::size_t j = 0; j < z.size(); ++j)
            if (j != k) denom *= (z[k] - z[j]);
        const double corr = std::abs(horner(monic, z[k]) / denom);
        out.push_back({z[k], static_cast<double>(deg) * corr});
    }
    std::sort(out.begin(), out.end(), [](const DkRoot& a, const DkRoot& b) {
        if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
        return a.z.imag() < b.z.imag();
    });
    return out;
}

// Non-real roots of a squarefree integer polynomial: run the simultaneous
// iteration, then strip the approximations that correspond to the exactly
// isolated real roots (nearest-match, one per isolating interval).
std::vector<DkRoot> nonreal_roots(const IntPoly& squarefree) {
    std::vector<DkRoot> all = durand_kerner(squarefree);
    const auto realRoots = isolate_real_roots(squarefree);
    std::vector<bool> taken(all.size(), false);
    for (const auto& r : realRoots) {
        const double target = r.approx();
        double best = kInf;
        std::size_t bestIdx = all.size();
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (taken[i]) continue;
            const double d = std::abs(all[i].z - std::complex<double>(target, 0.0));
            if (d < best) {
                best = d;
                bestIdx = i;
            }
        }
        if (bestIdx < all.size()) taken[bestIdx] = true;
    }
    std::vector<DkRoot> out;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (!taken[i]) out.push_back(all[i]);
    return out;
}

// Refine two isolating intervals until their moduli separate; false when the
// refinement budget runs out without a strict |a| < |b| certificate.
bool separated_below(const IntPoly& p, IsolatedRoot& a, IsolatedRoot& b) {
    auto lowerAbs = [](const IsolatedRoot& r) {
        return r.lo >= 0 ? r.lo : (r.hi <= 0 ? -r.hi : BigRat(0));
    };
    auto upperAbs = [](const IsolatedRoot& r) {
        BigRat m = r.hi >= 0 ? r.hi : -r.hi;
        BigRat n = r.lo >= 0 ? r.lo : -r.lo;
        return m > n ? m : n;
    };
    for (int iter = 0; iter < 128; ++iter) {
        if (upperAbs(a) < lowerAbs(b)) return true;
        BigRat widthA = a.hi - a.lo;
        BigRat widthB = b.hi - b.lo;
        if (widthA == 0 && widthB == 0) return upperAbs(a) < lowerAbs(b);
        if (widthA >= widthB)
            a = refine_root(p, a, widthA / 4);
        else
            b = refine_root(p, b, widthB / 4);
    }
    return false;
}

std::string subset_string(const std::vector<unsigned>& subset) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) os << ',';
        os << subset[i] + 1;
    }
    os << '}';
    return os.str();
}

} // namespace

double ComplexPole::modulus() const { return std::hypot(re, im); }

const char* rate_tag_name(RateTag tag) {
    switch (tag) {
        case RateTag::PerronVerified: return "PerronVerified";
        case RateTag::SalemLayout: return "SalemLayout";
        case RateTag::Indeterminate: return "Indeterminate";
    }
    return "Indeterminate";
}

const char* help_family_name(HelpFamily family) {
    switch (family) {
        case HelpFamily::L: return "L";
        case HelpFamily::E: return "E";
        case HelpFamily::K: return "K";
    }
    return "?";
}

PoleReport pole_report(const RatFunc& reduced, unsigned n, double unitTol,
                       double marginRatio) {
    PoleReport rep;
    rep.dimension = n;
    rep.reducedNum = reduced.num();
    rep.reducedDen = reduced.den();

    const IntPoly& q = reduced.den();
    if (q.degree() == 0) {
        rep.noPoles = true;
        rep.allSimple = true;
        rep.classification.tag = RateTag::Indeterminate;
        rep.classification.note = "constant denominator: no poles to classify";
        return rep;
    }

    rep.cyclotomicPart = cyclotomic_factor(q);
    for (const auto& [d, e] : rep.cyclotomicPart.exponents)
        if (d >= 3) rep.cyclotomicNonRealPoles += euler_phi(d) * e;

    rep.realPoles = isolate_real_roots(q);
    for (auto& r : rep.realPoles) r = refine_root(q, r, report_eps());

    rep.poleAtOne = root_multiplicity(q, BigInt(1));
    {
        const IntPoly sf = squarefree_part(q);
        const auto chain = sturm_chain(sf);
        unsigned upToOne = count_roots(chain, BigRat(0), BigRat(1));  // (0, 1]
        rep.positivePolesInUnitInterval = upToOne - (rep.poleAtOne > 0 ? 1 : 0);
    }

    const auto factors = squarefree_decomposition(rep.cyclotomicPart.remainder);
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() <= 0) continue;
        for (const auto& r : nonreal_roots(factors[i]))
            rep.complexPoles.push_back({r.z.real(), r.z.imag(), r.residualBound,
                                        static_cast<unsigned>(i + 1)});
    }

    rep.allSimple = gcd(q, q.derivative()).degree() == 0;

    // tau = 1/x_1 with x_1 the smallest positive real pole
    std::optional<std::size_t> x1Idx;
    for (std::size_t i = 0; i < rep.realPoles.size(); ++i) {
        if (rep.realPoles[i].lo > 0 || rep.realPoles[i].midpoint() > 0) {
            x1Idx = i;
            break;
        }
    }
    bool exactExclusion = false;
    double worstRatio = kInf;
    if (x1Idx) {
        IsolatedRoot x1 = rep.realPoles[*x1Idx];
        exactExclusion = true;
        for (std::size_t i = 0; i < rep.realPoles.size(); ++i) {
            if (i == *x1Idx) continue;
            IsolatedRoot other = rep.realPoles[i];
            if (!separated_below(q, x1, other)) exactExclusion = false;
        }
        if (!rep.cyclotomicPart.exponents.empty() && !(x1.hi < 1))
            exactExclusion = false;  // unit-circle poles must exceed x_1
        const double x1Hi = x1.hi.convert_to<double>();
        for (const auto& c : rep.complexPoles) {
            const double margin = (c.modulus() - c.residualBound) - x1Hi;
            if (margin <= 0) {
                worstRatio = 0;
            } else if (c.residualBound > 0) {
                worstRatio = std::min(worstRatio, margin / c.residualBound);
            }
        }
        rep.smallestPositive = x1;
        rep.tau = IsolatedRoot{BigRat(1) / x1.hi, BigRat(1) / x1.lo, x1.multiplicity};
        rep.tauApprox = rep.tau->approx();
    }
    rep.classification.tauSimple = x1Idx && rep.realPoles[*x1Idx].multiplicity == 1;
    rep.classification.tauExactExclusion = exactExclusion;
    rep.classification.worstMarginRatio = worstRatio;
    rep.classification = classify_rate(rep, unitTol, marginRatio);

    // tightest annulus [x_star, 1/x_star] holding every non-real pole
    std::vector<double> interior;
    for (const auto& r : rep.realPoles) {
        const double v = r.approx();
        if (v > 0 && v < 1 && r.lo > 0 && r.hi < 1) interior.push_back(v);
    }
    for (unsigned star = static_cast<unsigned>(interior.size()); star >= 1; --star) {
        const double inner = interior[star - 1];
        const double outer = 1.0 / inner;
        double worst = -kInf;
        for (const auto& c : rep.complexPoles) {
            const double m = c.modulus();
            worst = std::max(worst, std::max(inner - m, m - outer) - c.residualBound);
        }
        if (rep.cyclotomicNonRealPoles > 0)
            worst = std::max(worst, std::max(inner - 1.0, 1.0 - outer));
        if (rep.complexPoles.empty() && rep.cyclotomicNonRealPoles == 0) worst = 0;
        if (worst <= unitTol) {
            rep.annulus = Annulus{star, inner, outer, worst};
            break;
        }
    }
    return rep;
}

PoleReport pole_report(const GrowthSeries& series, unsigned n, double unitTol,
                       double marginRatio) {
    return pole_report(series.reduced, n, unitTol, marginRatio);
}

RateClassification classify_rate(const PoleReport& report, double unitTol,
                                 double marginRatio) {
    RateClassification c;
    c.tauSimple = report.classification.tauSimple;
    c.tauExactExclusion = report.classification.tauExactExclusion;
    c.worstMarginRatio = report.classification.worstMarginRatio;

    if (report.noPoles) {
        c.note = "constant denominator: no poles to classify";
        return c;
    }

    const IntPoly& rem = report.cyclotomicPart.remainder;
    c.salemPalindromic = rem.degree() > 0 && rem.palindromic();
    c.salemSquarefree = rem.degree() > 0 && gcd(rem, rem.derivative()).degree() == 0;
    if (rem.degree() > 0) {
        auto roots = isolate_real_roots(rem);
        unsigned inUnit = 0, aboveOne = 0, other = 0;
        for (auto r : roots) {
            r = refine_root(rem, r, report_eps());
            if (r.lo > 0 && r.hi < 1)
                ++inUnit;
            else if (r.lo > 1)
                ++aboveOne;
            else
                ++other;
        }
        c.salemRealPattern = inUnit == 1 && aboveOne == 1 && other == 0;
    }
    c.salemMaxCircleOffset = 0;
    c.salemCircleOk = true;
    for (const auto& z : report.complexPoles) {
        const double off = std::abs(z.modulus() - 1.0);
        c.salemMaxCircleOffset = std::max(c.salemMaxCircleOffset, off);
        if (off > unitTol + z.residualBound) c.salemCircleOk = false;
    }

    if (c.salemPalindromic && c.salemSquarefree && c.salemRealPattern && c.salemCircleOk) {
        c.tag = RateTag::SalemLayout;
        c.note =
            "non-cyclotomic part has the Salem root layout; irreducibility is "
            "not certified, so this is a layout statement, not a proof that "
            "the growth rate is a Salem number";
        return c;
    }

    const bool complexOk =
        report.complexPoles.empty() || c.worstMarginRatio >= marginRatio;
    if (report.tau && c.tauSimple && c.tauExactExclusion && complexOk) {
        c.tag = RateTag::PerronVerified;
        c.note =
            "tau is a simple root and exceeds the modulus of every other "
            "root of the reversed denominator; the comparison runs over the "
            "full root superset, so it holds a fortiori for the conjugates "
            "of tau (a subset)";
        return c;
    }

    c.tag = RateTag::Indeterminate;
    std::ostringstream os;
    os << "no decision:";
    if (!report.tau)
        os << " no positive real pole;";
    else if (!c.tauSimple)
        os << " smallest positive pole is not simple;";
    else if (!c.tauExactExclusion)
        os << " real-root modulus separation could not be certified;";
    else if (!complexOk)
        os << " complex-root margin below " << marginRatio << "x residual;";
    os << " Salem layout fails "
       << (!c.salemPalindromic      ? "palindromy"
           : !c.salemSquarefree     ? "squarefreeness"
           : !c.salemRealPattern    ? "the real-root pattern"
                                    : "the unit-circle test");
    c.note = os.str();
    return c;
}

ConjectureVerdict check_conjecture(const PoleReport& report, unsigned n,
                                   double unitTol) {
    ConjectureVerdict v;
    const unsigned expected = n / 2;

    {
        std::ostringstream os;
        os << "poles in (0,1): found " << report.positivePolesInUnitInterval
           << ", expected " << expected;
        v.interiorCount = {report.positivePolesInUnitInterval == expected, os.str()};
    }
    {
        const unsigned want = (n % 2 == 1) ? 1u : 0u;
        std::ostringstream os;
        os << "pole at 1: multiplicity " << report.poleAtOne << ", expected " << want;
        v.poleAtOne = {report.poleAtOne == want, os.str()};
    }
    {
        v.simplicity = {report.allSimple,
                        report.allSimple
                            ? "all poles simple: gcd(q, q') is constant"
                            : "repeated poles: gcd(q, q') is non-constant"};
    }
    {
        const unsigned nonReal =
            static_cast<unsigned>(report.complexPoles.size()) + report.cyclotomicNonRealPoles;
        if (report.annulus) {
            std::ostringstream os;
            os << "non-real poles (" << nonReal << ") inside [x_" << report.annulus->star
               << ", 1/x_" << report.annulus->star << "] = [" << report.annulus->inner
               << ", " << report.annulus->outer << "]";
            v.annulus = {true, os.str()};
            v.annulusData = report.annulus;
        } else if (nonReal == 0) {
            v.annulus = {true, "no non-real poles"};
        } else {
            std::ostringstream os;
            os << nonReal << " non-real poles escape every annulus [x_k, 1/x_k] "
               << "within tolerance " << unitTol;
            v.annulus = {false, os.str()};
        }
    }
    v.overall = v.interiorCount.pass && v.poleAtOne.pass && v.simplicity.pass &&
                v.annulus.pass;
    return v;
}

MinusOneReport minus_one_multiplicity(const RatFunc& reduced) {
    MinusOneReport rep;
    rep.numeratorMultiplicity = root_multiplicity(reduced.num(), BigInt(-1));
    rep.denominatorMultiplicity = root_multiplicity(reduced.den(), BigInt(-1));
    rep.difference = static_cast<int>(rep.numeratorMultiplicity) -
                     static_cast<int>(rep.denominatorMultiplicity);
    rep.zeroMultiplicity = rep.difference > 0 ? static_cast<unsigned>(rep.difference) : 0;
    return rep;
}

MinusOneReport minus_one_multiplicity(const GrowthSeries& series) {
    return minus_one_multiplicity(series.reduced);
}

namespace {

// 1 / (k * f) for the inverse-order terms of the help functions
RatFunc inv_scaled(const IntPoly& f, long long k) {
    return RatFunc(IntPoly::one(), f.scaled(BigInt(k)));
}

const IntPoly& one_plus_x() {
    static const IntPoly p{BigInt(1), BigInt(1)};
    return p;
}

// subsets of `base` of the given size, lexicographic
void for_each_subset(const std::vector<unsigned>& base, unsigned size,
                     const std::function<void(const std::vector<unsigned>&)>& fn) {
    std::vector<unsigned> idx(size);
    std::function<void(unsigned, unsigned)> rec = [&](unsigned start, unsigned depth) {
        if (depth == size) {
            std::vector<unsigned> subset(size);
            for (unsigned i = 0; i < size; ++i) subset[i] = base[idx[i]];
            fn(subset);
            return;
        }
        for (unsigned i = start; i + (size - depth) <= base.size(); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    if (size <= base.size()) rec(0, 0);
}

std::uint32_t mask_of(const std::vector<unsigned>& subset) {
    std::uint32_t m = 0;
    for (unsigned s : subset) m |= (1u << s);
    return m;
}

const IntPoly& lattice_poincare(const FiniteLattice& lattice,
                                const std::vector<unsigned>& subset,
                                std::map<std::uint32_t, IntPoly>& cache) {
    const std::uint32_t m = mask_of(subset);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    const LatticeEntry* e = lattice.find(m);
    if (!e) throw IntegrityError("help function touches an infinite subset");
    return cache.emplace(m, poincare_polynomial(e->types)).first->second;
}

// minimal infinite subsets of the given size: the induced system is infinite
// but every proper subset is finite
std::vector<std::vector<unsigned>> infinite_minimal_subsets(
    const CoxeterSystem& system, const FiniteLattice& lattice, unsigned size) {
    std::vector<unsigned> all(system.rank());
    for (unsigned i = 0; i < system.rank(); ++i) all[i] = i;
    std::vector<std::vector<unsigned>> found;
    for_each_subset(all, size, [&](const std::vector<unsigned>& subset) {
        if (lattice.find(mask_of(subset))) return;  // finite
        bool minimal = true;
        for_each_subset(subset, size - 1, [&](const std::vector<unsigned>& sub) {
            if (!lattice.find(mask_of(sub))) minimal = false;
        });
        if (minimal) found.push_back(subset);
    });
    return found;
}

} // namespace

HelpFunctionProfile help_profile(const CoxeterSystem& system, HelpFamily family,
                                 unsigned maxRank) {
    HelpFunctionProfile prof;
    prof.family = family;

    const FiniteLattice lattice = enumerate_finite_subsets(system, maxRank);
    const RatFunc f = steinberg_series(system, lattice);
    const auto maximal = lattice.maximal_entries();

    switch (family) {
        case HelpFamily::L: {
            if (system.rank() != 5)
                throw InputError("family L needs 5 generators");
            if (maximal.size() != 5)
                throw InputError("family L needs exactly 5 maximal finite subgroups");
            for (const auto* e : maximal)
                if (e->subset.size() != 4)
                    throw InputError("family L needs all maximal subgroups of rank 4");
            break;
        }
        case HelpFamily::E: {
            if (system.rank() != 6)
                throw InputError("family E needs 6 generators");
            if (maximal.size() != 9)
                throw InputError("family E needs exactly 9 maximal finite subgroups");
            auto lans = infinite_minimal_subsets(system, lattice, 3);
            if (lans.size() != 2)
                throw InputError("family E needs exactly two minimal infinite triples");
            for (unsigned a : lans[0])
                for (unsigned b : lans[1])
                    if (a == b) throw InputError("family E triples must be disjoint");
            prof.lannerOne = lans[0];
            prof.lannerTwo = lans[1];
            break;
        }
        case HelpFamily::K: {
            if (system.rank() != 6)
                throw InputError("family K needs 6 generators");
            if (maximal.size() != 8)
                throw InputError("family K needs exactly 8 maximal finite subgroups");
            auto lans = infinite_minimal_subsets(system, lattice, 4);
            if (lans.size() != 1)
                throw InputError("family K needs exactly one minimal infinite quadruple");
            prof.lannerOne = lans[0];
            break;
        }
    }

    std::map<std::uint32_t, IntPoly> cache;
    RatFunc total;
    for (const auto* entry : maximal) {
        HelpTerm term;
        term.subset = entry->subset;

        RatFunc h(IntPoly{BigInt(-1)}, one_plus_x());
        for_each_subset(entry->subset, 2, [&](const std::vector<unsigned>& u) {
            h = h + inv_scaled(lattice_poincare(lattice, u, cache), 3);
        });
        for_each_subset(entry->subset, 3, [&](const std::vector<unsigned>& v) {
            h = h - inv_scaled(lattice_poincare(lattice, v, cache), 2);
        });
        h = h + RatFunc(IntPoly::one(), lattice_poincare(lattice, entry->subset, cache));

        if (family == HelpFamily::E) {
            h = h + inv_scaled(one_plus_x(), 3);
            for (unsigned a : prof.lannerOne) {
                if (std::find(entry->subset.begin(), entry->subset.end(), a) ==
                    entry->subset.end())
                    continue;
                for (unsigned b : prof.lannerTwo) {
                    if (std::find(entry->subset.begin(), entry->subset.end(), b) ==
                        entry->subset.end())
                        continue;
                    std::vector<unsigned> pair{std::min(a, b), std::max(a, b)};
                    h = h - inv_scaled(lattice_poincare(lattice, pair, cache), 12);
                }
            }
        } else if (family == HelpFamily::K) {
            h = h + inv_scaled(one_plus_x(), 4);
            std::vector<unsigned> inL;
            for (unsigned a : entry->subset)
                if (std::find(prof.lannerOne.begin(), prof.lannerOne.end(), a) !=
                    prof.lannerOne.end())
                    inL.push_back(a);
            for_each_subset(inL, 2, [&](const std::vector<unsigned>& u) {
                h = h - inv_scaled(lattice_poincare(lattice, u, cache), 12);
            });
        }

        term.h = h;
        total = total + h;

        // structural split h = -x n(x) / d(x)
        HelpSplit& sp = term.split;
        if (h.num().constant() == 0 && !h.num().is_zero()) {
            std::vector<BigInt> shifted(h.num().coeffs().begin() + 1,
                                        h.num().coeffs().end());
            sp.n = IntPoly(std::move(shifted)).scaled(BigInt(-1));
            sp.d = h.den();
            sp.nPalindromic = sp.n.palindromic();
            sp.dPalindromic = sp.d.palindromic();
            sp.dCyclotomic = cyclotomic_factor(sp.d).remainder.degree() == 0;
            sp.degreeGap = sp.d.degree() == sp.n.degree() + 2;
            sp.valid = sp.nPalindromic && sp.dPalindromic && sp.dCyclotomic && sp.degreeGap;
        }

        term.samples.reserve(999);
        term.gridMin = kInf;
        for (int k = 1; k <= 999; ++k) {
            const double xv = k / 1000.0;
            const double val = h.num().eval(xv) / h.den().eval(xv);
            term.samples.push_back(val);
            if (val < 0) ++term.negativeSamples;
            if (val < term.gridMin) {
                term.gridMin = val;
                term.gridMinX = xv;
            }
        }
        prof.perMaximal.push_back(std::move(term));
    }

    const RatFunc invF(f.den(), f.num());
    prof.residual = invF - RatFunc::one() - total;
    prof.decompositionVerified = prof.residual.is_zero();
    if (!prof.decompositionVerified) {
        std::ostringstream os;
        os << "help-function decomposition failed for family "
           << help_family_name(family) << ": residual " << prof.residual.num().str()
           << " / " << prof.residual.den().str();
        throw IntegrityError(os.str());
    }

    // grid scan of H = sum h_T; one falling-then-rising turn is the expected
    // shape, every extra direction change counts as a violation
    prof.minValue = kInf;
    double prev = 0;
    int lastDir = 0;
    unsigned turns = 0;
    for (std::size_t k = 0; k < 999; ++k) {
        double sum = 0;
        for (const auto& t : prof.perMaximal) sum += t.samples[k];
        if (sum < 0) ++prof.negativeSamples;
        if (sum < prof.minValue) {
            prof.minValue = sum;
            prof.minX = (static_cast<double>(k) + 1) / 1000.0;
        }
        if (k > 0) {
            const int dir = sum > prev ? 1 : (sum < prev ? -1 : 0);
            if (dir != 0) {
                if (lastDir != 0 && dir != lastDir) ++turns;
                lastDir = dir;
            }
        }
        prev = sum;
    }
    prof.monotonicityViolations = turns > 1 ? turns - 1 : 0;

    // H at the smallest pole of f (expected -1 there: 1/f_S vanishes)
    auto inUnit = isolate_real_roots(f.den(), BigRat(0), BigRat(1));
    if (!inUnit.empty()) {
        IsolatedRoot x1 = refine_root(f.den(), inUnit.front(), report_eps());
        const double xv = x1.approx();
        double sum = 0;
        for (const auto& t : prof.perMaximal)
            sum += t.h.num().eval(xv) / t.h.den().eval(xv);
        prof.valueNearSmallestPole = sum;
    }
    return prof;
}

} // namespace coxgrowth
