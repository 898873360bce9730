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

#ifndef COXGROWTH_SPECTRAL_HPP
#define COXGROWTH_SPECTRAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "coxgrowth/cyclotomic.hpp"
#include "coxgrowth/growth.hpp"
#include "coxgrowth/root_isolation.hpp"

namespace coxgrowth {

// Default numeric tolerances. Exact certificates (Sturm intervals, gcd
// computations) never depend on these; they only gate claims about
// numerically approximated complex roots.
inline constexpr double kUnitCircleTol = 1e-9;
inline constexpr double kPerronMarginRatio = 1e3;

// A non-real root approximation from the simultaneous-iteration solver.
// The disk |z - (re, im)| <= residualBound contains a true root.
struct ComplexPole {
    double re = 0;
    double im = 0;
    double residualBound = 0;
    unsigned multiplicity = 1;

    double modulus() const;
};

enum class RateTag { PerronVerified, SalemLayout, Indeterminate };

const char* rate_tag_name(RateTag tag);

// Closed annulus [x_star, 1/x_star] built from the star-th smallest pole in
// (0, 1); star is 1-based and chosen as large as possible (tightest annulus)
// such that every non-real pole still fits within the tolerance.
struct Annulus {
    unsigned star = 0;
    double inner = 0;
    double outer = 0;
    // worst signed violation of the annulus bounds over non-real poles
    // (<= 0 means everything is inside even before tolerance)
    double worstViolation = 0;
};

// Evidence gathered by classify_rate. Salem verification stops at the root
// layout; certifying irreducibility is out of scope, so a positive result
// reads "Salem layout", never "Salem number".
struct RateClassification {
    RateTag tag = RateTag::Indeterminate;
    // Salem layout evidence (on the non-cyclotomic part of the denominator)
    bool salemPalindromic = false;
    bool salemSquarefree = false;
    bool salemRealPattern = false;  // exactly one real root > 1, one in (0,1)
    bool salemCircleOk = false;     // all remaining roots within tol of |z| = 1
    double salemMaxCircleOffset = 0;
    // Perron evidence
    bool tauSimple = false;
    bool tauExactExclusion = false;   // every real root excluded exactly
    double worstMarginRatio = 0;      // min margin/residual over complex roots
    std::string note;
};

struct PoleReport {
    unsigned dimension = 0;
    IntPoly reducedNum;
    IntPoly reducedDen;
    bool noPoles = false;  // constant denominator (finite group)

    CycFactorization cyclotomicPart;           // factorization of reducedDen
    std::vector<IsolatedRoot> realPoles;       // all of R, ascending, refined
    unsigned positivePolesInUnitInterval = 0;  // distinct roots in (0,1)
    unsigned poleAtOne = 0;                    // multiplicity of the root 1
    std::vector<ComplexPole> complexPoles;     // non-real, non-cyclotomic
    unsigned cyclotomicNonRealPoles = 0;       // count with multiplicity
    bool allSimple = false;                    // gcd(q, q') certificate

    std::optional<IsolatedRoot> smallestPositive;  // x_1
    std::optional<IsolatedRoot> tau;               // enclosure of 1/x_1
    double tauApprox = 0;

    RateClassification classification;
    std::optional<Annulus> annulus;
};

// Poles of a reduced rational function; n is the declared dimension (recorded
// and used by check_conjecture). Root isolation is exact; only the non-real
// roots of the non-cyclotomic denominator part are numeric, and those carry
// a posteriori residual bounds.
PoleReport pole_report(const RatFunc& reduced, unsigned n,
                       double unitTol = kUnitCircleTol,
                       double marginRatio = kPerronMarginRatio);
PoleReport pole_report(const GrowthSeries& series, unsigned n,
                       double unitTol = kUnitCircleTol,
                       double marginRatio = kPerronMarginRatio);

// Classification evidence for an existing report (also stored inside it by
// pole_report). Precedence: SalemLayout, then PerronVerified, else
// Indeterminate.
RateClassification classify_rate(const PoleReport& report,
                                 double unitTol = kUnitCircleTol,
                                 double marginRatio = kPerronMarginRatio);

struct ClauseVerdict {
    bool pass = false;
    std::string detail;
};

struct ConjectureVerdict {
    ClauseVerdict interiorCount;  // exactly floor(n/2) poles in (0,1)
    ClauseVerdict poleAtOne;      // simple pole at 1 iff n is odd
    ClauseVerdict simplicity;     // gcd(q, q') = const certificate
    ClauseVerdict annulus;        // non-real poles inside [x_star, 1/x_star]
    std::optional<Annulus> annulusData;
    bool overall = false;
};

ConjectureVerdict check_conjecture(const PoleReport& report, unsigned n,
                                   double unitTol = kUnitCircleTol);

// Multiplicity of (x + 1) in the reduced numerator and denominator; the
// reported zero multiplicity is their difference floored at zero.
struct MinusOneReport {
    unsigned numeratorMultiplicity = 0;
    unsigned denominatorMultiplicity = 0;
    int difference = 0;
    unsigned zeroMultiplicity = 0;
};

MinusOneReport minus_one_multiplicity(const RatFunc& reduced);
MinusOneReport minus_one_multiplicity(const GrowthSeries& series);

// ------------------------------------------------------------------
// Help functions
// ------------------------------------------------------------------

enum class HelpFamily { L, E, K };

const char* help_family_name(HelpFamily family);

// Structural split h = -x * n(x) / d(x): n, d palindromic, d cyclotomic,
// deg d = deg n + 2. All four facts are verified exactly.
struct HelpSplit {
    IntPoly n;
    IntPoly d;
    bool nPalindromic = false;
    bool dPalindromic = false;
    bool dCyclotomic = false;
    bool degreeGap = false;  // deg d == deg n + 2
    bool valid = false;      // h(0) = 0 and all of the above
};

struct HelpTerm {
    std::vector<unsigned> subset;  // the maximal finite T
    RatFunc h;
    HelpSplit split;
    std::vector<double> samples;  // h on the grid k/1000, k = 1..999
    double gridMin = 0;
    double gridMinX = 0;
    unsigned negativeSamples = 0;
};

struct HelpFunctionProfile {
    HelpFamily family = HelpFamily::L;
    std::vector<HelpTerm> perMaximal;
    std::vector<unsigned> lannerOne;  // L (family K) or L_1 (family E)
    std::vector<unsigned> lannerTwo;  // L_2 (family E only)

    bool decompositionVerified = false;  // 1/f_S - 1 - sum h_T == 0 exactly
    RatFunc residual;                    // the exact difference

    // grid scan of H = sum h_T on (0,1), step 1/1000
    double minX = 0;
    double minValue = 0;
    unsigned negativeSamples = 0;
    unsigned monotonicityViolations = 0;  // direction changes beyond one V
    double valueNearSmallestPole = 0;     // H at x_1 (expected near -1)
};

HelpFunctionProfile help_profile(const CoxeterSystem& system, HelpFamily family,
                                 unsigned maxRank = 24);

} // namespace coxgrowth

#endif
