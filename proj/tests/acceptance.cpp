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

// Release gate: one self-contained check per criterion, one [PASS]/[FAIL]
// line each, nonzero exit when anything fails. Checks are exact unless a
// stated numeric tolerance applies; every criterion carries a wall-clock
// budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "coxgrowth/catalog.hpp"
#include "coxgrowth/spectral.hpp"
#include "coxgrowth/word_oracle.hpp"

using namespace coxgrowth;

namespace {

// numeric tolerances used below; exact checks do not consult these
constexpr double kAnnulusTol = 1e-9;   // annulus membership of non-real poles
constexpr double kTauWidth = 1e-8;     // certified growth-rate interval width
constexpr double kSurdTol = 1e-9;      // radicals against isolated roots

struct Check {
    std::ostringstream log;
    bool ok = true;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (!ok) log << "; ";
            log << what;
            ok = false;
        }
    }
};

GrowthSeries analyzed(const std::string& key) {
    auto e = catalog_find(key);
    if (!e || !e->system) throw InputError("catalog entry missing: " + key);
    return analyze_growth(*e->system, e->dimension);
}

CoxeterSystem catalog_system(const std::string& key) {
    auto e = catalog_find(key);
    if (!e || !e->system) throw InputError("catalog entry missing: " + key);
    return *e->system;
}

// ---------------------------------------------------------------
// criteria
// ---------------------------------------------------------------

void c01_virgin_and_extension(Check& c) {
    GrowthSeries s = analyzed("lanner-5334");
    IntPoly virgin = block_product({2, 12, 20, 30}) * cyclotomic(8);
    c.require(s.virgin.poly == virgin, "virgin form != [2][12][20][30]*Phi_8");
    c.require(s.extension.available, "block extension unavailable");
    c.require(s.extension.blocks == std::vector<unsigned>{2, 8, 12, 20, 30},
              "extended blocks != [2,8,12,20,30]");
    c.require(s.extension.ext == block_product({2, 8, 12, 20, 30}),
              "extended form is not the block product");
}

void c02_120cell_complete_form(Check& c) {
    Ra4Result r = ra4_series(FVector{4, {600, 1200, 720, 120}});
    c.require(r.form.Q == IntPoly{1, -116, 366, -116, 1},
              "quartic != 1 - 116x + 366x^2 - 116x^3 + x^4");
    c.require(r.form.P == block_product({2, 2, 2, 2}), "numerator != [2]^4");
    BigRat chi = BigRat(r.form.Q.eval(BigInt(1))) / BigRat(r.form.P.eval(BigInt(1)));
    c.require(chi == BigRat(17, 2), "Euler characteristic != 17/2");
    // vol = chi * 4^2 * 2! / 4! * pi^2 = 34/3 * pi^2
    BigRat volCoeff = chi * BigRat(16 * 2, 24);
    c.require(volCoeff == BigRat(34, 3), "covolume != 34/3 * pi^2");
}

void c03_hexagon_series(Check& c) {
    std::vector<BigInt> a = taylor_coefficients(analyzed("ra-hexagon"), 10);
    std::vector<BigInt> expect{1, 6, 24, 90, 336, 1254, 4680, 17466, 65184, 243270, 907896};
    c.require(a == expect, "hexagon Taylor coefficients up to x^10 differ");
}

void c04_recursion_vs_division(Check& c) {
    for (const CatalogEntry& e : catalog_entries()) {
        if (!e.verified || !e.system) continue;
        GrowthSeries s = analyze_growth(*e.system, e.dimension);
        if (!s.extension.available) continue;
        unsigned upTo = static_cast<unsigned>(s.Q.degree());
        RecursionResult rec = recursion_coefficients(s, upTo);
        for (unsigned k = 0; k <= upTo; ++k)
            c.require(rec.b[k] == s.Q.coeff(k),
                      e.key + ": recursion b_" + std::to_string(k) + " != division");
    }
}

void c05_reciprocity(Check& c) {
    for (const char* key : {"lanner-5334", "lanner-5333"}) {
        RatFunc f = analyzed(key).reduced;
        c.require(f.reciprocal_substitution() == f,
                  std::string(key) + ": f(1/x) != f(x)");
    }
    for (const char* key : {"ra-dodecahedron", "prism-5-3-7"}) {
        RatFunc f = analyzed(key).reduced;
        c.require(f.reciprocal_substitution() == -f,
                  std::string(key) + ": f(1/x) != -f(x)");
    }
}

void c06_subgroup_distribution(Check& c) {
    struct Case { const char* key; unsigned n; };
    for (Case cs : {Case{"lanner-5334", 4}, Case{"lanner-5333", 4},
                    Case{"ra-hexagon", 2}, Case{"ra-dodecahedron", 3},
                    Case{"triangle-2-3-7", 2}, Case{"prism-5-3-7", 3},
                    Case{"prism-3-3-7", 3}}) {
        CoxeterSystem s = catalog_system(cs.key);
        SubgroupDistribution d =
            subgroup_distribution(s, enumerate_finite_subsets(s), cs.n);
        c.require(d.check, std::string(cs.key) + ": distribution identity fails");
    }
    // term-by-term census behind 2*1 - 3*4 + 4*5 - 5*1 = 5
    CoxeterSystem pri = catalog_system("prism-3-3-7");
    SubgroupDistribution d = subgroup_distribution(pri, enumerate_finite_subsets(pri), 3);
    c.require(d.infiniteBySize[2] == 1 && d.infiniteBySize[3] == 4 &&
              d.infiniteBySize[4] == 5 && d.infiniteBySize[5] == 1,
              "prism infinite-subset census != 1,4,5,1");
    c.require(d.infiniteSum == 5, "prism alternating sum != 5");
}

void c07_pole_layout(Check& c) {
    for (const char* key : {"lanner-5334", "lanner-5333"}) {
        PoleReport r = pole_report(analyzed(key), 4);
        std::string k(key);
        c.require(r.realPoles.size() == 4, k + ": expected 4 real poles");
        c.require(r.positivePolesInUnitInterval == 2, k + ": expected x_1 < x_2 < 1");
        c.require(r.allSimple, k + ": gcd simplicity certificate fails");
        if (r.realPoles.size() == 4) {
            double p03 = r.realPoles[0].approx() * r.realPoles[3].approx();
            double p12 = r.realPoles[1].approx() * r.realPoles[2].approx();
            c.require(std::abs(p03 - 1.0) < kAnnulusTol && std::abs(p12 - 1.0) < kAnnulusTol,
                      k + ": real poles do not pair into (x, 1/x)");
        }
        c.require(r.classification.tag == RateTag::PerronVerified,
                  k + ": growth rate not Perron-verified");
        c.require(r.annulus.has_value() && r.annulus->star == 2,
                  k + ": tightest annulus is not [x_2, 1/x_2]");
        if (r.annulus)
            c.require(r.annulus->worstViolation <= kAnnulusTol,
                      k + ": non-real pole escapes the annulus");
    }
}

void c08_minus_one_multiplicity(Check& c) {
    c.require(minus_one_multiplicity(analyzed("lanner-5334")).zeroMultiplicity >= 1,
              "lanner-5334: no zero at -1");
    c.require(minus_one_multiplicity(analyzed("lanner-5333")).zeroMultiplicity >= 1,
              "lanner-5333: no zero at -1");
    Ra4Result cell = ra4_series(FVector{4, {600, 1200, 720, 120}});
    c.require(minus_one_multiplicity(cell.form.reduced).zeroMultiplicity == 4,
              "120-cell series: zero at -1 not of multiplicity 4");
}

void c09_word_oracle(Check& c) {
    OracleVerdict hex = oracle_compare(catalog_system("ra-hexagon"), 8);
    c.require(hex.allMatch && !hex.bfs.truncated, "hexagon: BFS != Taylor up to L=8");

    OracleVerdict tri = oracle_compare(catalog_system("triangle-2-3-7"), 10);
    c.require(tri.allMatch && !tri.bfs.truncated, "triangle (2,3,7): BFS != Taylor up to L=10");

    OracleVerdict lan = oracle_compare(catalog_system("lanner-5334"), 7);
    c.require(lan.allMatch && !lan.bfs.truncated, "lanner-5334: BFS != Taylor up to L=7");

    BfsResult h4 = bfs_counts(catalog_system("finite-h4"), 64);
    c.require(h4.totalElements == 14400, "H4: enumeration total != 14400");
}

void c10_dodecahedron(Check& c) {
    CoxeterSystem dod = catalog_system("ra-dodecahedron");
    RatFunc direct = steinberg_series(dod, enumerate_finite_subsets(dod));
    Ra3Result closed = ra3_series(12);
    c.require(direct == closed.form.reduced, "Steinberg != parameterized cubic");
    c.require(closed.form.Q == IntPoly{1, -9, 9, -1},
              "denominator != 1 - 9x + 9x^2 - x^3");

    double tau = 4.0 + std::sqrt(15.0);
    double width = (closed.tau.hi - closed.tau.lo).convert_to<double>();
    c.require(width <= kTauWidth, "growth-rate interval wider than 1e-8");
    c.require(closed.tau.lo.convert_to<double>() <= tau &&
              tau <= closed.tau.hi.convert_to<double>(),
              "4 + sqrt(15) outside the certified interval");

    const auto& disc = closed.discrepancy;
    c.require(disc.a1FromFacets == 12 && disc.a1FromVertices == 20 && !disc.note.empty(),
              "facet/vertex parameterization report missing");
}

void c11_salem_fixture(Check& c) {
    auto entry = catalog_find("lehmer-fixture");
    c.require(entry && entry->denominatorFixture, "fixture missing from catalog");
    if (!entry || !entry->denominatorFixture) return;
    PoleReport r = pole_report(RatFunc(IntPoly::one(), *entry->denominatorFixture), 0);
    c.require(r.classification.tag == RateTag::SalemLayout, "fixture: not a Salem layout");
    c.require(r.tau.has_value() && r.tau->lo > BigRat(117627, 100000) &&
              r.tau->hi < BigRat(117629, 100000),
              "fixture: tau outside [1.17627, 1.17629]");

    // negative control: squared Salem factor must not classify
    PoleReport neg = pole_report(RatFunc(IntPoly::one(), IntPoly{1, -6, 11, -6, 1}), 0);
    c.require(neg.classification.tag == RateTag::Indeterminate,
              "negative control classified as Salem or Perron");
}

void c12_help_decomposition(Check& c) {
    HelpFunctionProfile prof = help_profile(catalog_system("lanner-5334"), HelpFamily::L);
    c.require(prof.decompositionVerified && prof.residual.is_zero(),
              "1/f - 1 - sum h_T != 0");
    c.require(prof.perMaximal.size() == 5, "expected 5 maximal finite subsets");
    for (const HelpTerm& t : prof.perMaximal) {
        std::ostringstream name;
        name << "h_{";
        for (unsigned i : t.subset) name << i;
        name << "}";
        c.require(t.split.valid, name.str() + ": structural split invalid");
        c.require(t.split.nPalindromic && t.split.dPalindromic,
                  name.str() + ": numerator or denominator not palindromic");
        c.require(t.split.dCyclotomic, name.str() + ": denominator not cyclotomic");
        c.require(t.split.degreeGap, name.str() + ": deg d != deg n + 2");
        auto at0 = t.h.eval(BigRat(0));
        c.require(at0.has_value() && *at0 == 0, name.str() + ": h(0) != 0");
    }
}

struct Criterion {
    int id;
    const char* title;
    std::function<void(Check&)> run;
    double budgetSeconds;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "virgin and extended forms of the [5,3,3,4] group", c01_virgin_and_extension, 1.0},
        {2, "120-cell complete form, Euler characteristic, covolume", c02_120cell_complete_form, 1.0},
        {3, "right-angled hexagon series through x^10", c03_hexagon_series, 1.0},
        {4, "coefficient recursion vs exact division on the catalog", c04_recursion_vs_division, 10.0},
        {5, "reciprocity f(1/x) = (-1)^n f(x)", c05_reciprocity, 10.0},
        {6, "alternating subgroup distribution identity", c06_subgroup_distribution, 10.0},
        {7, "pole layout and Perron verification of the simplex groups", c07_pole_layout, 30.0},
        {8, "multiplicity of the zero at -1", c08_minus_one_multiplicity, 10.0},
        {9, "word-count oracle against the series expansion", c09_word_oracle, 300.0},
        {10, "dodecahedron closed form and certified growth rate", c10_dodecahedron, 10.0},
        {11, "Salem-layout fixture and negative control", c11_salem_fixture, 10.0},
        {12, "help-function decomposition and per-term structure", c12_help_decomposition, 30.0},
    };

    int failures = 0;
    for (const Criterion& cr : criteria) {
        Check check;
        auto t0 = std::chrono::steady_clock::now();
        try {
            cr.run(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (elapsed > cr.budgetSeconds)
            check.require(false, "budget " + std::to_string(cr.budgetSeconds) + " s exceeded");

        if (check.ok) {
            std::printf("[PASS] %2d %s (%.2fs)\n", cr.id, cr.title, elapsed);
        } else {
            std::printf("[FAIL] %2d %s (%.2fs): %s\n", cr.id, cr.title, elapsed,
                        check.log.str().c_str());
            ++failures;
        }
    }
    if (failures) std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures ? 1 : 0;
}
