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

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "coxgrowth/catalog.hpp"
#include "coxgrowth/growth.hpp"
#include "coxgrowth/spectral.hpp"
#include "coxgrowth/word_oracle.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace coxgrowth;

// ---------------------------------------------------------------
// serialization helpers
// ---------------------------------------------------------------

json j_poly(const IntPoly& p) {
    json a = json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.str());
    return a;
}

json j_ratfunc(const RatFunc& f) {
    return json{{"num", j_poly(f.num())}, {"den", j_poly(f.den())}};
}

std::string rat_str(const BigRat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

json j_interval(const IsolatedRoot& r) {
    json j;
    j["lo"] = rat_str(r.lo);
    j["hi"] = rat_str(r.hi);
    j["multiplicity"] = r.multiplicity;
    j["approx"] = r.approx();
    return j;
}

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(15) << v;
    return os.str();
}

// ---------------------------------------------------------------
// input plumbing
// ---------------------------------------------------------------

struct InputOptions {
    std::string file;
    std::string catalogKey;
    std::string fvectorSpec;
    unsigned dim = 0;  // 0 = unset
    bool json = false;

    void attach(CLI::App* cmd, bool withFVector = false) {
        cmd->add_option("file", file, "Coxeter system description file");
        cmd->add_option("--catalog", catalogKey, "built-in catalog key");
        if (withFVector)
            cmd->add_option("--fvector", fvectorSpec,
                            "comma separated face vector f_0,...,f_{n-1}");
        cmd->add_option("--dim", dim, "ambient dimension override");
        cmd->add_flag("--json", json, "machine readable output");
    }
};

FVector parse_fvector(const std::string& spec) {
    FVector fv;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            fv.f.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw InputError("bad face vector entry: " + item);
        }
    }
    if (fv.f.empty()) throw InputError("empty face vector");
    fv.n = static_cast<unsigned>(fv.f.size());
    return fv;
}

// What a subcommand works on: a system, a face vector, or a raw
// denominator fixture. Exactly one is set.
struct Input {
    std::string label;
    std::optional<CoxeterSystem> system;
    std::optional<FVector> fvector;
    std::optional<IntPoly> fixture;
    std::optional<unsigned> dimension;
};

Input resolve(const InputOptions& opt) {
    Input in;
    const int sources = (opt.file.empty() ? 0 : 1) +
                        (opt.catalogKey.empty() ? 0 : 1) +
                        (opt.fvectorSpec.empty() ? 0 : 1);
    if (sources == 0)
        throw InputError("no input: give a file, --catalog KEY, or --fvector");
    if (sources > 1)
        throw InputError("give exactly one of file, --catalog, --fvector");

    if (!opt.catalogKey.empty()) {
        auto entry = catalog_find(opt.catalogKey);
        if (!entry) throw InputError("unknown catalog key: " + opt.catalogKey);
        in.label = entry->key;
        in.system = entry->system;
        in.fvector = entry->fvector;
        in.fixture = entry->denominatorFixture;
        in.dimension = entry->dimension;
    } else if (!opt.file.empty()) {
        std::ifstream f(opt.file);
        if (!f) throw InputError("cannot open " + opt.file);
        in.label = opt.file;
        in.system = CoxeterSystem::parse(f);
    } else {
        in.fvector = parse_fvector(opt.fvectorSpec);
        in.label = "fvector " + opt.fvectorSpec;
    }
    if (opt.dim != 0) in.dimension = opt.dim;
    return in;
}

const CoxeterSystem& need_system(const Input& in) {
    if (!in.system)
        throw InputError("this subcommand needs a Coxeter system input");
    return *in.system;
}

unsigned need_dim(const Input& in) {
    if (!in.dimension)
        throw InputError("ambient dimension unknown; pass --dim");
    return *in.dimension;
}

// The reduced rational function a spectral subcommand analyses, whichever
// route the input came through.
RatFunc reduced_function(const Input& in) {
    if (in.system) {
        FiniteLattice lattice = enumerate_finite_subsets(*in.system);
        return steinberg_series(*in.system, lattice);
    }
    if (in.fvector) {
        if (in.fvector->n != 4)
            throw InputError("face vector route is implemented for dimension 4");
        return ra4_series(*in.fvector).form.reduced;
    }
    if (in.fixture) return RatFunc(IntPoly::one(), *in.fixture);
    throw InputError("empty input");
}

// ---------------------------------------------------------------
// subcommand bodies
// ---------------------------------------------------------------

int run_info(const InputOptions& opt) {
    Input in = resolve(opt);
    json out;
    out["input"] = in.label;
    if (in.system) {
        const CoxeterSystem& s = *in.system;
        FiniteLattice lattice = enumerate_finite_subsets(s);
        std::vector<unsigned> bySize(s.rank() + 1, 0);
        unsigned maximal = 0;
        for (const auto& e : lattice.entries) {
            ++bySize[e.subset.size()];
            if (e.maximal) ++maximal;
        }
        out["rank"] = s.rank();
        out["right_angled"] = s.right_angled();
        out["max_finite_label"] = s.max_finite_label();
        out["finite_subsets"] = lattice.entries.size();
        out["finite_by_size"] = bySize;
        out["maximal_finite"] = maximal;
        if (in.dimension) out["dimension"] = *in.dimension;
        if (!opt.json) {
            std::cout << s.describe();
            std::cout << "finite subsets: " << lattice.entries.size() << "\n";
            std::cout << "by size:";
            for (unsigned k = 0; k <= s.rank(); ++k)
                std::cout << " " << bySize[k];
            std::cout << "\nmaximal finite subsets: " << maximal << "\n";
            return 0;
        }
    } else if (in.fvector) {
        out["fvector"] = in.fvector->f;
        out["euler_ok"] = in.fvector->euler_ok();
        if (!opt.json) {
            std::cout << "face vector:";
            for (long long v : in.fvector->f) std::cout << " " << v;
            std::cout << "\nEuler relation: "
                      << (in.fvector->euler_ok() ? "ok" : "violated") << "\n";
            return 0;
        }
    } else if (in.fixture) {
        out["denominator_fixture"] = j_poly(*in.fixture);
        if (!opt.json) {
            std::cout << "denominator fixture: " << in.fixture->str() << "\n";
            return 0;
        }
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_growth(const InputOptions& opt) {
    Input in = resolve(opt);
    GrowthSeries g = analyze_growth(need_system(in), in.dimension);

    if (opt.json) {
        json out;
        out["input"] = in.label;
        out["rank"] = g.system.rank();
        out["finite_group"] = g.finiteGroup;
        if (g.dimensionHint) out["dimension"] = *g.dimensionHint;
        if (g.paritySign) out["parity_sign"] = *g.paritySign;
        out["reduced"] = j_ratfunc(g.reduced);
        json virg;
        virg["poly"] = j_poly(g.virgin.poly);
        json exps = json::object();
        for (auto [d, k] : g.virgin.factors.exponents)
            exps[std::to_string(d)] = k;
        virg["cyclotomic_exponents"] = exps;
        out["virgin"] = virg;
        if (g.extension.available) {
            json ext;
            ext["blocks"] = g.extension.blocks;
            ext["poly"] = j_poly(g.extension.ext);
            ext["r"] = j_poly(g.extension.R);
            ext["multiple_optima"] = g.extension.multipleOptima;
            out["ext"] = ext;
            out["complete"] = json{{"num", j_poly(g.P)}, {"den", j_poly(g.Q)}};
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::cout << "input: " << in.label << "\n";
    std::cout << "reduced numerator   p = " << g.reduced.num().str() << "\n";
    std::cout << "reduced denominator q = " << g.reduced.den().str() << "\n";
    std::cout << "virgin form: " << g.virgin.poly.str() << "\n";
    if (g.extension.available) {
        std::cout << "blocks:";
        for (unsigned b : g.extension.blocks) std::cout << " " << b;
        std::cout << "\nR(x) = " << g.extension.R.str() << "\n";
        std::cout << "complete numerator   P = " << g.P.str() << "\n";
        std::cout << "complete denominator Q = " << g.Q.str() << "\n";
    }
    if (g.finiteGroup)
        std::cout << "finite group: growth series is the polynomial above\n";
    return 0;
}

int run_recursion(const InputOptions& opt, unsigned upto) {
    Input in = resolve(opt);
    GrowthSeries g = analyze_growth(need_system(in), in.dimension);
    if (!g.extension.available)
        throw InputError("recursion needs the block form; extension search failed");
    if (upto == 0) upto = static_cast<unsigned>(g.Q.degree());
    RecursionResult rec = recursion_coefficients(g, upto);

    bool allAgree = true;
    json rows = json::array();
    for (unsigned k = 0; k <= upto; ++k) {
        BigInt direct = k < g.Q.coeffs().size() ? g.Q.coeffs()[k] : BigInt(0);
        const bool agree = rec.b[k] == direct;
        allAgree = allAgree && agree;
        if (opt.json) {
            rows.push_back(json{{"k", k},
                                {"recursion", rec.b[k].str()},
                                {"direct", direct.str()},
                                {"agree", agree}});
        } else {
            std::cout << "b_" << k << " = " << rec.b[k].str()
                      << (agree ? "" : "   DISAGREES with direct " + direct.str())
                      << "\n";
        }
    }
    if (opt.json) {
        json out;
        out["input"] = in.label;
        out["upto"] = upto;
        out["coefficients"] = rows;
        out["all_agree"] = allAgree;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "agreement with exact division: "
                  << (allAgree ? "exact" : "BROKEN") << "\n";
    }
    if (!allAgree)
        throw IntegrityError("recursion disagrees with the exact-division path");
    return 0;
}

int run_taylor(const InputOptions& opt, unsigned upto) {
    Input in = resolve(opt);
    GrowthSeries g = analyze_growth(need_system(in), in.dimension);
    std::vector<BigInt> a = taylor_coefficients(g, upto);
    if (opt.json) {
        json out;
        out["input"] = in.label;
        out["upto"] = upto;
        json arr = json::array();
        for (const auto& v : a) arr.push_back(v.str());
        out["coefficients"] = arr;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (unsigned k = 0; k <= upto; ++k)
        std::cout << "a_" << k << " = " << a[k].str() << "\n";
    return 0;
}

json j_classification(const RateClassification& c) {
    json out;
    out["tag"] = rate_tag_name(c.tag);
    out["salem_palindromic"] = c.salemPalindromic;
    out["salem_squarefree"] = c.salemSquarefree;
    out["salem_real_pattern"] = c.salemRealPattern;
    out["salem_circle_ok"] = c.salemCircleOk;
    out["salem_max_circle_offset"] = c.salemMaxCircleOffset;
    out["tau_simple"] = c.tauSimple;
    out["tau_exact_exclusion"] = c.tauExactExclusion;
    out["worst_margin_ratio"] = c.worstMarginRatio;
    out["note"] = c.note;
    return out;
}

json j_report(const PoleReport& r) {
    json out;
    out["dimension"] = r.dimension;
    out["reduced"] = json{{"num", j_poly(r.reducedNum)}, {"den", j_poly(r.reducedDen)}};
    out["no_poles"] = r.noPoles;
    json cyc = json::object();
    for (auto [d, k] : r.cyclotomicPart.exponents) cyc[std::to_string(d)] = k;
    out["cyclotomic_exponents"] = cyc;
    json real = json::array();
    for (const auto& p : r.realPoles) real.push_back(j_interval(p));
    out["real_poles"] = real;
    out["positive_poles_in_unit_interval"] = r.positivePolesInUnitInterval;
    out["pole_at_one"] = r.poleAtOne;
    json cplx = json::array();
    for (const auto& p : r.complexPoles)
        cplx.push_back(json{{"re", p.re},
                            {"im", p.im},
                            {"residual_bound", p.residualBound},
                            {"multiplicity", p.multiplicity}});
    out["complex_poles"] = cplx;
    out["cyclotomic_nonreal_poles"] = r.cyclotomicNonRealPoles;
    out["all_simple"] = r.allSimple;
    if (r.smallestPositive) out["smallest_positive"] = j_interval(*r.smallestPositive);
    if (r.tau) out["tau"] = j_interval(*r.tau);
    out["tau_approx"] = r.tauApprox;
    out["classification"] = j_classification(r.classification);
    if (r.annulus)
        out["annulus"] = json{{"star", r.annulus->star},
                              {"inner", r.annulus->inner},
                              {"outer", r.annulus->outer},
                              {"worst_violation", r.annulus->worstViolation}};
    return out;
}

int run_poles(const InputOptions& opt) {
    Input in = resolve(opt);
    PoleReport r = pole_report(reduced_function(in), in.dimension.value_or(0));
    if (opt.json) {
        json out = j_report(r);
        out["input"] = in.label;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "input: " << in.label << "\n";
    if (r.noPoles) {
        std::cout << "no poles: polynomial growth series\n";
        return 0;
    }
    std::cout << "real poles (" << r.realPoles.size() << "):\n";
    for (const auto& p : r.realPoles)
        std::cout << "  ~" << fmt(p.approx()) << "  in [" << rat_str(p.lo) << ", "
                  << rat_str(p.hi) << "]  multiplicity " << p.multiplicity << "\n";
    std::cout << "poles in (0,1): " << r.positivePolesInUnitInterval
              << ", at 1: multiplicity " << r.poleAtOne << "\n";
    std::cout << "non-real poles: " << r.complexPoles.size() << " off-cyclotomic, "
              << r.cyclotomicNonRealPoles << " cyclotomic\n";
    std::cout << "all poles simple: " << (r.allSimple ? "yes" : "no") << "\n";
    if (r.tau)
        std::cout << "growth rate tau ~ " << fmt(r.tauApprox) << " in ["
                  << rat_str(r.tau->lo) << ", " << rat_str(r.tau->hi) << "]\n";
    if (r.annulus)
        std::cout << "annulus: [x_" << r.annulus->star << ", 1/x_" << r.annulus->star
                  << "] = [" << fmt(r.annulus->inner) << ", " << fmt(r.annulus->outer)
                  << "], worst violation " << fmt(r.annulus->worstViolation) << "\n";
    std::cout << "classification: " << rate_tag_name(r.classification.tag) << "\n";
    return 0;
}

int run_conjecture(const InputOptions& opt) {
    Input in = resolve(opt);
    const unsigned n = need_dim(in);
    PoleReport r = pole_report(reduced_function(in), n);
    ConjectureVerdict v = check_conjecture(r, n);
    if (opt.json) {
        json out;
        out["input"] = in.label;
        out["dimension"] = n;
        auto clause = [](const ClauseVerdict& c) {
            return json{{"pass", c.pass}, {"detail", c.detail}};
        };
        out["interior_count"] = clause(v.interiorCount);
        out["pole_at_one"] = clause(v.poleAtOne);
        out["simplicity"] = clause(v.simplicity);
        out["annulus"] = clause(v.annulus);
        out["overall"] = v.overall;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "input: " << in.label << " (dimension " << n << ")\n";
    auto line = [](const char* name, const ClauseVerdict& c) {
        std::cout << "  " << (c.pass ? "[ok]  " : "[FAIL]") << " " << name << ": "
                  << c.detail << "\n";
    };
    line("interior pole count", v.interiorCount);
    line("pole at one", v.poleAtOne);
    line("simplicity", v.simplicity);
    line("annulus", v.annulus);
    std::cout << "overall: " << (v.overall ? "holds" : "violated") << "\n";
    return 0;
}

int run_classify(const InputOptions& opt) {
    Input in = resolve(opt);
    PoleReport r = pole_report(reduced_function(in), in.dimension.value_or(0));
    if (opt.json) {
        json out = j_classification(r.classification);
        out["input"] = in.label;
        out["tau_approx"] = r.tauApprox;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    const RateClassification& c = r.classification;
    std::cout << "input: " << in.label << "\n";
    std::cout << "tag: " << rate_tag_name(c.tag) << "\n";
    if (r.tau) std::cout << "tau ~ " << fmt(r.tauApprox) << "\n";
    std::cout << "salem layout: palindromic " << c.salemPalindromic
              << ", squarefree " << c.salemSquarefree << ", real pattern "
              << c.salemRealPattern << ", circle " << c.salemCircleOk
              << " (max offset " << fmt(c.salemMaxCircleOffset) << ")\n";
    std::cout << "perron: tau simple " << c.tauSimple << ", exact exclusion "
              << c.tauExactExclusion << ", worst margin ratio "
              << fmt(c.worstMarginRatio) << "\n";
    std::cout << c.note << "\n";
    return 0;
}

int run_euler(const InputOptions& opt) {
    Input in = resolve(opt);
    const unsigned n = need_dim(in);

    BigRat chi;
    bool poleAtOne = false;
    std::optional<BigRat> volumeCoeff;
    if (in.system) {
        GrowthSeries g = analyze_growth(*in.system, n);
        EulerVolume ev = euler_and_volume(g, n);
        chi = ev.chi;
        poleAtOne = ev.poleAtOne;
        volumeCoeff = ev.volumeCoeff;
    } else if (in.fvector) {
        if (in.fvector->n != 4 || n != 4)
            throw InputError("face vector route is implemented for dimension 4");
        Ra4Result r = ra4_series(*in.fvector);
        // 1/f_S(1) = chi
        chi = BigRat(r.form.Q.eval(BigInt(1)), r.form.P.eval(BigInt(1)));
        volumeCoeff = chi * BigRat(4, 3);
    } else {
        throw InputError("euler needs a system or face vector input");
    }

    if (opt.json) {
        json out;
        out["input"] = in.label;
        out["dimension"] = n;
        out["chi"] = rat_str(chi);
        out["pole_at_one"] = poleAtOne;
        if (volumeCoeff) {
            out["volume_coefficient"] = rat_str(*volumeCoeff);
            out["volume_power"] = n / 2;
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "input: " << in.label << " (dimension " << n << ")\n";
    std::cout << "Euler characteristic chi = " << rat_str(chi)
              << (poleAtOne ? " (pole at 1: zero by parity)" : "") << "\n";
    if (volumeCoeff)
        std::cout << "covolume = " << rat_str(*volumeCoeff) << " * pi^" << n / 2
                  << "\n";
    return 0;
}

int run_rightangled(const InputOptions& opt, unsigned facets) {
    if (!opt.fvectorSpec.empty() && facets != 0)
        throw InputError("give either --fvector or --facets, not both");

    if (facets != 0) {
        if (opt.dim != 0 && opt.dim != 3)
            throw InputError("--facets route is the dimension 3 closed form");
        Ra3Result r = ra3_series(facets);
        if (opt.json) {
            json out;
            out["facets"] = r.facets;
            out["form"] = json{{"num", j_poly(r.form.P)}, {"den", j_poly(r.form.Q)},
                               {"reduced", j_ratfunc(r.form.reduced)}};
            out["tau"] = j_interval(r.tau);
            out["tau_approx"] = r.tauApprox;
            out["discrepancy"] = json{
                {"facet_parameter", r.discrepancy.facetParameter},
                {"vertex_parameter", r.discrepancy.vertexParameter},
                {"a1_from_facets", r.discrepancy.a1FromFacets.str()},
                {"a1_from_vertices", r.discrepancy.a1FromVertices.str()},
                {"note", r.discrepancy.note}};
            std::cout << out.dump(2) << "\n";
            return 0;
        }
        std::cout << "facets: " << r.facets << "\n";
        std::cout << "P = " << r.form.P.str() << "\n";
        std::cout << "Q = " << r.form.Q.str() << "\n";
        std::cout << "tau ~ " << fmt(r.tauApprox) << " in [" << rat_str(r.tau.lo)
                  << ", " << rat_str(r.tau.hi) << "]\n";
        std::cout << "parameterization note: " << r.discrepancy.note << "\n";
        return 0;
    }

    if (opt.fvectorSpec.empty())
        throw InputError("rightangled needs --fvector or --facets");
    FVector fv = parse_fvector(opt.fvectorSpec);
    if (fv.n != 4 || (opt.dim != 0 && opt.dim != 4))
        throw InputError("face vector route is implemented for dimension 4");
    Ra4Result r = ra4_series(fv);
    RAQuarticPoles poles = ra4_poles(fv);
    if (opt.json) {
        json out;
        out["fvector"] = fv.f;
        out["euler_ok"] = fv.euler_ok();
        out["form"] = json{{"num", j_poly(r.form.P)}, {"den", j_poly(r.form.Q)},
                           {"reduced", j_ratfunc(r.form.reduced)}};
        out["simple_lint"] = r.simpleLint;
        out["pentagon_lint"] = r.pentagonLint;
        out["alpha"] = poles.alpha.str();
        out["beta"] = poles.beta.str();
        out["gamma"] = poles.gamma.str();
        json ps = json::array();
        for (const auto& p : poles.poles)
            ps.push_back(json{{"surd", p.surd},
                              {"approx", p.approx},
                              {"interval", j_interval(p.certified)}});
        out["poles"] = ps;
        out["simple_certified"] = poles.simpleCertified;
        out["surds_match"] = poles.surdsMatch;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "face vector:";
    for (long long v : fv.f) std::cout << " " << v;
    std::cout << "\nP = " << r.form.P.str() << "\n";
    std::cout << "Q = " << r.form.Q.str() << "\n";
    for (const auto& p : poles.poles)
        std::cout << "pole ~ " << fmt(p.approx) << " = " << p.surd << "\n";
    std::cout << "all simple: " << (poles.simpleCertified ? "yes" : "no")
              << ", surds match isolation: " << (poles.surdsMatch ? "yes" : "no")
              << "\n";
    return 0;
}

int run_helpfn(const InputOptions& opt, const std::string& familyName) {
    Input in = resolve(opt);
    HelpFamily family;
    if (familyName == "L") family = HelpFamily::L;
    else if (familyName == "E") family = HelpFamily::E;
    else if (familyName == "K") family = HelpFamily::K;
    else throw InputError("--family must be L, E or K");

    HelpFunctionProfile prof = help_profile(need_system(in), family);
    if (opt.json) {
        json out;
        out["input"] = in.label;
        out["family"] = help_family_name(prof.family);
        out["decomposition_verified"] = prof.decompositionVerified;
        json terms = json::array();
        for (const auto& t : prof.perMaximal) {
            json tj;
            tj["subset"] = t.subset;
            tj["h"] = j_ratfunc(t.h);
            tj["split"] = json{{"n", j_poly(t.split.n)},
                               {"d", j_poly(t.split.d)},
                               {"n_palindromic", t.split.nPalindromic},
                               {"d_palindromic", t.split.dPalindromic},
                               {"d_cyclotomic", t.split.dCyclotomic},
                               {"degree_gap", t.split.degreeGap},
                               {"valid", t.split.valid}};
            tj["grid_min"] = t.gridMin;
            tj["grid_min_x"] = t.gridMinX;
            tj["negative_samples"] = t.negativeSamples;
            terms.push_back(tj);
        }
        out["terms"] = terms;
        out["min_x"] = prof.minX;
        out["min_value"] = prof.minValue;
        out["negative_samples"] = prof.negativeSamples;
        out["monotonicity_violations"] = prof.monotonicityViolations;
        out["value_near_smallest_pole"] = prof.valueNearSmallestPole;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "input: " << in.label << ", family " << help_family_name(prof.family)
              << "\n";
    std::cout << "decomposition 1/f = 1 + sum h_T: "
              << (prof.decompositionVerified ? "exact" : "BROKEN") << "\n";
    for (const auto& t : prof.perMaximal) {
        std::cout << "  T = {";
        for (std::size_t i = 0; i < t.subset.size(); ++i)
            std::cout << (i ? "," : "") << t.subset[i];
        std::cout << "}: split " << (t.split.valid ? "valid" : "INVALID")
                  << ", min " << fmt(t.gridMin) << " at x ~ " << fmt(t.gridMinX)
                  << "\n";
    }
    std::cout << "H minimum " << fmt(prof.minValue) << " at x ~ " << fmt(prof.minX)
              << "; H(x_1) ~ " << fmt(prof.valueNearSmallestPole) << "\n";
    std::cout << "negative grid samples: " << prof.negativeSamples
              << ", extra direction changes: " << prof.monotonicityViolations << "\n";
    return 0;
}

int run_oracle(const InputOptions& opt, unsigned upto, std::size_t maxElements) {
    Input in = resolve(opt);
    OracleVerdict v = oracle_compare(need_system(in), upto, maxElements);
    if (opt.json) {
        json out;
        out["input"] = in.label;
        out["upto"] = upto;
        out["truncated"] = v.bfs.truncated;
        out["completed_depth"] = v.bfs.completedDepth;
        out["total_elements"] = v.bfs.totalElements;
        json rows = json::array();
        for (std::size_t k = 0; k < v.match.size(); ++k) {
            const unsigned long long c =
                k < v.bfs.counts.size() ? v.bfs.counts[k] : 0;
            rows.push_back(json{{"k", k},
                                {"bfs", c},
                                {"taylor", v.taylor[k].str()},
                                {"match", static_cast<bool>(v.match[k])}});
        }
        out["rows"] = rows;
        out["all_match"] = v.allMatch;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "input: " << in.label << "\n";
        for (std::size_t k = 0; k < v.match.size(); ++k) {
            const unsigned long long c =
                k < v.bfs.counts.size() ? v.bfs.counts[k] : 0;
            std::cout << "a_" << k << ": bfs " << c << ", taylor "
                      << v.taylor[k].str() << (v.match[k] ? "" : "  MISMATCH")
                      << "\n";
        }
        if (v.bfs.truncated)
            std::cout << "(truncated after depth " << v.bfs.completedDepth << ")\n";
        std::cout << "total elements enumerated: " << v.bfs.totalElements << "\n";
    }
    if (v.firstMismatch)
        throw IntegrityError("word counts disagree with the Taylor expansion at k = " +
                             std::to_string(*v.firstMismatch));
    return 0;
}

int run_rebase(const InputOptions& opt, const std::string& blockSpec) {
    Input in = resolve(opt);
    std::vector<unsigned> blocks;
    std::istringstream bs(blockSpec);
    std::string item;
    while (std::getline(bs, item, ',')) {
        try {
            const int v = std::stoi(item);
            if (v < 1) throw std::out_of_range("");
            blocks.push_back(static_cast<unsigned>(v));
        } catch (const std::exception&) {
            throw InputError("bad block entry: " + item);
        }
    }
    if (blocks.empty()) throw InputError("--blocks must list at least one block");

    GrowthSeries g = analyze_growth(need_system(in), in.dimension);
    RebaseResult r = rebase_numerator(g, blocks);
    if (opt.json) {
        json out;
        out["input"] = in.label;
        out["blocks"] = blocks;
        out["multiplier"] = j_poly(r.multiplier);
        out["num"] = j_poly(r.num);
        out["den"] = j_poly(r.den);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "input: " << in.label << "\n";
    std::cout << "multiplier = " << r.multiplier.str() << "\n";
    std::cout << "numerator  = " << r.num.str() << "\n";
    std::cout << "denominator = " << r.den.str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact growth series toolkit for Coxeter groups"};
    app.require_subcommand(1);

    InputOptions optInfo, optGrowth, optRec, optTaylor, optPoles, optConj,
        optClassify, optEuler, optRa, optHelp, optOracle, optRebase;
    unsigned recUpto = 0, taylorUpto = 16, oracleUpto = 6, raFacets = 0;
    std::size_t oracleMax = 4000000;
    std::string helpFamily = "L", rebaseBlocks;

    optInfo.attach(app.add_subcommand("info", "system summary and lattice statistics"));
    optGrowth.attach(app.add_subcommand("growth", "reduced and complete growth forms"));
    auto* rec = app.add_subcommand("recursion", "denominator coefficients by recursion");
    rec->add_option("--upto", recUpto, "highest coefficient index (default deg Q)");
    optRec.attach(rec);
    auto* tay = app.add_subcommand("taylor", "growth series coefficients");
    tay->add_option("--upto", taylorUpto, "highest coefficient index");
    optTaylor.attach(tay);
    optPoles.attach(app.add_subcommand("poles", "pole report of the growth function"),
                    true);
    optConj.attach(app.add_subcommand("conjecture", "pole layout clauses for dimension n"),
                   true);
    optClassify.attach(app.add_subcommand("classify", "growth rate classification"),
                       true);
    optEuler.attach(app.add_subcommand("euler", "Euler characteristic and covolume"),
                    true);
    auto* ra = app.add_subcommand("rightangled", "right-angled closed forms");
    ra->add_option("--facets", raFacets, "facet count for the dimension 3 form");
    optRa.attach(ra, true);
    auto* hf = app.add_subcommand("helpfn", "help function decomposition");
    hf->add_option("--family", helpFamily, "family L, E or K")->required();
    optHelp.attach(hf);
    auto* orc = app.add_subcommand("oracle", "word enumeration against the series");
    orc->add_option("--upto", oracleUpto, "maximum word length");
    orc->add_option("--max-elements", oracleMax, "element budget before truncation");
    optOracle.attach(orc);
    auto* rb = app.add_subcommand("rebase", "renumerator over a chosen block product");
    rb->add_option("--blocks", rebaseBlocks, "comma separated blocks")->required();
    optRebase.attach(rb);

    try {
        app.parse(argc, argv);
        if (app.got_subcommand("info")) return run_info(optInfo);
        if (app.got_subcommand("growth")) return run_growth(optGrowth);
        if (app.got_subcommand("recursion")) return run_recursion(optRec, recUpto);
        if (app.got_subcommand("taylor")) return run_taylor(optTaylor, taylorUpto);
        if (app.got_subcommand("poles")) return run_poles(optPoles);
        if (app.got_subcommand("conjecture")) return run_conjecture(optConj);
        if (app.got_subcommand("classify")) return run_classify(optClassify);
        if (app.got_subcommand("euler")) return run_euler(optEuler);
        if (app.got_subcommand("rightangled")) return run_rightangled(optRa, raFacets);
        if (app.got_subcommand("helpfn")) return run_helpfn(optHelp, helpFamily);
        if (app.got_subcommand("oracle"))
            return run_oracle(optOracle, oracleUpto, oracleMax);
        if (app.got_subcommand("rebase")) return run_rebase(optRebase, rebaseBlocks);
        return 2;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const IntegrityError& e) {
        std::cerr << "integrity error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
