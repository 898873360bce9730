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

#include "coxgrowth/coxeter.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

#include "coxgrowth/cyclotomic.hpp"

namespace coxgrowth {

namespace {

void validate_label(int m, const std::string& where) {
    if (m != kInfinity && m < 2)
        throw InputError("invalid Coxeter label " + std::to_string(m) + " " + where);
}

std::vector<std::string> default_names(unsigned rank, std::vector<std::string> names) {
    if (names.empty()) {
        names.reserve(rank);
        for (unsigned i = 0; i < rank; ++i) names.push_back("s" + std::to_string(i + 1));
    }
    if (names.size() != rank) throw InputError("name list length does not match rank");
    return names;
}

} // namespace

CoxeterSystem CoxeterSystem::from_matrix(std::vector<std::vector<int>> m,
                                         std::vector<std::string> names) {
    CoxeterSystem sys;
    if (m.empty()) throw InputError("rank must be at least 1");
    sys.rank_ = static_cast<unsigned>(m.size());
    sys.m_.assign(static_cast<size_t>(sys.rank_) * sys.rank_, 2);
    for (unsigned i = 0; i < sys.rank_; ++i) {
        if (m[i].size() != sys.rank_) throw InputError("Coxeter matrix is not square");
        for (unsigned j = 0; j < sys.rank_; ++j) {
            int v = m[i][j];
            if (i == j) {
                if (v != 1) throw InputError("Coxeter matrix diagonal entry must be 1");
            } else {
                validate_label(v, "at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                if (m[j][i] != v) throw InputError("asymmetric Coxeter matrix");
            }
            sys.m_[i * sys.rank_ + j] = v;
        }
    }
    sys.names_ = default_names(sys.rank_, std::move(names));
    return sys;
}

CoxeterSystem CoxeterSystem::from_edges(unsigned rank, const std::vector<Edge>& edges,
                                        std::vector<std::string> names) {
    if (rank == 0) throw InputError("rank must be at least 1");
    std::vector<std::vector<int>> m(rank, std::vector<int>(rank, 2));
    for (unsigned i = 0; i < rank; ++i) m[i][i] = 1;
    std::vector<bool> seen(static_cast<size_t>(rank) * rank, false);
    for (const Edge& e : edges) {
        if (e.a >= rank || e.b >= rank) throw InputError("edge index out of range");
        if (e.a == e.b) throw InputError("edge endpoints must differ");
        validate_label(e.m, "on edge");
        size_t key = static_cast<size_t>(std::min(e.a, e.b)) * rank + std::max(e.a, e.b);
        if (seen[key]) throw InputError("duplicate edge declaration");
        seen[key] = true;
        m[e.a][e.b] = m[e.b][e.a] = e.m;
    }
    return from_matrix(std::move(m), std::move(names));
}

namespace {

// strips comments, returns whitespace-split tokens
std::vector<std::string> tokenize_line(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream is(body);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

int parse_label_token(const std::string& tok) {
    if (tok == "inf" || tok == "infinity") return kInfinity;
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw InputError("bad label token '" + tok + "'");
        return v;
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("bad label token '" + tok + "'");
    }
}

unsigned parse_index(const std::string& tok, unsigned rank) {
    unsigned long v;
    try {
        size_t pos = 0;
        v = std::stoul(tok, &pos);
        if (pos != tok.size()) throw InputError("bad index '" + tok + "'");
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("bad index '" + tok + "'");
    }
    if (v < 1 || v > rank) throw InputError("index " + tok + " out of range 1.." + std::to_string(rank));
    return static_cast<unsigned>(v - 1);
}

} // namespace

CoxeterSystem CoxeterSystem::parse(std::istream& in) {
    std::string line;
    bool haveRank = false;
    unsigned rank = 0;
    std::vector<Edge> edges;
    std::vector<std::pair<unsigned, std::string>> names;
    bool sawEdge = false, sawMatrix = false;
    std::vector<std::vector<int>> matrix;

    while (std::getline(in, line)) {
        std::vector<std::string> toks = tokenize_line(line);
        if (toks.empty()) continue;
        const std::string& kw = toks[0];
        if (!haveRank) {
            if (kw != "rank") throw InputError("first directive must be 'rank N'");
            if (toks.size() != 2) throw InputError("usage: rank N");
            int r = parse_label_token(toks[1]);
            if (r < 1) throw InputError("rank must be at least 1");
            rank = static_cast<unsigned>(r);
            haveRank = true;
            continue;
        }
        if (kw == "rank") {
            throw InputError("duplicate rank directive");
        } else if (kw == "edge") {
            if (sawMatrix) throw InputError("'edge' and 'matrix' are mutually exclusive");
            if (toks.size() != 4) throw InputError("usage: edge I J M");
            sawEdge = true;
            int m = parse_label_token(toks[3]);
            if (m != kInfinity && m < 3)
                throw InputError("edge label must be >= 3 or inf (pairs default to 2)");
            edges.push_back({parse_index(toks[1], rank), parse_index(toks[2], rank), m});
        } else if (kw == "name") {
            if (toks.size() < 3) throw InputError("usage: name I STRING");
            unsigned idx = parse_index(toks[1], rank);
            std::string nm = toks[2];
            for (size_t i = 3; i < toks.size(); ++i) nm += " " + toks[i];
            names.emplace_back(idx, nm);
        } else if (kw == "matrix") {
            if (sawEdge) throw InputError("'edge' and 'matrix' are mutually exclusive");
            if (sawMatrix) throw InputError("duplicate matrix block");
            sawMatrix = true;
            matrix.reserve(rank);
            std::string row;
            while (matrix.size() < rank && std::getline(in, row)) {
                std::vector<std::string> rtoks = tokenize_line(row);
                if (rtoks.empty()) continue;
                if (rtoks.size() != rank) throw InputError("matrix row has wrong length");
                std::vector<int> r;
                r.reserve(rank);
                for (const std::string& t : rtoks) r.push_back(parse_label_token(t));
                matrix.push_back(std::move(r));
            }
            if (matrix.size() != rank) throw InputError("matrix block truncated");
        } else {
            throw InputError("unknown directive '" + kw + "'");
        }
    }
    if (!haveRank) throw InputError("rank missing");

    CoxeterSystem sys;
    if (sawMatrix) {
        sys = from_matrix(std::move(matrix));
    } else {
        sys = from_edges(rank, edges);
    }
    for (auto& [idx, nm] : names) sys.names_[idx] = nm;
    return sys;
}

CoxeterSystem CoxeterSystem::parse_string(const std::string& text) {
    std::istringstream is(text);
    return parse(is);
}

bool CoxeterSystem::right_angled() const {
    for (unsigned i = 0; i < rank_; ++i)
        for (unsigned j = i + 1; j < rank_; ++j)
            if (label(i, j) != 2 && label(i, j) != kInfinity) return false;
    return true;
}

int CoxeterSystem::max_finite_label() const {
    int best = 0;
    for (unsigned i = 0; i < rank_; ++i)
        for (unsigned j = i + 1; j < rank_; ++j)
            if (label(i, j) != kInfinity && label(i, j) > 2) best = std::max(best, label(i, j));
    return best;
}

CoxeterSystem CoxeterSystem::induced(const std::vector<unsigned>& subset) const {
    if (subset.empty()) throw InputError("induced subsystem needs at least one generator");
    CoxeterSystem sys;
    sys.rank_ = static_cast<unsigned>(subset.size());
    sys.m_.resize(static_cast<size_t>(sys.rank_) * sys.rank_);
    sys.names_.reserve(sys.rank_);
    for (unsigned a = 0; a < sys.rank_; ++a) {
        if (subset[a] >= rank_) throw InputError("induced index out of range");
        sys.names_.push_back(names_[subset[a]]);
        for (unsigned b = 0; b < sys.rank_; ++b)
            sys.m_[a * sys.rank_ + b] = label(subset[a], subset[b]);
    }
    return sys;
}

std::string CoxeterSystem::describe() const {
    std::ostringstream os;
    os << "rank " << rank_ << "\n";
    for (unsigned i = 0; i < rank_; ++i)
        for (unsigned j = i + 1; j < rank_; ++j) {
            int m = label(i, j);
            if (m == 2) continue;
            os << "edge " << i + 1 << " " << j + 1 << " ";
            if (m == kInfinity)
                os << "inf";
            else
                os << m;
            os << "\n";
        }
    return os.str();
}

std::string family_name(const FiniteType& t) {
    switch (t.family) {
        case Family::A: return "A" + std::to_string(t.rank);
        case Family::B: return "B" + std::to_string(t.rank);
        case Family::D: return "D" + std::to_string(t.rank);
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
        case Family::F4: return "F4";
        case Family::H3: return "H3";
        case Family::H4: return "H4";
        case Family::I2: return "I2(" + std::to_string(t.dihedralLabel) + ")";
    }
    return "?";
}

std::vector<unsigned> exponents(const FiniteType& t) {
    std::vector<unsigned> e;
    switch (t.family) {
        case Family::A:
            for (unsigned i = 1; i <= t.rank; ++i) e.push_back(i);
            break;
        case Family::B:
            for (unsigned i = 1; i <= t.rank; ++i) e.push_back(2 * i - 1);
            break;
        case Family::D:
            for (unsigned i = 1; i + 1 <= t.rank; ++i) e.push_back(2 * i - 1);
            e.push_back(t.rank - 1);
            std::sort(e.begin(), e.end());
            break;
        case Family::E6: e = {1, 4, 5, 7, 8, 11}; break;
        case Family::E7: e = {1, 5, 7, 9, 11, 13, 17}; break;
        case Family::E8: e = {1, 7, 11, 13, 17, 19, 23, 29}; break;
        case Family::F4: e = {1, 5, 7, 11}; break;
        case Family::H3: e = {1, 5, 9}; break;
        case Family::H4: e = {1, 11, 19, 29}; break;
        case Family::I2: e = {1, t.dihedralLabel - 1}; break;
    }
    return e;
}

std::vector<unsigned> type_blocks(const std::vector<FiniteType>& types) {
    std::vector<unsigned> blocks;
    for (const FiniteType& t : types)
        for (unsigned m : exponents(t)) blocks.push_back(m + 1);
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

BigInt coxeter_order(const std::vector<FiniteType>& types) {
    BigInt n = 1;
    for (unsigned b : type_blocks(types)) n *= b;
    return n;
}

IntPoly poincare_polynomial(const std::vector<FiniteType>& types) {
    return block_product(type_blocks(types));
}

namespace {

// connected components over edges with label != 2
std::vector<std::vector<unsigned>> components(const CoxeterSystem& sys,
                                              const std::vector<unsigned>& subset) {
    std::vector<std::vector<unsigned>> comps;
    std::vector<bool> used(subset.size(), false);
    for (size_t i = 0; i < subset.size(); ++i) {
        if (used[i]) continue;
        std::vector<unsigned> comp;
        std::vector<size_t> stack{i};
        used[i] = true;
        while (!stack.empty()) {
            size_t a = stack.back();
            stack.pop_back();
            comp.push_back(subset[a]);
            for (size_t b = 0; b < subset.size(); ++b)
                if (!used[b] && sys.label(subset[a], subset[b]) != 2) {
                    used[b] = true;
                    stack.push_back(b);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

// classify one connected component (labels all finite); nullopt = not finite type
std::optional<FiniteType> classify_component(const CoxeterSystem& sys,
                                             const std::vector<unsigned>& comp) {
    unsigned n = static_cast<unsigned>(comp.size());
    if (n == 1) return FiniteType{Family::A, 1};

    // collect the labeled edges within the component
    struct E { unsigned a, b; int m; };
    std::vector<E> edges;
    std::vector<unsigned> deg(n, 0);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = a + 1; b < n; ++b) {
            int m = sys.label(comp[a], comp[b]);
            if (m == 2) continue;
            edges.push_back({a, b, m});
            ++deg[a];
            ++deg[b];
        }

    if (n == 2) {
        int m = edges[0].m;
        if (m == 3) return FiniteType{Family::A, 2};
        if (m == 4) return FiniteType{Family::B, 2};
        return FiniteType{Family::I2, 2, static_cast<unsigned>(m)};
    }

    // a finite component of rank >= 3 is a tree of max degree 3 with at most
    // one branch point, at most one labeled (> 3) edge, and connected budget
    if (edges.size() != n - 1) return std::nullopt;  // cycle (affine or worse)
    unsigned branch = n;  // index of the degree-3 node, if any
    for (unsigned a = 0; a < n; ++a) {
        if (deg[a] > 3) return std::nullopt;
        if (deg[a] == 3) {
            if (branch != n) return std::nullopt;
            branch = a;
        }
    }

    std::vector<std::vector<std::pair<unsigned, int>>> nb(n);
    for (const E& e : edges) {
        nb[e.a].push_back({e.b, e.m});
        nb[e.b].push_back({e.a, e.m});
    }

    if (branch != n) {
        // branching tree: all labels must be 3, and arm lengths decide D/E
        for (const E& e : edges)
            if (e.m != 3) return std::nullopt;
        std::vector<unsigned> arms;
        for (auto [start, m] : nb[branch]) {
            unsigned len = 1, prev = branch, cur = start;
            while (true) {
                unsigned next = n;
                for (auto [v, mm] : nb[cur])
                    if (v != prev) next = v;
                if (next == n) break;
                prev = cur;
                cur = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] != 1) return std::nullopt;
        if (arms[1] == 1) return FiniteType{Family::D, n};  // (1,1,c)
        if (arms[1] != 2) return std::nullopt;
        if (arms[2] == 2) return FiniteType{Family::E6, 6};
        if (arms[2] == 3) return FiniteType{Family::E7, 7};
        if (arms[2] == 4) return FiniteType{Family::E8, 8};
        return std::nullopt;
    }

    // path: read the label sequence from one end
    unsigned end = n;
    for (unsigned a = 0; a < n; ++a)
        if (deg[a] == 1) {
            end = a;
            break;
        }
    if (end == n) return std::nullopt;
    std::vector<int> labels;
    unsigned prev = n, cur = end;
    while (true) {
        unsigned next = n;
        int m = 0;
        for (auto [v, mm] : nb[cur])
            if (v != prev) {
                next = v;
                m = mm;
            }
        if (next == n) break;
        labels.push_back(m);
        prev = cur;
        cur = next;
    }
    // canonical orientation: big labels toward the end
    {
        std::vector<int> relabels(labels.rbegin(), labels.rend());
        if (relabels < labels) labels = relabels;
    }
    unsigned big = 0;
    for (int m : labels)
        if (m > 3) ++big;
    if (big == 0) return FiniteType{Family::A, n};
    if (big > 1) return std::nullopt;

    if (labels.back() == 4) return FiniteType{Family::B, n};
    if (n == 4 && labels == std::vector<int>{3, 4, 3}) return FiniteType{Family::F4, 4};
    if (labels.back() == 5) {
        if (n == 3) return FiniteType{Family::H3, 3};
        if (n == 4) return FiniteType{Family::H4, 4};
    }
    return std::nullopt;
}

} // namespace

std::optional<std::vector<FiniteType>> classify_finite(const CoxeterSystem& system,
                                                       const std::vector<unsigned>& subset) {
    std::vector<FiniteType> out;
    if (subset.empty()) return out;
    for (unsigned i : subset)
        for (unsigned j : subset)
            if (i < j && system.label(i, j) == kInfinity) return std::nullopt;
    for (const std::vector<unsigned>& comp : components(system, subset)) {
        std::optional<FiniteType> t = classify_component(system, comp);
        if (!t) return std::nullopt;
        out.push_back(*t);
    }
    return out;
}

const LatticeEntry* FiniteLattice::find(std::uint32_t mask) const {
    for (const LatticeEntry& e : entries)
        if (e.mask == mask) return &e;
    return nullptr;
}

std::vector<const LatticeEntry*> FiniteLattice::maximal_entries() const {
    std::vector<const LatticeEntry*> out;
    for (const LatticeEntry& e : entries)
        if (e.maximal) out.push_back(&e);
    return out;
}

FiniteLattice enumerate_finite_subsets(const CoxeterSystem& system, unsigned maxRank) {
    if (system.rank() > maxRank)
        throw InputError("rank " + std::to_string(system.rank()) +
                         " exceeds the subset enumeration bound " + std::to_string(maxRank));
    unsigned n = system.rank();
    FiniteLattice lat;
    lat.entries.push_back(LatticeEntry{{}, 0, {}, false});

    // grow finite sets one generator at a time: every finite set's subsets are
    // finite, so each size-k finite set extends some size-(k-1) finite set
    std::vector<std::uint32_t> frontier{0};
    std::vector<std::uint32_t> seen;
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t mask : frontier) {
            unsigned top = 0;
            while ((1u << top) <= mask) ++top;  // extend past the highest set bit
            for (unsigned i = top; i < n; ++i) {
                std::uint32_t cand = mask | (1u << i);
                std::vector<unsigned> subset;
                for (unsigned b = 0; b < n; ++b)
                    if (cand & (1u << b)) subset.push_back(b);
                std::optional<std::vector<FiniteType>> types = classify_finite(system, subset);
                if (!types) continue;
                lat.entries.push_back(LatticeEntry{std::move(subset), cand, std::move(*types), false});
                next.push_back(cand);
            }
        }
        frontier = std::move(next);
    }

    std::sort(lat.entries.begin(), lat.entries.end(),
              [](const LatticeEntry& a, const LatticeEntry& b) {
                  if (a.subset.size() != b.subset.size()) return a.subset.size() < b.subset.size();
                  return a.subset < b.subset;
              });

    // maximality: no other finite entry strictly contains the mask
    for (LatticeEntry& e : lat.entries) {
        e.maximal = true;
        for (const LatticeEntry& f : lat.entries)
            if (f.mask != e.mask && (f.mask & e.mask) == e.mask) {
                e.maximal = false;
                break;
            }
    }
    return lat;
}

} // namespace coxgrowth
