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

#include "coxgrowth/catalog.hpp"

#include <array>
#include <sstream>

namespace coxgrowth {

namespace {

CoxeterSystem linear_diagram(const std::vector<int>& labels) {
    const unsigned rank = static_cast<unsigned>(labels.size()) + 1;
    std::vector<CoxeterSystem::Edge> edges;
    for (unsigned i = 0; i < labels.size(); ++i)
        edges.push_back({i, i + 1, labels[i]});
    return CoxeterSystem::from_edges(rank, edges);
}

CoxeterSystem triangle_group(int p, int q, int r) {
    return CoxeterSystem::from_edges(3, {{0, 1, p}, {1, 2, q}, {0, 2, r}});
}

} // namespace

CoxeterSystem make_prism(unsigned p, unsigned q, unsigned r) {
    if (p < 3 || q < 3 || r < 3)
        throw InputError("prism labels must satisfy p, q, r >= 3");
    // 1/p + 1/q > 1/2  and  1/q + 1/r < 1/2, exactly
    if (2 * (p + q) <= p * q)
        throw InputError("prism requires 1/p + 1/q > 1/2 (compact base)");
    if (2 * (q + r) >= q * r)
        throw InputError("prism requires 1/q + 1/r < 1/2 (hyperbolic apex)");
    return CoxeterSystem::from_edges(
        5, {{0, 1, kInfinity}, {1, 2, static_cast<int>(p)},
            {2, 3, static_cast<int>(q)}, {3, 4, static_cast<int>(r)}});
}

CoxeterSystem make_right_angled_polygon(unsigned sides) {
    if (sides < 5)
        throw InputError("a compact right-angled hyperbolic polygon needs >= 5 sides");
    std::vector<std::vector<int>> m(sides, std::vector<int>(sides, kInfinity));
    for (unsigned i = 0; i < sides; ++i) {
        m[i][i] = 1;
        const unsigned j = (i + 1) % sides;
        m[i][j] = m[j][i] = 2;
    }
    return CoxeterSystem::from_matrix(std::move(m));
}

CoxeterSystem make_right_angled_dodecahedron() {
    // Dodecahedron faces correspond to icosahedron vertices; two faces are
    // adjacent exactly when the vertices (0, ±1, ±phi) and cyclic shifts are
    // at squared distance 4. Coordinates live in Z[phi]: value = a + b·phi,
    // phi² = phi + 1.
    struct Surd { int a, b; };
    struct Vertex { std::array<Surd, 3> c; };
    std::vector<Vertex> vertices;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            const Surd zero{0, 0}, one{s1, 0}, phi{0, s2};
            vertices.push_back({{zero, one, phi}});
            vertices.push_back({{one, phi, zero}});
            vertices.push_back({{phi, zero, one}});
        }
    if (vertices.size() != 12)
        throw IntegrityError("dodecahedron: expected 12 faces");

    auto adjacent = [](const Vertex& u, const Vertex& v) {
        // squared distance, rational and phi parts separately
        long long ra = 0, rb = 0;
        for (int k = 0; k < 3; ++k) {
            const long long da = u.c[k].a - v.c[k].a;
            const long long db = u.c[k].b - v.c[k].b;
            ra += da * da + db * db;       // (da + db·phi)²
            rb += 2 * da * db + db * db;   // using phi² = phi + 1
        }
        return ra == 4 && rb == 0;
    };

    const unsigned n = 12;
    std::vector<std::vector<int>> m(n, std::vector<int>(n, kInfinity));
    unsigned edges = 0;
    for (unsigned i = 0; i < n; ++i) {
        m[i][i] = 1;
        unsigned degree = 0;
        for (unsigned j = 0; j < n; ++j) {
            if (i == j) continue;
            if (adjacent(vertices[i], vertices[j])) {
                m[i][j] = 2;
                ++degree;
                if (j > i) ++edges;
            }
        }
        if (degree != 5)
            throw IntegrityError("dodecahedron: every face must have 5 neighbours");
    }
    if (edges != 30)
        throw IntegrityError("dodecahedron: expected 30 adjacent face pairs");
    return CoxeterSystem::from_matrix(std::move(m));
}

namespace {

std::vector<CatalogEntry> build_entries() {
    std::vector<CatalogEntry> out;

    {
        CatalogEntry e;
        e.key = "lanner-5334";
        e.note = "linear diagram 5,3,3,4; compact 4-dimensional simplex group; "
                 "growth data cross-checked against an independent computer "
                 "algebra computation";
        e.dimension = 4;
        e.verified = true;
        e.system = linear_diagram({5, 3, 3, 4});
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.key = "lanner-5333";
        e.note = "linear diagram 5,3,3,3; compact 4-dimensional simplex group; "
                 "growth data cross-checked against an independent computer "
                 "algebra computation";
        e.dimension = 4;
        e.verified = true;
        e.system = linear_diagram({5, 3, 3, 3});
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.key = "ra-hexagon";
        e.note = "right-angled hyperbolic hexagon reflection group";
        e.dimension = 2;
        e.verified = true;
        e.system = make_right_angled_polygon(6);
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.key = "ra-dodecahedron";
        e.note = "right-angled dodecahedron reflection group; face adjacency "
                 "derived from exact golden-ratio coordinates";
        e.dimension = 3;
        e.verified = true;
        e.system = make_right_angled_dodecahedron();
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.key = "ra-120cell-fvector";
        e.note = "face vector (600, 1200, 720, 120) of the right-angled "
                 "120-cell; drives the quartic closed form";
        e.dimension = 4;
        e.verified = true;
        e.fvector = FVector{4, {600, 1200, 720, 120}};
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.key = "triangle-2-3-7";
        e.note = "hyperbolic triangle group (2,3,7); smallest cocompact "
                 "planar reflection group";
        e.dimension = 2;
        e.verified = true;
        e.system = triangle_group(2, 3, 7);
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.key = "finite-h4";
        e.note = "finite group H4 (linear diagram 5,3,3); 14400 elements; "
                 "polynomial growth series";
        e.verified = true;
        e.system = linear_diagram({5, 3, 3});
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.key = "lehmer-fixture";
        e.note = "degree-10 denominator fixture whose non-cyclotomic part is "
                 "Lehmer's polynomial; exercises the Salem layout test";
        e.verified = true;
        e.denominatorFixture =
            IntPoly({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.key = "kaplinskaya-66";
        e.note = "unverified transcription of a published drawing: 6-generator "
                 "group over a 4-simplex with one ideal-free truncation; "
                 "excluded from verification suites";
        e.dimension = 4;
        e.verified = false;
        e.system = CoxeterSystem::from_edges(
            6, {{0, 1, 3}, {1, 2, 3}, {2, 3, 3}, {3, 0, 3},
                {0, 4, 3}, {4, 5, 5}, {5, 2, 3}, {1, 3, kInfinity}});
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.key = "tumarkin-6d";
        e.note = "unverified transcription of a published drawing: 9-facet "
                 "6-dimensional group; excluded from verification suites";
        e.dimension = 6;
        e.verified = false;
        e.system = CoxeterSystem::from_edges(
            9, {{0, 2, 5}, {2, 1, 3}, {1, 3, 3}, {3, 8, 3},
                {4, 7, 3}, {7, 5, 3}, {5, 6, 3}, {6, 3, 3},
                {5, 4, 5}, {4, 6, 3}, {8, 7, kInfinity}});
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_entries();
    return entries;
}

std::vector<std::string> catalog_keys() {
    std::vector<std::string> keys;
    for (const auto& e : catalog_entries()) keys.push_back(e.key);
    keys.push_back("prism-P-Q-R");
    return keys;
}

std::optional<CatalogEntry> catalog_find(const std::string& key) {
    for (const auto& e : catalog_entries())
        if (e.key == key) return e;

    if (key.rfind("prism-", 0) == 0) {
        std::istringstream in(key.substr(6));
        unsigned p = 0, q = 0, r = 0;
        char d1 = 0, d2 = 0;
        if (in >> p >> d1 >> q >> d2 >> r && d1 == '-' && d2 == '-' &&
            in.peek() == std::char_traits<char>::eof()) {
            CatalogEntry e;
            e.key = key;
            std::ostringstream note;
            note << "compact prism over a (" << p << "," << q
                 << ")-gon base with apex label " << r;
            e.note = note.str();
            e.dimension = 3;
            e.verified = true;
            e.system = make_prism(p, q, r);  // throws InputError when invalid
            return e;
        }
    }
    return std::nullopt;
}

} // namespace coxgrowth
