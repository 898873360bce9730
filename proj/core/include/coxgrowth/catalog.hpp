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

#ifndef COXGROWTH_CATALOG_HPP
#define COXGROWTH_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "coxgrowth/coxeter.hpp"
#include "coxgrowth/right_angled.hpp"

namespace coxgrowth {

// A named example the tools and tests can refer to. Exactly one of
// `system`, `fvector`, `denominatorFixture` drives each entry. Entries
// marked verified are backed by independent cross-checks in the test
// suite; unverified entries were transcribed from published drawings and
// are provided for exploration only.
struct CatalogEntry {
    std::string key;
    std::string note;
    std::optional<unsigned> dimension;  // ambient hyperbolic dimension
    bool verified = false;
    std::optional<CoxeterSystem> system;
    std::optional<FVector> fvector;
    std::optional<IntPoly> denominatorFixture;
};

// Static entries in deterministic order.
const std::vector<CatalogEntry>& catalog_entries();

// Lookup by key; also resolves dynamic keys "prism-P-Q-R".
std::optional<CatalogEntry> catalog_find(const std::string& key);

std::vector<std::string> catalog_keys();

// Compact prism over a (p,q)-gon base: linear diagram with labels
// [inf, p, q, r]; requires p,q,r >= 3, 1/p + 1/q > 1/2 and 1/q + 1/r < 1/2.
CoxeterSystem make_prism(unsigned p, unsigned q, unsigned r);

// Reflection group of a right-angled hyperbolic k-gon (k >= 5): consecutive
// sides commute, all other pairs generate infinite dihedrals.
CoxeterSystem make_right_angled_polygon(unsigned sides);

// Reflection group of the right-angled dodecahedron: one generator per
// face, commuting exactly for adjacent faces. Adjacency is derived from
// exact golden-ratio coordinates of the dual icosahedron and integrity
// checked (12 faces, 30 adjacent pairs, face-degree 5).
CoxeterSystem make_right_angled_dodecahedron();

} // namespace coxgrowth

#endif
