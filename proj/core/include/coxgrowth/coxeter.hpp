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

#ifndef COXGROWTH_COXETER_HPP
#define COXGROWTH_COXETER_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxgrowth/polynomial.hpp"

namespace coxgrowth {

// Coxeter matrix entry for m(s,t) = infinity
inline constexpr int kInfinity = 0;

inline bool label_finite(int m) { return m != kInfinity; }

// Thrown on malformed user input (files, flags); distinct from logic errors
// so the CLI can map it to its own exit code.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown when an exact cross-check fails (inconsistent data, broken identity).
class IntegrityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CoxeterSystem {
public:
    // matrix entries: 1 on the diagonal, m >= 2 or kInfinity off it; symmetric
    static CoxeterSystem from_matrix(std::vector<std::vector<int>> m,
                                     std::vector<std::string> names = {});
    // edge list: pairs not mentioned get m = 2
    struct Edge { unsigned a, b; int m; };
    static CoxeterSystem from_edges(unsigned rank, const std::vector<Edge>& edges,
                                    std::vector<std::string> names = {});

    // line format:  "rank N" first, then "edge I J M" (M >= 3 or inf),
    // "name I STRING", or a "matrix" block of N rows; '#' starts a comment;
    // indices are 1-based
    static CoxeterSystem parse(std::istream& in);
    static CoxeterSystem parse_string(const std::string& text);

    unsigned rank() const { return rank_; }
    int label(unsigned i, unsigned j) const { return m_[i * rank_ + j]; }
    const std::string& name(unsigned i) const { return names_[i]; }

    bool right_angled() const;
    // largest finite label, 0 when all labels are 2 or infinity
    int max_finite_label() const;

    CoxeterSystem induced(const std::vector<unsigned>& subset) const;

    std::string describe() const;

private:
    CoxeterSystem() = default;
    unsigned rank_ = 0;
    std::vector<int> m_;
    std::vector<std::string> names_;
};

enum class Family { A, B, D, E6, E7, E8, F4, H3, H4, I2 };

struct FiniteType {
    Family family;
    unsigned rank;
    unsigned dihedralLabel = 0;  // only for I2(m), m >= 3

    bool operator==(const FiniteType& o) const = default;
};

std::string family_name(const FiniteType& t);

// exponents m_1 <= ... <= m_rank (ascending)
std::vector<unsigned> exponents(const FiniteType& t);
// block sizes m_i + 1
std::vector<unsigned> type_blocks(const std::vector<FiniteType>& types);
// number of elements
BigInt coxeter_order(const std::vector<FiniteType>& types);
// Poincare polynomial prod [m_i + 1]
IntPoly poincare_polynomial(const std::vector<FiniteType>& types);

// Classification of the standard parabolic on `subset`: the list of
// irreducible factors (sorted by component) or nullopt when infinite.
std::optional<std::vector<FiniteType>> classify_finite(
    const CoxeterSystem& system, const std::vector<unsigned>& subset);

struct LatticeEntry {
    std::vector<unsigned> subset;  // ascending indices
    std::uint32_t mask = 0;
    std::vector<FiniteType> types;
    bool maximal = false;
};

// All subsets with finite parabolic, sorted by (size, lexicographic indices).
// Enumeration is pruned: a set is only extended while finite.
struct FiniteLattice {
    std::vector<LatticeEntry> entries;

    const LatticeEntry* find(std::uint32_t mask) const;
    std::vector<const LatticeEntry*> maximal_entries() const;
};

// rank above `maxRank` is rejected to bound the 2^rank enumeration
FiniteLattice enumerate_finite_subsets(const CoxeterSystem& system, unsigned maxRank = 24);

} // namespace coxgrowth

#endif
