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

#ifndef COXGROWTH_WORD_ORACLE_HPP
#define COXGROWTH_WORD_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxgrowth/bigint.hpp"
#include "coxgrowth/coxeter.hpp"

namespace coxgrowth {

// Z[zeta_N]: integer combinations of 1, zeta, ..., zeta^{phi(N)-1} with
// arithmetic modulo the N-th cyclotomic polynomial. Coefficients are signed
// 64-bit with checked arithmetic; overflow raises IntegrityError rather than
// wrapping. The element 2cos(pi/m) = zeta_{2m} + zeta_{2m}^{-1} embeds
// exactly whenever 2m | N.
class CycRing {
public:
    using Elem = std::vector<std::int64_t>;  // length degree(), ascending

    explicit CycRing(unsigned conductor, unsigned degreeBound = 128);

    unsigned conductor() const { return n_; }
    unsigned degree() const { return deg_; }

    Elem zero() const { return Elem(deg_, 0); }
    Elem integer(std::int64_t v) const;
    Elem zeta_pow(long k) const;  // zeta^k, any integer k
    Elem two_cos_pi_over(unsigned m) const;  // requires 2m | N

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    bool is_zero(const Elem& a) const;

private:
    unsigned n_ = 0;
    unsigned deg_ = 0;
    std::vector<std::int64_t> phi_;   // Phi_N, ascending, monic
    std::vector<std::int64_t> xdeg_;  // x^degree reduced mod Phi_N
};

// conductor N = lcm(4, { 2m : m a finite edge label })
unsigned representation_conductor(const CoxeterSystem& system);

// The geometric (Tits) representation with exact cyclotomic entries. The
// doubled bilinear form 2B keeps everything integral: 2B(a_s, a_s) = 2,
// 2B(a_s, a_t) = -2cos(pi/m) for finite m and -2 for m = infinity, and
// sigma_s(a_t) = a_t - 2B(a_s, a_t) a_s. The defining relations
// sigma_s^2 = 1 and (sigma_s sigma_t)^{m(s,t)} = 1 are verified exactly at
// construction time.
class TitsRep {
public:
    using Matrix = std::vector<CycRing::Elem>;  // rank*rank, row-major

    explicit TitsRep(const CoxeterSystem& system, unsigned labelBound = 1000,
                     unsigned degreeBound = 128);

    const CoxeterSystem& system() const { return system_; }
    const CycRing& ring() const { return ring_; }
    unsigned rank() const { return system_.rank(); }

    Matrix identity() const;
    const Matrix& generator(unsigned s) const { return gens_[s]; }

    // sigma_s * M; touches only row s of M
    Matrix left_multiply(unsigned s, const Matrix& m) const;

    // canonical byte encoding; equal strings iff equal matrices
    std::string serialize(const Matrix& m) const;

private:
    CoxeterSystem system_;
    CycRing ring_;
    std::vector<std::vector<CycRing::Elem>> twoB_;  // doubled bilinear form
    std::vector<Matrix> gens_;

    void verify_relations() const;
};

struct BfsResult {
    std::vector<unsigned long long> counts;  // a_0 .. a_completedDepth
    bool truncated = false;                  // element cap hit
    unsigned completedDepth = 0;
    unsigned long long totalElements = 0;
};

// Breadth-first enumeration of group elements by word length; exact matrix
// dedup. Counts stop early (truncated = true) when the element cap would be
// exceeded, reporting the last fully expanded depth.
BfsResult bfs_counts(const CoxeterSystem& system, unsigned maxLength,
                     std::size_t maxElements = 4'000'000);

struct OracleVerdict {
    BfsResult bfs;
    std::vector<BigInt> taylor;
    std::vector<bool> match;  // per index, up to the comparable horizon
    bool allMatch = false;    // every comparable index matched (see bfs.truncated)
    std::optional<unsigned> firstMismatch;
};

// BFS word counts against the Taylor coefficients of the growth series;
// exact equality per index.
OracleVerdict oracle_compare(const CoxeterSystem& system, unsigned maxLength,
                             std::size_t maxElements = 4'000'000);

} // namespace coxgrowth

#endif
