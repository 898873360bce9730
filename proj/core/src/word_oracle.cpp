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

#include "coxgrowth/word_oracle.hpp"

#include <cstring>
#include <limits>
#include <numeric>
#include <unordered_set>

#include "coxgrowth/cyclotomic.hpp"
#include "coxgrowth/growth.hpp"

namespace coxgrowth {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw IntegrityError("cyclotomic ring coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw IntegrityError("cyclotomic ring coefficient overflow");
    return r;
}

std::int64_t to_int64(const BigInt& v) {
    static const BigInt lo = BigInt(std::numeric_limits<std::int64_t>::min());
    static const BigInt hi = BigInt(std::numeric_limits<std::int64_t>::max());
    if (v < lo || v > hi)
        throw IntegrityError("cyclotomic polynomial coefficient exceeds 64 bits");
    return v.convert_to<std::int64_t>();
}

} // namespace

CycRing::CycRing(unsigned conductor, unsigned degreeBound) : n_(conductor) {
    if (n_ == 0) throw InputError("conductor must be positive");
    deg_ = euler_phi(n_);
    if (deg_ > degreeBound)
        throw InputError("conductor too large: phi(" + std::to_string(n_) +
                         ") = " + std::to_string(deg_) + " exceeds the bound " +
                         std::to_string(degreeBound));
    const IntPoly& phi = cyclotomic(n_);
    phi_.resize(deg_ + 1);
    for (unsigned i = 0; i <= deg_; ++i) phi_[i] = to_int64(phi.coeff(i));

    // x^deg mod Phi_N; higher powers reduce through it iteratively
    xdeg_.assign(deg_, 0);
    for (unsigned i = 0; i < deg_; ++i) xdeg_[i] = -phi_[i];
}

CycRing::Elem CycRing::integer(std::int64_t v) const {
    Elem e(deg_, 0);
    e[0] = v;
    return e;
}

CycRing::Elem CycRing::zeta_pow(long k) const {
    long r = k % static_cast<long>(n_);
    if (r < 0) r += n_;
    Elem e(deg_, 0);
    if (static_cast<unsigned>(r) < deg_) {
        e[static_cast<unsigned>(r)] = 1;
        return e;
    }
    // shift-and-reduce from x^{deg-1}
    e[deg_ - 1] = 1;
    for (long step = deg_ - 1; step < r; ++step) {
        const std::int64_t top = e[deg_ - 1];
        for (unsigned i = deg_ - 1; i >= 1; --i) e[i] = e[i - 1];
        e[0] = 0;
        if (top != 0)
            for (unsigned i = 0; i < deg_; ++i)
                e[i] = checked_add(e[i], checked_mul(top, xdeg_[i]));
    }
    return e;
}

CycRing::Elem CycRing::two_cos_pi_over(unsigned m) const {
    if (m == 0 || n_ % (2 * m) != 0)
        throw InputError("2m must divide the conductor");
    const long e = static_cast<long>(n_ / (2 * m));
    return add(zeta_pow(e), zeta_pow(-e));
}

CycRing::Elem CycRing::add(const Elem& a, const Elem& b) const {
    Elem r(deg_);
    for (unsigned i = 0; i < deg_; ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

CycRing::Elem CycRing::sub(const Elem& a, const Elem& b) const {
    Elem r(deg_);
    for (unsigned i = 0; i < deg_; ++i) r[i] = checked_add(a[i], checked_mul(b[i], -1));
    return r;
}

CycRing::Elem CycRing::neg(const Elem& a) const {
    Elem r(deg_);
    for (unsigned i = 0; i < deg_; ++i) r[i] = checked_mul(a[i], -1);
    return r;
}

CycRing::Elem CycRing::mul(const Elem& a, const Elem& b) const {
    std::vector<std::int64_t> conv(2 * deg_ - 1, 0);
    for (unsigned i = 0; i < deg_; ++i) {
        if (a[i] == 0) continue;
        for (unsigned j = 0; j < deg_; ++j) {
            if (b[j] == 0) continue;
            conv[i + j] = checked_add(conv[i + j], checked_mul(a[i], b[j]));
        }
    }
    for (long t = 2 * static_cast<long>(deg_) - 2; t >= static_cast<long>(deg_); --t) {
        const std::int64_t c = conv[static_cast<std::size_t>(t)];
        if (c == 0) continue;
        conv[static_cast<std::size_t>(t)] = 0;
        const std::size_t base = static_cast<std::size_t>(t) - deg_;
        for (unsigned i = 0; i < deg_; ++i)
            conv[base + i] = checked_add(conv[base + i], checked_mul(c, xdeg_[i]));
    }
    conv.resize(deg_);
    return conv;
}

bool CycRing::is_zero(const Elem& a) const {
    for (auto v : a)
        if (v != 0) return false;
    return true;
}

unsigned representation_conductor(const CoxeterSystem& system) {
    unsigned long long n = 4;
    for (unsigned i = 0; i < system.rank(); ++i) {
        for (unsigned j = i + 1; j < system.rank(); ++j) {
            const int m = system.label(i, j);
            if (m == kInfinity) continue;
            n = std::lcm(n, 2ull * static_cast<unsigned>(m));
            if (n > 1u << 20) throw InputError("representation conductor too large");
        }
    }
    return static_cast<unsigned>(n);
}

TitsRep::TitsRep(const CoxeterSystem& system, unsigned labelBound, unsigned degreeBound)
    : system_(system),
      ring_([&] {
          for (unsigned i = 0; i < system.rank(); ++i)
              for (unsigned j = i + 1; j < system.rank(); ++j) {
                  const int m = system.label(i, j);
                  if (m != kInfinity && static_cast<unsigned>(m) > labelBound)
                      throw InputError("edge label exceeds the representation bound");
              }
          return CycRing(representation_conductor(system), degreeBound);
      }()) {
    const unsigned r = rank();
    twoB_.assign(r, std::vector<CycRing::Elem>(r, ring_.zero()));
    for (unsigned i = 0; i < r; ++i) {
        for (unsigned j = 0; j < r; ++j) {
            if (i == j) {
                twoB_[i][j] = ring_.integer(2);
            } else {
                const int m = system_.label(i, j);
                twoB_[i][j] = (m == kInfinity)
                                  ? ring_.integer(-2)
                                  : ring_.neg(ring_.two_cos_pi_over(static_cast<unsigned>(m)));
            }
        }
    }
    gens_.reserve(r);
    for (unsigned s = 0; s < r; ++s) gens_.push_back(left_multiply(s, identity()));
    verify_relations();
}

TitsRep::Matrix TitsRep::identity() const {
    const unsigned r = rank();
    Matrix m(static_cast<std::size_t>(r) * r, ring_.zero());
    for (unsigned i = 0; i < r; ++i) m[static_cast<std::size_t>(i) * r + i] = ring_.integer(1);
    return m;
}

TitsRep::Matrix TitsRep::left_multiply(unsigned s, const Matrix& m) const {
    const unsigned r = rank();
    Matrix out = m;
    for (unsigned c = 0; c < r; ++c) {
        CycRing::Elem acc = m[static_cast<std::size_t>(s) * r + c];
        for (unsigned j = 0; j < r; ++j) {
            const auto& w = twoB_[s][j];
            if (ring_.is_zero(w)) continue;
            acc = ring_.sub(acc, ring_.mul(w, m[static_cast<std::size_t>(j) * r + c]));
        }
        out[static_cast<std::size_t>(s) * r + c] = std::move(acc);
    }
    return out;
}

std::string TitsRep::serialize(const Matrix& m) const {
    std::string bytes;
    bytes.resize(m.size() * ring_.degree() * sizeof(std::int64_t));
    char* p = bytes.data();
    for (const auto& e : m) {
        std::memcpy(p, e.data(), e.size() * sizeof(std::int64_t));
        p += e.size() * sizeof(std::int64_t);
    }
    return bytes;
}

void TitsRep::verify_relations() const {
    const unsigned r = rank();
    const Matrix id = identity();
    const std::string idKey = serialize(id);
    for (unsigned s = 0; s < r; ++s) {
        if (serialize(left_multiply(s, gens_[s])) != idKey)
            throw IntegrityError("generator is not an involution in the representation");
    }
    for (unsigned s = 0; s < r; ++s) {
        for (unsigned t = s + 1; t < r; ++t) {
            const int m = system_.label(s, t);
            if (m == kInfinity) continue;
            Matrix acc = id;
            for (int k = 0; k < m; ++k) acc = left_multiply(s, left_multiply(t, acc));
            if (serialize(acc) != idKey)
                throw IntegrityError("braid relation fails in the representation");
            if (m == 5) {
                // 2cos(pi/5) is the golden ratio: check x^2 = x + 1 exactly
                const auto c = ring_.two_cos_pi_over(5);
                if (!ring_.is_zero(ring_.sub(ring_.mul(c, c),
                                             ring_.add(c, ring_.integer(1)))))
                    throw IntegrityError("golden ratio fails its minimal polynomial");
            }
        }
    }
}

BfsResult bfs_counts(const CoxeterSystem& system, unsigned maxLength,
                     std::size_t maxElements) {
    const TitsRep rep(system);
    BfsResult res;

    std::unordered_set<std::string> seen;
    std::vector<TitsRep::Matrix> frontier;
    frontier.push_back(rep.identity());
    seen.insert(rep.serialize(frontier.front()));
    res.counts.push_back(1);
    res.totalElements = 1;
    res.completedDepth = 0;

    for (unsigned depth = 1; depth <= maxLength && !frontier.empty(); ++depth) {
        std::vector<TitsRep::Matrix> next;
        for (const auto& m : frontier) {
            for (unsigned s = 0; s < rep.rank(); ++s) {
                TitsRep::Matrix cand = rep.left_multiply(s, m);
                std::string key = rep.serialize(cand);
                if (seen.insert(std::move(key)).second) {
                    next.push_back(std::move(cand));
                    if (seen.size() > maxElements) {
                        res.truncated = true;
                        return res;
                    }
                }
            }
        }
        if (next.empty()) break;  // finite group fully enumerated
        res.counts.push_back(next.size());
        res.totalElements += next.size();
        res.completedDepth = depth;
        frontier = std::move(next);
    }
    return res;
}

OracleVerdict oracle_compare(const CoxeterSystem& system, unsigned maxLength,
                             std::size_t maxElements) {
    OracleVerdict v;
    v.bfs = bfs_counts(system, maxLength, maxElements);
    const BfsResult& bfs = v.bfs;

    const GrowthSeries series = analyze_growth(system);
    v.taylor = taylor_coefficients(series, maxLength);

    // beyond the BFS horizon of a fully enumerated finite group every count
    // is zero; a truncated run is only comparable up to its completed depth
    const unsigned horizon = bfs.truncated ? bfs.completedDepth : maxLength;
    v.allMatch = true;
    for (unsigned k = 0; k <= horizon; ++k) {
        const unsigned long long fromBfs = k < bfs.counts.size() ? bfs.counts[k] : 0;
        const bool ok = BigInt(fromBfs) == v.taylor[k];
        v.match.push_back(ok);
        if (!ok) {
            v.allMatch = false;
            if (!v.firstMismatch) v.firstMismatch = k;
        }
    }
    return v;
}

} // namespace coxgrowth
