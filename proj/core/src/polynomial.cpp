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

#include "coxgrowth/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coxgrowth {

namespace {
const BigInt kZero = 0;
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::monomial(const BigInt& c, unsigned k) {
    if (c == 0) return IntPoly();
    std::vector<BigInt> v(k + 1, BigInt(0));
    v[k] = c;
    return IntPoly(std::move(v));
}

const BigInt& IntPoly::coeff(std::size_t k) const {
    if (k >= c_.size()) return kZero;
    return c_[k];
}

const BigInt& IntPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> v(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
    return IntPoly(std::move(v));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<BigInt> v(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            v[i + j] += c_[i] * o.c_[j];
        }
    }
    return IntPoly(std::move(v));
}

IntPoly IntPoly::scaled(const BigInt& k) const {
    if (k == 0) return IntPoly();
    IntPoly r = *this;
    for (auto& v : r.c_) v *= k;
    return r;
}

IntPoly IntPoly::shifted(unsigned k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> v(c_.size() + k, BigInt(0));
    std::copy(c_.begin(), c_.end(), v.begin() + k);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly r = IntPoly::one();
    IntPoly base = *this;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

BigInt IntPoly::eval(const BigInt& v) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

BigRat IntPoly::eval(const BigRat& v) const {
    BigRat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + BigRat(*it);
    return acc;
}

double IntPoly::eval(double v) const {
    double acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * v + it->convert_to<double>();
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<BigInt> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * BigInt(i);
    return IntPoly(std::move(v));
}

IntPoly IntPoly::reversed() const {
    std::vector<BigInt> v(c_.rbegin(), c_.rend());
    return IntPoly(std::move(v));
}

bool IntPoly::palindromic() const {
    if (is_zero()) return true;
    return *this == reversed();
}

bool IntPoly::antipalindromic() const {
    if (is_zero()) return true;
    return *this == -reversed();
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const auto& v : c_) {
        g = big_gcd(g, v);
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    BigInt g = content();
    IntPoly r = *this;
    for (auto& v : r.c_) v /= g;
    return r;
}

IntPoly::DivMod IntPoly::pseudo_divmod(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("pseudo_divmod by zero");
    long dd = divisor.degree();
    IntPoly rem = *this;
    IntPoly quot;
    if (rem.degree() < dd) return {quot, rem};
    const BigInt& lc = divisor.leading();
    long steps = rem.degree() - dd + 1;
    // multiply the dividend once by lc^steps, then divide exactly step by step
    IntPoly scaledRem = rem.scaled([&] {
        BigInt f = 1;
        for (long i = 0; i < steps; ++i) f *= lc;
        return f;
    }());
    rem = scaledRem;
    std::vector<BigInt> q(static_cast<std::size_t>(steps), BigInt(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
        long k = rem.degree() - dd;
        BigInt coef = exact_div(rem.leading(), lc);
        q[static_cast<std::size_t>(k)] = coef;
        rem -= divisor.scaled(coef).shifted(static_cast<unsigned>(k));
    }
    return {IntPoly(std::move(q)), rem};
}

std::optional<IntPoly> IntPoly::exact_quotient(const IntPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("exact_quotient by zero");
    if (is_zero()) return IntPoly();
    if (degree() < divisor.degree()) return std::nullopt;
    long dd = divisor.degree();
    const BigInt& lc = divisor.leading();
    IntPoly rem = *this;
    std::vector<BigInt> q(static_cast<std::size_t>(degree() - dd + 1), BigInt(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
        BigInt coef = rem.leading() / lc;
        if (coef * lc != rem.leading()) return std::nullopt;
        long k = rem.degree() - dd;
        q[static_cast<std::size_t>(k)] = coef;
        rem -= divisor.scaled(coef).shifted(static_cast<unsigned>(k));
    }
    if (!rem.is_zero()) return std::nullopt;
    return IntPoly(std::move(q));
}

std::string IntPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const BigInt& v = c_[i];
        if (v == 0) continue;
        BigInt a = v < 0 ? BigInt(-v) : v;
        if (first) {
            if (v < 0) out << "-";
            first = false;
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        if (i == 0) {
            out << a.str();
        } else {
            if (a != 1) out << a.str() << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly f = a.is_zero() ? IntPoly() : a.primitive_part();
    IntPoly g = b.is_zero() ? IntPoly() : b.primitive_part();
    if (f.is_zero()) return g.is_zero() || g.leading() > 0 ? g : -g;
    if (g.is_zero()) return f.leading() > 0 ? f : -f;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPoly r = f.pseudo_divmod(g).rem;
        f = g;
        g = r.is_zero() ? IntPoly() : r.primitive_part();
    }
    return f.leading() > 0 ? f : -f;
}

std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
    std::vector<IntPoly> out;
    if (p.is_zero() || p.degree() == 0) return out;
    IntPoly f = p.primitive_part();
    if (f.leading() < 0) f = -f;
    // Yun's algorithm with exact integer quotients (gcds are primitive)
    IntPoly g = gcd(f, f.derivative());
    IntPoly c = *f.exact_quotient(g);
    IntPoly d = *f.derivative().exact_quotient(g) - c.derivative();
    while (c.degree() > 0) {
        IntPoly u = gcd(c, d);
        out.push_back(u);
        c = *c.exact_quotient(u);
        d = *d.exact_quotient(u) - c.derivative();
    }
    return out;
}

IntPoly squarefree_part(const IntPoly& p) {
    IntPoly r = IntPoly::one();
    for (const auto& u : squarefree_decomposition(p)) r *= u;
    return r;
}

} // namespace coxgrowth
