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

#include "coxgrowth/rational_function.hpp"

#include <stdexcept>

namespace coxgrowth {

RatFunc::RatFunc(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = IntPoly::one();
        return;
    }
    IntPoly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = *num_.exact_quotient(g);
        den_ = *den_.exact_quotient(g);
    }
    BigInt c = big_gcd(num_.content(), den_.content());
    if (c > 1) {
        num_ = *num_.exact_quotient(IntPoly(c));
        den_ = *den_.exact_quotient(IntPoly(c));
    }
    const BigInt& d0 = den_.constant();
    bool flip = d0 != 0 ? d0 < 0 : den_.leading() < 0;
    if (flip) {
        num_ = -num_;
        den_ = -den_;
    }
}

IntPoly RatFunc::as_polynomial() const {
    if (!is_polynomial()) throw std::logic_error("RatFunc: not a polynomial");
    auto q = num_.exact_quotient(den_);
    if (!q) throw std::logic_error("RatFunc: constant denominator does not divide numerator");
    return *q;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::invalid_argument("RatFunc: division by zero");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc RatFunc::reciprocal_substitution() const {
    // num(1/x)/den(1/x) = x^{deg den - deg num} rev(num)/rev(den)
    long dn = num_.degree();
    long dd = den_.degree();
    IntPoly rn = num_.reversed();
    IntPoly rd = den_.reversed();
    if (dd >= dn) {
        return RatFunc(rn.shifted(static_cast<unsigned>(dd - dn)), rd);
    }
    return RatFunc(rn, rd.shifted(static_cast<unsigned>(dn - dd)));
}

std::optional<BigRat> RatFunc::eval(const BigRat& v) const {
    BigRat d = den_.eval(v);
    if (d == 0) return std::nullopt;
    return num_.eval(v) / d;
}

} // namespace coxgrowth
