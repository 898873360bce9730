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

#ifndef COXGROWTH_RATIONAL_FUNCTION_HPP
#define COXGROWTH_RATIONAL_FUNCTION_HPP

#include <optional>

#include "coxgrowth/polynomial.hpp"

namespace coxgrowth {

// Quotient of integer polynomials, kept reduced: num/den coprime, the pair
// content-free, and den sign-normalized (den(0) > 0 when den(0) != 0, else
// positive leading coefficient).
class RatFunc {
public:
    RatFunc() : num_(IntPoly::zero()), den_(IntPoly::one()) {}
    RatFunc(IntPoly num, IntPoly den);
    explicit RatFunc(IntPoly num) : num_(std::move(num)), den_(IntPoly::one()) {}
    static RatFunc one() { return RatFunc(IntPoly::one()); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }
    // the polynomial value when den is a constant; requires divisibility by
    // that constant
    IntPoly as_polynomial() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

    // f(1/x) as a rational function in x (exact)
    RatFunc reciprocal_substitution() const;

    // nullopt at a pole
    std::optional<BigRat> eval(const BigRat& v) const;

private:
    void normalize();
    IntPoly num_, den_;
};

} // namespace coxgrowth

#endif
