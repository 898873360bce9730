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

#ifndef COXGROWTH_POLYNOMIAL_HPP
#define COXGROWTH_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "coxgrowth/bigint.hpp"

namespace coxgrowth {

// Univariate polynomial over Z, dense, coefficients ascending by degree.
// The zero polynomial has an empty coefficient vector and degree() == -1.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<BigInt> ascending) : c_(ascending) { trim(); }
    explicit IntPoly(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }
    explicit IntPoly(const BigInt& constant) { if (constant != 0) c_ = {constant}; }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly(BigInt(1)); }
    static IntPoly x() { return IntPoly{BigInt(0), BigInt(1)}; }
    // c * x^k
    static IntPoly monomial(const BigInt& c, unsigned k);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return c_; }
    // coefficient of x^k, zero beyond the degree
    const BigInt& coeff(std::size_t k) const;
    const BigInt& leading() const;
    const BigInt& constant() const { return coeff(0); }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly& operator+=(const IntPoly& o) { return *this = *this + o; }
    IntPoly& operator-=(const IntPoly& o) { return *this = *this - o; }
    IntPoly& operator*=(const IntPoly& o) { return *this = *this * o; }
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly scaled(const BigInt& k) const;         // k * p
    IntPoly shifted(unsigned k) const;             // x^k * p
    IntPoly pow(unsigned e) const;

    BigInt eval(const BigInt& v) const;
    BigRat eval(const BigRat& v) const;
    double eval(double v) const;

    IntPoly derivative() const;
    // x^degree * p(1/x); for the zero polynomial returns zero
    IntPoly reversed() const;
    bool palindromic() const;
    bool antipalindromic() const;

    // content (gcd of coefficients, >= 0) and primitive part;
    // primitive_part keeps the sign of the leading coefficient
    BigInt content() const;
    IntPoly primitive_part() const;

    // Pseudo-division: lc(divisor)^(deg p - deg divisor + 1) * p
    // = quot * divisor + rem over Z, with deg rem < deg divisor.
    struct DivMod;
    DivMod pseudo_divmod(const IntPoly& divisor) const;

    // Exact quotient p / divisor; nullopt when divisor does not divide p over Z.
    std::optional<IntPoly> exact_quotient(const IntPoly& divisor) const;
    bool divisible_by(const IntPoly& divisor) const { return exact_quotient(divisor).has_value(); }

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<BigInt> c_;
};

struct IntPoly::DivMod {
    IntPoly quot, rem;
};

IntPoly gcd(const IntPoly& a, const IntPoly& b);  // primitive, positive leading coeff

// Yun decomposition: p = content * prod u_i^i with u_i squarefree, pairwise
// coprime, positive leading coefficients. Index 1-based via position in vector.
std::vector<IntPoly> squarefree_decomposition(const IntPoly& p);
IntPoly squarefree_part(const IntPoly& p);

} // namespace coxgrowth

#endif
