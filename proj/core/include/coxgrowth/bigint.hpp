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

#ifndef COXGROWTH_BIGINT_HPP
#define COXGROWTH_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace coxgrowth {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    return boost::multiprecision::gcd(a, b);
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

// C(n, k); zero when k < 0 or k > n
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    BigInt num = 1, den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= BigInt(n - i);
        den *= BigInt(i + 1);
    }
    BigInt q = num / den;
    if (q * den != num) throw std::logic_error("binomial: non-integral");
    return q;
}

inline int sign_of(const BigInt& v) {
    return v.sign();
}

inline int sign_of(const BigRat& v) {
    return v.sign();
}

// Exact integer quotient; throws when the division has a remainder.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw std::invalid_argument("exact_div by zero");
    BigInt q = a / b;
    if (q * b != a) throw std::logic_error("exact_div: remainder " + BigInt(a - q * b).str());
    return q;
}

} // namespace coxgrowth

#endif
