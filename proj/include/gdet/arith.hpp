/*
   Copyright 2026 The gdet authors

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

#ifndef GDET_ARITH_HPP
#define GDET_ARITH_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gdet {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

inline BigInt big_gcd(BigInt a, BigInt b) {
    a = big_abs(a);
    b = big_abs(b);
    while (b != 0) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// p-adic valuation v_p(v) for v != 0, p >= 2.
inline unsigned valuation(BigInt v, const BigInt& p) {
    if (v == 0) throw std::domain_error("valuation of zero");
    v = big_abs(v);
    unsigned k = 0;
    while (v % p == 0) {
        v /= p;
        ++k;
    }
    return k;
}

inline bool is_even(const BigInt& v) { return (v & 1) == 0; }

/// Euler phi for machine-size arguments.
inline std::uint64_t euler_phi_u64(std::uint64_t m) {
    std::uint64_t r = m;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            r -= r / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) r -= r / m;
    return r;
}

/// All divisors of m, ascending.
inline std::vector<std::uint64_t> divisors_u64(std::uint64_t m) {
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d != m / d) large.push_back(m / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

/// Prime factorization of a machine-size integer by trial division.
inline std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t m) {
    std::vector<std::pair<std::uint64_t, unsigned>> f;
    for (std::uint64_t p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            unsigned a = 0;
            while (m % p == 0) {
                m /= p;
                ++a;
            }
            f.emplace_back(p, a);
        }
    }
    if (m > 1) f.emplace_back(m, 1);
    return f;
}

/// m = p^a for prime p? Returns p, else 0.
inline std::uint64_t prime_power_base_u64(std::uint64_t m) {
    if (m < 2) return 0;
    auto f = factor_u64(m);
    return f.size() == 1 ? f[0].first : 0;
}

/// Miller-Rabin with a fixed witness set; deterministic below 3.3e24.
inline bool is_probable_prime(const BigInt& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    BigInt d = n - 1;
    unsigned s = 0;
    while (is_even(d)) {
        d >>= 1;
        ++s;
    }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        BigInt x = boost::multiprecision::powm(BigInt(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace gdet

#endif
