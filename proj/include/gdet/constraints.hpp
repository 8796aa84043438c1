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

#ifndef GDET_CONSTRAINTS_HPP
#define GDET_CONSTRAINTS_HPP

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdet/arith.hpp"

namespace gdet {

struct PrimePower {
    BigInt p;
    unsigned alpha = 1;
};

/// n together with its full prime factorization, primes strictly increasing.
struct Factorization {
    BigInt n = 1;
    std::vector<PrimePower> factors;

    unsigned exponent_of(const BigInt& p) const {
        for (const auto& f : factors)
            if (f.p == p) return f.alpha;
        return 0;
    }

    bool even() const { return exponent_of(2) > 0; }
};

inline constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;

/// Trial division up to 1e6, then a deterministic primality check on the
/// cofactor. Composites that survive trial division are an error; callers
/// with hard inputs must supply the factorization themselves.
inline Factorization factorize(const BigInt& n) {
    if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
    Factorization out;
    out.n = n;
    BigInt rest = n;
    auto strip = [&](const BigInt& p) {
        unsigned a = 0;
        while (rest % p == 0) {
            rest /= p;
            ++a;
        }
        if (a) out.factors.push_back({p, a});
    };
    strip(2);
    strip(3);
    for (std::uint64_t q = 5; q <= kTrialDivisionLimit && rest > 1; q += 6) {
        if (BigInt(q) * q > rest) break;
        strip(BigInt(q));
        strip(BigInt(q + 2));
    }
    if (rest > 1) {
        if (BigInt(kTrialDivisionLimit) * kTrialDivisionLimit > rest || is_probable_prime(rest)) {
            out.factors.push_back({rest, 1});
        } else {
            throw std::runtime_error("unfactored cofactor: supply the factorization explicitly");
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.p < b.p; });
    return out;
}

/// Parses "p1^a1*p2^a2*..." (exponent 1 may be omitted). Each base is
/// re-checked for primality; repeated primes are merged.
inline Factorization parse_factored(const std::string& s) {
    Factorization out;
    out.n = 1;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, '*')) {
        if (tok.empty()) throw std::invalid_argument("empty factor in factored input");
        auto caret = tok.find('^');
        BigInt p(caret == std::string::npos ? tok : tok.substr(0, caret));
        unsigned a = 1;
        if (caret != std::string::npos) {
            long parsed = std::stol(tok.substr(caret + 1));
            if (parsed < 1) throw std::invalid_argument("exponent must be >= 1");
            a = static_cast<unsigned>(parsed);
        }
        if (!is_probable_prime(p)) throw std::invalid_argument("supplied factor is not prime: " + p.str());
        bool merged = false;
        for (auto& f : out.factors) {
            if (f.p == p) {
                f.alpha += a;
                merged = true;
                break;
            }
        }
        if (!merged) out.factors.push_back({p, a});
        out.n *= big_pow(p, a);
    }
    if (out.factors.empty()) throw std::invalid_argument("empty factored input");
    std::sort(out.factors.begin(), out.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.p < b.p; });
    return out;
}

struct AdmissReason {
    BigInt p;            // offending prime (2 for the mod-4 sign rule)
    std::string rule;    // rule identifier
    long required = 0;   // required valuation (or residue for the sign rule)
    long actual = 0;
};

struct AdmissibilityReport {
    BigInt candidate;
    bool admissible = true;
    std::vector<AdmissReason> reasons;
};

/// Necessary conditions for a signed integer v to be a D_{2n} determinant:
/// per-prime valuation floors for every prime dividing 2n, and, for even n,
/// odd values must be 1 mod 4.
inline AdmissibilityReport admissible(const BigInt& v, const Factorization& nf) {
    if (big_abs(v) < 2) throw std::invalid_argument("admissibility is defined for |v| >= 2");
    AdmissibilityReport rep;
    rep.candidate = v;
    auto reject = [&](BigInt p, std::string rule, long required, long actual) {
        rep.admissible = false;
        rep.reasons.push_back({std::move(p), std::move(rule), required, actual});
    };

    unsigned alpha2 = nf.exponent_of(2);
    if (v % 2 == 0) {
        long v2 = static_cast<long>(valuation(v, 2));
        if (alpha2 == 0) {
            if (v2 < 2) reject(2, "even-needs-4", 2, v2);
        } else if (alpha2 == 1) {
            if (!(v2 == 4 || v2 >= 6)) reject(2, "two-exactly-16-or-64", 4, v2);
        } else {
            long need = 2L * alpha2 + 4;
            if (v2 < need) reject(2, "two-high-power", need, v2);
        }
    } else if (alpha2 > 0) {
        // odd determinants of an even-n dihedral group are 1 mod 4
        long residue = static_cast<long>(((v % 4) + 4) % 4);
        if (residue != 1) reject(2, "odd-not-1-mod-4", 1, residue);
    }

    for (const auto& f : nf.factors) {
        if (f.p == 2) continue;
        if (v % f.p == 0) {
            long vp = static_cast<long>(valuation(v, f.p));
            long need = 2L * f.alpha + 1;
            if (vp < need) reject(f.p, "p-power-floor", need, vp);
        }
    }
    return rep;
}

/// Smallest m >= 2 admissible with either sign; every group determinant of
/// D_{2n} must clear the admissibility rules, so this is a lower bound for
/// the minimal non-trivial value.
inline BigInt lambda_lower_bound(const Factorization& nf) {
    for (BigInt m = 2;; ++m) {
        if (admissible(m, nf).admissible || admissible(-m, nf).admissible) return m;
        if (m > 1'000'000) throw std::logic_error("lower bound runaway");
    }
}

}  // namespace gdet

#endif
