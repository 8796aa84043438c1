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

#ifndef GDET_INTPOLY_HPP
#define GDET_INTPOLY_HPP

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gdet/arith.hpp"

namespace gdet {

/// Dense univariate polynomial with arbitrary-precision integer
/// coefficients. coeff(i) is the coefficient of x^i. Always normalized:
/// the highest stored coefficient is non-zero, and the zero polynomial
/// stores nothing (its degree is std::nullopt, never a number).
class IntPoly {
  public:
    IntPoly() = default;

    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPoly zero() { return IntPoly(); }

    static IntPoly constant(BigInt v) {
        IntPoly p;
        if (v != 0) p.c_.push_back(std::move(v));
        return p;
    }

    static IntPoly monomial(BigInt coef, std::size_t deg) {
        IntPoly p;
        if (coef != 0) {
            p.c_.assign(deg + 1, BigInt(0));
            p.c_[deg] = std::move(coef);
        }
        return p;
    }

    /// x^n - 1
    static IntPoly x_pow_minus_one(std::size_t n) {
        IntPoly p;
        p.c_.assign(n + 1, BigInt(0));
        p.c_[0] = -1;
        p.c_[n] = 1;
        return p;
    }

    /// 1 + x + ... + x^{k-1} (zero for k = 0).
    static IntPoly ones(std::size_t k) {
        IntPoly p;
        p.c_.assign(k, BigInt(1));
        return p;
    }

    bool is_zero() const { return c_.empty(); }

    std::optional<std::size_t> degree() const {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }

    const BigInt& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }

    const std::vector<BigInt>& coeffs() const { return c_; }

    BigInt eval(const BigInt& x) const {
        BigInt r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }

    IntPoly operator-() const {
        IntPoly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<BigInt> c_;

    friend IntPoly add(const IntPoly&, const IntPoly&);
    friend IntPoly sub(const IntPoly&, const IntPoly&);
    friend IntPoly mul(const IntPoly&, const IntPoly&);
};

inline IntPoly add(const IntPoly& p, const IntPoly& q) {
    std::vector<BigInt> c(std::max(p.c_.size(), q.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) c[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) c[i] += q.c_[i];
    return IntPoly(std::move(c));
}

inline IntPoly sub(const IntPoly& p, const IntPoly& q) {
    std::vector<BigInt> c(std::max(p.c_.size(), q.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) c[i] += p.c_[i];
    for (std::size_t i = 0; i < q.c_.size(); ++i) c[i] -= q.c_[i];
    return IntPoly(std::move(c));
}

inline IntPoly mul(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) return IntPoly::zero();
    std::vector<BigInt> c(p.c_.size() + q.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < p.c_.size(); ++i) {
        if (p.c_[i] == 0) continue;
        for (std::size_t j = 0; j < q.c_.size(); ++j) {
            if (q.c_[j] == 0) continue;
            c[i + j] += p.c_[i] * q.c_[j];
        }
    }
    return IntPoly(std::move(c));
}

struct DivRem {
    IntPoly quot;
    IntPoly rem;
};

/// Euclidean division by a monic divisor; exact over Z.
inline DivRem divrem_monic(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero() || b.leading() != 1)
        throw std::invalid_argument("divrem_monic requires a monic divisor");
    std::size_t db = *b.degree();
    std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
    if (r.size() <= db) return {IntPoly::zero(), IntPoly(std::move(r))};
    std::vector<BigInt> q(r.size() - db, BigInt(0));
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i] == 0) continue;
        BigInt t = r[i];
        q[i - db] = t;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeff(j);
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

/// Exact division over Z; nullopt if b does not divide a exactly.
inline std::optional<IntPoly> div_exact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (a.is_zero()) return IntPoly::zero();
    if (*a.degree() < *b.degree()) return std::nullopt;
    std::size_t db = *b.degree();
    std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
    std::vector<BigInt> q(r.size() - db, BigInt(0));
    const BigInt& lb = b.leading();
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i] == 0) continue;
        if (r[i] % lb != 0) return std::nullopt;
        BigInt t = r[i] / lb;
        q[i - db] = t;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= t * b.coeff(j);
    }
    for (const auto& v : r)
        if (v != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

/// Pseudo-remainder: returns R with lc(b)^{deg a - deg b + 1} * a = Q*b + R.
inline IntPoly prem(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("prem by zero polynomial");
    if (a.is_zero()) return IntPoly::zero();
    std::size_t da = *a.degree(), db = *b.degree();
    if (da < db) throw std::invalid_argument("prem requires deg a >= deg b");
    const BigInt& lb = b.leading();
    if (lb == 1) return divrem_monic(a, b).rem;
    if (lb == -1) {
        IntPoly r = divrem_monic(a, -b).rem;
        return ((da - db + 1) & 1) ? -r : r;
    }
    std::vector<BigInt> r(a.coeffs().begin(), a.coeffs().end());
    std::size_t steps = 0;
    std::size_t want = da - db + 1;
    while (!r.empty() && r.size() - 1 >= db) {
        BigInt t = r.back();
        std::size_t shift = r.size() - 1 - db;
        for (auto& v : r) v *= lb;
        for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= t * b.coeff(j);
        while (!r.empty() && r.back() == 0) r.pop_back();
        ++steps;
        if (r.empty()) break;
    }
    IntPoly rem(std::move(r));
    if (steps < want) {
        BigInt scale = big_pow(lb, want - steps);
        std::vector<BigInt> c(rem.coeffs().begin(), rem.coeffs().end());
        for (auto& v : c) v *= scale;
        rem = IntPoly(std::move(c));
    }
    return rem;
}

namespace detail {
inline IntPoly div_by_const(const IntPoly& a, const BigInt& d) {
    std::vector<BigInt> c(a.coeffs().begin(), a.coeffs().end());
    for (auto& v : c) {
        if (v % d != 0) throw std::logic_error("non-exact division in subresultant chain");
        v /= d;
    }
    return IntPoly(std::move(c));
}
}  // namespace detail

/// Signed resultant Res(p, q) = lc(p)^{deg q} * prod_{p(a)=0} q(a),
/// computed by the fraction-free subresultant remainder sequence.
inline BigInt resultant(const IntPoly& p, const IntPoly& q) {
    if (p.is_zero() || q.is_zero()) throw std::domain_error("undefined resultant");
    std::size_t dp = *p.degree(), dq = *q.degree();
    if (dp == 0 && dq == 0) return 1;
    if (dp == 0) return big_pow(p.leading(), dq);
    if (dq == 0) return big_pow(q.leading(), dp);

    IntPoly a = p, b = q;
    int s = 1;
    if (*a.degree() < *b.degree()) {
        std::swap(a, b);
        if ((dp & 1) && (dq & 1)) s = -s;
    }
    BigInt g = 1, h = 1;
    while (true) {
        std::size_t da = *a.degree(), db = *b.degree();
        std::size_t delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        IntPoly r = prem(a, b);
        a = std::move(b);
        if (r.is_zero()) {
            if (*a.degree() > 0) return 0;
            throw std::logic_error("unreachable: constant remainder chain");
        }
        b = detail::div_by_const(r, g * big_pow(h, delta));
        g = a.leading();
        h = delta == 0 ? h : detail::div_by_const(IntPoly::constant(big_pow(g, delta)),
                                                  big_pow(h, delta - 1))
                                 .coeff(0);
        if (*b.degree() == 0) break;
    }
    // b is a non-zero constant; fold the final subresultant scaling.
    std::size_t da = *a.degree();
    BigInt num = big_pow(b.leading(), da);
    BigInt den = big_pow(h, da - 1);
    if (num % den != 0) throw std::logic_error("non-exact final division in resultant");
    return s * (num / den);
}

/// The m-th cyclotomic polynomial, by iterated exact division of x^m - 1
/// by the cyclotomic polynomials of the proper divisors of m. Cached.
inline IntPoly cyclotomic(std::uint64_t m) {
    if (m == 0) throw std::invalid_argument("cyclotomic index must be positive");
    static std::map<std::uint64_t, IntPoly> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lk(mtx);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    IntPoly phi;
    if (m == 1) {
        phi = IntPoly({BigInt(-1), BigInt(1)});
    } else {
        IntPoly q = IntPoly::x_pow_minus_one(m);
        for (std::uint64_t d : divisors_u64(m)) {
            if (d == m) continue;
            auto quo = div_exact(q, cyclotomic(d));
            if (!quo) throw std::logic_error("cyclotomic division failed");
            q = std::move(*quo);
        }
        phi = std::move(q);
    }
    std::lock_guard<std::mutex> lk(mtx);
    return cache.emplace(m, std::move(phi)).first->second;
}

/// |Res(Phi_n, Phi_m)| for 1 <= n < m by the closed form:
/// p^{phi(n)} when m/n is a power of the prime p, and 1 otherwise.
inline BigInt cyclo_resultant_closed(std::uint64_t n, std::uint64_t m) {
    if (n == 0 || m == 0) throw std::invalid_argument("cyclotomic index must be positive");
    if (n >= m) throw std::domain_error("order violation");
    if (m % n != 0) return 1;
    std::uint64_t p = prime_power_base_u64(m / n);
    if (p == 0) return 1;
    return big_pow(BigInt(p), euler_phi_u64(n));
}

}  // namespace gdet

#endif
