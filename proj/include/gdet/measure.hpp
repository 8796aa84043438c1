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

#ifndef GDET_MEASURE_HPP
#define GDET_MEASURE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gdet/groupalg.hpp"
#include "gdet/intpoly.hpp"

namespace gdet {

/// Class of a polynomial mod x^n - 1: exactly n coefficients, zero-padded.
struct CyclicElem {
    std::size_t n = 0;
    std::vector<BigInt> coeffs;

    CyclicElem() = default;
    CyclicElem(std::size_t n_, std::vector<BigInt> c) : n(n_), coeffs(std::move(c)) {
        if (coeffs.size() > n) throw std::invalid_argument("cyclic element longer than modulus");
        coeffs.resize(n, BigInt(0));
    }
};

/// F = sum a_i x^i + y * sum b_i x^i in the dihedral quotient ring,
/// with both coefficient blocks of length exactly n.
struct DihedralElem {
    std::size_t n = 0;
    std::vector<BigInt> a, b;

    DihedralElem() = default;
    DihedralElem(std::size_t n_, std::vector<BigInt> a_, std::vector<BigInt> b_)
        : n(n_), a(std::move(a_)), b(std::move(b_)) {
        if (a.size() > n || b.size() > n)
            throw std::invalid_argument("dihedral blocks longer than rotation order");
        a.resize(n, BigInt(0));
        b.resize(n, BigInt(0));
    }
};

using MeasureValue = BigInt;

enum class CyclicStrategy { Auto, Direct, Divisor };

/// Direct strategy becomes a divisor decomposition above this modulus.
inline constexpr std::size_t kCyclicDirectLimit = 512;

struct BivariateTerm {
    BigInt coef;
    long long ypow;
    long long xpow;
};

/// Reduces a list of coef * y^i x^j terms by y^2 = 1 and x^n = 1 into the
/// canonical two-block form. Terms are given with the y-power on the left,
/// matching the quotient-ring presentation.
inline DihedralElem normalize_bivariate(const std::vector<BivariateTerm>& terms, std::size_t n) {
    if (n == 0) throw std::invalid_argument("rotation order must be positive");
    std::vector<BigInt> a(n, BigInt(0)), b(n, BigInt(0));
    long long nn = static_cast<long long>(n);
    for (const auto& t : terms) {
        bool reflected = ((t.ypow % 2) + 2) % 2 == 1;
        std::size_t j = static_cast<std::size_t>(((t.xpow % nn) + nn) % nn);
        (reflected ? b : a)[j] += t.coef;
    }
    return DihedralElem(n, std::move(a), std::move(b));
}

namespace detail {

/// Product of h over the primitive d-th roots of unity, given h mod x^d - 1.
/// For d >= 3 the values are located by the shortest circular window of the
/// support, so sparse inputs never touch a full-degree remainder sequence.
inline BigInt primitive_root_product(std::uint64_t d, const std::vector<BigInt>& folded) {
    if (d == 1) return folded[0];
    if (d == 2) return folded[0] - folded[1];
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < folded.size(); ++i)
        if (folded[i] != 0) support.push_back(i);
    if (support.empty()) return 0;

    // widest circular gap between consecutive support points
    std::size_t best_gap = 0, start = 0;
    for (std::size_t t = 0; t < support.size(); ++t) {
        std::size_t next = support[(t + 1) % support.size()];
        std::size_t gap = (next + d - support[t]) % d;
        if (gap == 0) gap = d;  // single support point
        if (gap > best_gap) {
            best_gap = gap;
            start = next;
        }
    }
    std::size_t width = d - best_gap + 1;
    std::uint64_t phi = euler_phi_u64(d);
    IntPoly phi_d = cyclotomic(d);
    if (width <= 600) {
        std::vector<BigInt> w(width);
        for (std::size_t t = 0; t < width; ++t) w[t] = folded[(start + t) % d];
        IntPoly h(std::move(w));
        if (h.is_zero()) return 0;
        if (!(h.leading() == 1 || h.leading() == -1) && phi > 4096)
            throw std::runtime_error("cyclic divisor resultant too large (non-monic window)");
        return resultant(phi_d, h);
    }
    if (phi > 2048)
        throw std::runtime_error("cyclic divisor resultant too large; use a sparser input");
    IntPoly rem = divrem_monic(IntPoly(std::vector<BigInt>(folded)), phi_d).rem;
    if (rem.is_zero()) return 0;
    return resultant(phi_d, rem);
}

}  // namespace detail

/// M_{Z_n}(f) = Res(x^n - 1, f), the product of f over all n-th roots of
/// unity, sign included. The divisor strategy splits the resultant over
/// cyclotomic factors; both strategies agree exactly.
inline MeasureValue cyclic_measure(const CyclicElem& f, CyclicStrategy strategy = CyclicStrategy::Auto) {
    if (f.n == 0) throw std::invalid_argument("cyclic modulus must be positive");
    if (f.coeffs.size() != f.n) throw std::invalid_argument("cyclic element length mismatch");
    IntPoly p(std::vector<BigInt>(f.coeffs));
    if (p.is_zero()) return 0;
    if (strategy == CyclicStrategy::Auto)
        strategy = f.n <= kCyclicDirectLimit ? CyclicStrategy::Direct : CyclicStrategy::Divisor;
    if (strategy == CyclicStrategy::Direct) {
        return resultant(IntPoly::x_pow_minus_one(f.n), p);
    }
    BigInt total = 1;
    for (std::uint64_t d : divisors_u64(f.n)) {
        std::vector<BigInt> folded(d, BigInt(0));
        for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
            if (f.coeffs[i] != 0) folded[i % d] += f.coeffs[i];
        }
        BigInt factor = detail::primitive_root_product(d, folded);
        if (factor == 0) return 0;
        total *= factor;
    }
    return total;
}

inline constexpr std::size_t kMaxDeterminantOrder = 64;

/// Fraction-free (Bareiss) determinant; exact over Z.
inline BigInt exact_determinant(std::vector<std::vector<BigInt>> m) {
    std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// det(x_{g_i g_j^{-1}}) for an explicit table; the generic oracle.
inline MeasureValue cayley_determinant(const CayleyTable& t, const Assignment& a) {
    if (a.size() != t.order) throw std::invalid_argument("assignment length mismatch");
    if (t.order > kMaxDeterminantOrder)
        throw std::invalid_argument("determinant oracle capped at order 64");
    std::vector<std::vector<BigInt>> m(t.order, std::vector<BigInt>(t.order));
    for (std::size_t i = 0; i < t.order; ++i)
        for (std::size_t j = 0; j < t.order; ++j) m[i][j] = a[t.mul(i, t.inv(j))];
    return exact_determinant(std::move(m));
}

/// Group determinant of an abelian product, exactly, via the Cayley matrix.
inline MeasureValue abelian_measure(const Assignment& a, const std::vector<std::size_t>& dims) {
    AbelianProduct spec{dims};
    std::size_t order = group_order(GroupSpec{spec});
    if (a.size() != order) throw std::invalid_argument("dimension mismatch");
    return cayley_determinant(build_cayley(GroupSpec{spec}), a);
}

/// M_{D_2n}(f + yg) = M_{Z_n}(f ftilde - g gtilde) where the tilde
/// involution re-indexes i -> (n-i) mod n. Equals the 2n x 2n Cayley
/// determinant of the same data.
inline MeasureValue dihedral_measure(const DihedralElem& e, CyclicStrategy strategy = CyclicStrategy::Auto) {
    std::size_t n = e.n;
    if (n == 0) throw std::invalid_argument("rotation order must be positive");
    std::vector<BigInt> h(n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (e.a[i] != 0) {
            for (std::size_t k = 0; k < n; ++k) h[k] += e.a[i] * e.a[(i + n - k) % n];
        }
        if (e.b[i] != 0) {
            for (std::size_t k = 0; k < n; ++k) h[k] -= e.b[i] * e.b[(i + n - k) % n];
        }
    }
    return cyclic_measure(CyclicElem(n, std::move(h)), strategy);
}

/// (1/order) * ln |v|.
inline double log_measure(const MeasureValue& v, std::size_t order) {
    if (v == 0) throw std::domain_error("measure of zero");
    if (order == 0) throw std::invalid_argument("order must be positive");
    BigInt av = big_abs(v);
    unsigned bits = boost::multiprecision::msb(av);
    double lnv;
    if (bits < 960) {
        lnv = std::log(av.convert_to<double>());
    } else {
        BigInt top = av >> (bits - 64);
        lnv = std::log(top.convert_to<double>()) + static_cast<double>(bits - 64) * M_LN2;
    }
    return lnv / static_cast<double>(order);
}

struct ApproxFactored {
    double value = 0.0;
    std::vector<double> factors;
};

/// Floating-point evaluation of the representation-level factorization:
/// the linear characters plus the squared real quadratics Q(w^j). This is a
/// sanity cross-check of the exact value, never an acceptance path.
inline ApproxFactored approx_factored_dihedral(const DihedralElem& e) {
    std::size_t n = e.n;
    if (n == 0) throw std::invalid_argument("rotation order must be positive");
    std::vector<double> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = e.a[i].convert_to<double>();
        b[i] = e.b[i].convert_to<double>();
    }
    double asum = 0, bsum = 0, aalt = 0, balt = 0;
    for (std::size_t i = 0; i < n; ++i) {
        asum += a[i];
        bsum += b[i];
        double s = (i % 2 == 0) ? 1.0 : -1.0;
        aalt += s * a[i];
        balt += s * b[i];
    }
    ApproxFactored out;
    out.factors.push_back(asum + bsum);
    out.factors.push_back(asum - bsum);
    std::size_t k;
    if (n % 2 == 1) {
        k = (n - 1) / 2;
    } else {
        out.factors.push_back(aalt + balt);
        out.factors.push_back(aalt - balt);
        k = n / 2 - 1;
    }
    for (std::size_t j = 1; j <= k; ++j) {
        std::complex<double> w = std::polar(1.0, 2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n));
        std::complex<double> fw = 0, gw = 0, wp = 1;
        for (std::size_t i = 0; i < n; ++i) {
            fw += a[i] * wp;
            gw += b[i] * wp;
            wp *= w;
        }
        double q = std::norm(fw) - std::norm(gw);
        out.factors.push_back(q * q);
    }
    out.value = 1.0;
    for (double f : out.factors) out.value *= f;
    return out;
}

}  // namespace gdet

#endif
