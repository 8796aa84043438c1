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

#ifndef GDET_WITNESS_HPP
#define GDET_WITNESS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gdet/constraints.hpp"
#include "gdet/measure.hpp"

namespace gdet {

/// Dihedral element in sparse form: (index, coefficient) terms per block,
/// indices reduced into [0, n). The rotation order n may exceed any dense
/// representation; witnesses for the certification pipeline live here.
struct SparseDihedral {
    BigInt n = 1;
    std::vector<std::pair<BigInt, BigInt>> a, b;
};

/// A witness claims either an exact measure value or an exact p-adic
/// valuation of the measure. verify() recomputes and compares.
struct ValuationClaim {
    BigInt p;
    unsigned exact = 0;
};

struct Witness {
    SparseDihedral elem;
    BigInt claimed = 0;
    std::optional<ValuationClaim> valuation;
    std::string provenance;
};

inline constexpr std::size_t kDenseWitnessLimit = 4096;
inline constexpr long long kMaxLaurentHalfWidth = 256;

namespace detail {

inline void sparse_add(std::map<BigInt, BigInt>& m, const BigInt& idx, const BigInt& c) {
    auto it = m.emplace(idx, 0).first;
    it->second += c;
    if (it->second == 0) m.erase(it);
}

inline std::vector<std::pair<BigInt, BigInt>> sparse_sorted(const std::map<BigInt, BigInt>& m) {
    return {m.begin(), m.end()};
}

}  // namespace detail

inline DihedralElem densify(const SparseDihedral& e) {
    if (e.n > kDenseWitnessLimit)
        throw std::runtime_error("witness rotation order too large for a dense element");
    std::size_t n = e.n.convert_to<std::size_t>();
    std::vector<BigInt> a(n, BigInt(0)), b(n, BigInt(0));
    for (const auto& [i, c] : e.a) a[i.convert_to<std::size_t>()] += c;
    for (const auto& [i, c] : e.b) b[i.convert_to<std::size_t>()] += c;
    return DihedralElem(n, std::move(a), std::move(b));
}

inline SparseDihedral sparse_from_dense(const DihedralElem& e) {
    SparseDihedral s;
    s.n = e.n;
    for (std::size_t i = 0; i < e.n; ++i) {
        if (e.a[i] != 0) s.a.emplace_back(i, e.a[i]);
        if (e.b[i] != 0) s.b.emplace_back(i, e.b[i]);
    }
    return s;
}

/// Reduces a pair of possibly long polynomials mod x^n - 1 into sparse form.
inline SparseDihedral sparse_from_polys(const BigInt& n, const IntPoly& f, const IntPoly& g) {
    SparseDihedral s;
    s.n = n;
    std::map<BigInt, BigInt> ma, mb;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        if (f.coeffs()[i] != 0) detail::sparse_add(ma, BigInt(i) % n, f.coeffs()[i]);
    for (std::size_t i = 0; i < g.coeffs().size(); ++i)
        if (g.coeffs()[i] != 0) detail::sparse_add(mb, BigInt(i) % n, g.coeffs()[i]);
    s.a = detail::sparse_sorted(ma);
    s.b = detail::sparse_sorted(mb);
    return s;
}

/// Exact measure of a sparse element whose difference polynomial
/// f*ftilde - g*gtilde is (up to a monomial) a product of cyclotomic
/// polynomials. Evaluates the measure through the closed-form cyclotomic
/// resultants against the divisors of n, so the cost is independent of n.
/// Returns nullopt when the element does not have this structure.
inline std::optional<MeasureValue> structured_dihedral_measure(const SparseDihedral& e,
                                                               const Factorization& nf) {
    const BigInt& n = nf.n;
    // balanced Laurent support of f ftilde - g gtilde
    std::map<long long, BigInt> h;
    auto accumulate = [&](const std::vector<std::pair<BigInt, BigInt>>& terms, int sgn) -> bool {
        for (const auto& [i, ci] : terms) {
            for (const auto& [j, cj] : terms) {
                BigInt diff = i - j;
                if (2 * diff > n) diff -= n;
                if (2 * diff <= -n) diff += n;
                if (big_abs(diff) > kMaxLaurentHalfWidth) return false;
                long long key = diff.convert_to<long long>();
                h[key] += sgn * ci * cj;
            }
        }
        return true;
    };
    if (!accumulate(e.a, +1) || !accumulate(e.b, -1)) return std::nullopt;
    for (auto it = h.begin(); it != h.end();)
        it = it->second == 0 ? h.erase(it) : std::next(it);
    if (h.empty()) return MeasureValue(0);

    long long lo = h.begin()->first;
    long long hi = h.rbegin()->first;
    std::vector<BigInt> hc(static_cast<std::size_t>(hi - lo + 1), BigInt(0));
    for (const auto& [k, c] : h) hc[static_cast<std::size_t>(k - lo)] = c;
    IntPoly H(std::move(hc));

    // factor H as c * prod Phi_k^{m_k}; candidates are the k with
    // phi(k) <= deg H, located through a shared phi sieve
    static const std::vector<std::uint32_t> phi_sieve = [] {
        constexpr std::uint32_t bound =
            2 * (2 * kMaxLaurentHalfWidth) * (2 * kMaxLaurentHalfWidth) + 4;
        std::vector<std::uint32_t> phi(bound + 1);
        for (std::uint32_t i = 0; i <= bound; ++i) phi[i] = i;
        for (std::uint32_t i = 2; i <= bound; ++i)
            if (phi[i] == i)
                for (std::uint32_t j = i; j <= bound; j += i) phi[j] -= phi[j] / i;
        return phi;
    }();
    std::size_t deg = *H.degree();
    std::map<std::uint64_t, unsigned> mult;
    for (std::uint64_t k = 1; k <= 2 * static_cast<std::uint64_t>(deg) * deg + 4; ++k) {
        if (*H.degree() == 0) break;
        if (phi_sieve[k] > *H.degree()) continue;
        while (true) {
            auto q = div_exact(H, cyclotomic(k));
            if (!q) break;
            ++mult[k];
            H = std::move(*q);
            if (*H.degree() == 0) break;
        }
    }
    if (*H.degree() != 0) return std::nullopt;  // non-cyclotomic part remains
    BigInt content = H.coeff(0);

    // sign of the monomial shift: product over all n-th roots of w^{lo}
    bool n_even = nf.even();
    bool negate = n_even && (lo % 2 != 0);  // (-1)^{(n+1) lo}

    BigInt total = 1;
    if (content == -1) {
        if (!is_even(n)) negate = !negate;
    } else if (content != 1) {
        if (n > 20000) return std::nullopt;  // |content|^n is not representable sensibly
        total = big_pow(content, n.convert_to<std::uint64_t>());
    }

    for (const auto& [k, mk] : mult) {
        // zero measure when Phi_k divides x^n - 1
        bool k_divides_n = true;
        for (const auto& [q, beta] : factor_u64(k)) {
            if (nf.exponent_of(BigInt(q)) < beta) {
                k_divides_n = false;
                break;
            }
        }
        if (k_divides_n) return MeasureValue(0);

        // Res(x^n - 1, Phi_k): only divisors d = k / q^beta of n contribute,
        // each with q^{phi(d)}; all factors are positive.
        BigInt rk = 1;
        for (const auto& [q, vq] : factor_u64(k)) {
            std::uint64_t qpow = 1;
            for (unsigned beta = 1; beta <= vq; ++beta) {
                qpow *= q;
                std::uint64_t d = k / qpow;
                bool d_divides_n = true;
                for (const auto& [r, e] : factor_u64(d)) {
                    if (nf.exponent_of(BigInt(r)) < e) {
                        d_divides_n = false;
                        break;
                    }
                }
                if (d_divides_n) rk *= big_pow(BigInt(q), euler_phi_u64(d));
            }
        }
        total *= big_pow(rk, mk);
    }
    return negate ? -total : total;
}

/// Exact measure of a sparse element: dense evaluation when the order is
/// moderate, the structured cyclotomic route otherwise.
inline MeasureValue witness_measure(const SparseDihedral& e,
                                    const std::optional<Factorization>& nf = std::nullopt) {
    if (e.n <= kDenseWitnessLimit) return dihedral_measure(densify(e));
    Factorization f = nf ? *nf : factorize(e.n);
    auto m = structured_dihedral_measure(e, f);
    if (!m)
        throw std::runtime_error(
            "witness order too large for dense evaluation and not cyclotomic-structured");
    return *m;
}

/// True iff the recomputed measure matches the claim (value or valuation).
inline bool verify(const Witness& w, const std::optional<Factorization>& nf = std::nullopt) {
    MeasureValue m = witness_measure(w.elem, nf);
    if (w.valuation) return m != 0 && valuation(m, w.valuation->p) == w.valuation->exact;
    return m == w.claimed;
}

// ---------------------------------------------------------------------------
// Constructive witness families
// ---------------------------------------------------------------------------

/// Runs of 1s of lengths t+1 and t (m = 2t+1), wrapped mod n: achieves
/// |measure| = m for any odd m coprime to n. The sign is +m for odd n; for
/// even n it is whichever of +-m is 1 mod 4.
inline Witness odd_coprime(const BigInt& m, const BigInt& n) {
    if (m < 1 || is_even(m)) throw std::invalid_argument("m must be odd and positive");
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (big_gcd(m, n) != 1) throw std::invalid_argument("gcd violation: m and n must be coprime");
    BigInt t = (m - 1) / 2;
    if (t > 2'000'000) throw std::invalid_argument("m too large for an explicit construction");
    Witness w;
    w.elem.n = n;
    std::map<BigInt, BigInt> ma, mb;
    if (t < n) {
        for (BigInt j = 0; j <= t; ++j) detail::sparse_add(ma, j, 1);
        for (BigInt j = 0; j < t; ++j) detail::sparse_add(mb, j, 1);
    } else {
        // wraparound counts: a_i = #{0 <= j <= t : j = i mod n}
        if (n > kDenseWitnessLimit)
            throw std::invalid_argument("wrapped construction needs m < 2n at this order");
        BigInt cyc_a = (t + 1) / n, rem_a = (t + 1) % n;
        BigInt cyc_b = t / n, rem_b = t % n;
        for (BigInt i = 0; i < n; ++i) {
            detail::sparse_add(ma, i, cyc_a + (i < rem_a ? 1 : 0));
            detail::sparse_add(mb, i, cyc_b + (i < rem_b ? 1 : 0));
        }
    }
    w.elem.a = detail::sparse_sorted(ma);
    w.elem.b = detail::sparse_sorted(mb);
    bool flip = is_even(n) && (m % 4 == 3);
    w.claimed = flip ? -m : m;
    w.provenance = "odd-coprime";
    return w;
}

/// f = x^{2^alpha} + 1 with 2^alpha || n: achieves 2^{2^{alpha+1}}.
inline Witness two_power(const Factorization& nf) {
    unsigned alpha = nf.exponent_of(2);
    if (alpha >= 63) throw std::invalid_argument("two-adic exponent too large");
    Witness w;
    w.elem.n = nf.n;
    std::map<BigInt, BigInt> ma;
    detail::sparse_add(ma, 0, 1);
    detail::sparse_add(ma, BigInt(std::uint64_t(1) << alpha) % nf.n, 1);
    w.elem.a = detail::sparse_sorted(ma);
    w.claimed = big_pow(BigInt(2), std::uint64_t(1) << (alpha + 1));
    w.provenance = "two-power";
    return w;
}

/// f = sum x^{i p^alpha} (i <= t), g likewise to t-1, with p = 2t+1 and
/// p^alpha || n: achieves p^{p^alpha} in absolute value. For even n the
/// sign makes the value 1 mod 4.
inline Witness odd_prime_power(const BigInt& p, const Factorization& nf) {
    unsigned alpha = nf.exponent_of(p);
    if (p < 3 || is_even(p) || !is_probable_prime(p))
        throw std::invalid_argument("p must be an odd prime");
    if (alpha == 0) throw std::invalid_argument("p does not divide n");
    BigInt step = big_pow(p, alpha);
    if (step > BigInt(1) << 40) throw std::invalid_argument("prime power too large");
    BigInt t = (p - 1) / 2;
    Witness w;
    w.elem.n = nf.n;
    std::map<BigInt, BigInt> ma, mb;
    for (BigInt i = 0; i <= t; ++i) detail::sparse_add(ma, (i * step) % nf.n, 1);
    for (BigInt i = 0; i < t; ++i) detail::sparse_add(mb, (i * step) % nf.n, 1);
    w.elem.a = detail::sparse_sorted(ma);
    w.elem.b = detail::sparse_sorted(mb);
    BigInt magnitude = big_pow(p, big_pow(p, alpha).convert_to<std::uint64_t>());
    bool flip = nf.even() && (magnitude % 4 == 3);
    w.claimed = flip ? -magnitude : magnitude;
    w.provenance = "odd-prime-power";
    return w;
}

enum class D2pkVariant { Power, XPlusOne, Quad };

/// Families over D_{2p^k} (n = p^k, p odd): the p^{l+2k} construction and
/// the two small even values 2^2 and 2^3.
inline Witness family_d2pk(const BigInt& p, unsigned k, D2pkVariant variant, unsigned ell = 0) {
    if (p < 3 || is_even(p) || !is_probable_prime(p))
        throw std::invalid_argument("p must be an odd prime");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    BigInt n = big_pow(p, k);
    if (n > kDenseWitnessLimit) throw std::invalid_argument("p^k too large");
    Witness w;
    w.elem.n = n;
    switch (variant) {
        case D2pkVariant::Power: {
            if (ell < k) throw std::invalid_argument("exponent must satisfy l >= k");
            BigInt plen = big_pow(p, ell);
            if (plen > BigInt(4'000'000)) throw std::invalid_argument("p^l too large");
            std::size_t half_up = ((plen + 1) / 2).convert_to<std::size_t>();
            std::size_t half_down = ((plen - 1) / 2).convert_to<std::size_t>();
            std::size_t nn = n.convert_to<std::size_t>();
            // f = (x^{(p^l+1)/2} - 1)/(x-1) + (x - 1)
            IntPoly f = add(IntPoly::ones(half_up), IntPoly({BigInt(-1), BigInt(1)}));
            // g = (x^{(p^l-1)/2} - 1)/(x-1) + x^{-1}(x - 1) = ... + 1 - x^{n-1}
            IntPoly g = add(IntPoly::ones(half_down), IntPoly::constant(1));
            g = sub(g, IntPoly::monomial(1, nn - 1));
            w.elem = sparse_from_polys(n, f, g);
            w.claimed = big_pow(p, ell + 2ull * k);
            w.provenance = "d2pk-power";
            break;
        }
        case D2pkVariant::XPlusOne:
            w.elem.a = {{BigInt(0), BigInt(1)}, {BigInt(1), BigInt(1)}};
            w.claimed = 4;
            w.provenance = "d2pk-x-plus-1";
            break;
        case D2pkVariant::Quad:
            // (x^2 + x + 1) + y
            w.elem = sparse_from_polys(n, IntPoly({BigInt(1), BigInt(1), BigInt(1)}),
                                       IntPoly::constant(1));
            w.claimed = 8;
            w.provenance = "d2pk-quad";
            break;
    }
    return w;
}

enum class D4pVariant { Delta, X2PlusOne, XpPlusOne, Pow6Pos, Pow6Neg, Pm2l };

/// Families over D_{4p} (n = 2p, p odd): delta * p^{k+2}, the four two-power
/// values +-2^4 and +-2^6, and the +-2^{l+6} extension.
inline Witness family_d4p(const BigInt& p, D4pVariant variant, unsigned k = 1, unsigned l = 1,
                          int sign = +1) {
    if (p < 3 || is_even(p) || !is_probable_prime(p))
        throw std::invalid_argument("p must be an odd prime");
    BigInt n = 2 * p;
    if (n > kDenseWitnessLimit) throw std::invalid_argument("2p too large");
    std::size_t nn = n.convert_to<std::size_t>();
    std::size_t pp = p.convert_to<std::size_t>();
    Witness w;
    w.elem.n = n;
    switch (variant) {
        case D4pVariant::Delta: {
            if (k < 1) throw std::invalid_argument("k must be >= 1");
            BigInt pk = big_pow(p, k);
            if (pk > BigInt(2'000'000)) throw std::invalid_argument("p^k too large");
            int delta = (pk % 4 == 1) ? 1 : -1;
            std::size_t A = ((pk + delta) / 2).convert_to<std::size_t>();
            std::size_t B = ((pk - delta) / 4).convert_to<std::size_t>();
            IntPoly f = IntPoly::ones(A);
            IntPoly g = mul(add(IntPoly::monomial(1, pp), IntPoly::constant(1)), IntPoly::ones(B));
            w.elem = sparse_from_polys(n, f, g);
            w.claimed = delta * big_pow(p, k + 2ull);
            w.provenance = "d4p-delta";
            break;
        }
        case D4pVariant::X2PlusOne:
            w.elem = sparse_from_polys(n, IntPoly({BigInt(1), BigInt(0), BigInt(1)}), IntPoly::zero());
            w.claimed = 16;
            w.provenance = "d4p-x2-plus-1";
            break;
        case D4pVariant::XpPlusOne:
            // (x^p + 1) + y(x - 1)
            w.elem = sparse_from_polys(n, add(IntPoly::monomial(1, pp), IntPoly::constant(1)),
                                       IntPoly({BigInt(-1), BigInt(1)}));
            w.claimed = -16;
            w.provenance = "d4p-xp-plus-1";
            break;
        case D4pVariant::Pow6Pos:
            // 1 + x + x^2 + x^{p+1}
            w.elem = sparse_from_polys(
                n, add(IntPoly({BigInt(1), BigInt(1), BigInt(1)}), IntPoly::monomial(1, pp + 1)),
                IntPoly::zero());
            w.claimed = 64;
            w.provenance = "d4p-64";
            break;
        case D4pVariant::Pow6Neg:
            // (1 - x^{p+2}) + y(x^p + 1)(x + 1)
            w.elem = sparse_from_polys(
                n, sub(IntPoly::constant(1), IntPoly::monomial(1, pp + 2)),
                mul(add(IntPoly::monomial(1, pp), IntPoly::constant(1)),
                    IntPoly({BigInt(1), BigInt(1)})));
            w.claimed = -64;
            w.provenance = "d4p-minus-64";
            break;
        case D4pVariant::Pm2l: {
            if (l < 1 || l > 40) throw std::invalid_argument("l out of range");
            if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
            // choose m in {1,3} with m p +- 2^l = 2t+1, t even (= 1 mod 4)
            BigInt pow2 = big_pow(BigInt(2), l);
            std::optional<BigInt> chosen_t;
            BigInt chosen_m;
            for (int m : {1, 3}) {
                BigInt target = m * p + sign * pow2;
                if (target < 1) continue;
                BigInt t = (target - 1) / 2;
                if (target % 4 == 1 && is_even(t)) {
                    chosen_t = t;
                    chosen_m = m;
                    break;
                }
            }
            if (!chosen_t)
                throw std::invalid_argument("no multiplier in {1,3} gives an even run length");
            if (*chosen_t > 4'000'000) throw std::invalid_argument("2^l too large");
            std::size_t t = chosen_t->convert_to<std::size_t>();
            IntPoly base = add(IntPoly({BigInt(1), BigInt(1), BigInt(1)}), IntPoly::monomial(1, pp + 1));
            IntPoly all = IntPoly::ones(nn);  // (x^{2p} - 1)/(x - 1)
            IntPoly mall = mul(IntPoly::constant(chosen_m), all);
            IntPoly f = sub(mul(base, IntPoly::ones(t + 1)), mall);
            IntPoly g = sub(mul(base, IntPoly::ones(t)), mall);
            w.elem = sparse_from_polys(n, f, g);
            w.claimed = sign * big_pow(BigInt(2), l + 6ull);
            w.provenance = "d4p-pm2l";
            break;
        }
    }
    return w;
}

enum class D2powkVariant {
    OddValues,     // 1 + 4m on Z2 x Z2
    Even16,        // 2^4 (2m+1) on Z2 x Z2
    Even64,        // 2^6 m on Z2 x Z2
    Pos256,        // 2^8 (4m+1) on D_8
    Neg256,        // -2^8 (4m+1) on D_8
    Pos1024,       // 2^10 on D_16
    Neg1024,       // -2^10 on D_16
    Pos2048,       // 2^11 on D_16
    Neg2048,       // -2^11 on D_16
    Pow3k          // 2^{3k} m on D_{2^k}, k >= 3
};

/// Families over D_{2^k} (n = 2^{k-1}), including the Z2 x Z2 case k = 2.
inline Witness family_d2powk(unsigned k, D2powkVariant variant, const BigInt& m = 1) {
    if (k < 2 || k > 13) throw std::invalid_argument("k out of range");
    BigInt n = BigInt(1) << (k - 1);
    std::size_t nn = n.convert_to<std::size_t>();
    Witness w;
    w.elem.n = n;
    auto require_k = [&](unsigned want) {
        if (k != want) throw std::invalid_argument("variant is specific to another group size");
    };
    switch (variant) {
        case D2powkVariant::OddValues: {
            require_k(2);
            IntPoly xp1({BigInt(1), BigInt(1)});
            IntPoly mf = mul(IntPoly::constant(m), xp1);
            w.elem = sparse_from_polys(n, add(IntPoly::constant(1), mf), mf);
            w.claimed = 1 + 4 * m;
            w.provenance = "d2powk-odd";
            break;
        }
        case D2powkVariant::Even16: {
            require_k(2);
            IntPoly mf = mul(IntPoly::constant(m), IntPoly({BigInt(1), BigInt(1)}));
            w.elem = sparse_from_polys(n, add(IntPoly::constant(2), mf), mf);
            w.claimed = 16 * (2 * m + 1);
            w.provenance = "d2powk-16";
            break;
        }
        case D2powkVariant::Even64: {
            require_k(2);
            IntPoly step = mul(IntPoly::constant(m - 1), IntPoly({BigInt(1), BigInt(1)}));
            w.elem = sparse_from_polys(n, add(IntPoly::constant(3), step),
                                       add(IntPoly::constant(1), step));
            w.claimed = 64 * m;
            w.provenance = "d2powk-64";
            break;
        }
        case D2powkVariant::Pos256: {
            require_k(3);
            IntPoly ones4 = IntPoly::ones(4);
            IntPoly mj = mul(IntPoly::constant(m), ones4);
            w.elem = sparse_from_polys(n, add(IntPoly::constant(2), mj), mj);
            w.claimed = 256 * (4 * m + 1);
            w.provenance = "d2powk-256";
            break;
        }
        case D2powkVariant::Neg256: {
            require_k(3);
            IntPoly mj = mul(IntPoly::constant(m), IntPoly::ones(4));
            // (x^2+1)(x-1) + m*ones, y((x+1) + m*ones)
            IntPoly f = add(mul(IntPoly({BigInt(1), BigInt(0), BigInt(1)}),
                                IntPoly({BigInt(-1), BigInt(1)})),
                            mj);
            IntPoly g = add(IntPoly({BigInt(1), BigInt(1)}), mj);
            w.elem = sparse_from_polys(n, f, g);
            w.claimed = -256 * (4 * m + 1);
            w.provenance = "d2powk-minus-256";
            break;
        }
        case D2powkVariant::Pos1024: {
            require_k(4);
            // (1+x^2)(1+x^4) - (1-x)
            IntPoly f = sub(mul(IntPoly({BigInt(1), BigInt(0), BigInt(1)}),
                                add(IntPoly::constant(1), IntPoly::monomial(1, 4))),
                            IntPoly({BigInt(1), BigInt(-1)}));
            w.elem = sparse_from_polys(n, f, IntPoly::zero());
            w.claimed = 1024;
            w.provenance = "d2powk-1024";
            break;
        }
        case D2powkVariant::Neg1024: {
            require_k(4);
            // (1+x^2)(1+x^4) + (x-1)(x^2+1) + y(x-1)
            IntPoly f = add(mul(IntPoly({BigInt(1), BigInt(0), BigInt(1)}),
                                add(IntPoly::constant(1), IntPoly::monomial(1, 4))),
                            mul(IntPoly({BigInt(-1), BigInt(1)}), IntPoly({BigInt(1), BigInt(0), BigInt(1)})));
            w.elem = sparse_from_polys(n, f, IntPoly({BigInt(-1), BigInt(1)}));
            w.claimed = -1024;
            w.provenance = "d2powk-minus-1024";
            break;
        }
        case D2powkVariant::Pos2048: {
            require_k(4);
            // (1+x^2) - ones(8) + y(x+1)
            IntPoly f = sub(IntPoly({BigInt(1), BigInt(0), BigInt(1)}), IntPoly::ones(8));
            w.elem = sparse_from_polys(n, f, IntPoly({BigInt(1), BigInt(1)}));
            w.claimed = 2048;
            w.provenance = "d2powk-2048";
            break;
        }
        case D2powkVariant::Neg2048: {
            require_k(4);
            // (1+x^2) + y((x+1) - ones(8))
            IntPoly g = sub(IntPoly({BigInt(1), BigInt(1)}), IntPoly::ones(8));
            w.elem = sparse_from_polys(n, IntPoly({BigInt(1), BigInt(0), BigInt(1)}), g);
            w.claimed = -2048;
            w.provenance = "d2powk-minus-2048";
            break;
        }
        case D2powkVariant::Pow3k: {
            if (k < 3) throw std::invalid_argument("family needs k >= 3");
            IntPoly mones = mul(IntPoly::constant(m), IntPoly::ones(nn));
            IntPoly f = add(IntPoly::constant(2), mones);
            IntPoly g = sub(IntPoly({BigInt(1), BigInt(1)}), mones);
            w.elem = sparse_from_polys(n, f, g);
            w.claimed = big_pow(BigInt(2), 3ull * k) * m;
            w.provenance = "d2powk-3k";
            break;
        }
    }
    return w;
}

enum class D2p2Variant { P5, Valuation };

/// Families over D_{2p^k} for prime-square and beyond: the exact p^5 value
/// (p in {3,5,7}, k = 2), and a valuation witness whose measure has p-adic
/// valuation exactly 2k+1. The valuation element is (A + B(x-1)) * base
/// where base = (x^{(p+1)/2}-1)/(x-1) + y((x^{(p+1)/2}-1)/(x-1) - x^{p-1});
/// the unit factor keeps the measure coprime contribution p-free whenever
/// p does not divide AB.
inline Witness family_d2p2(const BigInt& p, D2p2Variant variant, unsigned k = 2,
                           const BigInt& A = 1, const BigInt& B = 1) {
    if (p < 3 || is_even(p) || !is_probable_prime(p))
        throw std::invalid_argument("p must be an odd prime");
    std::size_t pp = p.convert_to<std::size_t>();
    if (variant == D2p2Variant::P5) {
        if (p != 3 && p != 5 && p != 7)
            throw std::invalid_argument("exact p^5 construction needs p in {3,5,7}");
        BigInt n = p * p;
        std::size_t half = (pp + 1) / 2;
        IntPoly f = IntPoly::ones(half);
        IntPoly g = sub(f, IntPoly::monomial(1, pp - 1));
        Witness w;
        w.elem = sparse_from_polys(n, f, g);
        w.claimed = big_pow(p, 5);
        w.provenance = "d2p2-p5";
        return w;
    }
    if (k < 2) throw std::invalid_argument("valuation family needs k >= 2");
    if (A % p == 0 || B % p == 0) throw std::invalid_argument("p must not divide A or B");
    BigInt n = big_pow(p, k);
    if (n > kDenseWitnessLimit) throw std::invalid_argument("p^k too large");
    std::size_t nn = n.convert_to<std::size_t>();
    std::size_t half = (pp + 1) / 2;
    IntPoly f0 = IntPoly::ones(half);
    IntPoly g0 = sub(f0, IntPoly::monomial(1, pp - 1));
    DihedralElem base = densify(sparse_from_polys(n, f0, g0));
    // unit factor A + B(x - 1), rotation block only
    std::vector<BigInt> ua(nn, BigInt(0));
    ua[0] = A - B;
    ua[1 % nn] += B;
    GroupSpec spec = Dihedral{nn};
    Assignment flat(2 * nn, BigInt(0));
    for (std::size_t i = 0; i < nn; ++i) {
        flat[i] = base.a[i];
        flat[nn + i] = base.b[i];
    }
    Assignment uflat(2 * nn, BigInt(0));
    for (std::size_t i = 0; i < nn; ++i) uflat[i] = ua[i];
    Assignment prod = convolve(spec, uflat, flat);
    DihedralElem elem(nn, std::vector<BigInt>(prod.begin(), prod.begin() + nn),
                      std::vector<BigInt>(prod.begin() + nn, prod.end()));
    Witness w;
    w.elem = sparse_from_dense(elem);
    w.valuation = ValuationClaim{p, 2 * k + 1};
    w.provenance = "d2p2-valuation";
    return w;
}

/// Group-algebra product of witnesses over the same group; the claims
/// multiply. Valuation-style witnesses cannot be composed.
inline Witness compose(const std::vector<Witness>& ws) {
    if (ws.empty()) throw std::invalid_argument("compose needs at least one witness");
    for (const auto& w : ws) {
        if (w.elem.n != ws.front().elem.n)
            throw std::invalid_argument("group mismatch in compose");
        if (w.valuation) throw std::invalid_argument("cannot compose valuation witnesses");
    }
    if (ws.size() == 1) return ws.front();
    if (ws.front().elem.n > kDenseWitnessLimit)
        throw std::invalid_argument("compose requires a dense-size group");
    std::size_t n = ws.front().elem.n.convert_to<std::size_t>();
    GroupSpec spec = Dihedral{n};
    Assignment acc(2 * n, BigInt(0));
    acc[0] = 1;
    BigInt claimed = 1;
    std::string prov = "compose:";
    for (const auto& w : ws) {
        DihedralElem e = densify(w.elem);
        Assignment flat(2 * n);
        for (std::size_t i = 0; i < n; ++i) {
            flat[i] = e.a[i];
            flat[n + i] = e.b[i];
        }
        acc = convolve(spec, acc, flat);
        claimed *= w.claimed;
        prov += w.provenance + ";";
    }
    Witness out;
    out.elem = sparse_from_dense(DihedralElem(n, std::vector<BigInt>(acc.begin(), acc.begin() + n),
                                              std::vector<BigInt>(acc.begin() + n, acc.end())));
    out.claimed = claimed;
    out.provenance = prov;
    return out;
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace detail {
inline nlohmann::json bigint_json(const BigInt& v) {
    if (big_abs(v) <= BigInt(1) << 53) return v.convert_to<std::int64_t>();
    return v.str();
}

inline BigInt bigint_from_json(const nlohmann::json& j) {
    if (j.is_string()) return BigInt(j.get<std::string>());
    return BigInt(j.get<std::int64_t>());
}
}  // namespace detail

inline nlohmann::json witness_to_json(const Witness& w) {
    nlohmann::json j;
    j["n"] = detail::bigint_json(w.elem.n);
    j["provenance"] = w.provenance;
    if (w.valuation) {
        j["valuation"] = {{"p", w.valuation->p.str()}, {"exact", w.valuation->exact}};
    } else {
        j["claimed"] = w.claimed.str();
    }
    if (w.elem.n <= kDenseWitnessLimit) {
        DihedralElem e = densify(w.elem);
        nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
        for (const auto& v : e.a) a.push_back(detail::bigint_json(v));
        for (const auto& v : e.b) b.push_back(detail::bigint_json(v));
        j["a"] = std::move(a);
        j["b"] = std::move(b);
    } else {
        auto terms = [](const std::vector<std::pair<BigInt, BigInt>>& t) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& [i, c] : t)
                arr.push_back({detail::bigint_json(i), detail::bigint_json(c)});
            return arr;
        };
        j["a_terms"] = terms(w.elem.a);
        j["b_terms"] = terms(w.elem.b);
    }
    return j;
}

inline Witness witness_from_json(const nlohmann::json& j) {
    Witness w;
    w.elem.n = detail::bigint_from_json(j.at("n"));
    w.provenance = j.value("provenance", "");
    if (j.contains("valuation")) {
        w.valuation = ValuationClaim{BigInt(j["valuation"].at("p").get<std::string>()),
                                     j["valuation"].at("exact").get<unsigned>()};
    } else {
        w.claimed = detail::bigint_from_json(j.at("claimed"));
    }
    if (j.contains("a")) {
        std::map<BigInt, BigInt> ma, mb;
        const auto& a = j.at("a");
        const auto& b = j.at("b");
        for (std::size_t i = 0; i < a.size(); ++i) {
            BigInt c = detail::bigint_from_json(a[i]);
            if (c != 0) detail::sparse_add(ma, i, c);
        }
        for (std::size_t i = 0; i < b.size(); ++i) {
            BigInt c = detail::bigint_from_json(b[i]);
            if (c != 0) detail::sparse_add(mb, i, c);
        }
        w.elem.a = detail::sparse_sorted(ma);
        w.elem.b = detail::sparse_sorted(mb);
    } else {
        for (const auto& t : j.at("a_terms"))
            w.elem.a.emplace_back(detail::bigint_from_json(t[0]), detail::bigint_from_json(t[1]));
        for (const auto& t : j.at("b_terms"))
            w.elem.b.emplace_back(detail::bigint_from_json(t[0]), detail::bigint_from_json(t[1]));
    }
    return w;
}

}  // namespace gdet

#endif
