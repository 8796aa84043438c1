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

#ifndef GDET_GROUPALG_HPP
#define GDET_GROUPALG_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "gdet/arith.hpp"

namespace gdet {

/// Multiplication table of a finite group. Rows and columns are indexed by
/// element number; table[i][j] is the index of g_i * g_j.
struct CayleyTable {
    std::size_t order = 0;
    std::size_t identity = 0;
    std::vector<std::vector<std::size_t>> table;
    std::vector<std::size_t> inverse;

    std::size_t mul(std::size_t i, std::size_t j) const { return table[i][j]; }
    std::size_t inv(std::size_t i) const { return inverse[i]; }
};

struct Cyclic {
    std::size_t n;
};

struct AbelianProduct {
    std::vector<std::size_t> dims;
};

/// Dihedral group of order 2n, presented as rotations R^0..R^{n-1} followed
/// by reflections F, FR, ..., FR^{n-1}. This element order is part of the
/// public contract: assignments list the rotation block first.
struct Dihedral {
    std::size_t n;
};

struct Explicit {
    CayleyTable table;
};

using GroupSpec = std::variant<Cyclic, AbelianProduct, Dihedral, Explicit>;

using Assignment = std::vector<BigInt>;

inline constexpr std::size_t kMaxExplicitOrder = 64;
inline constexpr std::size_t kMaxTableOrder = 1024;

namespace detail {

inline void fill_inverses(CayleyTable& t) {
    t.inverse.assign(t.order, 0);
    for (std::size_t i = 0; i < t.order; ++i) {
        bool found = false;
        for (std::size_t j = 0; j < t.order; ++j) {
            if (t.table[i][j] == t.identity) {
                t.inverse[i] = j;
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("table row without inverse");
    }
}

}  // namespace detail

/// Checks the Latin-square and identity axioms, and (for order <= 64)
/// full associativity. Throws on violation.
inline void validate_table(const CayleyTable& t) {
    std::size_t n = t.order;
    if (t.table.size() != n) throw std::invalid_argument("table size mismatch");
    if (t.identity >= n) throw std::invalid_argument("identity index out of range");
    for (std::size_t i = 0; i < n; ++i) {
        if (t.table[i].size() != n) throw std::invalid_argument("table row size mismatch");
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t r = t.table[i][j], c = t.table[j][i];
            if (r >= n || c >= n) throw std::invalid_argument("table entry out of range");
            if (seen_row[r] || seen_col[c]) throw std::invalid_argument("table is not a Latin square");
            seen_row[r] = seen_col[c] = true;
        }
        if (t.table[t.identity][i] != i || t.table[i][t.identity] != i)
            throw std::invalid_argument("identity row/column violated");
    }
    if (n <= kMaxExplicitOrder) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (t.table[t.table[i][j]][k] != t.table[i][t.table[j][k]])
                        throw std::invalid_argument("table is not associative");
    }
}

inline std::size_t group_order(const GroupSpec& spec) {
    if (auto* c = std::get_if<Cyclic>(&spec)) return c->n;
    if (auto* a = std::get_if<AbelianProduct>(&spec)) {
        std::size_t o = 1;
        for (std::size_t d : a->dims) o *= d;
        return o;
    }
    if (auto* d = std::get_if<Dihedral>(&spec)) return 2 * d->n;
    return std::get<Explicit>(spec).table.order;
}

/// Index of the product g_i * g_j without materializing a table.
inline std::size_t spec_mul(const GroupSpec& spec, std::size_t i, std::size_t j) {
    if (auto* c = std::get_if<Cyclic>(&spec)) return (i + j) % c->n;
    if (auto* a = std::get_if<AbelianProduct>(&spec)) {
        std::size_t res = 0;
        std::size_t ii = i, jj = j;
        std::size_t scale = 1;
        // mixed radix, last dimension fastest
        std::vector<std::size_t> rad(a->dims.rbegin(), a->dims.rend());
        for (std::size_t d : rad) {
            std::size_t ui = ii % d, uj = jj % d;
            res += ((ui + uj) % d) * scale;
            scale *= d;
            ii /= d;
            jj /= d;
        }
        return res;
    }
    if (auto* dg = std::get_if<Dihedral>(&spec)) {
        std::size_t n = dg->n;
        bool fi = i >= n, fj = j >= n;
        std::size_t ri = i % n, rj = j % n;
        if (!fi && !fj) return (ri + rj) % n;             // R^i R^j
        if (!fi && fj) return n + (rj + n - ri) % n;      // R^i F R^j = F R^{j-i}
        if (fi && !fj) return n + (ri + rj) % n;          // F R^i R^j
        return (rj + n - ri) % n;                         // F R^i F R^j = R^{j-i}
    }
    return std::get<Explicit>(spec).table.mul(i, j);
}

inline std::size_t spec_identity(const GroupSpec& spec) {
    if (auto* e = std::get_if<Explicit>(&spec)) return e->table.identity;
    return 0;
}

/// Materializes the Cayley table for a group specification.
inline CayleyTable build_cayley(const GroupSpec& spec) {
    std::size_t n = group_order(spec);
    if (n == 0) throw std::invalid_argument("group order must be positive");
    if (auto* e = std::get_if<Explicit>(&spec)) {
        if (e->table.order > kMaxExplicitOrder)
            throw std::invalid_argument("explicit tables accepted only up to order 64");
        CayleyTable t = e->table;
        validate_table(t);
        detail::fill_inverses(t);
        return t;
    }
    if (n > kMaxTableOrder) throw std::invalid_argument("group too large to materialize");
    CayleyTable t;
    t.order = n;
    t.identity = spec_identity(spec);
    t.table.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.table[i][j] = spec_mul(spec, i, j);
    detail::fill_inverses(t);
    return t;
}

/// Group-algebra product: c_g = sum over uv = g of u_coeff * v_coeff.
inline Assignment convolve(const GroupSpec& spec, const Assignment& u, const Assignment& v) {
    std::size_t n = group_order(spec);
    if (u.size() != n || v.size() != n)
        throw std::invalid_argument("assignment length does not match group order");
    Assignment c(n, BigInt(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (v[j] == 0) continue;
            c[spec_mul(spec, i, j)] += u[i] * v[j];
        }
    }
    return c;
}

/// Left translation: the coefficient of g moves to h*g.
inline Assignment translate(const CayleyTable& t, const Assignment& a, std::size_t h) {
    if (a.size() != t.order) throw std::invalid_argument("assignment length mismatch");
    if (h >= t.order) throw std::invalid_argument("translation element out of range");
    Assignment out(t.order);
    for (std::size_t i = 0; i < t.order; ++i) out[t.mul(h, i)] = a[i];
    return out;
}

inline nlohmann::json table_to_json(const CayleyTable& t) {
    nlohmann::json j;
    j["order"] = t.order;
    j["identity"] = t.identity;
    j["table"] = t.table;
    return j;
}

inline CayleyTable table_from_json(const nlohmann::json& j) {
    CayleyTable t;
    t.order = j.at("order").get<std::size_t>();
    t.identity = j.at("identity").get<std::size_t>();
    t.table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
    validate_table(t);
    detail::fill_inverses(t);
    return t;
}

}  // namespace gdet

#endif
