#pragma once

#include "recollement/builtin.hpp"
#include "recollement/module.hpp"

#include <optional>
#include <string>
#include <vector>

namespace recoll::testing {

/// Hand-built T2(F_2) with basis order (e11, e12, e22); independent of the
/// path-algebra construction that backs the built-in T2_F2.
inline AlgebraPtr hand_t2() {
    std::vector<uint32_t> table(27, 0);
    auto set = [&](int i, int j, int k) { table[(i * 3 + j) * 3 + k] = 1; };
    set(0, 0, 0); // e11 e11 = e11
    set(0, 1, 1); // e11 e12 = e12
    set(1, 2, 1); // e12 e22 = e12
    set(2, 2, 2); // e22 e22 = e22
    return std::make_shared<Algebra>(
        Algebra::from_table(2, {"e11", "e12", "e22"}, table, {1, 0, 1}));
}

inline Element basis_of(const AlgebraPtr& a, const std::string& label) {
    return a->basis_element(*a->label_index(label));
}

/// Oracle: number of intertwiners m -> n counted by scanning every matrix.
/// Only valid when p^(dim m * dim n) is small.
inline std::size_t oracle_hom_count(const Module& m, const Module& n) {
    const uint32_t p = m.algebra()->p();
    const std::size_t md = m.dim(), nd = n.dim();
    unsigned long long total = 1;
    for (std::size_t i = 0; i < md * nd; ++i) total *= p;
    std::size_t count = 0;
    for (unsigned long long code = 0; code < total; ++code) {
        FpMat f(p, md, nd);
        unsigned long long w = code;
        for (std::size_t i = 0; i < md; ++i)
            for (std::size_t j = 0; j < nd; ++j) {
                f(i, j) = static_cast<uint32_t>(w % p);
                w /= p;
            }
        bool ok = true;
        for (std::size_t i = 0; i < m.algebra()->dim() && ok; ++i)
            ok = (m.action(i) * f == f * n.action(i));
        if (ok) ++count;
    }
    return count;
}

/// Oracle: dim over F_p of a set of size p^d.
inline std::size_t log_p(uint32_t p, std::size_t count) {
    std::size_t d = 0;
    while (count > 1) {
        count /= p;
        ++d;
    }
    return d;
}

/// Oracle: the largest nilpotent two-sided ideal found by scanning every
/// subspace; independent of the radical tiers in the library.
inline FpMat oracle_largest_nilpotent_ideal(const AlgebraPtr& a) {
    FpMat best = zero_subspace(a->p(), a->dim());
    for (const auto& sp : enumerate_subspaces(a->p(), a->dim(), a->dim())) {
        FpMat rows = rref(sp);
        // two-sided?
        bool ideal = true;
        for (std::size_t r = 0; r < rows.rows() && ideal; ++r)
            for (std::size_t i = 0; i < a->dim() && ideal; ++i) {
                ideal = subspace_contains(rows, a->mul(a->basis_element(i), rows.row(r))) &&
                        subspace_contains(rows, a->mul(rows.row(r), a->basis_element(i)));
            }
        if (!ideal) continue;
        // nilpotent? multiply the subspace into itself until stable or zero
        FpMat power = rows;
        bool nilpotent = false;
        for (std::size_t steps = 0; steps <= a->dim() + 1; ++steps) {
            if (power.rows() == 0) {
                nilpotent = true;
                break;
            }
            FpMat next(a->p(), 0, a->dim());
            for (std::size_t x = 0; x < power.rows(); ++x)
                for (std::size_t y = 0; y < rows.rows(); ++y)
                    next.append_row(a->mul(power.row(x), rows.row(y)));
            next = rref(next);
            if (next == power) break;
            power = next;
        }
        if (nilpotent && rows.rows() > best.rows()) best = rows;
    }
    return best;
}

} // namespace recoll::testing
