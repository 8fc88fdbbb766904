#include "recollement/ideal.hpp"

#include "recollement/error.hpp"
#include "recollement/module.hpp"

#include <algorithm>

namespace recoll {

namespace {

void require_same_algebra(const Ideal& i, const Ideal& j) {
    if (!i.algebra->same_structure(*j.algebra))
        throw Error(ErrorCode::AlgebraMismatch, "ideals live over different algebras");
}

bool rows_less(const FpMat& a, const FpMat& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    return a.data() < b.data();
}

} // namespace

bool is_ideal_subspace(const Algebra& a, const FpMat& rows) {
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        Element x = rows.row(r);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (!subspace_contains(rows, a.mul(a.basis_element(i), x))) return false;
            if (!subspace_contains(rows, a.mul(x, a.basis_element(i)))) return false;
        }
    }
    return true;
}

Ideal ideal_from_subspace(const AlgebraPtr& a, const FpMat& rows) {
    FpMat e = rref(rows);
    if (!is_ideal_subspace(*a, e))
        throw Error(ErrorCode::NotAnIdeal, "subspace is not closed under multiplication");
    return Ideal{a, e};
}

Ideal zero_ideal(const AlgebraPtr& a) { return Ideal{a, zero_subspace(a->p(), a->dim())}; }

Ideal unit_ideal(const AlgebraPtr& a) { return Ideal{a, full_subspace(a->p(), a->dim())}; }

Ideal ideal_generated(const AlgebraPtr& a, const std::vector<Element>& elements) {
    FpMat span(a->p(), 0, a->dim());
    for (const auto& x : elements) {
        if (x.size() != a->dim())
            throw Error(ErrorCode::BadArgument, "element has wrong length");
        span.append_row(x);
    }
    span = rref(span);
    for (bool grew = true; grew;) {
        grew = false;
        FpMat next = span;
        for (std::size_t r = 0; r < span.rows(); ++r) {
            Element x = span.row(r);
            for (std::size_t i = 0; i < a->dim(); ++i) {
                for (Element y : {a->mul(a->basis_element(i), x), a->mul(x, a->basis_element(i))}) {
                    if (!subspace_contains(next, y)) {
                        next.append_row(y);
                        next = rref(next);
                        grew = true;
                    }
                }
            }
        }
        span = next;
    }
    return Ideal{a, span};
}

Ideal ideal_product(const Ideal& i, const Ideal& j) {
    require_same_algebra(i, j);
    const AlgebraPtr& a = i.algebra;
    FpMat span(a->p(), 0, a->dim());
    for (std::size_t r = 0; r < i.rows.rows(); ++r)
        for (std::size_t s = 0; s < j.rows.rows(); ++s)
            span.append_row(a->mul(i.rows.row(r), j.rows.row(s)));
    return Ideal{a, rref(span)};
}

bool is_idempotent_ideal(const Ideal& i) { return ideal_product(i, i) == i; }

std::optional<std::size_t> nilpotency_index(const Ideal& i) {
    if (i.dim() == 0) return 1;
    Ideal power = i;
    std::size_t k = 1;
    while (true) {
        Ideal next = ideal_product(power, i);
        ++k;
        if (next.dim() == 0) return k;
        if (next == power) return std::nullopt; // stabilized nonzero
        power = next;
    }
}

Ideal idempotent_to_ideal(const AlgebraPtr& a, const Element& e) {
    if (!a->is_idempotent(e))
        throw Error(ErrorCode::NotIdempotent, "AeA needs an idempotent element");
    return ideal_generated(a, {e});
}

std::vector<Ideal> enumerate_idempotent_ideals(const AlgebraPtr& a, IdealEnumMode mode,
                                               unsigned long long budget) {
    std::vector<Ideal> out;
    if (mode == IdealEnumMode::Brute) {
        if (count_subspaces(a->p(), a->dim(), a->dim()) > budget)
            throw Error(ErrorCode::BudgetExceeded,
                        "subspace scan exceeds budget; use vertex mode");
        for (auto& sp : enumerate_subspaces(a->p(), a->dim(), a->dim())) {
            FpMat e = rref(sp);
            if (!is_ideal_subspace(*a, e)) continue;
            Ideal cand{a, e};
            if (is_idempotent_ideal(cand)) out.push_back(std::move(cand));
        }
    } else {
        for (const auto& e : vertex_idempotents(*a)) {
            Ideal cand = idempotent_to_ideal(a, e);
            bool known = false;
            for (const auto& k : out)
                if (k == cand) { known = true; break; }
            if (!known) out.push_back(std::move(cand));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Ideal& x, const Ideal& y) { return rows_less(x.rows, y.rows); });
    return out;
}

std::pair<std::size_t, std::size_t> tor1_self_quotient(const Ideal& i) {
    const AlgebraPtr& a = i.algebra;
    // Route 1: dim I/I^2.
    Ideal sq = ideal_product(i, i);
    std::size_t route1 = i.dim() - sq.dim();

    // Route 2: Tor_1(A/I, A/I) from a free presentation of the right module
    // A/I, using X (x)_A A/I = X/XI.
    std::size_t route2 = 0;
    if (a->dim() > 0) {
        Module reg = Module::regular(a);
        SubmoduleBasis ibasis = submodule_from_rows(reg, i.rows);
        Module aq = quotient_module(reg, ibasis).module;
        if (aq.dim() == 0) {
            route2 = 0;
        } else {
            FreePresentation pres = free_presentation(aq);
            SubmoduleBasis fi = trace_ideal_part(pres.free, i);
            // K*I as a subspace of the free module
            FpMat ki(a->p(), 0, pres.free.dim());
            for (std::size_t r = 0; r < pres.ker.rows.rows(); ++r)
                for (std::size_t u = 0; u < i.rows.rows(); ++u)
                    ki.append_row(apply_row(pres.ker.rows.row(r),
                                            pres.free.act_element(i.rows.row(u))));
            FpMat ki_red = rref(ki);
            FpMat inter = subspace_intersection(pres.ker.rows, fi.rows);
            route2 = inter.rows() - ki_red.rows();
        }
    }
    if (route1 != route2)
        throw Error(ErrorCode::InternalInconsistency,
                    "dim I/I^2 = " + std::to_string(route1) +
                        " but Tor_1(A/I, A/I) = " + std::to_string(route2));
    return {route1, route2};
}

CheckList check_bireflective_image(const Ideal& i, const std::vector<Module>& catalog) {
    CheckList out;
    const AlgebraPtr& a = i.algebra;
    auto killed = [&](const Module& m) { return trace_ideal_part(m, i).dim() == 0; };

    std::vector<std::size_t> members;
    for (std::size_t c = 0; c < catalog.size(); ++c)
        if (killed(catalog[c])) members.push_back(c);

    std::size_t cl_ok = 0, cl_total = 0;
    Json cl_bad;
    for (auto x : members)
        for (auto y : members) {
            ++cl_total;
            bool ok = killed(direct_sum(catalog[x], catalog[y]).module);
            for (const auto& f : hom_space(catalog[x], catalog[y])) {
                if (!killed(submodule_module(kernel(f)).module)) ok = false;
                if (!killed(cokernel(f).module)) ok = false;
            }
            if (ok)
                ++cl_ok;
            else if (cl_bad.empty())
                cl_bad = Json{{"from_index", x}, {"to_index", y}};
        }
    out.push_back(make_check(
        "bireflective.closure",
        "the modules killed by I are closed under kernels, cokernels and "
        "finite direct sums",
        cl_ok == cl_total,
        cl_ok == cl_total ? Json{{"pairs", cl_total}}
                          : Json{{"pairs", cl_total}, {"counterexample", cl_bad}}));

    std::size_t rf_ok = 0;
    Json rf_bad;
    for (std::size_t c = 0; c < catalog.size(); ++c) {
        const Module& m = catalog[c];
        SubmoduleBasis mi = trace_ideal_part(m, i);
        QuotientModule refl = quotient_module(m, mi);
        bool ok = killed(refl.module) && refl.projection.is_surjective() &&
                  left_nullspace(refl.projection.mat) == mi.rows;
        // Universal property against every catalog member of the subcategory.
        for (auto n : members) {
            if (!ok) break;
            auto from_refl = hom_space(refl.module, catalog[n]);
            auto from_m = hom_space(m, catalog[n]);
            if (from_refl.size() != from_m.size()) { ok = false; break; }
            if (from_refl.empty()) continue;
            FpMat rows(a->p(), from_m.size(),
                       std::max<std::size_t>(m.dim() * catalog[n].dim(), 1));
            for (std::size_t u = 0; u < from_m.size(); ++u)
                rows.set_row(u, from_m[u].mat.data());
            FpMat images(a->p(), from_refl.size(), from_m.size());
            bool solvable = true;
            for (std::size_t u = 0; u < from_refl.size() && solvable; ++u) {
                FpMat comp = refl.projection.mat * from_refl[u].mat;
                std::vector<uint32_t> coords;
                solvable = coords_in_rowspace(rows, comp.data(), &coords);
                if (solvable) images.set_row(u, coords);
            }
            ok = solvable && rank(images) == from_refl.size();
        }
        if (ok)
            ++rf_ok;
        else if (rf_bad.empty())
            rf_bad = Json{{"catalog_index", c}};
    }
    out.push_back(make_check(
        "bireflective.reflection",
        "the unit M -> M/MI kills I, has kernel M*I, is surjective, and is "
        "the reflection into the subcategory",
        rf_ok == catalog.size(),
        rf_ok == catalog.size()
            ? Json{{"modules", catalog.size()}}
            : Json{{"modules", catalog.size()}, {"counterexample", rf_bad}}));
    return out;
}

} // namespace recoll
