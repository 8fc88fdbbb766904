#include "recollement/module.hpp"

#include "recollement/error.hpp"

#include <algorithm>
#include <map>

namespace recoll {

namespace {

void require_same_algebra(const Module& m, const Module& n) {
    if (!m.algebra()->same_structure(*n.algebra()))
        throw Error(ErrorCode::AlgebraMismatch, "modules live over different algebras");
}

std::vector<uint32_t> vectorize(const FpMat& m) { return m.data(); }

FpMat devectorize(uint32_t p, std::size_t rows, std::size_t cols,
                  const std::vector<uint32_t>& v) {
    FpMat m(p, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
    return m;
}

} // namespace

Module Module::make(AlgebraPtr a, std::vector<FpMat> action) {
    if (!a) throw Error(ErrorCode::BadArgument, "module needs an algebra");
    if (action.size() != a->dim())
        throw Error(ErrorCode::BadArgument, "need one action matrix per basis element");
    std::size_t d = action.empty() ? 0 : action[0].rows();
    for (const auto& m : action)
        if (m.rows() != d || m.cols() != d)
            throw Error(ErrorCode::BadArgument, "action matrices must be square, equal size");

    Module mod;
    mod.alg_ = std::move(a);
    mod.dim_ = d;
    mod.action_ = std::move(action);

    const Algebra& alg = *mod.alg_;
    if (alg.dim() == 0 && d > 0)
        throw Error(ErrorCode::BadArgument, "only the zero module exists over the zero algebra");
    if (alg.dim() > 0) {
        if (!mod.act_element(alg.unit()).is_identity())
            throw Error(ErrorCode::BadUnit, "unit does not act as the identity");
        for (std::size_t i = 0; i < alg.dim(); ++i)
            for (std::size_t j = 0; j < alg.dim(); ++j) {
                FpMat lhs = mod.action_[i] * mod.action_[j];
                FpMat rhs(alg.p(), d, d);
                for (std::size_t k = 0; k < alg.dim(); ++k) {
                    uint32_t c = alg.c(i, j, k);
                    if (c) rhs = rhs + mod.action_[k].scaled(c);
                }
                if (lhs != rhs)
                    throw Error(ErrorCode::BadArgument,
                                "representation law fails at basis pair (" +
                                    alg.labels()[i] + ", " + alg.labels()[j] + ")",
                                "{\"i\":" + std::to_string(i) + ",\"j\":" +
                                    std::to_string(j) + "}");
            }
    }
    return mod;
}

Module Module::zero(AlgebraPtr a) {
    std::vector<FpMat> action(a->dim(), FpMat(a->p(), 0, 0));
    return make(std::move(a), std::move(action));
}

Module Module::regular(AlgebraPtr a) {
    std::vector<FpMat> action;
    for (std::size_t i = 0; i < a->dim(); ++i) action.push_back(a->right_mult_matrix(i));
    return make(std::move(a), std::move(action));
}

FpMat Module::act_element(const Element& x) const {
    FpMat r(alg_->p(), dim_, dim_);
    for (std::size_t i = 0; i < alg_->dim(); ++i)
        if (x[i]) r = r + action_[i].scaled(x[i]);
    return r;
}

bool Module::operator==(const Module& o) const {
    return alg_->same_structure(*o.alg_) && dim_ == o.dim_ && action_ == o.action_;
}

ModuleMap ModuleMap::make(Module src, Module tgt, FpMat m) {
    require_same_algebra(src, tgt);
    if (m.rows() != src.dim() || m.cols() != tgt.dim())
        throw Error(ErrorCode::BadArgument, "map matrix has wrong shape");
    for (std::size_t i = 0; i < src.algebra()->dim(); ++i)
        if (src.action(i) * m != m * tgt.action(i))
            throw Error(ErrorCode::BadArgument, "matrix does not intertwine the actions");
    return ModuleMap{std::move(src), std::move(tgt), std::move(m)};
}

ModuleMap ModuleMap::zero(const Module& src, const Module& tgt) {
    return make(src, tgt, FpMat(src.algebra()->p(), src.dim(), tgt.dim()));
}

ModuleMap ModuleMap::id(const Module& m) {
    return make(m, m, FpMat::identity(m.algebra()->p(), m.dim()));
}

ModuleMap ModuleMap::then(const ModuleMap& g) const {
    return make(source, g.target, mat * g.mat);
}

bool ModuleMap::is_injective() const { return rank(mat) == source.dim(); }
bool ModuleMap::is_surjective() const { return rank(mat) == target.dim(); }
bool ModuleMap::is_isomorphism() const {
    return source.dim() == target.dim() && rank(mat) == source.dim();
}

bool is_stable_subspace(const Module& m, const FpMat& rows) {
    for (std::size_t i = 0; i < m.algebra()->dim(); ++i)
        for (std::size_t r = 0; r < rows.rows(); ++r)
            if (!subspace_contains(rows, apply_row(rows.row(r), m.action(i))))
                return false;
    return true;
}

SubmoduleBasis submodule_from_rows(const Module& m, const FpMat& rows) {
    FpMat e = rref(rows);
    if (!is_stable_subspace(m, e))
        throw Error(ErrorCode::BadArgument, "subspace is not action-stable");
    return SubmoduleBasis{m, e};
}

std::vector<ModuleMap> hom_space(const Module& m, const Module& n) {
    require_same_algebra(m, n);
    const uint32_t p = m.algebra()->p();
    const std::size_t md = m.dim(), nd = n.dim(), na = m.algebra()->dim();
    if (md == 0 || nd == 0) {
        // only the zero map
        return {};
    }
    // Unknown F is md x nd; constraint action_m(i)*F - F*action_n(i) = 0.
    FpMat sys(p, na * md * nd, md * nd);
    std::size_t row = 0;
    for (std::size_t i = 0; i < na; ++i) {
        const FpMat& A = m.action(i);
        const FpMat& B = n.action(i);
        for (std::size_t a = 0; a < md; ++a)
            for (std::size_t b = 0; b < nd; ++b, ++row)
                for (std::size_t cidx = 0; cidx < md; ++cidx)
                    for (std::size_t d = 0; d < nd; ++d) {
                        uint32_t coef = 0;
                        if (d == b) coef = fp::add(p, coef, A(a, cidx));
                        if (cidx == a) coef = fp::sub(p, coef, B(d, b));
                        if (coef) sys(row, cidx * nd + d) = coef;
                    }
    }
    FpMat sol = right_nullspace_rows(sys);
    std::vector<ModuleMap> out;
    for (std::size_t i = 0; i < sol.rows(); ++i)
        out.push_back(ModuleMap::make(m, n, devectorize(p, md, nd, sol.row(i))));
    return out;
}

std::size_t hom_dim(const Module& m, const Module& n) { return hom_space(m, n).size(); }

SubmoduleBasis submodule_generated(const Module& m,
                                   const std::vector<std::vector<uint32_t>>& gens) {
    FpMat span(m.algebra()->p(), 0, m.dim());
    for (const auto& g : gens) {
        if (g.size() != m.dim())
            throw Error(ErrorCode::BadArgument, "generator has wrong length");
        span.append_row(g);
    }
    span = rref(span);
    // closure iteration under all basis actions
    for (bool grew = true; grew;) {
        grew = false;
        FpMat next = span;
        for (std::size_t i = 0; i < m.algebra()->dim(); ++i)
            for (std::size_t r = 0; r < span.rows(); ++r) {
                auto v = apply_row(span.row(r), m.action(i));
                if (!subspace_contains(next, v)) {
                    next.append_row(v);
                    next = rref(next);
                    grew = true;
                }
            }
        span = next;
    }
    return SubmoduleBasis{m, span};
}

SubmoduleModule submodule_module(const SubmoduleBasis& s) {
    const Module& amb = s.ambient;
    const uint32_t p = amb.algebra()->p();
    const std::size_t d = s.rows.rows();
    std::vector<FpMat> action;
    for (std::size_t i = 0; i < amb.algebra()->dim(); ++i) {
        FpMat act(p, d, d);
        for (std::size_t r = 0; r < d; ++r) {
            auto v = apply_row(s.rows.row(r), amb.action(i));
            std::vector<uint32_t> coords;
            if (!coords_in_rowspace(s.rows, v, &coords))
                throw Error(ErrorCode::BadArgument, "subspace is not action-stable");
            act.set_row(r, coords);
        }
        action.push_back(std::move(act));
    }
    Module sub = Module::make(amb.algebra(), std::move(action));
    ModuleMap incl = ModuleMap::make(sub, amb, s.rows);
    return SubmoduleModule{std::move(sub), std::move(incl)};
}

QuotientModule quotient_module(const Module& m, const SubmoduleBasis& s) {
    const uint32_t p = m.algebra()->p();
    const std::size_t n = m.dim();
    auto piv = pivot_columns(s.rows);
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::size_t> reps;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_piv[c]) reps.push_back(c);
    const std::size_t q = reps.size();

    auto project = [&](const std::vector<uint32_t>& v) {
        auto r = reduce_mod(s.rows, v);
        std::vector<uint32_t> out(q);
        for (std::size_t t = 0; t < q; ++t) out[t] = r[reps[t]];
        return out;
    };

    std::vector<FpMat> action;
    for (std::size_t i = 0; i < m.algebra()->dim(); ++i) {
        FpMat act(p, q, q);
        for (std::size_t t = 0; t < q; ++t) {
            std::vector<uint32_t> e(n, 0);
            e[reps[t]] = 1;
            act.set_row(t, project(apply_row(e, m.action(i))));
        }
        action.push_back(std::move(act));
    }
    Module quot = Module::make(m.algebra(), std::move(action));
    FpMat pr(p, n, q);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<uint32_t> e(n, 0);
        e[j] = 1;
        pr.set_row(j, project(e));
    }
    ModuleMap proj = ModuleMap::make(m, quot, std::move(pr));
    return QuotientModule{std::move(quot), std::move(proj)};
}

SubmoduleBasis kernel(const ModuleMap& f) {
    return SubmoduleBasis{f.source, left_nullspace(f.mat)};
}

SubmoduleBasis image(const ModuleMap& f) {
    return SubmoduleBasis{f.target, rref(f.mat)};
}

QuotientModule cokernel(const ModuleMap& f) {
    return quotient_module(f.target, image(f));
}

DirectSum direct_sum(const Module& m, const Module& n) {
    require_same_algebra(m, n);
    const uint32_t p = m.algebra()->p();
    const std::size_t dm = m.dim(), dn = n.dim();
    std::vector<FpMat> action;
    for (std::size_t i = 0; i < m.algebra()->dim(); ++i) {
        FpMat a(p, dm + dn, dm + dn);
        for (std::size_t r = 0; r < dm; ++r)
            for (std::size_t c = 0; c < dm; ++c) a(r, c) = m.action(i)(r, c);
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c = 0; c < dn; ++c) a(dm + r, dm + c) = n.action(i)(r, c);
        action.push_back(std::move(a));
    }
    Module sum = Module::make(m.algebra(), std::move(action));
    FpMat i1(p, dm, dm + dn), i2(p, dn, dm + dn), p1(p, dm + dn, dm), p2(p, dm + dn, dn);
    for (std::size_t r = 0; r < dm; ++r) { i1(r, r) = 1; p1(r, r) = 1; }
    for (std::size_t r = 0; r < dn; ++r) { i2(r, dm + r) = 1; p2(dm + r, r) = 1; }
    return DirectSum{sum,
                     ModuleMap::make(m, sum, std::move(i1)),
                     ModuleMap::make(n, sum, std::move(i2)),
                     ModuleMap::make(sum, m, std::move(p1)),
                     ModuleMap::make(sum, n, std::move(p2))};
}

// ---------------------------------------------------------------------------
// Bimodules, tensor, hom
// ---------------------------------------------------------------------------

Bimodule Bimodule::make(AlgebraPtr left, AlgebraPtr right, std::size_t dim,
                        std::vector<FpMat> left_action,
                        std::vector<FpMat> right_action) {
    Bimodule b;
    b.left_algebra = std::move(left);
    b.right_algebra = std::move(right);
    b.dim = dim;
    b.left_action = std::move(left_action);
    b.right_action = std::move(right_action);

    // Right action is a module structure; reuse the module validator.
    Module::make(b.right_algebra, b.right_action);
    // Left action: anti-multiplicative law and unit.
    const Algebra& L = *b.left_algebra;
    if (b.left_action.size() != L.dim())
        throw Error(ErrorCode::BadArgument, "need one left action matrix per basis element");
    if (L.dim() > 0) {
        if (!b.left_act_element(L.unit()).is_identity())
            throw Error(ErrorCode::BadUnit, "left unit does not act as identity");
        for (std::size_t i = 0; i < L.dim(); ++i)
            for (std::size_t j = 0; j < L.dim(); ++j) {
                FpMat lhs = b.left_action[j] * b.left_action[i];
                FpMat rhs(L.p(), dim, dim);
                for (std::size_t k = 0; k < L.dim(); ++k) {
                    uint32_t c = L.c(i, j, k);
                    if (c) rhs = rhs + b.left_action[k].scaled(c);
                }
                if (lhs != rhs)
                    throw Error(ErrorCode::BadArgument, "left action law fails");
            }
    }
    // The two actions must commute.
    for (const auto& la : b.left_action)
        for (const auto& ra : b.right_action)
            if (la * ra != ra * la)
                throw Error(ErrorCode::BadArgument, "left and right actions do not commute");
    return b;
}

Module Bimodule::as_right_module() const {
    return Module::make(right_algebra, right_action);
}

FpMat Bimodule::left_act_element(const Element& x) const {
    FpMat r(left_algebra->p(), dim, dim);
    for (std::size_t i = 0; i < left_algebra->dim(); ++i)
        if (x[i]) r = r + left_action[i].scaled(x[i]);
    return r;
}

FpMat Bimodule::right_act_element(const Element& x) const {
    FpMat r(right_algebra->p(), dim, dim);
    for (std::size_t i = 0; i < right_algebra->dim(); ++i)
        if (x[i]) r = r + right_action[i].scaled(x[i]);
    return r;
}

TensorResult tensor_over(const Module& x, const Bimodule& n) {
    if (!x.algebra()->same_structure(*n.left_algebra))
        throw Error(ErrorCode::AlgebraMismatch,
                    "tensor needs x over the bimodule's left algebra");
    const uint32_t p = x.algebra()->p();
    const std::size_t s = x.dim(), t = n.dim;
    const std::size_t big = s * t;
    const AlgebraPtr& A = n.right_algebra;

    // Balancing relations (x.b (x) y) - (x (x) b.y).
    FpMat w(p, 0, big);
    for (std::size_t i = 0; i < x.algebra()->dim(); ++i) {
        const FpMat& X = x.action(i);
        const FpMat& L = n.left_action[i];
        for (std::size_t a = 0; a < s; ++a)
            for (std::size_t b = 0; b < t; ++b) {
                std::vector<uint32_t> row(big, 0);
                for (std::size_t g = 0; g < s; ++g)
                    if (X(a, g)) row[g * t + b] = fp::add(p, row[g * t + b], X(a, g));
                for (std::size_t d = 0; d < t; ++d)
                    if (L(b, d)) row[a * t + d] = fp::sub(p, row[a * t + d], L(b, d));
                bool z = std::all_of(row.begin(), row.end(),
                                     [](uint32_t v) { return v == 0; });
                if (!z) w.append_row(row);
            }
    }
    FpMat wred = rref(w);
    auto piv = pivot_columns(wred);
    std::vector<bool> is_piv(big, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::size_t> reps;
    for (std::size_t c = 0; c < big; ++c)
        if (!is_piv[c]) reps.push_back(c);
    const std::size_t q = reps.size();

    auto project = [&](const std::vector<uint32_t>& v) {
        auto r = reduce_mod(wred, v);
        std::vector<uint32_t> out(q);
        for (std::size_t u = 0; u < q; ++u) out[u] = r[reps[u]];
        return out;
    };

    std::vector<FpMat> action;
    for (std::size_t j = 0; j < A->dim(); ++j) {
        const FpMat& R = n.right_action[j];
        FpMat act(p, q, q);
        for (std::size_t u = 0; u < q; ++u) {
            std::size_t a = reps[u] / t, b = reps[u] % t;
            std::vector<uint32_t> v(big, 0);
            for (std::size_t d = 0; d < t; ++d)
                if (R(b, d)) v[a * t + d] = R(b, d);
            act.set_row(u, project(v));
        }
        action.push_back(std::move(act));
    }
    FpMat proj_mat(p, big, q);
    for (std::size_t c = 0; c < big; ++c) {
        std::vector<uint32_t> e(big, 0);
        e[c] = 1;
        proj_mat.set_row(c, project(e));
    }
    return TensorResult{Module::make(A, std::move(action)), std::move(proj_mat), reps};
}

HomResult hom_over(const Bimodule& n, const Module& x) {
    if (!x.algebra()->same_structure(*n.right_algebra))
        throw Error(ErrorCode::AlgebraMismatch,
                    "hom needs x over the bimodule's right algebra");
    const uint32_t p = x.algebra()->p();
    const std::size_t nd = n.dim, xd = x.dim();
    const AlgebraPtr& A = n.left_algebra;
    const AlgebraPtr& B = x.algebra();

    // Solve right-B intertwiners F: n -> x.
    std::vector<FpMat> basis;
    if (nd > 0 && xd > 0) {
        FpMat sys(p, B->dim() * nd * xd, nd * xd);
        std::size_t row = 0;
        for (std::size_t i = 0; i < B->dim(); ++i) {
            const FpMat& R = n.right_action[i];
            const FpMat& X = x.action(i);
            for (std::size_t a = 0; a < nd; ++a)
                for (std::size_t b = 0; b < xd; ++b, ++row)
                    for (std::size_t c = 0; c < nd; ++c)
                        for (std::size_t d = 0; d < xd; ++d) {
                            uint32_t coef = 0;
                            if (d == b) coef = fp::add(p, coef, R(a, c));
                            if (c == a) coef = fp::sub(p, coef, X(d, b));
                            if (coef) sys(row, c * xd + d) = coef;
                        }
        }
        FpMat sol = right_nullspace_rows(sys);
        for (std::size_t i = 0; i < sol.rows(); ++i)
            basis.push_back(devectorize(p, nd, xd, sol.row(i)));
    }
    const std::size_t q = basis.size();

    // Right A-action (f.a) = (v -> f(a.v)), i.e. F |-> left_act(a) * F.
    FpMat vec_basis(p, q, nd * xd);
    for (std::size_t i = 0; i < q; ++i) vec_basis.set_row(i, vectorize(basis[i]));
    std::vector<FpMat> action;
    for (std::size_t j = 0; j < A->dim(); ++j) {
        FpMat act(p, q, q);
        for (std::size_t u = 0; u < q; ++u) {
            FpMat img = n.left_action[j] * basis[u];
            std::vector<uint32_t> coords;
            if (!coords_in_rowspace(vec_basis, vectorize(img), &coords))
                throw Error(ErrorCode::InternalInconsistency,
                            "hom space not stable under the left action");
            act.set_row(u, coords);
        }
        action.push_back(std::move(act));
    }
    return HomResult{Module::make(A, std::move(action)), std::move(basis)};
}

// ---------------------------------------------------------------------------
// Ext^1 and extensions
// ---------------------------------------------------------------------------

SubmoduleBasis trace_ideal_part(const Module& m, const Ideal& i) {
    if (!m.algebra()->same_structure(*i.algebra))
        throw Error(ErrorCode::AlgebraMismatch, "ideal lives over a different algebra");
    FpMat span(m.algebra()->p(), 0, m.dim());
    for (std::size_t u = 0; u < i.rows.rows(); ++u) {
        FpMat act = m.act_element(i.rows.row(u));
        for (std::size_t r = 0; r < m.dim(); ++r) span.append_row(act.row(r));
    }
    return SubmoduleBasis{m, rref(span)};
}

SubmoduleBasis annihilated_part(const Module& m, const Ideal& i) {
    if (!m.algebra()->same_structure(*i.algebra))
        throw Error(ErrorCode::AlgebraMismatch, "ideal lives over a different algebra");
    const uint32_t p = m.algebra()->p();
    // x with x * act(r) = 0 for every ideal basis row r: stack the action
    // matrices side by side and take the left nullspace.
    FpMat stacked(p, m.dim(), m.dim() * i.rows.rows());
    for (std::size_t u = 0; u < i.rows.rows(); ++u) {
        FpMat act = m.act_element(i.rows.row(u));
        for (std::size_t r = 0; r < m.dim(); ++r)
            for (std::size_t c = 0; c < m.dim(); ++c)
                stacked(r, u * m.dim() + c) = act(r, c);
    }
    if (i.rows.rows() == 0) return SubmoduleBasis{m, full_subspace(p, m.dim())};
    return SubmoduleBasis{m, left_nullspace(stacked)};
}

FreePresentation free_presentation(const Module& m) {
    const AlgebraPtr& a = m.algebra();
    const uint32_t p = a->p();
    const std::size_t s = m.dim(), da = a->dim();
    Module freem = Module::zero(a);
    if (s > 0) {
        // s copies of the regular module
        std::vector<FpMat> action;
        for (std::size_t i = 0; i < da; ++i) {
            FpMat blk(p, s * da, s * da);
            FpMat reg = a->right_mult_matrix(i);
            for (std::size_t copy = 0; copy < s; ++copy)
                for (std::size_t r = 0; r < da; ++r)
                    for (std::size_t c = 0; c < da; ++c)
                        blk(copy * da + r, copy * da + c) = reg(r, c);
            action.push_back(std::move(blk));
        }
        freem = Module::make(a, std::move(action));
    }
    // (copy alpha, basis j) |-> v_alpha * b_j
    FpMat pi(p, s * da, s);
    for (std::size_t alpha = 0; alpha < s; ++alpha) {
        std::vector<uint32_t> v(s, 0);
        v[alpha] = 1;
        for (std::size_t j = 0; j < da; ++j)
            pi.set_row(alpha * da + j, apply_row(v, m.action(j)));
    }
    ModuleMap onto = ModuleMap::make(freem, m, std::move(pi));
    if (!onto.is_surjective())
        throw Error(ErrorCode::InternalInconsistency, "free presentation not surjective");
    return FreePresentation{freem, onto, kernel(onto)};
}

std::size_t ext1(const Module& m, const Module& n) {
    require_same_algebra(m, n);
    if (m.dim() == 0 || n.dim() == 0) return 0;
    FreePresentation fp_ = free_presentation(m);
    SubmoduleModule k = submodule_module(fp_.ker);
    auto hom_f = hom_space(fp_.free, n);
    auto hom_k = hom_space(k.module, n);
    if (hom_k.empty()) return 0;
    const uint32_t p = m.algebra()->p();
    const std::size_t kn = k.module.dim() * n.dim();
    FpMat hom_k_basis(p, hom_k.size(), kn);
    for (std::size_t i = 0; i < hom_k.size(); ++i)
        hom_k_basis.set_row(i, vectorize(hom_k[i].mat));
    FpMat restr(p, hom_f.size(), hom_k.size());
    for (std::size_t i = 0; i < hom_f.size(); ++i) {
        FpMat r = k.inclusion.mat * hom_f[i].mat;
        std::vector<uint32_t> coords;
        if (!coords_in_rowspace(hom_k_basis, vectorize(r), &coords))
            throw Error(ErrorCode::InternalInconsistency, "restriction left the hom space");
        restr.set_row(i, coords);
    }
    return hom_k.size() - rank(restr);
}

namespace {

struct CocycleSpace {
    FpMat cocycles;     // rows: vectorized (C_1..C_da), C_i is q.dim x s.dim
    FpMat coboundaries; // subspace of the above
    std::size_t qd, sd, da;
    uint32_t p;
};

CocycleSpace cocycle_space(const Module& q, const Module& s) {
    require_same_algebra(q, s);
    const AlgebraPtr& alg = q.algebra();
    const uint32_t p = alg->p();
    const std::size_t da = alg->dim(), qd = q.dim(), sd = s.dim();
    const std::size_t nvars = da * qd * sd;
    CocycleSpace cs{FpMat(p, 0, nvars), FpMat(p, 0, nvars), qd, sd, da, p};
    if (qd == 0 || sd == 0) return cs;

    auto var = [&](std::size_t i, std::size_t r, std::size_t c) {
        return (i * qd + r) * sd + c;
    };

    // C_i S_j + Q_i C_j = sum_k c_{ijk} C_k, plus sum_i unit_i C_i = 0.
    std::vector<std::vector<uint32_t>> rows;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t r = 0; r < qd; ++r)
                for (std::size_t c = 0; c < sd; ++c) {
                    std::vector<uint32_t> eq(nvars, 0);
                    for (std::size_t t = 0; t < sd; ++t)
                        if (s.action(j)(t, c))
                            eq[var(i, r, t)] =
                                fp::add(p, eq[var(i, r, t)], s.action(j)(t, c));
                    for (std::size_t t = 0; t < qd; ++t)
                        if (q.action(i)(r, t))
                            eq[var(j, t, c)] =
                                fp::add(p, eq[var(j, t, c)], q.action(i)(r, t));
                    for (std::size_t k = 0; k < da; ++k) {
                        uint32_t cf = alg->c(i, j, k);
                        if (cf) eq[var(k, r, c)] = fp::sub(p, eq[var(k, r, c)], cf);
                    }
                    rows.push_back(std::move(eq));
                }
    for (std::size_t r = 0; r < qd; ++r)
        for (std::size_t c = 0; c < sd; ++c) {
            std::vector<uint32_t> eq(nvars, 0);
            for (std::size_t i = 0; i < da; ++i)
                if (alg->unit()[i]) eq[var(i, r, c)] = alg->unit()[i];
            rows.push_back(std::move(eq));
        }
    FpMat sys(p, rows.size(), nvars);
    for (std::size_t i = 0; i < rows.size(); ++i) sys.set_row(i, rows[i]);
    cs.cocycles = right_nullspace_rows(sys);

    // Coboundaries: C_i = Q_i T - T S_i over T: qd x sd.
    FpMat cob(p, 0, nvars);
    for (std::size_t tr = 0; tr < qd; ++tr)
        for (std::size_t tc = 0; tc < sd; ++tc) {
            std::vector<uint32_t> v(nvars, 0);
            for (std::size_t i = 0; i < da; ++i) {
                for (std::size_t r = 0; r < qd; ++r)
                    if (q.action(i)(r, tr))
                        v[var(i, r, tc)] = fp::add(p, v[var(i, r, tc)], q.action(i)(r, tr));
                for (std::size_t c = 0; c < sd; ++c)
                    if (s.action(i)(tc, c))
                        v[var(i, tr, c)] = fp::sub(p, v[var(i, tr, c)], s.action(i)(tc, c));
            }
            cob.append_row(v);
        }
    cs.coboundaries = rref(cob);
    return cs;
}

} // namespace

std::size_t ext1_cocycle_dim(const Module& m, const Module& n) {
    CocycleSpace cs = cocycle_space(m, n);
    return cs.cocycles.rows() - cs.coboundaries.rows();
}

std::vector<Module> extension_middles(const Module& q, const Module& s,
                                      unsigned long long budget) {
    CocycleSpace cs = cocycle_space(q, s);
    const uint32_t p = cs.p;
    const std::size_t qd = cs.qd, sd = cs.sd, da = cs.da;
    const AlgebraPtr& alg = q.algebra();
    if (qd == 0) return {s};
    if (sd == 0) return {q};

    // Complement of the coboundaries inside the cocycles.
    std::vector<std::vector<uint32_t>> comp;
    FpMat acc = cs.coboundaries;
    for (std::size_t i = 0; i < cs.cocycles.rows(); ++i) {
        auto v = cs.cocycles.row(i);
        if (!subspace_contains(acc, v)) {
            comp.push_back(v);
            acc = subspace_sum(acc, FpMat::from_rows(p, v.size(), {v}));
        }
    }
    unsigned long long total = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
        total *= p;
        if (total > budget)
            throw Error(ErrorCode::BudgetExceeded,
                        "extension class count exceeds budget");
    }
    std::vector<Module> out;
    for (unsigned long long code = 0; code < total; ++code) {
        std::vector<uint32_t> c(da * qd * sd, 0);
        unsigned long long w = code;
        for (const auto& base : comp) {
            uint32_t coef = static_cast<uint32_t>(w % p);
            w /= p;
            if (coef)
                for (std::size_t t = 0; t < c.size(); ++t)
                    c[t] = fp::add(p, c[t], fp::mul(p, coef, base[t]));
        }
        std::vector<FpMat> action;
        for (std::size_t i = 0; i < da; ++i) {
            FpMat e(p, sd + qd, sd + qd);
            for (std::size_t r = 0; r < sd; ++r)
                for (std::size_t cc = 0; cc < sd; ++cc) e(r, cc) = s.action(i)(r, cc);
            for (std::size_t r = 0; r < qd; ++r)
                for (std::size_t cc = 0; cc < qd; ++cc)
                    e(sd + r, sd + cc) = q.action(i)(r, cc);
            for (std::size_t r = 0; r < qd; ++r)
                for (std::size_t cc = 0; cc < sd; ++cc)
                    e(sd + r, cc) = c[(i * qd + r) * sd + cc];
            action.push_back(std::move(e));
        }
        out.push_back(Module::make(alg, std::move(action)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism testing, simples, catalog
// ---------------------------------------------------------------------------

std::optional<ModuleMap> find_isomorphism(const Module& m, const Module& n,
                                          unsigned long long budget) {
    if (!m.algebra()->same_structure(*n.algebra())) return std::nullopt;
    if (m.dim() != n.dim()) return std::nullopt;
    if (m.dim() == 0) return ModuleMap::zero(m, n);
    if (m == n) return ModuleMap::id(m); // fast path for equal representations
    auto basis = hom_space(m, n);
    if (basis.empty()) return std::nullopt;
    const uint32_t p = m.algebra()->p();
    unsigned long long total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        total *= p;
        if (total > budget)
            throw Error(ErrorCode::BudgetExceeded, "isomorphism search exceeds budget");
    }
    for (unsigned long long code = 1; code < total; ++code) {
        FpMat cand(p, m.dim(), n.dim());
        unsigned long long w = code;
        for (const auto& b : basis) {
            uint32_t coef = static_cast<uint32_t>(w % p);
            w /= p;
            if (coef) cand = cand + b.mat.scaled(coef);
        }
        if (rank(cand) == m.dim()) return ModuleMap::make(m, n, cand);
    }
    return std::nullopt;
}

bool modules_isomorphic(const Module& m, const Module& n) {
    return find_isomorphism(m, n).has_value();
}

namespace {

SubmoduleBasis minimal_submodule(const Module& m, unsigned long long budget) {
    const uint32_t p = m.algebra()->p();
    unsigned long long total = 1;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        total *= p;
        if (total > budget)
            throw Error(ErrorCode::BudgetExceeded, "socle search exceeds budget");
    }
    std::optional<SubmoduleBasis> best;
    for (unsigned long long code = 1; code < total; ++code) {
        std::vector<uint32_t> v(m.dim());
        unsigned long long w = code;
        for (std::size_t i = 0; i < m.dim(); ++i) {
            v[i] = static_cast<uint32_t>(w % p);
            w /= p;
        }
        SubmoduleBasis s = submodule_generated(m, {v});
        if (!best || s.dim() < best->dim()) best = s;
        if (best->dim() == 1) break;
    }
    if (!best) throw Error(ErrorCode::BadArgument, "zero module has no minimal submodule");
    return *best;
}

} // namespace

std::vector<Module> simple_modules(const AlgebraPtr& a, unsigned long long budget) {
    std::vector<Module> simples;
    Module cur = Module::regular(a);
    while (cur.dim() > 0) {
        SubmoduleBasis soc = minimal_submodule(cur, budget);
        Module s = submodule_module(soc).module;
        bool known = false;
        for (const auto& t : simples)
            if (modules_isomorphic(s, t)) { known = true; break; }
        if (!known) simples.push_back(s);
        cur = quotient_module(cur, soc).module;
    }
    std::sort(simples.begin(), simples.end(), [](const Module& x, const Module& y) {
        if (x.dim() != y.dim()) return x.dim() < y.dim();
        for (std::size_t i = 0; i < x.actions().size(); ++i)
            if (x.action(i).data() != y.action(i).data())
                return x.action(i).data() < y.action(i).data();
        return false;
    });
    return simples;
}

std::vector<Module> module_catalog(const AlgebraPtr& a, std::size_t dim_bound,
                                   unsigned long long budget) {
    std::vector<Module> classes;
    classes.push_back(Module::zero(a));
    if (a->dim() == 0 || dim_bound == 0) return classes;
    std::vector<Module> simples = simple_modules(a, budget);

    for (std::size_t d = 1; d <= dim_bound; ++d) {
        std::vector<Module> found;
        for (const auto& s : simples) {
            if (s.dim() > d) continue;
            std::vector<const Module*> quotients;
            for (const auto& q : classes)
                if (q.dim() == d - s.dim()) quotients.push_back(&q);
            for (const Module* q : quotients) {
                for (auto& e : extension_middles(*q, s, budget)) {
                    bool known = false;
                    for (const auto& x : found)
                        if (x.dim() == e.dim() && modules_isomorphic(x, e)) {
                            known = true;
                            break;
                        }
                    if (!known) found.push_back(std::move(e));
                }
            }
        }
        for (auto& f : found) classes.push_back(std::move(f));
    }
    std::sort(classes.begin(), classes.end(), [](const Module& x, const Module& y) {
        if (x.dim() != y.dim()) return x.dim() < y.dim();
        for (std::size_t i = 0; i < x.actions().size(); ++i)
            if (x.action(i).data() != y.action(i).data())
                return x.action(i).data() < y.action(i).data();
        return false;
    });
    return classes;
}

std::vector<SubmoduleBasis> all_submodules(const Module& m, unsigned long long budget) {
    if (count_subspaces(m.algebra()->p(), m.dim(), m.dim()) > budget)
        throw Error(ErrorCode::BudgetExceeded, "submodule enumeration exceeds budget");
    std::vector<SubmoduleBasis> out;
    for (auto& sp : enumerate_subspaces(m.algebra()->p(), m.dim(), m.dim()))
        if (is_stable_subspace(m, sp)) out.push_back(SubmoduleBasis{m, rref(sp)});
    return out;
}

} // namespace recoll
