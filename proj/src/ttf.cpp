#include "recollement/ttf.hpp"

#include "recollement/error.hpp"

#include <algorithm>
#include <map>

namespace recoll {

namespace {

Json subspace_json(const FpMat& rows) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < rows.rows(); ++i) arr.push_back(rows.row(i));
    return arr;
}

Json module_json(const Module& m) {
    Json j;
    j["dim"] = m.dim();
    Json acts = Json::array();
    for (const auto& a : m.actions()) acts.push_back(a.data());
    j["action"] = acts;
    return j;
}

} // namespace

bool TTFTriple::in_x(const Module& m) const {
    return trace_ideal_part(m, ideal).dim() == m.dim();
}

bool TTFTriple::in_y(const Module& m) const {
    return trace_ideal_part(m, ideal).dim() == 0;
}

bool TTFTriple::in_z(const Module& m) const {
    return annihilated_part(m, ideal).dim() == 0;
}

TTFTriple ttf_from_ideal(const AlgebraPtr& a, const Ideal& i) {
    if (!a->same_structure(*i.algebra))
        throw Error(ErrorCode::AlgebraMismatch, "ideal lives over a different algebra");
    if (!is_idempotent_ideal(i))
        throw Error(ErrorCode::NotIdempotentIdeal,
                    "TTF-triples correspond to idempotent ideals; dim I/I^2 = " +
                        std::to_string(i.dim() - ideal_product(i, i).dim()));
    return TTFTriple{i};
}

Ideal ideal_from_ttf(const TTFTriple& t) {
    const AlgebraPtr& a = t.ideal.algebra;
    if (a->dim() == 0) return zero_ideal(a);
    Module reg = Module::regular(a);
    SubmoduleBasis torsion = trace_ideal_part(reg, t.ideal);
    return ideal_from_subspace(a, torsion.rows);
}

TorsionDecomposition torsion_decompose(const Module& m, const Ideal& i,
                                       TorsionPairSide side) {
    SubmoduleBasis rows = side == TorsionPairSide::Lower ? trace_ideal_part(m, i)
                                                         : annihilated_part(m, i);
    SubmoduleModule sub = submodule_module(rows);
    QuotientModule quot = quotient_module(m, rows);
    return TorsionDecomposition{m,          rows,       sub.module,
                                sub.inclusion, quot.module, quot.projection};
}

CheckList verify_torsion_pair(const Ideal& i, TorsionPairSide side,
                              const std::vector<Module>& catalog) {
    CheckList out;
    TTFTriple t{i};
    const bool lower = side == TorsionPairSide::Lower;
    const std::string tag = lower ? "torsion_pair.lower" : "torsion_pair.upper";
    const std::string pair_name = lower ? "(X, Y)" : "(Y, Z)";

    std::size_t seq_ok = 0, seq_total = 0;
    Json first_bad;
    for (std::size_t idx = 0; idx < catalog.size(); ++idx) {
        const Module& m = catalog[idx];
        ++seq_total;
        try {
            TorsionDecomposition d = torsion_decompose(m, i, side);
            bool exact = d.inclusion.is_injective() && d.projection.is_surjective() &&
                         d.inclusion.then(d.projection).is_zero() &&
                         left_nullspace(d.projection.mat) == rref(d.inclusion.mat) &&
                         d.torsion_sub.dim() + d.quotient.dim() == m.dim();
            bool ends = lower ? (t.in_x(d.torsion_sub) && t.in_y(d.quotient))
                              : (t.in_y(d.torsion_sub) && t.in_z(d.quotient));
            if (exact && ends) {
                ++seq_ok;
            } else if (first_bad.empty()) {
                first_bad = Json{{"catalog_index", idx},
                                 {"module", module_json(m)},
                                 {"exact", exact},
                                 {"ends_in_classes", ends}};
            }
        } catch (const Error& e) {
            if (first_bad.empty())
                first_bad = Json{{"catalog_index", idx}, {"error", e.what()}};
        }
    }
    out.push_back(make_check(
        tag + ".decomposition",
        "every module sits in a short exact sequence with torsion part in the "
        "torsion class and quotient in the torsion-free class of " + pair_name,
        seq_ok == seq_total,
        seq_ok == seq_total ? Json{{"modules", seq_total}}
                            : Json{{"modules", seq_total}, {"counterexample", first_bad}}));

    // Hom vanishing across the catalog.
    std::vector<std::size_t> from, to;
    for (std::size_t idx = 0; idx < catalog.size(); ++idx) {
        const Module& m = catalog[idx];
        if (lower ? t.in_x(m) : t.in_y(m)) from.push_back(idx);
        if (lower ? t.in_y(m) : t.in_z(m)) to.push_back(idx);
    }
    std::size_t pairs_ok = 0, pairs_total = 0;
    Json bad_pair;
    for (auto a : from)
        for (auto b : to) {
            ++pairs_total;
            std::size_t d = hom_dim(catalog[a], catalog[b]);
            if (d == 0)
                ++pairs_ok;
            else if (bad_pair.empty())
                bad_pair = Json{{"from_index", a}, {"to_index", b}, {"hom_dim", d}};
        }
    out.push_back(make_check(
        tag + ".hom_vanishing",
        "no nonzero homomorphisms from the torsion class to the torsion-free "
        "class of " + pair_name,
        pairs_ok == pairs_total,
        pairs_ok == pairs_total
            ? Json{{"pairs", pairs_total}}
            : Json{{"pairs", pairs_total}, {"counterexample", bad_pair}}));

    if (lower) {
        // Trace characterization: M*I equals the sum of images of all maps
        // from torsion-class catalog modules.
        std::size_t tr_ok = 0;
        Json tr_bad;
        for (std::size_t idx = 0; idx < catalog.size(); ++idx) {
            const Module& m = catalog[idx];
            FpMat total(m.algebra()->p(), 0, m.dim());
            for (auto a : from)
                for (const auto& f : hom_space(catalog[a], m))
                    total = subspace_sum(total, image(f).rows);
            if (total == trace_ideal_part(m, i).rows)
                ++tr_ok;
            else if (tr_bad.empty())
                tr_bad = Json{{"catalog_index", idx},
                              {"trace_rows", subspace_json(trace_ideal_part(m, i).rows)},
                              {"sum_of_images", subspace_json(total)}};
        }
        out.push_back(make_check(
            tag + ".trace_characterization",
            "the torsion part M*I equals the trace of the torsion class in M",
            tr_ok == catalog.size(),
            tr_ok == catalog.size()
                ? Json{{"modules", catalog.size()}}
                : Json{{"modules", catalog.size()}, {"counterexample", tr_bad}}));
    }
    return out;
}

CheckList verify_ttf_closure(const TTFTriple& t, const std::vector<Module>& catalog,
                             unsigned long long budget) {
    CheckList out;
    std::vector<std::size_t> y_members;
    for (std::size_t idx = 0; idx < catalog.size(); ++idx)
        if (t.in_y(catalog[idx])) y_members.push_back(idx);

    std::size_t sub_ok = 0, sub_total = 0;
    Json sub_bad;
    for (auto yi : y_members) {
        const Module& m = catalog[yi];
        for (const auto& s : all_submodules(m, budget)) {
            ++sub_total;
            Module sm = submodule_module(s).module;
            Module qm = quotient_module(m, s).module;
            if (t.in_y(sm) && t.in_y(qm))
                ++sub_ok;
            else if (sub_bad.empty())
                sub_bad = Json{{"catalog_index", yi},
                               {"submodule", subspace_json(s.rows)}};
        }
    }
    out.push_back(make_check(
        "ttf_closure.sub_quotient",
        "the TTF-class is closed under submodules and quotients",
        sub_ok == sub_total,
        sub_ok == sub_total ? Json{{"cases", sub_total}}
                            : Json{{"cases", sub_total}, {"counterexample", sub_bad}}));

    std::size_t sum_ok = 0, sum_total = 0;
    Json sum_bad;
    for (auto a : y_members)
        for (auto b : y_members) {
            ++sum_total;
            Module s = direct_sum(catalog[a], catalog[b]).module;
            if (t.in_y(s))
                ++sum_ok;
            else if (sum_bad.empty())
                sum_bad = Json{{"left_index", a}, {"right_index", b}};
        }
    out.push_back(make_check(
        "ttf_closure.finite_sums",
        "the TTF-class is closed under finite direct sums",
        sum_ok == sum_total,
        sum_ok == sum_total ? Json{{"cases", sum_total}}
                            : Json{{"cases", sum_total}, {"counterexample", sum_bad}}));

    std::size_t ext_ok = 0, ext_total = 0;
    Json ext_bad;
    for (auto a : y_members)
        for (auto b : y_members) {
            // middles of 0 -> catalog[b] -> E -> catalog[a] -> 0
            for (const auto& e : extension_middles(catalog[a], catalog[b], budget)) {
                ++ext_total;
                if (t.in_y(e))
                    ++ext_ok;
                else if (ext_bad.empty())
                    ext_bad = Json{{"quotient_index", a},
                                   {"sub_index", b},
                                   {"middle", module_json(e)}};
            }
        }
    out.push_back(make_check(
        "ttf_closure.extensions",
        "the TTF-class is closed under the extensions realizable in the catalog",
        ext_ok == ext_total,
        ext_ok == ext_total ? Json{{"cases", ext_total}}
                            : Json{{"cases", ext_total}, {"counterexample", ext_bad}}));
    return out;
}

// ---------------------------------------------------------------------------
// Radical / coradical functor laws
// ---------------------------------------------------------------------------

namespace {

struct Ses {
    std::size_t catalog_index;
    Module total;
    SubmoduleModule sub;
    QuotientModule quot;
};

std::vector<Ses> catalog_sequences(const std::vector<Module>& catalog,
                                   unsigned long long budget) {
    std::vector<Ses> out;
    for (std::size_t idx = 0; idx < catalog.size(); ++idx) {
        const Module& m = catalog[idx];
        for (const auto& s : all_submodules(m, budget))
            out.push_back(Ses{idx, m, submodule_module(s), quotient_module(m, s)});
    }
    return out;
}

/// F = (-)[I] applied to a map: the restriction between annihilated parts.
ModuleMap apply_ann(const ModuleMap& f, const Module& src_abs,
                    const SubmoduleBasis& src_rows, const Module& tgt_abs,
                    const SubmoduleBasis& tgt_rows) {
    const uint32_t p = f.source.algebra()->p();
    FpMat m(p, src_abs.dim(), tgt_abs.dim());
    for (std::size_t r = 0; r < src_rows.rows.rows(); ++r) {
        auto img = apply_row(src_rows.rows.row(r), f.mat);
        std::vector<uint32_t> coords;
        if (!coords_in_rowspace(tgt_rows.rows, img, &coords))
            throw Error(ErrorCode::InternalInconsistency,
                        "image left the annihilated part");
        m.set_row(r, coords);
    }
    return ModuleMap::make(src_abs, tgt_abs, m);
}

} // namespace

CheckList verify_radical_functor(const Ideal& i, const std::vector<Module>& catalog,
                                 unsigned long long budget) {
    CheckList out;
    auto sequences = catalog_sequences(catalog, budget);

    // F = (-)[I]: left exactness on each short exact sequence.
    std::size_t f_ok = 0;
    Json f_bad;
    for (const auto& s : sequences) {
        try {
            SubmoduleBasis sub_ann_rows = annihilated_part(s.sub.module, i);
            SubmoduleModule sub_ann = submodule_module(sub_ann_rows);
            SubmoduleBasis mid_ann_rows = annihilated_part(s.total, i);
            SubmoduleModule mid_ann = submodule_module(mid_ann_rows);
            SubmoduleBasis quo_ann_rows = annihilated_part(s.quot.module, i);
            SubmoduleModule quo_ann = submodule_module(quo_ann_rows);

            // F(inclusion) and F(projection) via restriction.
            ModuleMap f1 = apply_ann(s.sub.inclusion, sub_ann.module, sub_ann_rows,
                                     mid_ann.module, mid_ann_rows);
            ModuleMap f2 = apply_ann(s.quot.projection, mid_ann.module, mid_ann_rows,
                                     quo_ann.module, quo_ann_rows);
            bool ok = f1.is_injective() && f1.then(f2).is_zero() &&
                      left_nullspace(f2.mat) == rref(f1.mat);
            if (ok)
                ++f_ok;
            else if (f_bad.empty())
                f_bad = Json{{"catalog_index", s.catalog_index},
                             {"submodule", subspace_json(s.sub.inclusion.mat)}};
        } catch (const Error& e) {
            if (f_bad.empty())
                f_bad = Json{{"catalog_index", s.catalog_index}, {"error", e.what()}};
        }
    }
    out.push_back(make_check(
        "radical_functor.left_exact",
        "the annihilator functor (-)[I] is left exact on catalog sequences",
        f_ok == sequences.size(),
        f_ok == sequences.size()
            ? Json{{"sequences", sequences.size()}}
            : Json{{"sequences", sequences.size()}, {"counterexample", f_bad}}));

    // F radical and idempotent; G_cor coradical and idempotent; trace functor
    // idempotent on images.
    std::size_t prop_ok = 0, prop_total = 0;
    Json prop_bad;
    for (std::size_t idx = 0; idx < catalog.size(); ++idx) {
        const Module& m = catalog[idx];
        ++prop_total;
        SubmoduleBasis ann = annihilated_part(m, i);
        Module m_over_ann = quotient_module(m, ann).module;
        bool radical_prop = annihilated_part(m_over_ann, i).dim() == 0;
        Module ann_abs = submodule_module(ann).module;
        bool idem_f = annihilated_part(ann_abs, i).dim() == ann_abs.dim();

        SubmoduleBasis tr = trace_ideal_part(m, i);
        Module tr_abs = submodule_module(tr).module;
        bool idem_tr = trace_ideal_part(tr_abs, i).dim() == tr_abs.dim();
        Module refl = quotient_module(m, tr).module; // G_cor(M) = M/MI
        bool corad = trace_ideal_part(tr_abs, i).dim() == tr_abs.dim() &&
                     trace_ideal_part(refl, i).dim() == 0;
        bool idem_g = trace_ideal_part(refl, i).dim() == 0; // G(G M) = G M

        if (radical_prop && idem_f && idem_tr && corad && idem_g)
            ++prop_ok;
        else if (prop_bad.empty())
            prop_bad = Json{{"catalog_index", idx},
                            {"radical_property", radical_prop},
                            {"idempotent_F", idem_f},
                            {"trace_idempotent", idem_tr},
                            {"coradical_property", corad}};
    }
    out.push_back(make_check(
        "radical_functor.radical_idempotent",
        "(-)[I] is an idempotent radical functor and M |-> M/MI an idempotent "
        "coradical functor; the trace M |-> M*I is idempotent when I*I = I",
        prop_ok == prop_total,
        prop_ok == prop_total
            ? Json{{"modules", prop_total}}
            : Json{{"modules", prop_total}, {"counterexample", prop_bad}}));

    // Finite product / coproduct preservation (both functors, on pairs).
    std::size_t sum_ok = 0, sum_total = 0;
    Json sum_bad;
    for (std::size_t a = 0; a < catalog.size(); ++a)
        for (std::size_t b = 0; b < catalog.size(); ++b) {
            ++sum_total;
            DirectSum ds = direct_sum(catalog[a], catalog[b]);
            SubmoduleBasis ann_sum = annihilated_part(ds.module, i);
            FpMat expected_ann = subspace_sum(
                rref(annihilated_part(catalog[a], i).rows * ds.in1.mat),
                rref(annihilated_part(catalog[b], i).rows * ds.in2.mat));
            SubmoduleBasis tr_sum = trace_ideal_part(ds.module, i);
            FpMat expected_tr = subspace_sum(
                rref(trace_ideal_part(catalog[a], i).rows * ds.in1.mat),
                rref(trace_ideal_part(catalog[b], i).rows * ds.in2.mat));
            if (ann_sum.rows == expected_ann && tr_sum.rows == expected_tr)
                ++sum_ok;
            else if (sum_bad.empty())
                sum_bad = Json{{"left_index", a}, {"right_index", b}};
        }
    out.push_back(make_check(
        "radical_functor.finite_products",
        "(-)[I] and (-)*I split over finite direct sums",
        sum_ok == sum_total,
        sum_ok == sum_total ? Json{{"pairs", sum_total}}
                            : Json{{"pairs", sum_total}, {"counterexample", sum_bad}}));

    // G_cor = (-) (x) A/I = M/MI: right exactness on each sequence.
    std::size_t g_ok = 0;
    Json g_bad;
    for (const auto& s : sequences) {
        try {
            QuotientModule gs = quotient_module(s.sub.module,
                                                trace_ideal_part(s.sub.module, i));
            QuotientModule gm = quotient_module(s.total, trace_ideal_part(s.total, i));
            QuotientModule gq = quotient_module(s.quot.module,
                                                trace_ideal_part(s.quot.module, i));
            // Induced maps on the reflections.
            ModuleMap g1 = ModuleMap::make(
                gs.module, gm.module,
                // lift a basis rep of S/SI, push through inclusion, project
                [&] {
                    FpMat m(i.algebra->p(), gs.module.dim(), gm.module.dim());
                    FpMat lift = gs.projection.mat; // S -> S/SI
                    // choose preimages: rows of S mapping onto basis
                    // use transpose trick: for each quotient basis element find
                    // a representative row of S
                    for (std::size_t t = 0; t < gs.module.dim(); ++t) {
                        // representative: solve proj(x) = e_t; reps are the
                        // non-pivot columns, so scan standard vectors
                        std::vector<uint32_t> e(gs.module.dim(), 0);
                        e[t] = 1;
                        std::vector<uint32_t> rep;
                        for (std::size_t c = 0; c < s.sub.module.dim(); ++c) {
                            if (lift.row(c) == e) {
                                rep.assign(s.sub.module.dim(), 0);
                                rep[c] = 1;
                                break;
                            }
                        }
                        if (rep.empty())
                            throw Error(ErrorCode::InternalInconsistency,
                                        "no standard representative");
                        auto in_m = apply_row(rep, s.sub.inclusion.mat);
                        m.set_row(t, apply_row(in_m, gm.projection.mat));
                    }
                    return m;
                }());
            ModuleMap g2 = ModuleMap::make(
                gm.module, gq.module, [&] {
                    FpMat m(i.algebra->p(), gm.module.dim(), gq.module.dim());
                    for (std::size_t t = 0; t < gm.module.dim(); ++t) {
                        std::vector<uint32_t> e(gm.module.dim(), 0);
                        e[t] = 1;
                        std::vector<uint32_t> rep;
                        for (std::size_t c = 0; c < s.total.dim(); ++c)
                            if (gm.projection.mat.row(c) == e) {
                                rep.assign(s.total.dim(), 0);
                                rep[c] = 1;
                                break;
                            }
                        if (rep.empty())
                            throw Error(ErrorCode::InternalInconsistency,
                                        "no standard representative");
                        auto in_q = apply_row(rep, s.quot.projection.mat);
                        m.set_row(t, apply_row(in_q, gq.projection.mat));
                    }
                    return m;
                }());
            bool ok = g2.is_surjective() && g1.then(g2).is_zero() &&
                      left_nullspace(g2.mat) == rref(g1.mat);
            if (ok)
                ++g_ok;
            else if (g_bad.empty())
                g_bad = Json{{"catalog_index", s.catalog_index},
                             {"submodule", subspace_json(s.sub.inclusion.mat)}};
        } catch (const Error& e) {
            if (g_bad.empty())
                g_bad = Json{{"catalog_index", s.catalog_index}, {"error", e.what()}};
        }
    }
    out.push_back(make_check(
        "coradical_functor.right_exact",
        "the reflection functor M |-> M/MI is right exact on catalog sequences",
        g_ok == sequences.size(),
        g_ok == sequences.size()
            ? Json{{"sequences", sequences.size()}}
            : Json{{"sequences", sequences.size()}, {"counterexample", g_bad}}));

    // Trace functor preserves surjections: the image of M*I in Q is Q*I.
    std::size_t tr_ok = 0;
    Json tr_bad;
    for (const auto& s : sequences) {
        FpMat pushed = rref(trace_ideal_part(s.total, i).rows * s.quot.projection.mat);
        if (pushed == trace_ideal_part(s.quot.module, i).rows)
            ++tr_ok;
        else if (tr_bad.empty())
            tr_bad = Json{{"catalog_index", s.catalog_index}};
    }
    out.push_back(make_check(
        "trace_functor.preserves_surjections",
        "the trace M |-> M*I carries surjections to surjections",
        tr_ok == sequences.size(),
        tr_ok == sequences.size()
            ? Json{{"sequences", sequences.size()}}
            : Json{{"sequences", sequences.size()}, {"counterexample", tr_bad}}));

    return out;
}

// ---------------------------------------------------------------------------
// Brute-force TTF enumeration (independent oracle)
// ---------------------------------------------------------------------------

namespace {

std::size_t classify(const std::vector<Module>& classes, const Module& m) {
    for (std::size_t c = 0; c < classes.size(); ++c)
        if (classes[c].dim() == m.dim() && modules_isomorphic(classes[c], m)) return c;
    throw Error(ErrorCode::InternalInconsistency, "module not in catalog");
}

struct SubEntry {
    FpMat rows;
    std::size_t cls_sub;
    std::size_t cls_quot;
};

} // namespace

TTFEnumeration brute_force_ttf_triples(const AlgebraPtr& a, std::size_t dim_bound,
                                       unsigned long long budget) {
    TTFEnumeration res;
    res.catalog = module_catalog(a, dim_bound);
    const auto& classes = res.catalog;
    const std::size_t nc = classes.size();
    if (nc == 0 || classes[0].dim() != 0)
        throw Error(ErrorCode::InternalInconsistency, "catalog must start with 0");
    if (nc > 1 && (1ull << (nc - 1)) > budget)
        throw Error(ErrorCode::BudgetExceeded,
                    "TTF subset enumeration over " + std::to_string(nc - 1) +
                        " classes exceeds budget");

    // Per class: stable subspaces with classified sub/quotient, and for each
    // nested pair T <= U the class of U/T.
    std::vector<std::vector<SubEntry>> subs(nc);
    std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> nested(nc);
    for (std::size_t c = 0; c < nc; ++c) {
        for (const auto& s : all_submodules(classes[c], budget)) {
            SubEntry e{s.rows, classify(classes, submodule_module(s).module),
                       classify(classes, quotient_module(classes[c], s).module)};
            subs[c].push_back(std::move(e));
        }
        for (std::size_t t = 0; t < subs[c].size(); ++t)
            for (std::size_t u = 0; u < subs[c].size(); ++u) {
                if (t == u || !subspace_leq(subs[c][t].rows, subs[c][u].rows)) continue;
                SubmoduleModule um = submodule_module(
                    SubmoduleBasis{classes[c], subs[c][u].rows});
                // T in U coordinates
                FpMat t_in_u(a->p(), 0, um.module.dim());
                for (std::size_t r = 0; r < subs[c][t].rows.rows(); ++r) {
                    std::vector<uint32_t> coords;
                    if (!coords_in_rowspace(subs[c][u].rows, subs[c][t].rows.row(r),
                                            &coords))
                        throw Error(ErrorCode::InternalInconsistency, "nested pair");
                    t_in_u.append_row(coords);
                }
                Module q = quotient_module(um.module,
                                           SubmoduleBasis{um.module, rref(t_in_u)})
                               .module;
                nested[c][{t, u}] = classify(classes, q);
            }
    }

    // Extension middles and direct sums, classified.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> ext;
    std::vector<std::vector<std::optional<std::size_t>>> sum(
        nc, std::vector<std::optional<std::size_t>>(nc));
    for (std::size_t qc = 1; qc < nc; ++qc)
        for (std::size_t sc = 1; sc < nc; ++sc) {
            if (classes[qc].dim() + classes[sc].dim() <= dim_bound) {
                std::vector<std::size_t> mids;
                for (const auto& e : extension_middles(classes[qc], classes[sc], budget))
                    mids.push_back(classify(classes, e));
                std::sort(mids.begin(), mids.end());
                mids.erase(std::unique(mids.begin(), mids.end()), mids.end());
                ext[{qc, sc}] = std::move(mids);
                sum[qc][sc] = classify(classes,
                                       direct_sum(classes[qc], classes[sc]).module);
            }
        }

    auto find_entry = [&](std::size_t c, const FpMat& rows) -> std::size_t {
        for (std::size_t t = 0; t < subs[c].size(); ++t)
            if (subs[c][t].rows == rows) return t;
        throw Error(ErrorCode::InternalInconsistency, "subspace not enumerated");
    };

    const std::size_t nz = nc - 1;
    for (unsigned long long mask = 0; mask < (1ull << nz); ++mask) {
        std::vector<bool> in_c(nc, false);
        in_c[0] = true;
        for (std::size_t b = 0; b < nz; ++b)
            if (mask & (1ull << b)) in_c[b + 1] = true;

        bool ok = true;
        // Closure under submodules and quotients.
        for (std::size_t c = 1; c < nc && ok; ++c) {
            if (!in_c[c]) continue;
            for (const auto& e : subs[c])
                if (!in_c[e.cls_sub] || !in_c[e.cls_quot]) { ok = false; break; }
        }
        // Closure under finite direct sums (within the bound).
        for (std::size_t c1 = 1; c1 < nc && ok; ++c1) {
            if (!in_c[c1]) continue;
            for (std::size_t c2 = 1; c2 < nc && ok; ++c2) {
                if (!in_c[c2] || !sum[c1][c2]) continue;
                if (!in_c[*sum[c1][c2]]) ok = false;
            }
        }
        // Closure under extensions realizable within the bound.
        for (std::size_t c1 = 1; c1 < nc && ok; ++c1) {
            if (!in_c[c1]) continue;
            for (std::size_t c2 = 1; c2 < nc && ok; ++c2) {
                if (!in_c[c2]) continue;
                auto it = ext.find({c1, c2});
                if (it == ext.end()) continue;
                for (auto mid : it->second)
                    if (!in_c[mid]) { ok = false; break; }
            }
        }
        // Torsion class: every module has a largest C-submodule with
        // C-torsion-free quotient.
        for (std::size_t c = 0; c < nc && ok; ++c) {
            FpMat t_rows(a->p(), 0, classes[c].dim());
            for (const auto& e : subs[c])
                if (in_c[e.cls_sub]) t_rows = subspace_sum(t_rows, e.rows);
            std::size_t ti = find_entry(c, t_rows);
            if (!in_c[subs[c][ti].cls_sub]) { ok = false; break; }
            // M/t must have no nonzero submodule in C: submodules of M/t
            // correspond to U >= t.
            for (std::size_t u = 0; u < subs[c].size() && ok; ++u) {
                if (u == ti || !subspace_leq(subs[c][ti].rows, subs[c][u].rows)) continue;
                auto it = nested[c].find({ti, u});
                if (it != nested[c].end() && in_c[it->second] &&
                    classes[it->second].dim() > 0)
                    ok = false;
            }
        }
        // Torsion-free class: every module has a smallest submodule with
        // C-quotient, and that submodule has no nonzero C-quotient.
        for (std::size_t c = 0; c < nc && ok; ++c) {
            FpMat f_rows = full_subspace(a->p(), classes[c].dim());
            for (const auto& e : subs[c])
                if (in_c[e.cls_quot]) f_rows = subspace_intersection(f_rows, e.rows);
            std::size_t fi = find_entry(c, f_rows);
            if (!in_c[subs[c][fi].cls_quot]) { ok = false; break; }
            // quotients of f: f/K for K < f
            for (std::size_t k = 0; k < subs[c].size() && ok; ++k) {
                if (k == fi || !subspace_leq(subs[c][k].rows, subs[c][fi].rows)) continue;
                auto it = nested[c].find({k, fi});
                if (it != nested[c].end() && in_c[it->second] &&
                    classes[it->second].dim() > 0)
                    ok = false;
            }
        }
        if (ok) {
            std::vector<std::size_t> members;
            for (std::size_t c = 1; c < nc; ++c)
                if (in_c[c]) members.push_back(c);
            res.ttf_classes.push_back(std::move(members));
        }
    }
    return res;
}

} // namespace recoll
