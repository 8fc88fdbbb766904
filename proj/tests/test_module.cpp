#include "recollement/module.hpp"
#include "recollement/builtin.hpp"
#include "recollement/error.hpp"
#include "recollement/ideal.hpp"

#include "doctest.h"
#include "json.hpp"
#include "test_helpers.hpp"

#include <algorithm>

using namespace recoll;
using namespace recoll::testing;

namespace {

struct T2Modules {
    AlgebraPtr a = hand_t2();
    Module reg = Module::regular(a);
    Module s1, s2, p1;

    T2Modules()
        : s1(Module::zero(a)), s2(Module::zero(a)), p1(Module::zero(a)) {
        auto simples = simple_modules(a);
        REQUIRE(simples.size() == 2);
        for (auto& s : simples) {
            REQUIRE(s.dim() == 1);
            // S1 is the simple where e11 acts as the identity
            if (s.action(0)(0, 0) == 1)
                s1 = s;
            else
                s2 = s;
        }
        p1 = submodule_module(submodule_generated(reg, {{1, 0, 0}})).module;
        REQUIRE(p1.dim() == 2);
    }
};

/// Oracle for catalog counts: enumerate every action-matrix tuple of the
/// given dimension, keep the valid modules, and dedup by scanning all
/// invertible change-of-basis matrices. Entirely independent of the
/// extension-based catalog construction.
std::size_t oracle_class_count(const AlgebraPtr& a, std::size_t dim) {
    const uint32_t p = a->p();
    const std::size_t cells = a->dim() * dim * dim;
    unsigned long long total = 1;
    for (std::size_t i = 0; i < cells; ++i) total *= p;
    std::vector<std::vector<FpMat>> kept;
    std::vector<FpMat> invertibles;
    {
        unsigned long long gl = 1;
        for (std::size_t i = 0; i < dim * dim; ++i) gl *= p;
        for (unsigned long long code = 0; code < gl; ++code) {
            FpMat g(p, dim, dim);
            unsigned long long w = code;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) {
                    g(i, j) = static_cast<uint32_t>(w % p);
                    w /= p;
                }
            if (rank(g) == dim) invertibles.push_back(g);
        }
    }
    for (unsigned long long code = 0; code < total; ++code) {
        std::vector<FpMat> action(a->dim(), FpMat(p, dim, dim));
        unsigned long long w = code;
        for (std::size_t t = 0; t < a->dim(); ++t)
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j) {
                    action[t](i, j) = static_cast<uint32_t>(w % p);
                    w /= p;
                }
        // representation law + unit
        bool ok = true;
        FpMat unit_act(p, dim, dim);
        for (std::size_t t = 0; t < a->dim() && ok; ++t)
            if (a->unit()[t]) unit_act = unit_act + action[t].scaled(a->unit()[t]);
        ok = unit_act.is_identity();
        for (std::size_t i = 0; i < a->dim() && ok; ++i)
            for (std::size_t j = 0; j < a->dim() && ok; ++j) {
                FpMat rhs(p, dim, dim);
                for (std::size_t k = 0; k < a->dim(); ++k)
                    if (a->c(i, j, k)) rhs = rhs + action[k].scaled(a->c(i, j, k));
                ok = (action[i] * action[j] == rhs);
            }
        if (!ok) continue;
        bool known = false;
        for (const auto& other : kept) {
            for (const auto& g : invertibles) {
                bool conj = true;
                for (std::size_t t = 0; t < a->dim() && conj; ++t)
                    conj = (action[t] * g == g * other[t]);
                if (conj) {
                    known = true;
                    break;
                }
            }
            if (known) break;
        }
        if (!known) kept.push_back(std::move(action));
    }
    return kept.size();
}

} // namespace

TEST_CASE("regular module of T2 splits as P1 + P2 with dimensions 2 and 1") {
    T2Modules t;
    // split by the images of left multiplication: e11 A and e22 A are the
    // projective summands, and left multiplication is right-linear
    FpMat im1 = rref(t.a->left_mult_by({1, 0, 0}));
    FpMat im2 = rref(t.a->left_mult_by({0, 0, 1}));
    CHECK(im1.rows() == 2);
    CHECK(im2.rows() == 1);
    CHECK(subspace_sum(im1, im2).rows() == 3);
    CHECK(subspace_intersection(im1, im2).rows() == 0);
    CHECK(Module::regular(builtin_algebra("F2")).dim() == 1);
    auto zero_alg = std::make_shared<Algebra>(Algebra::zero_algebra(2));
    CHECK(Module::regular(zero_alg).dim() == 0);
}

TEST_CASE("hom dimensions match the brute-force intertwiner count") {
    T2Modules t;
    auto check_pair = [&](const Module& m, const Module& n) {
        std::size_t lib = hom_dim(m, n);
        std::size_t oracle = log_p(2, oracle_hom_count(m, n));
        CHECK(lib == oracle);
        return lib;
    };
    CHECK(check_pair(t.s1, t.s2) == 0);
    CHECK(check_pair(t.s1, t.s1) == 1);
    CHECK(check_pair(t.s2, t.s2) == 1);
    CHECK(check_pair(t.p1, t.s1) == 1); // P1 has top S1
    CHECK(check_pair(t.p1, t.s2) == 0);
    CHECK(check_pair(t.s2, t.p1) == 1); // socle
    check_pair(t.p1, t.p1);
    check_pair(t.reg, t.p1);
}

TEST_CASE("hom basis maps are honest intertwiners and echelonized") {
    T2Modules t;
    auto maps = hom_space(t.reg, t.p1);
    for (const auto& f : maps)
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(t.reg.action(i) * f.mat == f.mat * t.p1.action(i));
    FpMat rows(2, maps.size(), t.reg.dim() * t.p1.dim());
    for (std::size_t i = 0; i < maps.size(); ++i) rows.set_row(i, maps[i].mat.data());
    CHECK(rref(rows) == rows);
}

TEST_CASE("submodules, quotients, kernels") {
    T2Modules t;
    SubmoduleBasis gen = submodule_generated(t.reg, {{0, 1, 0}});
    CHECK(gen.dim() == 1); // e12 * A = span{e12}

    QuotientModule q = quotient_module(t.p1, SubmoduleBasis{t.p1, zero_subspace(2, 2)});
    CHECK(q.module == t.p1);

    CHECK(kernel(ModuleMap::id(t.p1)).dim() == 0);
    CHECK(image(ModuleMap::id(t.p1)).dim() == 2);
    CHECK(cokernel(ModuleMap::id(t.p1)).module.dim() == 0);
}

TEST_CASE("short exact sequences add dimensions") {
    T2Modules t;
    for (const Module* m : {&t.reg, &t.p1}) {
        for (const auto& s : all_submodules(*m)) {
            SubmoduleModule sub = submodule_module(s);
            QuotientModule quot = quotient_module(*m, s);
            CHECK(sub.module.dim() + quot.module.dim() == m->dim());
            CHECK(sub.inclusion.is_injective());
            CHECK(quot.projection.is_surjective());
            CHECK(sub.inclusion.then(quot.projection).is_zero());
            CHECK(left_nullspace(quot.projection.mat) == rref(sub.inclusion.mat));
        }
    }
}

TEST_CASE("catalog of T2 at bound 1 and 2, against the brute-force oracle") {
    T2Modules t;
    auto cat0 = module_catalog(t.a, 0);
    CHECK(cat0.size() == 1);
    auto cat1 = module_catalog(t.a, 1);
    CHECK(cat1.size() == 3); // 0, S1, S2
    CHECK(oracle_class_count(t.a, 1) == 2);
    auto cat2 = module_catalog(t.a, 2);
    CHECK(cat2.size() == 7);
    // oracle: 4 classes of dimension exactly 2 (S1^2, S1+S2, S2^2, P1)
    CHECK(oracle_class_count(t.a, 2) == 4);
    // expected classes present
    DirectSum s1s1 = direct_sum(t.s1, t.s1);
    DirectSum s1s2 = direct_sum(t.s1, t.s2);
    DirectSum s2s2 = direct_sum(t.s2, t.s2);
    std::vector<const Module*> expected{&t.s1, &t.s2, &s1s1.module, &s1s2.module,
                                        &s2s2.module, &t.p1};
    for (const Module* e : expected) {
        bool found = false;
        for (const auto& c : cat2)
            if (c.dim() == e->dim() && modules_isomorphic(c, *e)) found = true;
        CHECK(found);
    }
    // pairwise distinct
    for (std::size_t i = 0; i < cat2.size(); ++i)
        for (std::size_t j = i + 1; j < cat2.size(); ++j)
            CHECK_FALSE(modules_isomorphic(cat2[i], cat2[j]));
}

TEST_CASE("catalog counts for the other built-ins") {
    CHECK(module_catalog(builtin_algebra("F2"), 2).size() == 3);       // 0, k, k^2
    CHECK(module_catalog(builtin_algebra("F2[x]/x2"), 2).size() == 4); // 0, S, S^2, A
    CHECK(module_catalog(builtin_algebra("M2_F2"), 2).size() == 2);    // 0, S
    CHECK(module_catalog(builtin_algebra("F2xF2"), 2).size() == 6);
}

TEST_CASE("extension middles realize every class (dual numbers)") {
    auto a = builtin_algebra("F2[x]/x2");
    auto simples = simple_modules(a);
    REQUIRE(simples.size() == 1);
    const Module& s = simples[0];
    auto middles = extension_middles(s, s);
    CHECK(middles.size() == 2); // ext dim 1: split and the regular module
    bool found_split = false, found_reg = false;
    Module reg = Module::regular(a);
    for (const auto& e : middles) {
        if (modules_isomorphic(e, direct_sum(s, s).module)) found_split = true;
        if (modules_isomorphic(e, reg)) found_reg = true;
    }
    CHECK(found_split);
    CHECK(found_reg);
}

TEST_CASE("ext via free presentations: known values and the cocycle route") {
    T2Modules t;
    CHECK(ext1(t.s1, t.s2) == 1);
    CHECK(ext1(t.s2, t.s1) == 0); // S2 = P2 is projective
    CHECK(ext1(t.reg, t.s1) == 0);
    CHECK(ext1(t.reg, t.s2) == 0);
    CHECK(ext1(t.reg, t.p1) == 0);
    CHECK(ext1(t.p1, t.s2) == 0); // P1 projective
    auto cat = module_catalog(t.a, 2);
    for (const auto& m : cat)
        for (const auto& n : cat) CHECK(ext1(m, n) == ext1_cocycle_dim(m, n));
}

TEST_CASE("ext is additive over direct sums in each argument") {
    T2Modules t;
    DirectSum mm = direct_sum(t.s1, t.p1);
    CHECK(ext1(mm.module, t.s2) == ext1(t.s1, t.s2) + ext1(t.p1, t.s2));
    DirectSum nn = direct_sum(t.s2, t.s2);
    CHECK(ext1(t.s1, nn.module) == 2 * ext1(t.s1, t.s2));
}

TEST_CASE("hom dimension is additive over direct sums in each argument") {
    auto a = hand_t2();
    auto cat = module_catalog(a, 2);
    for (const auto& m : cat)
        for (const auto& n : cat) {
            for (const auto& x : cat) {
                CHECK(hom_dim(direct_sum(m, x).module, n) ==
                      hom_dim(m, n) + hom_dim(x, n));
                CHECK(hom_dim(m, direct_sum(n, x).module) ==
                      hom_dim(m, n) + hom_dim(m, x));
            }
        }
}

TEST_CASE("bimodule eA and tensor: corner regular tensors to P1") {
    T2Modules t;
    Element e11{1, 0, 0};
    CornerAlgebra corner = peirce_corner(t.a, e11);

    // eA built by hand: span{e11, e12} with corner acting on the left
    FpMat span(2, 0, 3);
    for (std::size_t j = 0; j < 3; ++j)
        span.append_row(t.a->mul(e11, t.a->basis_element(j)));
    FpMat rows = rref(span);
    REQUIRE(rows.rows() == 2);
    auto act = [&](const Element& x, bool left) {
        FpMat m(2, 2, 2);
        for (std::size_t r = 0; r < 2; ++r) {
            Element prod = left ? t.a->mul(x, rows.row(r)) : t.a->mul(rows.row(r), x);
            std::vector<uint32_t> coords;
            REQUIRE(coords_in_rowspace(rows, prod, &coords));
            m.set_row(r, coords);
        }
        return m;
    };
    std::vector<FpMat> la, ra;
    for (std::size_t u = 0; u < corner.algebra->dim(); ++u)
        la.push_back(act(corner.embedding.row(u), true));
    for (std::size_t i = 0; i < 3; ++i) ra.push_back(act(t.a->basis_element(i), false));
    Bimodule ea = Bimodule::make(corner.algebra, t.a, 2, la, ra);

    TensorResult tr = tensor_over(Module::regular(corner.algebra), ea);
    CHECK(tr.module.dim() == 2);
    CHECK(modules_isomorphic(tr.module, t.p1));

    // unit isomorphism: B (x)_B N = N for the regular bimodule over T2
    std::vector<FpMat> reg_left, reg_right;
    for (std::size_t i = 0; i < 3; ++i) {
        reg_left.push_back(t.a->left_mult_by(t.a->basis_element(i)));
        reg_right.push_back(t.a->right_mult_matrix(i));
    }
    Bimodule aa = Bimodule::make(t.a, t.a, 3, reg_left, reg_right);
    TensorResult unit_iso = tensor_over(t.p1, aa);
    CHECK(unit_iso.module.dim() == 2);
    CHECK(modules_isomorphic(unit_iso.module, t.p1));

    TensorResult zero = tensor_over(Module::zero(corner.algebra), ea);
    CHECK(zero.module.dim() == 0);
}

TEST_CASE("hom over bimodules: Hom(Ae, k) is the simple S1") {
    T2Modules t;
    Element e11{1, 0, 0};
    CornerAlgebra corner = peirce_corner(t.a, e11);
    // Ae = span{e11} as A-eAe bimodule
    FpMat span(2, 0, 3);
    for (std::size_t j = 0; j < 3; ++j)
        span.append_row(t.a->mul(t.a->basis_element(j), e11));
    FpMat rows = rref(span);
    REQUIRE(rows.rows() == 1);
    auto act = [&](const Element& x, bool left) {
        FpMat m(2, 1, 1);
        Element prod = left ? t.a->mul(x, rows.row(0)) : t.a->mul(rows.row(0), x);
        std::vector<uint32_t> coords;
        REQUIRE(coords_in_rowspace(rows, prod, &coords));
        m.set_row(0, coords);
        return m;
    };
    std::vector<FpMat> la, ra;
    for (std::size_t i = 0; i < 3; ++i) la.push_back(act(t.a->basis_element(i), true));
    for (std::size_t u = 0; u < corner.algebra->dim(); ++u)
        ra.push_back(act(corner.embedding.row(u), false));
    Bimodule ae = Bimodule::make(t.a, corner.algebra, 1, la, ra);

    HomResult h = hom_over(ae, Module::regular(corner.algebra));
    CHECK(h.module.dim() == 1);
    CHECK(modules_isomorphic(h.module, t.s1));

    // Hom_B(B, X) = X over the corner: regular bimodule of the corner
    std::vector<FpMat> cl, cr;
    for (std::size_t u = 0; u < corner.algebra->dim(); ++u) {
        cl.push_back(corner.algebra->left_mult_by(corner.algebra->basis_element(u)));
        cr.push_back(corner.algebra->right_mult_matrix(u));
    }
    Bimodule bb = Bimodule::make(corner.algebra, corner.algebra,
                                 corner.algebra->dim(), cl, cr);
    HomResult unit = hom_over(bb, Module::regular(corner.algebra));
    CHECK(unit.module.dim() == corner.algebra->dim());

    HomResult zero = hom_over(ae, Module::zero(corner.algebra));
    CHECK(zero.module.dim() == 0);
}

TEST_CASE("tensor-hom adjunction dimension identity over the catalogs") {
    // dim Hom_A(X (x)_B N, M) = dim Hom_B(X, Hom_A(N, M)) with N = eA
    auto a = builtin_algebra("T2_F2");
    Element e = basis_of(a, "e11");
    CornerAlgebra corner = peirce_corner(a, e);
    // eA as eAe-A bimodule
    FpMat span(2, 0, 3);
    for (std::size_t j = 0; j < 3; ++j) span.append_row(a->mul(e, a->basis_element(j)));
    FpMat rows = rref(span);
    auto act = [&](const Element& x, bool left) {
        FpMat m(2, rows.rows(), rows.rows());
        for (std::size_t r = 0; r < rows.rows(); ++r) {
            Element prod = left ? a->mul(x, rows.row(r)) : a->mul(rows.row(r), x);
            std::vector<uint32_t> coords;
            REQUIRE(coords_in_rowspace(rows, prod, &coords));
            m.set_row(r, coords);
        }
        return m;
    };
    std::vector<FpMat> la, ra;
    for (std::size_t u = 0; u < corner.algebra->dim(); ++u)
        la.push_back(act(corner.embedding.row(u), true));
    for (std::size_t i = 0; i < 3; ++i) ra.push_back(act(a->basis_element(i), false));
    Bimodule ea = Bimodule::make(corner.algebra, a, rows.rows(), la, ra);

    auto cat_b = module_catalog(corner.algebra, 2);
    auto cat_a = module_catalog(a, 2);
    for (const auto& x : cat_b)
        for (const auto& m : cat_a) {
            std::size_t lhs = hom_dim(tensor_over(x, ea).module, m);
            std::size_t rhs = hom_dim(x, hom_over(ea, m).module);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("module equality is representation equality, not isomorphism") {
    T2Modules t;
    DirectSum ds = direct_sum(t.s1, t.s2);
    DirectSum sd = direct_sum(t.s2, t.s1);
    CHECK_FALSE(ds.module == sd.module);
    CHECK(modules_isomorphic(ds.module, sd.module));
}

TEST_CASE("algebra mismatch is rejected") {
    T2Modules t;
    auto f2 = builtin_algebra("F2");
    Module other = Module::regular(f2);
    CHECK_THROWS_AS(hom_space(t.s1, other), Error);
}

TEST_CASE("a corrupted action matrix is rejected with a replayable payload") {
    T2Modules t;
    std::vector<FpMat> action = t.p1.actions();
    action[1](1, 0) ^= 1; // break the representation law, keep the unit law
    try {
        Module::make(t.a, action);
        FAIL("expected a representation-law failure");
    } catch (const Error& e) {
        REQUIRE(!e.detail().empty());
        // the payload names a basis pair at which the law fails; replay it
        auto d = nlohmann::json::parse(e.detail());
        std::size_t i = d["i"], j = d["j"];
        FpMat lhs = action[i] * action[j];
        FpMat rhs(2, 2, 2);
        for (std::size_t k = 0; k < 3; ++k)
            if (t.a->c(i, j, k)) rhs = rhs + action[k].scaled(t.a->c(i, j, k));
        CHECK_FALSE(lhs == rhs);
    }
}
