#include "recollement/recollement.hpp"
#include "recollement/builtin.hpp"
#include "recollement/error.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

using namespace recoll;
using namespace recoll::testing;

namespace {

void check_witness(const EquivalenceWitness& w, std::size_t catalog_size) {
    CHECK(w.alpha_multiplicative);
    CHECK(w.alpha_bijective);
    CHECK(w.alpha_unital);
    CHECK(w.endo_ring->is_idempotent(w.e_prime));
    CHECK(w.certificates.size() == catalog_size);
    for (const auto& c : w.certificates) {
        CHECK(c.iso.rows() == c.dim);
        if (c.dim > 0) CHECK(rank(c.iso) == c.dim);
    }
}

} // namespace

TEST_CASE("Morita witness for T2 with the corner at e11") {
    auto a = builtin_algebra("T2_F2");
    auto catalog = module_catalog(a, 2);
    EquivalenceWitness w = kuhn_construction(a, basis_of(a, "e11"), 1, catalog);
    CHECK(w.n == 1); // eA is cyclic
    CHECK(w.endo_ring->dim() == 3); // End(A) has the dimension of A
    CHECK(w.witness_corner.algebra->dim() == 1); // e'Se' = F2 = End(eAe)
    CHECK(w.end_p->dim() == 1);
    check_witness(w, catalog.size());
}

TEST_CASE("doubling the generator doubles the rank and squares the corner") {
    auto a = builtin_algebra("T2_F2");
    auto catalog = module_catalog(a, 2);
    EquivalenceWitness w = kuhn_construction(a, basis_of(a, "e11"), 2, catalog);
    CHECK(w.n == 2); // P1^2 needs two generators
    CHECK(w.witness_corner.algebra->dim() == 4); // 2x2 matrices over eAe = F2
    CHECK(w.end_p->dim() == 4);
    check_witness(w, catalog.size());
}

TEST_CASE("degenerate witness at e = 1 is a Morita self-equivalence") {
    auto a = builtin_algebra("T2_F2");
    auto catalog = module_catalog(a, 2);
    EquivalenceWitness w = kuhn_construction(a, a->unit(), 1, catalog);
    CHECK(w.n == 1);
    CHECK(w.witness_corner.algebra->dim() == a->dim()); // e' = 1, e'Se' = S = End(A)
    check_witness(w, catalog.size());
}

TEST_CASE("degenerate witness at e = 0 collapses to the zero corner") {
    auto a = builtin_algebra("T2_F2");
    auto catalog = module_catalog(a, 2);
    EquivalenceWitness w = kuhn_construction(a, a->zero_element(), 1, catalog);
    CHECK(w.witness_corner.algebra->dim() == 0);
    CHECK(w.end_p->dim() == 0);
    check_witness(w, catalog.size());
    for (const auto& c : w.certificates) CHECK(c.dim == 0);
}

TEST_CASE("witnesses for two distinct vertex-subset ideals of T3") {
    auto a = builtin_algebra("T3_F2");
    auto catalog = module_catalog(a, 2);
    Element e12 = a->add(basis_of(a, "e11"), basis_of(a, "e22"));
    Element e3 = basis_of(a, "e33");
    for (const Element& e : {e12, e3}) {
        CAPTURE(a->element_str(e));
        EquivalenceWitness w = kuhn_construction(a, e, 1, catalog);
        CHECK(w.n == 1);
        check_witness(w, catalog.size());
    }
}

TEST_CASE("idempotent generation search") {
    auto a = builtin_algebra("T2_F2");
    Element e11 = basis_of(a, "e11");
    Ideal i = idempotent_to_ideal(a, e11);
    auto found = idempotent_generation_check(a, i);
    REQUIRE(found.has_value());
    // any generator with AeA = I is acceptable
    CHECK(ideal_generated(a, {*found}) == i);

    auto zero = idempotent_generation_check(a, zero_ideal(a));
    REQUIRE(zero.has_value());
    CHECK(a->is_zero(*zero));

    auto one = idempotent_generation_check(a, unit_ideal(a));
    REQUIRE(one.has_value());
    CHECK(ideal_generated(a, {*one}).dim() == a->dim());

    Ideal rad{a, radical(a).rows};
    CHECK_THROWS_AS(idempotent_generation_check(a, rad), Error);
}

TEST_CASE("every brute-scan idempotent ideal of the small algebras is generated") {
    for (const char* name : {"T2_F2", "F2xF2", "F2[x]/x2", "M2_F2"}) {
        auto a = builtin_algebra(name);
        CAPTURE(name);
        for (const auto& i : enumerate_idempotent_ideals(a, IdealEnumMode::Brute)) {
            auto gen = idempotent_generation_check(a, i);
            REQUIRE(gen.has_value());
            CHECK(ideal_generated(a, {*gen}) == i);
        }
    }
}
