#include "recollement/algebra.hpp"
#include "recollement/builtin.hpp"
#include "recollement/error.hpp"
#include "recollement/ideal.hpp"

#include "doctest.h"
#include "test_helpers.hpp"

#include <algorithm>
#include <set>

using namespace recoll;
using namespace recoll::testing;

TEST_CASE("one-dimensional table gives the field as an algebra") {
    Algebra f2 = Algebra::from_table(2, {"e"}, {1}, {1});
    CHECK(f2.dim() == 1);
    CHECK(f2.mul({1}, {1}) == Element{1});
}

TEST_CASE("hand-built T2 validates; associativity re-checked by raw loops") {
    auto a = hand_t2();
    CHECK(a->dim() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) {
                Element lhs = a->mul(a->basis_product(i, j), a->basis_element(k));
                Element rhs = a->mul(a->basis_element(i), a->basis_product(j, k));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("non-associative tables are rejected with the failing triple") {
    // unit b3; b1 b1 = b2, b1 b2 = b3, b2 b1 = b2 b2 = 0.
    // Then (b1 b1) b2 = 0 but b1 (b1 b2) = b1, violating associativity.
    std::vector<uint32_t> table(27, 0);
    auto set = [&](int i, int j, int k) { table[(i * 3 + j) * 3 + k] = 1; };
    set(0, 0, 1);
    set(0, 1, 2);
    for (int i = 0; i < 3; ++i) {
        set(2, i, i);
        if (i != 2) set(i, 2, i);
    }
    try {
        Algebra::from_table(2, {"b1", "b2", "b3"}, table, {0, 0, 1});
        FAIL("expected NonAssociative");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NonAssociative);
        CHECK(std::string(e.what()).find("b1") != std::string::npos);
    }
}

TEST_CASE("bad unit and non-prime characteristic are rejected") {
    CHECK_THROWS_AS(Algebra::from_table(2, {"e"}, {1}, {0}), Error);
    try {
        Algebra::from_table(4, {"e"}, {1}, {1});
        FAIL("expected NotPrime");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPrime);
    }
    CHECK_THROWS_AS(Algebra::from_table(101, {"e"}, {1}, {1}), Error);
}

TEST_CASE("path algebra of a single arrow is T2 up to basis permutation") {
    QuiverPresentation q;
    q.vertices = {"e11", "e22"};
    q.arrows = {{"e12", "e11", "e22"}};
    q.nilpotency_cap = 2;
    Algebra pa = path_algebra(q, 2);
    REQUIRE(pa.dim() == 3);
    auto hand = hand_t2();
    // match basis by label, then compare all structure constants
    std::vector<std::size_t> to_hand(3);
    for (std::size_t i = 0; i < 3; ++i) {
        auto idx = hand->label_index(pa.labels()[i]);
        REQUIRE(idx.has_value());
        to_hand[i] = *idx;
    }
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k)
                CHECK(pa.c(i, j, k) == hand->c(to_hand[i], to_hand[j], to_hand[k]));
    Element unit_mapped(3, 0);
    for (std::size_t i = 0; i < 3; ++i) unit_mapped[to_hand[i]] = pa.unit()[i];
    CHECK(unit_mapped == hand->unit());
}

TEST_CASE("loop with a square relation gives the dual numbers") {
    QuiverPresentation q;
    q.vertices = {"v"};
    q.arrows = {{"x", "v", "v"}};
    q.relations = {{RelationTerm{1, {"x", "x"}}}};
    q.nilpotency_cap = 2;
    Algebra a = path_algebra(q, 2);
    CHECK(a.dim() == 2);
    Element x = a.basis_element(*a.label_index("x"));
    CHECK(a.is_zero(a.mul(x, x)));
}

TEST_CASE("two arrows with zero composition give a 5-dimensional algebra") {
    QuiverPresentation q;
    q.vertices = {"v1", "v2", "v3"};
    q.arrows = {{"a", "v1", "v2"}, {"b", "v2", "v3"}};
    q.relations = {{RelationTerm{1, {"a", "b"}}}};
    q.nilpotency_cap = 3;
    Algebra alg = path_algebra(q, 2);
    CHECK(alg.dim() == 5); // 3 vertices + 2 arrows, the composite killed
    Element a = alg.basis_element(*alg.label_index("a"));
    Element b = alg.basis_element(*alg.label_index("b"));
    CHECK(alg.is_zero(alg.mul(a, b)));
}

TEST_CASE("a free loop exceeds any cap") {
    QuiverPresentation q;
    q.vertices = {"v"};
    q.arrows = {{"x", "v", "v"}};
    q.nilpotency_cap = 5;
    try {
        path_algebra(q, 2);
        FAIL("expected NotFiniteDimensional");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotFiniteDimensional);
    }
}

TEST_CASE("radical matches the brute-force subspace oracle") {
    // oracle: largest nilpotent two-sided ideal over every subspace
    for (const char* name : {"T2_F2", "F2xF2", "F2[x]/x2", "M2_F2", "F2"}) {
        auto a = builtin_algebra(name);
        CAPTURE(name);
        CHECK(radical(a).rows == oracle_largest_nilpotent_ideal(a));
    }
    // hand-built T2 exercises the small-characteristic tier (p = 2 <= dim = 3)
    auto t2 = hand_t2();
    FpMat expect = oracle_largest_nilpotent_ideal(t2);
    CHECK(radical(t2).rows == expect);
    CHECK(radical(t2).dim() == 1);
    CHECK(radical(t2).rows.row(0) == std::vector<uint32_t>{0, 1, 0}); // span{e12}
}

TEST_CASE("radical via the trace form when p > dim") {
    // F_7 x F_7 as structure constants: semisimple, radical zero
    std::vector<uint32_t> table(8, 0);
    table[(0 * 2 + 0) * 2 + 0] = 1;
    table[(1 * 2 + 1) * 2 + 1] = 1;
    auto a = std::make_shared<Algebra>(
        Algebra::from_table(7, {"u", "v"}, table, {1, 1}));
    CHECK(radical(a).dim() == 0);
    // dual numbers over F_7: radical is span{x}
    std::vector<uint32_t> t2(8, 0);
    t2[(0 * 2 + 0) * 2 + 0] = 1; // 1*1 = 1
    t2[(0 * 2 + 1) * 2 + 1] = 1; // 1*x = x
    t2[(1 * 2 + 0) * 2 + 1] = 1; // x*1 = x
    auto d = std::make_shared<Algebra>(Algebra::from_table(7, {"one", "x"}, t2, {1, 0}));
    Ideal r = radical(d);
    CHECK(r.dim() == 1);
    CHECK(r.rows.row(0) == std::vector<uint32_t>{0, 1});
}

TEST_CASE("semiprimary witness records the nilpotency index") {
    CHECK(is_semiprimary(hand_t2()).nilpotency_index == 2);
    CHECK(is_semiprimary(builtin_algebra("F2")).nilpotency_index == 1);
    CHECK(is_semiprimary(builtin_algebra("F2[x]/x2")).nilpotency_index == 2);
    auto w = is_semiprimary(builtin_algebra("T3_F2"));
    CHECK(w.nilpotency_index == 3);
    CHECK(w.quotient_semisimple);
    CHECK(is_semiprimary(builtin_algebra("A3_quiver_with_zero_relation"))
              .nilpotency_index == 2);
}

TEST_CASE("idempotents of T2: the six expected elements, closed under 1-e") {
    auto a = hand_t2();
    auto idems = enumerate_idempotents(*a);
    REQUIRE(idems.size() == 6);
    std::set<Element> got(idems.begin(), idems.end());
    std::set<Element> expect = {
        {0, 0, 0}, {1, 0, 0}, {0, 0, 1}, {1, 0, 1}, {1, 1, 0}, {0, 1, 1}};
    CHECK(got == expect);
    for (const auto& e : idems) {
        CHECK(a->mul(e, e) == e);
        CHECK(got.count(a->sub(a->unit(), e)) == 1);
    }
}

TEST_CASE("idempotents of F2 and the vertex tier") {
    auto f2 = builtin_algebra("F2");
    auto idems = enumerate_idempotents(*f2);
    CHECK(idems.size() == 2);
    auto a3 = builtin_algebra("A3_quiver_with_zero_relation");
    auto verts = vertex_idempotents(*a3);
    CHECK(verts.size() == 8); // 2^3 vertex subsets
    for (const auto& e : verts) CHECK(a3->is_idempotent(e));
}

TEST_CASE("idempotent enumeration respects its budget") {
    auto t3 = builtin_algebra("T3_F2");
    CHECK_THROWS_AS(enumerate_idempotents(*t3, 8), Error); // 2^6 = 64 > 8
}

TEST_CASE("peirce corners") {
    auto a = hand_t2();
    Element e11{1, 0, 0};
    CornerAlgebra c = peirce_corner(a, e11);
    CHECK(c.algebra->dim() == 1); // e11 A e11 = span{e11}
    CHECK(c.embedding.row(0) == std::vector<uint32_t>{1, 0, 0});

    CornerAlgebra full = peirce_corner(a, a->unit());
    CHECK(full.algebra->dim() == a->dim());
    // full corner multiplies exactly like the ambient algebra
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Element prod = full.algebra->basis_product(i, j);
            Element ambient = a->mul(full.embedding.row(i), full.embedding.row(j));
            Element mapped(a->dim(), 0);
            for (std::size_t k = 0; k < 3; ++k)
                mapped = a->add(mapped, a->scale(prod[k], full.embedding.row(k)));
            CHECK(mapped == ambient);
        }

    CornerAlgebra zero = peirce_corner(a, a->zero_element());
    CHECK(zero.algebra->dim() == 0);

    CHECK_THROWS_AS(peirce_corner(a, Element{0, 1, 0}), Error); // e12 not idempotent
}

TEST_CASE("quotient algebras") {
    auto a = hand_t2();
    Ideal ae11a = idempotent_to_ideal(a, Element{1, 0, 0});
    CHECK(ae11a.dim() == 2);
    QuotientAlgebra q = quotient_algebra(a, ae11a);
    CHECK(q.algebra->dim() == 1); // 3 - 2

    QuotientAlgebra by_zero = quotient_algebra(a, zero_ideal(a));
    CHECK(by_zero.algebra->dim() == 3);
    QuotientAlgebra by_all = quotient_algebra(a, unit_ideal(a));
    CHECK(by_all.algebra->dim() == 0);

    FpMat not_ideal(2, 1, 3);
    not_ideal.set_row(0, {1, 0, 0}); // span{e11} is not two-sided
    try {
        quotient_algebra(a, Ideal{a, rref(not_ideal)});
        FAIL("expected NotAnIdeal");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotAnIdeal);
    }
}

TEST_CASE("quotient by the radical is semisimple") {
    for (const char* name :
         {"F2", "F2xF2", "F2[x]/x2", "T2_F2", "T3_F2",
          "A3_quiver_with_zero_relation", "M2_F2"}) {
        auto a = builtin_algebra(name);
        QuotientAlgebra q = quotient_algebra(a, radical(a));
        CAPTURE(name);
        CHECK(radical(q.algebra).dim() == 0);
    }
}

TEST_CASE("zero algebra is a legal degenerate value") {
    Algebra z = Algebra::zero_algebra(2);
    CHECK(z.dim() == 0);
    auto zp = std::make_shared<Algebra>(z);
    CHECK(radical(zp).dim() == 0);
}

TEST_CASE("radical refuses structure-constant input outside every tier") {
    // F_3^9 diagonal: p = 3 <= dim = 9, no quiver data, 3^9 elements over the
    // enumeration budget
    const std::size_t n = 9;
    std::vector<uint32_t> table(n * n * n, 0);
    std::vector<std::string> labels;
    Element unit(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back("u" + std::to_string(i));
        table[(i * n + i) * n + i] = 1;
    }
    auto a = std::make_shared<Algebra>(Algebra::from_table(3, labels, table, unit));
    try {
        radical(a);
        FAIL("expected CharacteristicTooSmall");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CharacteristicTooSmall);
    }
}

TEST_CASE("vertex tier requires quiver provenance") {
    try {
        vertex_idempotents(*builtin_algebra("M2_F2"));
        FAIL("expected BadArgument");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BadArgument);
    }
}
