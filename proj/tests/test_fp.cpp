#include "recollement/fp.hpp"
#include "recollement/error.hpp"

#include "doctest.h"

using namespace recoll;

TEST_CASE("prime field arithmetic") {
    CHECK(fp::is_prime(2));
    CHECK(fp::is_prime(97));
    CHECK_FALSE(fp::is_prime(1));
    CHECK_FALSE(fp::is_prime(91)); // 7 * 13
    for (uint32_t p : {2u, 3u, 5u, 7u, 97u})
        for (uint32_t a = 1; a < p; ++a) CHECK(fp::mul(p, a, fp::inv(p, a)) == 1);
}

TEST_CASE("rref is idempotent and canonical") {
    FpMat m(2, 3, 4);
    m.set_row(0, {1, 1, 0, 1});
    m.set_row(1, {0, 1, 1, 0});
    m.set_row(2, {1, 0, 1, 1});
    FpMat e = rref(m);
    CHECK(rref(e) == e);
    CHECK(e.rows() == rank(m));
    auto piv = pivot_columns(e);
    for (std::size_t i = 1; i < piv.size(); ++i) CHECK(piv[i - 1] < piv[i]);
    // reduced: pivot columns contain a single 1
    for (std::size_t i = 0; i < piv.size(); ++i)
        for (std::size_t r = 0; r < e.rows(); ++r)
            CHECK(e(r, piv[i]) == (r == i ? 1u : 0u));
}

TEST_CASE("row space equality is literal comparison after rref") {
    FpMat a(2, 2, 3), b(2, 2, 3);
    a.set_row(0, {1, 1, 0});
    a.set_row(1, {0, 0, 1});
    b.set_row(0, {1, 1, 1});
    b.set_row(1, {0, 0, 1});
    CHECK(rref(a) == rref(b));
}

TEST_CASE("nullspaces") {
    FpMat m(2, 2, 3);
    m.set_row(0, {1, 0, 1});
    m.set_row(1, {0, 1, 1});
    FpMat rn = right_nullspace_rows(m); // x with m x^T = 0
    CHECK(rn.rows() == 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        uint32_t dot = 0;
        for (std::size_t c = 0; c < 3; ++c) dot ^= m(r, c) & rn(0, c);
        CHECK(dot == 0);
    }
    FpMat ln = left_nullspace(m.transposed());
    CHECK(ln == rn);
}

TEST_CASE("subspace sums and intersections over F_2^4") {
    FpMat a(2, 2, 4), b(2, 2, 4);
    a.set_row(0, {1, 0, 0, 0});
    a.set_row(1, {0, 1, 0, 0});
    b.set_row(0, {0, 1, 0, 0});
    b.set_row(1, {0, 0, 1, 0});
    FpMat s = subspace_sum(rref(a), rref(b));
    FpMat i = subspace_intersection(rref(a), rref(b));
    CHECK(s.rows() == 3);
    CHECK(i.rows() == 1);
    CHECK(i.row(0) == std::vector<uint32_t>{0, 1, 0, 0});
    // dimension formula on random-ish subspaces
    for (const auto& x : enumerate_subspaces(2, 3, 3))
        for (const auto& y : enumerate_subspaces(2, 3, 3)) {
            FpMat xs = rref(x), ys = rref(y);
            CHECK(subspace_sum(xs, ys).rows() + subspace_intersection(xs, ys).rows() ==
                  xs.rows() + ys.rows());
        }
}

TEST_CASE("coords_in_rowspace solves exactly") {
    FpMat basis(3, 2, 3);
    basis.set_row(0, {1, 2, 0});
    basis.set_row(1, {0, 1, 1});
    std::vector<uint32_t> v{1, 0, 1}; // 1*(1,2,0) + 1*(0,1,1) = (1,0,1) mod 3
    std::vector<uint32_t> coords;
    REQUIRE(coords_in_rowspace(basis, v, &coords));
    auto back = apply_row(coords, basis);
    CHECK(back == v);
    CHECK_FALSE(coords_in_rowspace(basis, {0, 0, 1}, nullptr));
}

TEST_CASE("subspace enumeration matches the Gaussian count") {
    // 67 subspaces of F_2^4, 16 of F_2^3
    CHECK(count_subspaces(2, 4, 4) == 67);
    CHECK(enumerate_subspaces(2, 4, 4).size() == 67);
    CHECK(count_subspaces(2, 3, 3) == 16);
    CHECK(enumerate_subspaces(2, 3, 3).size() == 16);
    CHECK(count_subspaces(3, 3, 3) == 28);
    CHECK(enumerate_subspaces(3, 3, 3).size() == 28);
    // every enumerated subspace is already echelonized and distinct
    auto all = enumerate_subspaces(2, 4, 4);
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(rref(all[i]) == all[i]);
        for (std::size_t j = i + 1; j < all.size(); ++j) CHECK_FALSE(all[i] == all[j]);
    }
}

TEST_CASE("degenerate shapes") {
    FpMat empty(2, 0, 3);
    CHECK(rref(empty).rows() == 0);
    CHECK(right_nullspace_rows(empty).rows() == 3); // no constraints
    FpMat zero_cols(2, 2, 0);
    CHECK(rref(zero_cols).rows() == 0);
    CHECK(subspace_contains(empty, {0, 0, 0}));
    CHECK_FALSE(subspace_contains(empty, {1, 0, 0}));
}
