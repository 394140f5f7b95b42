#include "doctest.h"

#include "syz/graded_module.hpp"

using namespace syz;

TEST_CASE("koszul cohomology of Sym(V) vanishes away from (0,0)") {
    PrimeField F(101);
    for (int n : {2, 3, 4}) {
        auto S = sym_algebra_truncation(F, n, 3);
        Rng rng(1);
        S.check_action_commutes(rng);
        for (int p = 0; p <= n; ++p)
            for (int q = 0; q <= 2; ++q) {
                auto coh = koszul_cohomology(S, {p, q});
                int expect = (p == 0 && q == 0) ? 1 : 0;
                CHECK(coh.dim == expect);
            }
    }
}

TEST_CASE("differential at (1,0) is minus the degree-one embedding") {
    // with the (-1)^j convention (j counted from one) the p = 1 differential
    // carries a global minus sign
    PrimeField F(13);
    auto S = sym_algebra_truncation(F, 3, 2);
    auto D = koszul_differential(S, {1, 0});
    REQUIRE(D.rows == 3);
    REQUIRE(D.cols == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(D.at(i, j) == (i == j ? F.neg(1) : 0));
}

TEST_CASE("d after d is zero") {
    PrimeField F(13);
    auto S = sym_algebra_truncation(F, 4, 3);
    for (int p = 1; p <= 3; ++p) {
        auto d2 = koszul_differential(S, {p, 1});
        auto d1 = koszul_differential(S, {p + 1, 0});
        auto z = matmul(d2, d1);
        CHECK(z.is_zero());
    }
}

TEST_CASE("blocked rank agrees with dense rank on the graded Sym truncation") {
    PrimeField F(101);
    auto S = sym_algebra_truncation(F, 4, 3, /*with_grading=*/true);
    for (int p = 1; p <= 4; ++p)
        for (int q = 0; q <= 2; ++q) {
            auto dense = koszul_differential(S, {p, q});
            CHECK(koszul_rank_graded(S, {p, q}) == rank_of(dense));
        }
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 2; ++q)
            CHECK(koszul_dim_graded(S, {p, q}) == koszul_cohomology(S, {p, q}).dim);
}

TEST_CASE("submodule and quotient: full submodule gives zero quotient") {
    PrimeField F(13);
    auto S = sym_algebra_truncation(F, 3, 2);
    std::vector<PFMatrix> full;
    for (int q = 0; q <= 2; ++q) full.push_back(PFMatrix::identity(F, S.piece_dims[q]));
    auto sub = submodule(S, full);
    for (int q = 0; q <= 2; ++q) CHECK(sub.piece_dims[q] == S.piece_dims[q]);
    auto quo = quotient_module(S, full);
    for (int q = 0; q <= 2; ++q) CHECK(quo.piece_dims[q] == 0);
}

TEST_CASE("submodule rejects subspaces not closed under the action") {
    PrimeField F(13);
    auto S = sym_algebra_truncation(F, 2, 2); // pieces 1, 2, 3
    std::vector<PFMatrix> bad;
    bad.push_back(PFMatrix::identity(F, 1));
    bad.push_back(PFMatrix::from_rows(F, {{1, 0}})); // span{x} in degree 1
    bad.push_back(PFMatrix::from_rows(F, {{1, 0, 0}})); // x^2 only: x*y missing
    CHECK_THROWS(submodule(S, bad));
}

TEST_CASE("ideal submodule of Sym: quotient is the smaller Sym") {
    PrimeField F(13);
    auto S = sym_algebra_truncation(F, 3, 3);
    std::vector<PFMatrix> sub;
    sub.push_back(PFMatrix(F, 0, 1));
    std::vector<uint32_t> xvec = {1, 0, 0};
    for (int q = 1; q <= 3; ++q) {
        PFMatrix rows(F, S.piece_dims[q - 1], S.piece_dims[q]);
        for (int j = 0; j < S.piece_dims[q - 1]; ++j) {
            std::vector<uint32_t> m(S.piece_dims[q - 1], 0);
            m[j] = 1;
            auto img = S.apply_mult(q - 1, xvec, m);
            std::copy(img.begin(), img.end(), rows.row_mut(j).begin());
        }
        sub.push_back(rref(rows));
    }
    auto quo = quotient_module(S, sub);
    for (int q = 0; q <= 3; ++q) CHECK(quo.piece_dims[q] == q + 1);
}
