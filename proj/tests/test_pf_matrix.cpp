#include "doctest.h"
#include "oracles.hpp"

#include "syz/pf_matrix.hpp"

using namespace syz;

TEST_CASE("prime field basics") {
    PrimeField F(10007);
    CHECK(F.mul(F.inv(1234), 1234) == 1);
    CHECK(F.add(10006, 1) == 0);
    CHECK(F.pow(3, 10006) == 1); // Fermat
    CHECK_THROWS(PrimeField(10006));
    CHECK_THROWS(PrimeField(1));
    CHECK_THROWS(PrimeField(2));
}

TEST_CASE("rank_kernel: identity and zero") {
    PrimeField F7(7);
    auto id = PFMatrix::identity(F7, 3);
    auto rk = rank_kernel(id);
    CHECK(rk.rank == 3);
    CHECK(rk.kernel.rows == 0);

    PFMatrix z(F7, 2, 5);
    auto rz = rank_kernel(z);
    CHECK(rz.rank == 0);
    CHECK(rz.kernel.rows == 5);
}

TEST_CASE("rank agrees with fraction-free oracle (random GF(101) 40x60)") {
    PrimeField F(101);
    Rng rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        auto m = PFMatrix::random(F, 40, 60, rng);
        auto rk = rank_kernel(m);
        CHECK(rk.rank == reference_rank_fraction_free(m));
        CHECK(rk.rank + rk.kernel.rows == m.cols); // rank-nullity
        for (std::size_t i = 0; i < rk.kernel.rows; ++i) {
            auto img = mat_vec(m, rk.kernel.row(i));
            for (uint32_t x : img) CHECK(x == 0);
        }
        CHECK(rank_of(rk.kernel) == rk.kernel.rows);
    }
}

TEST_CASE("rank of product bounded by factor ranks") {
    PrimeField F(101);
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        auto a = PFMatrix::random(F, 12, 9, rng);
        auto b = PFMatrix::random(F, 9, 15, rng);
        auto ab = matmul(a, b);
        CHECK(rank_of(ab) <= std::min(rank_of(a), rank_of(b)));
    }
}

TEST_CASE("intersect_rowspaces: trivial cases") {
    PrimeField F5(5);
    Rng rng(3);
    auto a = PFMatrix::random(F5, 2, 6, rng);
    auto same = intersect_rowspaces(a, a);
    CHECK(rank_of(same) == rank_of(a));
    for (std::size_t i = 0; i < same.rows; ++i)
        CHECK(in_rowspace(a, same.row(i)));

    // complementary coordinate subspaces of GF(5)^4
    auto e01 = PFMatrix::from_rows(F5, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    auto e23 = PFMatrix::from_rows(F5, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    CHECK(intersect_rowspaces(e01, e23).rows == 0);

    PFMatrix wrong(F5, 1, 3);
    CHECK_THROWS(intersect_rowspaces(a, wrong));
}

TEST_CASE("intersect_rowspaces agrees with exhaustive membership oracle over GF(5)") {
    PrimeField F5(5);
    Rng rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        auto a = PFMatrix::random(F5, 3, 6, rng);
        auto b = PFMatrix::random(F5, 4, 6, rng);
        auto meet = intersect_rowspaces(a, b);
        CHECK(static_cast<int>(rank_of(meet)) == testing::intersection_dim_exhaustive(a, b));
        // dim(A) + dim(B) == dim(A+B) + dim(A∩B)
        CHECK(rank_of(a) + rank_of(b) == rank_of(row_stack(a, b)) + meet.rows);
        for (std::size_t i = 0; i < meet.rows; ++i) {
            CHECK(in_rowspace(a, meet.row(i)));
            CHECK(in_rowspace(b, meet.row(i)));
        }
    }
}

TEST_CASE("coordinate solver") {
    PrimeField F(13);
    Rng rng(5);
    auto basis = PFMatrix::random(F, 3, 7, rng);
    REQUIRE(rank_of(basis) == 3);
    CoordinateSolver cs(basis);
    std::vector<uint32_t> c{4, 0, 9};
    std::vector<uint32_t> v(7, 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 7; ++j)
            v[j] = F.add(v[j], F.mul(c[i], basis.at(i, j)));
    auto got = cs.coords(v);
    REQUIRE(got.has_value());
    CHECK(*got == c);
}
