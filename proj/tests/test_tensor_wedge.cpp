#include "doctest.h"
#include "oracles.hpp"

#include "syz/tensor3.hpp"
#include "syz/wedge.hpp"

using namespace syz;

namespace {
Tensor3 pure_tensor(PrimeField F, const std::vector<uint32_t>& u,
                    const std::vector<uint32_t>& v, const std::vector<uint32_t>& w) {
    Tensor3 t(F, u.size(), v.size(), w.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            for (std::size_t k = 0; k < w.size(); ++k)
                t.at(i, j, k) = F.mul(F.mul(u[i], v[j]), w[k]);
    return t;
}
} // namespace

TEST_CASE("flatten_rank: pure and zero tensors") {
    PrimeField F(7);
    auto t = pure_tensor(F, {1, 2, 3, 0}, {2, 5, 0, 1, 6}, {1, 1, 4});
    CHECK(flatten_rank(t) == 1);
    Tensor3 z(F, 3, 4, 2);
    CHECK(flatten_rank(z) == 0);
}

TEST_CASE("flatten_rank equals exhaustive minimal subspace search (GF(7), 4x5x3)") {
    PrimeField F(7);
    Rng rng(101);
    int checked = 0;
    for (int trial = 0; trial < 40 && checked < 6; ++trial) {
        // sums of r pure tensors give small middle rank; exhaustive oracle
        // only enumerates subspaces of dim <= 2 cheaply
        int r = 1 + static_cast<int>(rng.below(2));
        Tensor3 t(F, 4, 5, 3);
        for (int s = 0; s < r; ++s) {
            std::vector<uint32_t> u(4), v(5), w(3);
            for (auto& x : u) x = rng.field_element(7);
            for (auto& x : v) x = rng.field_element(7);
            for (auto& x : w) x = rng.field_element(7);
            auto pt = pure_tensor(F, u, v, w);
            for (std::size_t i = 0; i < t.t.size(); ++i) t.t[i] = F.add(t.t[i], pt.t[i]);
        }
        std::size_t fr = flatten_rank(t);
        if (fr > 2) continue;
        CHECK(static_cast<int>(fr) == testing::minimal_middle_dim_exhaustive(t));
        ++checked;
    }
    CHECK(checked >= 3);
}

TEST_CASE("flatten_rank of r pure tensors with independent middle factors is r") {
    PrimeField F(101);
    Rng rng(9);
    for (int r = 1; r <= 4; ++r) {
        Tensor3 t(F, 5, 6, 4);
        PFMatrix mids(F, r, 6);
        while (true) {
            for (auto& x : mids.a) x = rng.field_element(101);
            if (rank_of(mids) == static_cast<std::size_t>(r)) break;
        }
        for (int s = 0; s < r; ++s) {
            std::vector<uint32_t> u(5), w(4), v(mids.row(s).begin(), mids.row(s).end());
            for (auto& x : u) x = rng.field_element(101);
            for (auto& x : w) x = rng.field_element(101);
            auto pt = pure_tensor(F, u, v, w);
            for (std::size_t i = 0; i < t.t.size(); ++i) t.t[i] = F.add(t.t[i], pt.t[i]);
        }
        CHECK(flatten_rank(t) == static_cast<std::size_t>(r));
    }
}

TEST_CASE("wedge tuples: shape and order") {
    auto t32 = wedge_tuples(3, 2);
    REQUIRE(t32.size() == 3);
    CHECK(t32[0] == std::vector<int>{0, 1});
    CHECK(t32[1] == std::vector<int>{0, 2});
    CHECK(t32[2] == std::vector<int>{1, 2});

    CHECK(wedge_tuples(5, 0).size() == 1); // single empty tuple
    CHECK(wedge_tuples(2, 3).empty());     // p > n
    CHECK(wedge_tuples(8, 3).size() == 56);
}

TEST_CASE("wedge rank is the lexicographic position") {
    for (int n : {5, 8}) {
        for (int p : {1, 2, 3}) {
            auto ts = wedge_tuples(n, p);
            for (std::size_t i = 0; i < ts.size(); ++i)
                CHECK(wedge_rank(n, p, ts[i].data()) == i);
        }
    }
}

TEST_CASE("wedge_insert sign") {
    std::vector<int> out;
    CHECK(wedge_insert({1, 3}, 2, out) == -1); // one element greater than 2
    CHECK(out == std::vector<int>{1, 2, 3});
    CHECK(wedge_insert({1, 3}, 0, out) == 1);  // two greater: even
    CHECK(wedge_insert({1, 3}, 5, out) == 1);
    CHECK(wedge_insert({1, 3}, 3, out) == 0);  // repeated index dies
}

TEST_CASE("wedge_expand is alternating and multilinear") {
    PrimeField F(13);
    Rng rng(4);
    auto rows = PFMatrix::random(F, 3, 6, rng);
    // swap two factors: sign flips
    auto v01 = wedge_expand(F, rows, {0, 1});
    PFMatrix swapped = PFMatrix::from_rows(F, {
        std::vector<uint32_t>(rows.row(1).begin(), rows.row(1).end()),
        std::vector<uint32_t>(rows.row(0).begin(), rows.row(0).end()),
        std::vector<uint32_t>(rows.row(2).begin(), rows.row(2).end())});
    auto v10 = wedge_expand(F, swapped, {0, 1});
    for (std::size_t i = 0; i < v01.size(); ++i) CHECK(v01[i] == F.neg(v10[i]));
    // repeated factor vanishes
    PFMatrix dup = PFMatrix::from_rows(F, {
        std::vector<uint32_t>(rows.row(0).begin(), rows.row(0).end()),
        std::vector<uint32_t>(rows.row(0).begin(), rows.row(0).end())});
    auto v00 = wedge_expand(F, dup, {0, 1});
    for (uint32_t x : v00) CHECK(x == 0);
}

TEST_CASE("wedge_power_matrix has full rank for independent rows") {
    PrimeField F(13);
    Rng rng(8);
    PFMatrix rows = PFMatrix::random(F, 4, 7, rng);
    REQUIRE(rank_of(rows) == 4);
    for (int p = 1; p <= 4; ++p) {
        auto wp = wedge_power_matrix(rows, p);
        CHECK(wp.rows == binomial(4, p));
        CHECK(wp.cols == binomial(7, p));
        CHECK(rank_of(wp) == wp.rows);
    }
}
