#include "doctest.h"

#include "syz/poly.hpp"

using namespace syz;

TEST_CASE("poly arithmetic round trips") {
    PrimeField F(13);
    Poly a = Poly::from_coeffs({3, 0, 7, 1});  // 3 + 7t^2 + t^3
    Poly b = Poly::from_coeffs({5, 2});        // 5 + 2t
    auto ab = poly_mul(F, a, b);
    auto [q, r] = poly_divrem(F, ab, b);
    CHECK(q.c == a.c);
    CHECK(r.is_zero());
    auto [q2, r2] = poly_divrem(F, poly_add(F, ab, Poly::constant(4)), b);
    CHECK(q2.c == a.c);
    CHECK(r2.c == std::vector<uint32_t>{4});
}

TEST_CASE("gcd and squarefree detection") {
    PrimeField F(101);
    Poly f = poly_mul(F, Poly::linear_root(F, 3), Poly::linear_root(F, 5));
    Poly g = poly_mul(F, Poly::linear_root(F, 3), Poly::linear_root(F, 7));
    auto d = poly_gcd(F, f, g);
    CHECK(d.degree() == 1);
    CHECK(poly_eval(F, d, 3) == 0);

    CHECK(poly_is_squarefree(F, f));
    CHECK_FALSE(poly_is_squarefree(F, poly_mul(F, f, Poly::linear_root(F, 3))));
}

TEST_CASE("roots with multiplicity") {
    PrimeField F(31);
    Poly f = Poly::constant(2);
    for (int i = 0; i < 2; ++i) f = poly_mul(F, f, Poly::linear_root(F, 4));
    f = poly_mul(F, f, Poly::linear_root(F, 9));
    auto roots = poly_roots(F, f);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == std::pair<uint32_t, int>{4, 2});
    CHECK(roots[1] == std::pair<uint32_t, int>{9, 1});
}

TEST_CASE("eval matches direct expansion") {
    PrimeField F(10007);
    Poly f = Poly::from_coeffs({1, 2, 3, 4});
    uint32_t x = 123;
    uint64_t expect = (1 + 2ull * x + 3ull * x % 10007 * x + 4ull * x % 10007 * x % 10007 * x) % 10007;
    CHECK(poly_eval(F, f, x) == expect);
}
