#include "doctest.h"

#include "syz/pencil.hpp"

using namespace syz;

namespace {
AcceptedCurve genus6_curve(uint64_t seed) {
    return build_accepted_curve({6, 13, seed, CurveMode::from_pencil, std::nullopt}, 3);
}
} // namespace

TEST_CASE("from_pencil curve: the seeding pencil is found and counts stay Catalan-bounded") {
    auto ac = genus6_curve(1);
    auto search = find_pencils(ac.curve, 4);
    REQUIRE(search.complete);
    CHECK(search.pencils.size() >= 1);
    CHECK(search.pencils.size() <= 5); // (2k)!/(k!(k+1)!) = 5 at k = 3

    // the seeding map's span appears among the results
    const PrimeField& F = ac.curve.field;
    PFMatrix seed(F, 2, 5);
    for (std::size_t j = 0; j < ac.seeding_pencil.first.c.size(); ++j)
        seed.at(0, j) = ac.seeding_pencil.first.c[j];
    for (std::size_t j = 0; j < ac.seeding_pencil.second.c.size(); ++j)
        seed.at(1, j) = ac.seeding_pencil.second.c[j];
    PFMatrix canon = rref(seed);
    bool found = false;
    for (auto& pcl : search.pencils) {
        bool same = true;
        for (int j = 0; j < 5 && same; ++j) {
            if ((j < static_cast<int>(pcl.u.c.size()) ? pcl.u.c[j] : 0) != canon.at(0, j)) same = false;
            if ((j < static_cast<int>(pcl.v.c.size()) ? pcl.v.c[j] : 0) != canon.at(1, j)) same = false;
        }
        if (same) found = true;
    }
    CHECK(found);
}

TEST_CASE("gonality of an accepted genus-6 curve is 4") {
    auto ac = genus6_curve(1);
    auto gon = gonality(ac.curve);
    CHECK(gon.exact);
    CHECK(gon.gonality == 4);
    // no pencils of degree <= k = 3
    for (int d = 1; d <= 3; ++d) CHECK(find_pencils(ac.curve, d).pencils.empty());
}

TEST_CASE("pencil divisors") {
    auto ac = genus6_curve(1);
    auto search = find_pencils(ac.curve, 4);
    REQUIRE(!search.pencils.empty());
    const Pencil& pcl = search.pencils[0];
    const PrimeField& F = ac.curve.field;

    SUBCASE("member (1:0) has the roots of u") {
        auto info = pencil_divisor(ac.curve, pcl, 1, 0);
        for (auto& [r, mult] : info.finite_roots) {
            (void)mult;
            CHECK(poly_eval(F, pcl.u, r) == 0);
        }
    }
    SUBCASE("degree bookkeeping at infinity") {
        // scan members; any degree drop shows up as infinity multiplicity
        int drops = 0;
        for (uint32_t a = 0; a < F.p(); ++a) {
            auto info = pencil_divisor(ac.curve, pcl, a, 1);
            Poly mem = pcl.member(F, a, 1);
            CHECK(info.mult_at_infinity == pcl.degree - mem.degree());
            if (info.mult_at_infinity > 0) ++drops;
        }
        CHECK(drops <= 1); // leading coefficients vanish on at most one member
    }
    SUBCASE("zero member rejected") {
        CHECK_THROWS(pencil_divisor(ac.curve, pcl, 0, 0));
    }
}

TEST_CASE("section space of a pencil member has dimension k") {
    auto ac = genus6_curve(1);
    auto search = find_pencils(ac.curve, 4);
    REQUIRE(!search.pencils.empty());
    const PrimeField& F = ac.curve.field;
    for (auto& pcl : search.pencils) {
        int checked = 0;
        for (uint32_t a = 0; a <= F.p() && checked < 3; ++a) {
            uint32_t aa = (a == F.p()) ? 1 : a, bb = (a == F.p()) ? 0 : 1;
            auto info = pencil_divisor(ac.curve, pcl, aa, bb);
            if (!info.reduced || info.hits_node) continue;
            auto ws = pencil_section_space(ac.curve, pcl, aa, bb);
            CHECK(ws.rows == 3); // h^0(omega - A) = k at g = 2k
            ++checked;
        }
        CHECK(checked >= 1);
    }
}

TEST_CASE("quadratic extension count dominates the rational count (genus 4, GF(11))") {
    // small instance: genus-4 curves have two minimal pencils over the closure
    AcceptedCurve ac = build_accepted_curve({4, 11, 2, CurveMode::from_pencil, std::nullopt}, 3);
    auto rat = find_pencils(ac.curve, 3);
    REQUIRE(rat.complete);
    auto ext = count_pencils_ext2(ac.curve, 3);
    REQUIRE(ext.complete);
    CHECK(ext.rational == rat.pencils.size());
    CHECK(ext.total >= ext.rational);
    CHECK(ext.total <= 2); // Catalan bound at k = 2
}
