#pragma once

#include "syz/curve.hpp"
#include "syz/poly.hpp"

#include <cstdint>
#include <vector>

namespace syz {

// A degree-d pencil on a nodal rational curve: a 2-dimensional space of
// polynomials of degree <= d, compatible with every node identification
// (u(x_i) v(y_i) = u(y_i) v(x_i) for all members u, v), with no base point
// (gcd 1 and full degree).  Stored by the reduced echelon basis of its
// coefficient span, which is the canonical form under post-composition by
// fractional linear transformations.
struct Pencil {
    Poly u, v; // echelon basis rows of the member span
    int degree = 0;

    std::vector<uint32_t> canonical_key(int width) const;
    Poly member(const PrimeField& F, uint32_t a, uint32_t b) const; // a*u + b*v
};

struct PencilSearch {
    std::vector<Pencil> pencils; // sorted by canonical key
    bool complete = true;        // false when the candidate budget ran out
    uint64_t candidates_tried = 0;
    uint64_t candidates_total = 0;
};

// Exhaustive enumeration over the curve's own field: v runs over projective
// coefficient space, the node conditions are linear in u, and nullspace
// solves give the candidates.  budget_candidates = 0 means no budget.
PencilSearch find_pencils(const NodalRationalCurve& c, int d, uint64_t budget_candidates = 0);

struct GonalityResult {
    int gonality = 0; // smallest d with a pencil, or the first unsearched d
    bool exact = true; // false = "unknown >= gonality"
    PencilSearch minimal; // the search at the reported degree
};
GonalityResult gonality(const NodalRationalCurve& c, uint64_t budget_per_degree = 0);

struct DivisorInfo {
    std::vector<std::pair<uint32_t, int>> finite_roots; // rational roots only
    int mult_at_infinity = 0;
    bool squarefree = true;
    bool hits_node = false;  // a root coincides with a node coordinate
    bool reduced = true;     // squarefree member and at most simple at infinity
};
DivisorInfo pencil_divisor(const NodalRationalCurve& c, const Pencil& pcl,
                           uint32_t a, uint32_t b);

// Numerators of the canonical sections vanishing on the divisor of the given
// member: the intersection of the canonical span with member * (polys of
// degree <= 2g-2-d).  Rows are numerator coefficient vectors.
PFMatrix pencil_section_space(const NodalRationalCurve& c, const Pencil& pcl,
                              uint32_t a, uint32_t b);

// Distinct pencils found over GF(p^2), counted up to Frobenius conjugacy,
// for the configurable extension-field search.  Expensive; budget-gated.
struct ExtPencilCount {
    uint64_t rational = 0;   // pencils already defined over GF(p)
    uint64_t total = 0;      // distinct pencils over GF(p^2)
    bool complete = true;
    uint64_t candidates_tried = 0;
};
ExtPencilCount count_pencils_ext2(const NodalRationalCurve& c, int d,
                                  uint64_t budget_candidates = 0);

} // namespace syz
