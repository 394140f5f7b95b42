#pragma once

#include "syz/graded_module.hpp"
#include "syz/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace syz {

// m-nodal rational curve of arithmetic genus g = m: node pairs (x_i, y_i) on
// the affine line (all 2m values distinct), denominator D(t) = prod (t-x)(t-y),
// and an exact basis of the dualizing sections h(t) dt / D(t), where h runs
// over the kernel of the residue conditions Res_{x_i} + Res_{y_i} = 0.
struct NodalRationalCurve {
    PrimeField field;
    std::vector<std::pair<uint32_t, uint32_t>> node_pairs;
    Poly denominator;
    PFMatrix canonical_basis; // g x (2g-1), rows = numerator coefficients
    std::vector<uint32_t> marked_points;

    int genus() const { return static_cast<int>(node_pairs.size()); }
    bool is_node_coordinate(uint32_t t) const;
};

enum class CurveMode { random_pairs, from_pencil };

struct CurveSpec {
    int genus = 0;
    uint32_t modulus = 10007;
    uint64_t seed = 1;
    CurveMode mode = CurveMode::random_pairs;
    std::optional<std::vector<std::pair<uint32_t, uint32_t>>> pairs; // explicit override
};

// signals "resample me" to callers that own the retry policy
struct CurveRejected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact curve construction.  Retries degenerate coordinate draws internally
// (bounded), throws CurveRejected when the bound is exhausted.  In
// from_pencil mode the node pairs are drawn from distinct fibers of a random
// degree-(g/2+1) map, which then descends to a pencil on the curve; the
// seeding map is returned through *seeding_pencil when requested.
NodalRationalCurve build_curve(const CurveSpec& spec,
                               std::pair<Poly, Poly>* seeding_pencil = nullptr);

NodalRationalCurve curve_from_pairs(PrimeField F,
                                    std::vector<std::pair<uint32_t, uint32_t>> pairs);

// Canonical ring as explicit graded module data: M_q spanned by q-fold
// products of the canonical basis, numerators over D(t)^q.
struct CanonicalRing {
    GradedModuleData module;
    std::vector<PFMatrix> basis_numerators; // [q]: piece_dims[q] x (q(2g-2)+1)
    Poly denominator;
    int genus = 0;

    // numerator polynomial of the element with the given degree-q coordinates
    Poly numerator_of(int q, std::span<const uint32_t> coords) const;
    // evaluate the numerator at a smooth-locus coordinate
    uint32_t eval_numerator(int q, std::span<const uint32_t> coords, uint32_t t) const;
};

// Throws CurveRejected if dim M_q != (2q-1)(g-1) for some 2 <= q <= qmax
// (the projective-normality acceptance assertion).
CanonicalRing canonical_ring(const NodalRationalCurve& c, int qmax);

struct IdealSlices {
    PFMatrix I2; // rows in Sym^2 V coordinates (pairs i<=j, lexicographic)
    PFMatrix I3; // rows in Sym^3 V coordinates (triples i<=j<=k)
};
IdealSlices quadrics_cubics(const CanonicalRing& ring);

// Per-degree subspaces of sections vanishing at two smooth points x != y,
// in module coordinates; feeds submodule()/quotient_module().
std::vector<PFMatrix> twist_subspaces(const NodalRationalCurve& c, const CanonicalRing& ring,
                                      uint32_t x, uint32_t y);

struct IdentifyResult {
    NodalRationalCurve curve; // genus g+1
    PFMatrix inclusion;       // g x (g+1): old canonical basis in new coordinates
};
IdentifyResult identify_points(const NodalRationalCurve& c, uint32_t x, uint32_t y);

// build + canonical_ring with resampling on rejection; retries bump the seed
struct AcceptedCurve {
    NodalRationalCurve curve;
    CanonicalRing ring;
    int retries = 0;
    std::pair<Poly, Poly> seeding_pencil; // valid in from_pencil mode
};
AcceptedCurve build_accepted_curve(CurveSpec spec, int qmax, int max_retries = 32);

// first few non-node points of the affine line, for marked-point choices
std::vector<uint32_t> smooth_affine_points(const NodalRationalCurve& c, int count,
                                           Rng& rng);

} // namespace syz
