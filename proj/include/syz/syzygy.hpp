#pragma once

#include "syz/curve.hpp"
#include "syz/pencil.hpp"

#include <array>
#include <map>
#include <optional>
#include <vector>

namespace syz {

// Representation of a K_{p,1} class in the quadric strand: a Koszul-on-ideal
// cycle in wedge^{p-1} V (x) I_2, coefficient index = wedge_rank * dim I_2 +
// ideal index.  Representative-free: boundaries map to zero.
struct QuadricRep {
    int p = 0;
    std::vector<uint32_t> coeff;
    bool is_zero() const {
        for (uint32_t x : coeff)
            if (x) return false;
        return true;
    }
};

// rank value, a basis of the minimal subspace carrying the class, and a
// content hash of the flattening that certified it.  For p = 1 the subspace
// stored is the symmetric-matrix column space (dimension = symmetric rank)
// while the reported rank follows the ceil(sym rank / 2) convention.
struct RankCertificate {
    int rank = 0;
    PFMatrix w_basis;
    uint64_t flattening_hash = 0;
};

// Everything the syzygy operations need about one canonically embedded
// curve: its ring, the ideal slices, symmetric-power index tables, and a
// cache of cohomology groups.
class SyzygyContext {
public:
    explicit SyzygyContext(CanonicalRing ring_in);

    const CanonicalRing& ring() const { return ring_; }
    const GradedModuleData& module() const { return ring_.module; }
    const IdealSlices& ideal() const { return ideal_; }
    int dim_v() const { return ring_.module.dim_v; }
    int dim_i2() const { return static_cast<int>(ideal_.I2.rows); }

    const KoszulCohomology& cohomology(int p, int q);
    const PFMatrix& differential(int p, int q);

    int sym2_index(int i, int j) const; // i <= j after sorting
    const std::vector<std::pair<int, int>>& sym2_pairs() const { return sym2_; }

    // product of a coordinate vector pair as an element of Sym^2 V
    std::vector<uint32_t> sym2_product(std::span<const uint32_t> a,
                                       std::span<const uint32_t> b) const;

    std::optional<std::vector<uint32_t>> i2_coords(std::span<const uint32_t> sym2_vec) const;
    std::vector<uint32_t> i2_expand(std::span<const uint32_t> i2_vec) const;

    // V x I_2 -> I_3 structure constants (e_a * Q_c in the I_3 basis)
    const Tensor3& v_times_i2() const { return v_times_i2_; }

private:
    CanonicalRing ring_;
    IdealSlices ideal_;
    std::vector<std::pair<int, int>> sym2_;
    std::vector<std::vector<int>> sym2_pos_;
    CoordinateSolver i2_solver_, i3_solver_;
    Tensor3 v_times_i2_;
    std::map<std::pair<int, int>, KoszulCohomology> coh_cache_;
    std::map<std::pair<int, int>, PFMatrix> diff_cache_;
};

// native (p,1) cycle -> quadric representation (symbol-level differential
// into wedge^{p-1} V (x) Sym^2, which provably lands in the I_2 component).
// Throws when the input is not a cycle.
QuadricRep to_quadric_rep(SyzygyContext& ctx, const KoszulClass& cls);

// inverse up to Koszul boundaries
KoszulClass from_quadric_rep(SyzygyContext& ctx, const QuadricRep& rep);

// checks the Koszul-on-ideal cycle condition wedge^{p-1} (x) I_2 ->
// wedge^{p-2} (x) I_3
bool quadric_rep_is_cycle(SyzygyContext& ctx, const QuadricRep& rep);

// linear strand map: d applied to the wedge factor of each sigma (x) Q term;
// order-3 tensor in wedge^{p-2} V  x  V  x  I_2.  Requires p >= 2.
Tensor3 linear_strand(SyzygyContext& ctx, const QuadricRep& rep);

// rank of a nonzero class: flattening rank of the linear strand along the
// middle V factor for p >= 2, ceil(symmetric rank / 2) for p = 1
RankCertificate syzygy_rank(SyzygyContext& ctx, const KoszulClass& cls);
RankCertificate syzygy_rank(SyzygyContext& ctx, const QuadricRep& rep);

// shared cycle builder: sum_j (-1)^j  w_1 ^ .. ^ hat{w_j} ^ .. ^ w_{p+1} (x)
// phi_j in ambient wedge^p (x) M_1 coordinates (rows of w in V coordinates,
// rows of phi in M_1 coordinates)
std::vector<uint32_t> build_pencil_cycle(const PrimeField& F, const PFMatrix& w_rows,
                                         const PFMatrix& phi_rows, int m1_dim);

struct MinRankSyzygy {
    KoszulClass cls;        // ambient native cycle at (p,1)
    PFMatrix w_section;     // basis of W_s in M_1 coordinates ((p+1) x g)
    int p = 0;
    uint32_t member_a = 0, member_b = 0;
    int restricted_dim = 0; // dim K_{p,1}(;W_s), expected 1
};

// The explicit minimal-rank syzygy of a pencil member: with w_1..w_{p+1} a
// basis of the sections vanishing on Z(s) and phi = t/s the complementary
// member, the cycle sum_j (-1)^j w_1^..^hat w_j^..^w_{p+1} (x) (phi w_j).
// Throws on degenerate divisors (resample another member).
MinRankSyzygy min_rank_syzygy(SyzygyContext& ctx, const NodalRationalCurve& curve,
                              const Pencil& pcl, uint32_t a, uint32_t b);

// span of the 2x2 minors w_i (phi w_j) - w_j (phi w_i) inside I_2; rows in
// I_2 coordinates (echelon basis)
PFMatrix scroll_quadrics_of_pencil(SyzygyContext& ctx, const NodalRationalCurve& curve,
                                   const Pencil& pcl);

struct GscReport {
    int p = 0;
    int dim_K = 0;
    int span_dim = 0;
    int pencils_used = 0;
    int classes = 0;
    std::vector<int> ranks;
    std::vector<int> span_progress; // span_dim after each pencil
    bool verdict = false;
};

// Geometric-syzygy span test: sample members of each pencil, build the
// delta_s classes, and measure the span inside K_{p,1}.
GscReport gsc_span_test(SyzygyContext& ctx, const NodalRationalCurve& curve,
                        const std::vector<Pencil>& pencils, int p,
                        int members_per_pencil = 0 /*0: g - d + 2*/);

} // namespace syz
