#pragma once

#include "syz/pf_matrix.hpp"
#include "syz/tensor3.hpp"
#include "syz/wedge.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace syz {

// A graded module M over Sym(V), given by the dimensions of its pieces
// M_0..M_qmax and the multiplication tensors V x M_q -> M_{q+1} in fixed
// bases.  Immutable after construction.
//
// An optional multigrading (one small integer vector per basis element of V
// and of each piece, additive under multiplication) lets rank computations
// split into independent blocks; scroll modules use this.
struct GradedModuleData {
    PrimeField field;
    int dim_v = 0;
    std::vector<int> piece_dims;                        // size qmax+1
    std::vector<Tensor3> mult;                          // mult[q]: dim_v x m_q x m_{q+1}
    std::vector<std::vector<int16_t>> v_grades;         // optional, dim_v entries
    std::vector<std::vector<std::vector<int16_t>>> piece_grades; // optional, [q][m]

    int qmax() const { return static_cast<int>(piece_dims.size()) - 1; }
    bool has_grading() const { return !v_grades.empty(); }

    // coordinates of v·m in M_{q+1} for v in V-coordinates, m in M_q-coordinates
    std::vector<uint32_t> apply_mult(int q, std::span<const uint32_t> v,
                                     std::span<const uint32_t> m) const;

    // sampled check that (v·(w·m)) == (w·(v·m)); throws on failure
    void check_action_commutes(Rng& rng, int samples = 8) const;
};

struct KoszulPosition {
    int p = 0, q = 0;
};

struct SubspaceW {
    PFMatrix basis; // rows independent, basis.cols == dim_v
};

enum class ClassRep { native, quadric };

// A cycle representative of an element of K_{p,q}.  Native classes live in
// wedge^p V (x) M_q coordinates (column index = wedge_rank * m_q + module);
// quadric classes (q = 1 only) in wedge^{p-1} V (x) I_2 coordinates.
struct KoszulClass {
    KoszulPosition pos;
    ClassRep rep = ClassRep::native;
    std::vector<uint32_t> coeff;
};

// Matrix of d : wedge^p W (x) M_q -> wedge^{p-1} W (x) M_{q+1} (W defaults
// to V) with d(e_T (x) m) = sum_j (-1)^j e_{T minus t_j} (x) (t_j · m),
// j = 1..p.  Columns indexed by (wedge tuple, module basis) lexicographic.
// Throws "degree out of range" when the multiplication tensor is missing.
PFMatrix koszul_differential(const GradedModuleData& m, KoszulPosition pos,
                             const SubspaceW* w = nullptr);

struct KoszulCohomology {
    KoszulPosition pos;
    int w_dim;              // dim of the wedge-factor space (dim W or dim V)
    int dim;                // dim K_{p,q}
    PFMatrix cycle_reps;    // dim rows, echelon-lifted class representatives
    PFMatrix boundaries;    // echelon basis of im(d_{p+1,q-1})
    std::vector<KoszulClass> classes() const;
    // coordinates of the class of z in the cycle_reps basis; nullopt when z
    // is not a cycle
    std::optional<std::vector<uint32_t>> class_coords(std::span<const uint32_t> z) const;
};

KoszulCohomology koszul_cohomology(const GradedModuleData& m, KoszulPosition pos,
                                   const SubspaceW* w = nullptr);

// Fast path for graded modules: rank of the differential computed block by
// block over the multigrading (blocks run in parallel).  The matrix is never
// materialized.
std::size_t koszul_rank_graded(const GradedModuleData& m, KoszulPosition pos);

// dim K_{p,q} via blocked ranks (graded modules only)
int koszul_dim_graded(const GradedModuleData& m, KoszulPosition pos);

// Matrix of K_{p,1}(M;W) -> K_{p,1}(M,V) in the chosen cohomology bases
// (columns = W-classes).  Precondition: multiplication V·M_{q-1} -> M_q is
// surjective for 1 <= q <= qmax (normal generation); throws otherwise.
PFMatrix restricted_inclusion(const GradedModuleData& m, KoszulPosition pos,
                              const SubspaceW& w,
                              const KoszulCohomology* cohW = nullptr,
                              const KoszulCohomology* cohV = nullptr);

bool is_normally_generated(const GradedModuleData& m);

// Submodule on the given per-degree subspaces (rows in M_q coordinates,
// one matrix per degree 0..qmax).  Throws when the subspaces are not closed
// under the V-action.
GradedModuleData submodule(const GradedModuleData& m, const std::vector<PFMatrix>& sub_pieces);

// Quotient by the same data; complement basis chosen at the non-pivot
// columns of the subspace echelon forms.
GradedModuleData quotient_module(const GradedModuleData& m, const std::vector<PFMatrix>& sub_pieces);

// Truncation of Sym(V) itself to degrees 0..qmax, for vanishing tests.
// with_grading attaches the monomial multigrading (used to cross-check the
// blocked rank path against the dense one).
GradedModuleData sym_algebra_truncation(PrimeField F, int dim_v, int qmax,
                                        bool with_grading = false);

// dim of wedge^p W (x) M_q
std::size_t chain_dim(const GradedModuleData& m, int w_dim, int p, int q);

// Incremental echelon accumulator (forward reduction only): used for
// deterministic span growth and echelon lifts.
class EchelonAccumulator {
public:
    EchelonAccumulator(PrimeField f, std::size_t width);
    // returns the reduced remainder if independent, nullopt if dependent
    std::optional<std::vector<uint32_t>> insert(std::span<const uint32_t> v);
    bool contains(std::span<const uint32_t> v) const;
    std::size_t dim() const { return rows_.size(); }
    PFMatrix basis() const;

private:
    PrimeField field_;
    std::size_t width_;
    std::vector<std::vector<uint32_t>> rows_; // each normalized, distinct leading cols
    std::vector<std::size_t> leads_;
    std::vector<uint32_t> reduce(std::span<const uint32_t> v) const;
};

} // namespace syz
