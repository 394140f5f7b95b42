#pragma once

#include "syz/prime_field.hpp"
#include "syz/rng.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace syz {

// Dense row-major matrix over GF(p).  Immutable by convention once handed
// out of a constructor/operation; all operations below are pure.
struct PFMatrix {
    PrimeField field;
    std::size_t rows = 0, cols = 0;
    std::vector<uint32_t> a; // rows*cols entries, reduced mod p

    PFMatrix(PrimeField f, std::size_t r, std::size_t c)
        : field(f), rows(r), cols(c), a(r * c, 0) {}

    uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    uint32_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
    std::span<const uint32_t> row(std::size_t r) const { return {a.data() + r * cols, cols}; }
    std::span<uint32_t> row_mut(std::size_t r) { return {a.data() + r * cols, cols}; }

    static PFMatrix identity(PrimeField f, std::size_t n);
    static PFMatrix random(PrimeField f, std::size_t r, std::size_t c, Rng& rng);
    static PFMatrix from_rows(PrimeField f, const std::vector<std::vector<uint32_t>>& rows);

    bool is_zero() const;
    bool operator==(const PFMatrix& o) const {
        return field == o.field && rows == o.rows && cols == o.cols && a == o.a;
    }
};

struct RankKernel {
    std::size_t rank;
    PFMatrix kernel; // rows are a reduced-echelon basis of the right kernel {v : m v = 0}
};

// Reduced row echelon form.  Returns the nonzero rows; pivot column indices
// in *pivots if requested.  The elimination inner loop is OpenMP-parallel
// for large matrices.
PFMatrix rref(const PFMatrix& m, std::vector<std::size_t>* pivots = nullptr);

// Rank and right-kernel basis.  Debug builds assert rank + kernel dim == cols
// and m * v = 0 for every basis vector.
RankKernel rank_kernel(const PFMatrix& m);

std::size_t rank_of(const PFMatrix& m);

PFMatrix transpose(const PFMatrix& m);
PFMatrix matmul(const PFMatrix& a, const PFMatrix& b);
std::vector<uint32_t> mat_vec(const PFMatrix& m, std::span<const uint32_t> v); // m * v
PFMatrix row_stack(const PFMatrix& top, const PFMatrix& bottom);

// Basis of rowspace(a) ∩ rowspace(b) via the Zassenhaus block trick.
// Throws on column-count mismatch.
PFMatrix intersect_rowspaces(const PFMatrix& a, const PFMatrix& b);

bool in_rowspace(const PFMatrix& basis, std::span<const uint32_t> v);

// one solution x of A x = b, or nullopt when inconsistent
std::optional<std::vector<uint32_t>> solve_linear(const PFMatrix& A, std::span<const uint32_t> b);

// Coordinates of vectors with respect to a fixed (independent-row) basis.
class CoordinateSolver {
public:
    explicit CoordinateSolver(PFMatrix basis);
    std::size_t dim() const { return nrows_; }
    std::size_t ambient() const { return rref_.cols; }
    // c with v = c * basis, or nullopt if v is outside the span
    std::optional<std::vector<uint32_t>> coords(std::span<const uint32_t> v) const;
    std::vector<uint32_t> coords_checked(std::span<const uint32_t> v) const;

private:
    std::size_t nrows_;
    PFMatrix rref_;              // RREF of basis
    PFMatrix transform_;         // rref_ = transform_ * basis
    std::vector<std::size_t> pivots_;
};

// Serial fraction-free (division-free cross-multiplication) elimination,
// kept as an independent reference: the test oracle for rank_kernel and the
// baseline for the elimination benchmark.  Never calls PrimeField::inv
// during elimination.
std::size_t reference_rank_fraction_free(const PFMatrix& m);

} // namespace syz
