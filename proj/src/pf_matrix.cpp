#include "syz/pf_matrix.hpp"

#include <cassert>
#include <cstring>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace syz {

PFMatrix PFMatrix::identity(PrimeField f, std::size_t n) {
    PFMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

PFMatrix PFMatrix::random(PrimeField f, std::size_t r, std::size_t c, Rng& rng) {
    PFMatrix m(f, r, c);
    for (auto& x : m.a) x = rng.field_element(f.p());
    return m;
}

PFMatrix PFMatrix::from_rows(PrimeField f, const std::vector<std::vector<uint32_t>>& rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    PFMatrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
        std::copy(rows[i].begin(), rows[i].end(), m.a.begin() + i * c);
    }
    return m;
}

bool PFMatrix::is_zero() const {
    for (uint32_t x : a) if (x) return false;
    return true;
}

// In-place RREF of `work`; returns pivot columns.
static std::vector<std::size_t> rref_inplace(PFMatrix& work) {
    const uint32_t p = work.field.p();
    const std::size_t R = work.rows, C = work.cols;
    std::vector<std::size_t> pivots;
    std::size_t pr = 0; // next pivot row
    for (std::size_t pc = 0; pc < C && pr < R; ++pc) {
        std::size_t sel = pr;
        while (sel < R && work.at(sel, pc) == 0) ++sel;
        if (sel == R) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < C; ++j) std::swap(work.at(pr, j), work.at(sel, j));
        // normalize pivot row
        uint32_t inv = work.field.inv(work.at(pr, pc));
        if (inv != 1) {
            uint32_t* rw = &work.at(pr, 0);
            for (std::size_t j = pc; j < C; ++j)
                rw[j] = static_cast<uint32_t>(static_cast<uint64_t>(rw[j]) * inv % p);
        }
        const uint32_t* piv = &work.at(pr, 0);
        const bool big = R * (C - pc) > 200000;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (big)
#endif
        for (long long r = 0; r < static_cast<long long>(R); ++r) {
            if (static_cast<std::size_t>(r) == pr) continue;
            uint32_t f = work.at(r, pc);
            if (f == 0) continue;
            uint32_t* rw = &work.at(r, 0);
            uint64_t fp = f;
            for (std::size_t j = pc; j < C; ++j) {
                uint64_t v = rw[j] + fp * (p - piv[j]) % p;
                rw[j] = static_cast<uint32_t>(v >= p ? v - p : v);
            }
        }
        pivots.push_back(pc);
        ++pr;
    }
    return pivots;
}

PFMatrix rref(const PFMatrix& m, std::vector<std::size_t>* pivots) {
    PFMatrix work = m;
    auto piv = rref_inplace(work);
    PFMatrix out(m.field, piv.size(), m.cols);
    std::copy(work.a.begin(), work.a.begin() + piv.size() * m.cols, out.a.begin());
    if (pivots) *pivots = std::move(piv);
    return out;
}

std::size_t rank_of(const PFMatrix& m) {
    PFMatrix work = m;
    return rref_inplace(work).size();
}

RankKernel rank_kernel(const PFMatrix& m) {
    std::vector<std::size_t> pivots;
    PFMatrix R = rref(m, &pivots);
    const std::size_t rank = pivots.size();
    std::vector<char> is_pivot(m.cols, 0);
    for (std::size_t c : pivots) is_pivot[c] = 1;

    PFMatrix ker(m.field, m.cols - rank, m.cols);
    std::size_t kr = 0;
    for (std::size_t fc = 0; fc < m.cols; ++fc) {
        if (is_pivot[fc]) continue;
        // kernel vector: 1 at the free column, minus the RREF column above pivots
        ker.at(kr, fc) = 1;
        for (std::size_t i = 0; i < rank; ++i)
            ker.at(kr, pivots[i]) = m.field.neg(R.at(i, fc));
        ++kr;
    }
#ifndef NDEBUG
    assert(rank + ker.rows == m.cols); // rank-nullity
    for (std::size_t k = 0; k < ker.rows; ++k) {
        auto img = mat_vec(m, ker.row(k));
        for (uint32_t x : img) assert(x == 0);
    }
#endif
    return RankKernel{rank, std::move(ker)};
}

PFMatrix transpose(const PFMatrix& m) {
    PFMatrix t(m.field, m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j)
            t.at(j, i) = m.at(i, j);
    return t;
}

PFMatrix matmul(const PFMatrix& a, const PFMatrix& b) {
    if (a.cols != b.rows || a.field != b.field)
        throw std::invalid_argument("matmul: shape/field mismatch");
    const uint32_t p = a.field.p();
    PFMatrix c(a.field, a.rows, b.cols);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (a.rows * a.cols * b.cols > 1000000)
#endif
    for (long long i = 0; i < static_cast<long long>(a.rows); ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            uint64_t f = a.at(i, k);
            if (!f) continue;
            const uint32_t* brow = b.a.data() + k * b.cols;
            uint32_t* crow = &c.at(i, 0);
            for (std::size_t j = 0; j < b.cols; ++j) {
                uint64_t v = crow[j] + f * brow[j] % p;
                crow[j] = static_cast<uint32_t>(v >= p ? v - p : v);
            }
        }
    }
    return c;
}

std::vector<uint32_t> mat_vec(const PFMatrix& m, std::span<const uint32_t> v) {
    if (v.size() != m.cols) throw std::invalid_argument("apply: size mismatch");
    const uint32_t p = m.field.p();
    std::vector<uint32_t> out(m.rows, 0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        uint64_t acc = 0;
        const uint32_t* row = m.a.data() + i * m.cols;
        for (std::size_t j = 0; j < m.cols; ++j) {
            acc += static_cast<uint64_t>(row[j]) * v[j] % p;
            if (acc >= (1ull << 62)) acc %= p;
        }
        out[i] = static_cast<uint32_t>(acc % p);
    }
    return out;
}

PFMatrix row_stack(const PFMatrix& top, const PFMatrix& bottom) {
    if (top.cols != bottom.cols || top.field != bottom.field)
        throw std::invalid_argument("row_stack: shape/field mismatch");
    PFMatrix out(top.field, top.rows + bottom.rows, top.cols);
    std::copy(top.a.begin(), top.a.end(), out.a.begin());
    std::copy(bottom.a.begin(), bottom.a.end(), out.a.begin() + top.a.size());
    return out;
}

PFMatrix intersect_rowspaces(const PFMatrix& a, const PFMatrix& b) {
    if (a.cols != b.cols) throw std::invalid_argument("intersect_rowspaces: column mismatch");
    if (a.field != b.field) throw std::invalid_argument("intersect_rowspaces: field mismatch");
    const std::size_t n = a.cols;
    // Zassenhaus: echelonize [A A; B 0]; rows with zero left block carry the
    // intersection in the right block.
    PFMatrix blk(a.field, a.rows + b.rows, 2 * n);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            blk.at(i, j) = a.at(i, j);
            blk.at(i, n + j) = a.at(i, j);
        }
    for (std::size_t i = 0; i < b.rows; ++i)
        for (std::size_t j = 0; j < n; ++j) blk.at(a.rows + i, j) = b.at(i, j);
    std::vector<std::size_t> pivots;
    PFMatrix R = rref(blk, &pivots);
    std::vector<std::vector<uint32_t>> rows;
    for (std::size_t i = 0; i < R.rows; ++i) {
        if (pivots[i] < n) continue; // left block nonzero
        rows.emplace_back(R.a.begin() + i * 2 * n + n, R.a.begin() + (i + 1) * 2 * n);
    }
    if (rows.empty()) return PFMatrix(a.field, 0, n);
    return PFMatrix::from_rows(a.field, rows);
}

bool in_rowspace(const PFMatrix& basis, std::span<const uint32_t> v) {
    CoordinateSolver cs(basis);
    return cs.coords(v).has_value();
}

std::optional<std::vector<uint32_t>> solve_linear(const PFMatrix& A, std::span<const uint32_t> b) {
    if (b.size() != A.rows) throw std::invalid_argument("solve_linear: size mismatch");
    PFMatrix aug(A.field, A.rows, A.cols + 1);
    for (std::size_t i = 0; i < A.rows; ++i) {
        std::copy(A.row(i).begin(), A.row(i).end(), aug.row_mut(i).begin());
        aug.at(i, A.cols) = b[i];
    }
    std::vector<std::size_t> pivots;
    PFMatrix R = rref(aug, &pivots);
    std::vector<uint32_t> x(A.cols, 0);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == A.cols) return std::nullopt; // pivot in the b column
        x[pivots[i]] = R.at(i, A.cols);
    }
    return x;
}

CoordinateSolver::CoordinateSolver(PFMatrix basis)
    : nrows_(basis.rows), rref_(basis.field, 0, 0), transform_(basis.field, 0, 0) {
    const std::size_t n = basis.cols, k = basis.rows;
    PFMatrix aug(basis.field, k, n + k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = basis.at(i, j);
        aug.at(i, n + i) = 1;
    }
    std::vector<std::size_t> pivots;
    PFMatrix R = rref(aug, &pivots);
    if (R.rows != k)
        throw std::invalid_argument("CoordinateSolver: basis rows are dependent");
    for (std::size_t c : pivots)
        if (c >= n) throw std::invalid_argument("CoordinateSolver: basis rows are dependent");
    rref_ = PFMatrix(basis.field, k, n);
    transform_ = PFMatrix(basis.field, k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < n; ++j) rref_.at(i, j) = R.at(i, j);
        for (std::size_t j = 0; j < k; ++j) transform_.at(i, j) = R.at(i, n + j);
    }
    pivots_ = std::move(pivots);
}

std::optional<std::vector<uint32_t>> CoordinateSolver::coords(std::span<const uint32_t> v) const {
    const uint32_t p = rref_.field.p();
    if (v.size() != rref_.cols) throw std::invalid_argument("coords: size mismatch");
    std::vector<uint32_t> w(v.begin(), v.end());
    std::vector<uint32_t> c(nrows_, 0);
    for (std::size_t i = 0; i < nrows_; ++i) {
        uint32_t f = w[pivots_[i]];
        c[i] = f;
        if (!f) continue;
        uint64_t fp = f;
        const uint32_t* row = rref_.a.data() + i * rref_.cols;
        for (std::size_t j = 0; j < w.size(); ++j) {
            uint64_t val = w[j] + fp * (p - row[j]) % p;
            w[j] = static_cast<uint32_t>(val >= p ? val - p : val);
        }
    }
    for (uint32_t x : w)
        if (x) return std::nullopt;
    // v = c * rref_ = c * transform_ * basis
    std::vector<uint32_t> out(nrows_, 0);
    for (std::size_t i = 0; i < nrows_; ++i) {
        if (!c[i]) continue;
        uint64_t f = c[i];
        for (std::size_t j = 0; j < nrows_; ++j) {
            uint64_t val = out[j] + f * transform_.at(i, j) % p;
            out[j] = static_cast<uint32_t>(val >= p ? val - p : val);
        }
    }
    return out;
}

std::vector<uint32_t> CoordinateSolver::coords_checked(std::span<const uint32_t> v) const {
    auto c = coords(v);
    if (!c) throw std::runtime_error("coords_checked: vector outside span");
    return *c;
}

std::size_t reference_rank_fraction_free(const PFMatrix& m) {
    // Bareiss-style cross multiplication: row_j := piv*row_j - f*row_piv.
    // Scaling rows by nonzero constants preserves rank over a field.
    PFMatrix w = m;
    const uint32_t p = w.field.p();
    std::size_t rank = 0;
    for (std::size_t pc = 0; pc < w.cols && rank < w.rows; ++pc) {
        std::size_t sel = rank;
        while (sel < w.rows && w.at(sel, pc) == 0) ++sel;
        if (sel == w.rows) continue;
        if (sel != rank)
            for (std::size_t j = 0; j < w.cols; ++j) std::swap(w.at(rank, j), w.at(sel, j));
        const uint64_t piv = w.at(rank, pc);
        for (std::size_t r = rank + 1; r < w.rows; ++r) {
            uint64_t f = w.at(r, pc);
            if (!f) continue;
            for (std::size_t j = pc; j < w.cols; ++j) {
                uint64_t v = (piv * w.at(r, j) + f * (p - w.at(rank, j))) % p;
                w.at(r, j) = static_cast<uint32_t>(v);
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace syz
