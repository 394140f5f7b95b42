#pragma once

// Brute-force oracles used only by tests.  Each one is an independent route
// to a quantity that the library computes by elimination or flattening.

#include "syz/pf_matrix.hpp"
#include "syz/tensor3.hpp"

#include <functional>
#include <set>
#include <vector>

namespace syz::testing {

// every vector of the row space (q^rows enumerations; keep rows small)
inline std::vector<std::vector<uint32_t>> enumerate_rowspace(const PFMatrix& m) {
    const uint32_t p = m.field.p();
    std::vector<std::vector<uint32_t>> out;
    std::vector<uint32_t> coef(m.rows, 0);
    while (true) {
        std::vector<uint32_t> v(m.cols, 0);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (!coef[i]) continue;
            for (std::size_t j = 0; j < m.cols; ++j)
                v[j] = m.field.add(v[j], m.field.mul(coef[i], m.at(i, j)));
        }
        out.push_back(std::move(v));
        std::size_t k = 0;
        while (k < coef.size() && ++coef[k] == p) coef[k++] = 0;
        if (k == coef.size()) break;
    }
    return out;
}

// exhaustive-membership dimension of rowspace(a) ∩ rowspace(b): counts the
// intersection set and takes log_q
inline int intersection_dim_exhaustive(const PFMatrix& a, const PFMatrix& b) {
    auto va = enumerate_rowspace(a);
    std::set<std::vector<uint32_t>> sb;
    for (auto& v : enumerate_rowspace(b)) sb.insert(v);
    std::size_t count = 0;
    for (auto& v : va)
        if (sb.count(v)) ++count;
    int d = 0;
    std::size_t q = a.field.p(), pw = 1;
    while (pw < count) { pw *= q; ++d; }
    return d;
}

// all RREF bases of r-dimensional subspaces of GF(p)^n
inline std::vector<PFMatrix> enumerate_subspaces(PrimeField F, int n, int r) {
    std::vector<PFMatrix> out;
    if (r == 0) {
        out.emplace_back(F, 0, n);
        return out;
    }
    // choose pivot columns, then free entries: entry (i,j) is free when
    // j > pivot_i, j is not a pivot, and j < n
    std::vector<int> piv(r);
    std::function<void(int, int)> choose = [&](int pos, int from) {
        if (pos == r) {
            std::vector<std::pair<int, int>> free_slots;
            std::vector<char> is_piv(n, 0);
            for (int i = 0; i < r; ++i) is_piv[piv[i]] = 1;
            for (int i = 0; i < r; ++i)
                for (int j = piv[i] + 1; j < n; ++j)
                    if (!is_piv[j]) free_slots.push_back({i, j});
            std::vector<uint32_t> vals(free_slots.size(), 0);
            while (true) {
                PFMatrix m(F, r, n);
                for (int i = 0; i < r; ++i) m.at(i, piv[i]) = 1;
                for (std::size_t s = 0; s < free_slots.size(); ++s)
                    m.at(free_slots[s].first, free_slots[s].second) = vals[s];
                out.push_back(m);
                std::size_t k = 0;
                while (k < vals.size() && ++vals[k] == F.p()) vals[k++] = 0;
                if (k == vals.size()) break;
            }
            return;
        }
        for (int c = from; c < n; ++c) {
            piv[pos] = c;
            choose(pos + 1, c + 1);
        }
    };
    choose(0, 0);
    return out;
}

// minimal dim of a middle subspace W with  t in A (x) W (x) B, by exhaustive
// search over subspaces of the middle factor
inline int minimal_middle_dim_exhaustive(const Tensor3& t) {
    const int n = static_cast<int>(t.b);
    for (int r = 0; r <= n; ++r) {
        for (auto& w : enumerate_subspaces(t.field, n, r)) {
            // every middle-mode fiber must lie in rowspace(w)
            bool ok = true;
            CoordinateSolver cs(w);
            for (std::size_t i = 0; i < t.a && ok; ++i)
                for (std::size_t k = 0; k < t.c && ok; ++k) {
                    std::vector<uint32_t> fiber(t.b);
                    for (std::size_t j = 0; j < t.b; ++j) fiber[j] = t.at(i, j, k);
                    if (r == 0) {
                        for (uint32_t x : fiber)
                            if (x) { ok = false; break; }
                    } else if (!cs.coords(fiber)) {
                        ok = false;
                    }
                }
            if (ok) return r;
        }
    }
    return n;
}

} // namespace syz::testing
