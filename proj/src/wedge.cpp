#include "syz/wedge.hpp"

#include <algorithm>
#include <stdexcept>

namespace syz {

uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<std::vector<int>> wedge_tuples(int n, int p) {
    std::vector<std::vector<int>> out;
    if (p < 0 || p > n) return out;
    if (p == 0) { out.push_back({}); return out; }
    std::vector<int> cur(p);
    for (int i = 0; i < p; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = p - 1;
        while (i >= 0 && cur[i] == n - p + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

std::size_t wedge_rank(int n, int p, const int* t) {
    // combinadic: tuples starting with (t_0..t_{j-1}, v) for v < t_j count
    // C(n-1-v, p-1-j) each
    std::size_t r = 0;
    int prev = -1;
    for (int j = 0; j < p; ++j) {
        for (int v = prev + 1; v < t[j]; ++v)
            r += binomial(n - 1 - v, p - 1 - j);
        prev = t[j];
    }
    return r;
}

WedgeIndex::WedgeIndex(int n, int p) : n_(n), p_(p), tuples_(wedge_tuples(n, p)) {}

int wedge_insert(const std::vector<int>& tuple, int i, std::vector<int>& out) {
    int greater = 0;
    for (int t : tuple) {
        if (t == i) return 0;
        if (t > i) ++greater;
    }
    out.resize(tuple.size() + 1);
    std::merge(tuple.begin(), tuple.end(), &i, &i + 1, out.begin());
    return (greater % 2) ? -1 : 1;
}

std::vector<uint32_t> wedge_expand(const PrimeField& F, const PFMatrix& rows,
                                   const std::vector<int>& S) {
    const int n = static_cast<int>(rows.cols);
    const int p = static_cast<int>(S.size());
    // start with the empty wedge, insert one row vector at a time
    std::vector<uint32_t> cur{1};
    for (int step = 0; step < p; ++step) {
        int q = step + 1;
        WedgeIndex next_idx(n, q);
        std::vector<uint32_t> next(next_idx.size(), 0);
        WedgeIndex cur_idx(n, step);
        std::vector<int> merged;
        for (std::size_t r = 0; r < cur_idx.size(); ++r) {
            uint32_t coef = cur[r];
            if (!coef) continue;
            const auto& T = cur_idx.tuple(r);
            auto vrow = rows.row(S[step]);
            for (int i = 0; i < n; ++i) {
                uint32_t vi = vrow[i];
                if (!vi) continue;
                int sign = wedge_insert(T, i, merged);
                if (!sign) continue;
                uint32_t term = F.mul(coef, vi);
                if (sign < 0) term = F.neg(term);
                std::size_t rk = next_idx.rank(merged.data());
                next[rk] = F.add(next[rk], term);
            }
        }
        cur = std::move(next);
    }
    return cur;
}

PFMatrix wedge_power_matrix(const PFMatrix& rows, int p) {
    const int k = static_cast<int>(rows.rows);
    const int n = static_cast<int>(rows.cols);
    WedgeIndex src(k, p);
    WedgeIndex dst(n, p);
    PFMatrix out(rows.field, src.size(), dst.size());
    for (std::size_t r = 0; r < src.size(); ++r) {
        auto v = wedge_expand(rows.field, rows, src.tuple(r));
        std::copy(v.begin(), v.end(), out.row_mut(r).begin());
    }
    return out;
}

} // namespace syz
