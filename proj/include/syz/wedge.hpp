#pragma once

#include "syz/pf_matrix.hpp"

#include <cstdint>
#include <vector>

namespace syz {

uint64_t binomial(int n, int k);

// Indexing of the basis of wedge^p F^n: strictly increasing p-tuples of
// {0,...,n-1} in lexicographic order.  wedge_tuples(n,p) has C(n,p) entries;
// p > n gives the empty list, p = 0 the single empty tuple.
std::vector<std::vector<int>> wedge_tuples(int n, int p);

// Lexicographic rank of a strictly increasing tuple among wedge_tuples(n,p).
std::size_t wedge_rank(int n, int p, const int* tuple);

class WedgeIndex {
public:
    WedgeIndex(int n, int p);
    int n() const { return n_; }
    int p() const { return p_; }
    std::size_t size() const { return tuples_.size(); }
    const std::vector<int>& tuple(std::size_t r) const { return tuples_[r]; }
    std::size_t rank(const int* t) const { return wedge_rank(n_, p_, t); }

private:
    int n_, p_;
    std::vector<std::vector<int>> tuples_;
};

// e_T ^ e_i for i not in T: sign (-1)^{#{t in T : t > i}} on the sorted tuple.
// Returns 0 sign when i is in T.
int wedge_insert(const std::vector<int>& tuple, int i, std::vector<int>& out);

// Coefficient vector of w_{S} = rows[S_1] ^ ... ^ rows[S_p] in wedge^p F^n
// for row vectors in F^n (iterated insertion).
std::vector<uint32_t> wedge_expand(const PrimeField& F, const PFMatrix& rows,
                                   const std::vector<int>& S);

// Matrix of wedge^p of the inclusion given by `rows` (k x n): shape
// C(k,p) x C(n,p), row indexed by S in wedge_tuples(k,p).
PFMatrix wedge_power_matrix(const PFMatrix& rows, int p);

} // namespace syz
