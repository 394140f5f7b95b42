#pragma once

#include "syz/pf_matrix.hpp"

#include <cstddef>
#include <vector>

namespace syz {

// Order-3 tensor over GF(p), shape a x b x c, entry (i,j,k) at ((i*b)+j)*c + k.
// The middle axis (j) is the one flattened for rank computations.
struct Tensor3 {
    PrimeField field;
    std::size_t a = 0, b = 0, c = 0;
    std::vector<uint32_t> t;

    Tensor3(PrimeField f, std::size_t a_, std::size_t b_, std::size_t c_)
        : field(f), a(a_), b(b_), c(c_), t(a_ * b_ * c_, 0) {}

    uint32_t& at(std::size_t i, std::size_t j, std::size_t k) { return t[(i * b + j) * c + k]; }
    uint32_t at(std::size_t i, std::size_t j, std::size_t k) const { return t[(i * b + j) * c + k]; }
};

// Middle-axis flattening: matrix of shape (a*c) x b, row (i,k), column j.
// Its row space is the smallest subspace W of the middle factor with
// t in A (x) W (x) B, so rank = that minimal dimension.
PFMatrix flatten_middle(const Tensor3& t);

std::size_t flatten_rank(const Tensor3& t);

// Row-space basis of the flattening: a basis of the minimal middle subspace.
PFMatrix flatten_middle_support(const Tensor3& t);

uint64_t fnv1a_hash(const std::vector<uint32_t>& data);

} // namespace syz
