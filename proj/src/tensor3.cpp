#include "syz/tensor3.hpp"

namespace syz {

PFMatrix flatten_middle(const Tensor3& t) {
    PFMatrix m(t.field, t.a * t.c, t.b);
    for (std::size_t i = 0; i < t.a; ++i)
        for (std::size_t j = 0; j < t.b; ++j)
            for (std::size_t k = 0; k < t.c; ++k)
                m.at(i * t.c + k, j) = t.at(i, j, k);
    return m;
}

std::size_t flatten_rank(const Tensor3& t) {
    return rank_of(flatten_middle(t));
}

PFMatrix flatten_middle_support(const Tensor3& t) {
    return rref(flatten_middle(t));
}

uint64_t fnv1a_hash(const std::vector<uint32_t>& data) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (uint32_t w : data) {
        for (int b = 0; b < 4; ++b) {
            h ^= (w >> (8 * b)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

} // namespace syz
