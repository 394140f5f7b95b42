#pragma once

#include <cstdint>
#include <stdexcept>

namespace syz {

// Arithmetic in GF(p) for an odd prime 3 <= p < 2^31.  Elements are
// canonical representatives in [0, p) stored as uint32_t.  All products
// go through uint64_t, so no intermediate overflows.
class PrimeField {
public:
    explicit PrimeField(uint32_t p) : p_(p) {
        if (p < 3 || p >= (1u << 31) || !is_prime(p))
            throw std::invalid_argument("PrimeField: modulus must be a prime in [3, 2^31)");
    }

    uint32_t p() const { return p_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const {
        return a >= b ? a - b : a + p_ - b;
    }
    uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    }
    uint32_t pow(uint32_t a, uint64_t e) const {
        uint64_t base = a % p_, acc = 1;
        while (e) {
            if (e & 1) acc = acc * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return static_cast<uint32_t>(acc);
    }
    uint32_t inv(uint32_t a) const {
        if (a == 0) throw std::domain_error("PrimeField::inv of zero");
        // extended Euclid
        int64_t t = 0, nt = 1, r = p_, nr = a;
        while (nr != 0) {
            int64_t q = r / nr;
            int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (t < 0) t += p_;
        return static_cast<uint32_t>(t);
    }
    // reduce a signed 64-bit value into [0, p)
    uint32_t reduce_i64(int64_t v) const {
        int64_t r = v % static_cast<int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<uint32_t>(r);
    }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

    static bool is_prime(uint32_t n) {
        if (n < 2) return false;
        for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

private:
    uint32_t p_;
};

} // namespace syz
