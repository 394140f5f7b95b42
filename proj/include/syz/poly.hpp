#pragma once

#include "syz/prime_field.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace syz {

// Dense univariate polynomial over GF(p), coefficients low to high, kept
// normalized (no trailing zeros; the zero polynomial has empty coeffs).
struct Poly {
    std::vector<uint32_t> c;

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero
    uint32_t leading() const { return c.empty() ? 0 : c.back(); }

    static Poly zero() { return {}; }
    static Poly constant(uint32_t v) { return v ? Poly{{v}} : Poly{}; }
    static Poly from_coeffs(std::vector<uint32_t> v) {
        Poly p{std::move(v)};
        p.normalize();
        return p;
    }
    // t - r
    static Poly linear_root(const PrimeField& F, uint32_t r) { return Poly{{F.neg(r), 1}}; }

    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
};

Poly poly_add(const PrimeField& F, const Poly& a, const Poly& b);
Poly poly_sub(const PrimeField& F, const Poly& a, const Poly& b);
Poly poly_scale(const PrimeField& F, const Poly& a, uint32_t s);
Poly poly_mul(const PrimeField& F, const Poly& a, const Poly& b);
// quotient and remainder; throws on zero divisor
std::pair<Poly, Poly> poly_divrem(const PrimeField& F, const Poly& a, const Poly& b);
// monic gcd
Poly poly_gcd(const PrimeField& F, Poly a, Poly b);
Poly poly_derivative(const PrimeField& F, const Poly& a);
uint32_t poly_eval(const PrimeField& F, const Poly& a, uint32_t x);

// all roots in GF(p) with multiplicities, by scanning the field (p is small
// wherever this is used) and repeated deflation
std::vector<std::pair<uint32_t, int>> poly_roots(const PrimeField& F, Poly a);

bool poly_is_squarefree(const PrimeField& F, const Poly& a);

} // namespace syz
