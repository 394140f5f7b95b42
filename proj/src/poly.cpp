#include "syz/poly.hpp"

#include <stdexcept>

namespace syz {

Poly poly_add(const PrimeField& F, const Poly& a, const Poly& b) {
    Poly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        uint32_t x = i < a.c.size() ? a.c[i] : 0;
        uint32_t y = i < b.c.size() ? b.c[i] : 0;
        out.c[i] = F.add(x, y);
    }
    out.normalize();
    return out;
}

Poly poly_sub(const PrimeField& F, const Poly& a, const Poly& b) {
    Poly out;
    out.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < out.c.size(); ++i) {
        uint32_t x = i < a.c.size() ? a.c[i] : 0;
        uint32_t y = i < b.c.size() ? b.c[i] : 0;
        out.c[i] = F.sub(x, y);
    }
    out.normalize();
    return out;
}

Poly poly_scale(const PrimeField& F, const Poly& a, uint32_t s) {
    if (s == 0) return Poly::zero();
    Poly out = a;
    for (auto& x : out.c) x = F.mul(x, s);
    return out;
}

Poly poly_mul(const PrimeField& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero();
    const uint32_t p = F.p();
    Poly out;
    out.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        uint64_t ai = a.c[i];
        if (!ai) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            uint64_t v = out.c[i + j] + ai * b.c[j] % p;
            out.c[i + j] = static_cast<uint32_t>(v >= p ? v - p : v);
        }
    }
    return out;
}

std::pair<Poly, Poly> poly_divrem(const PrimeField& F, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divrem: division by zero");
    Poly r = a, q;
    const int db = b.degree();
    if (a.degree() < db) return {Poly::zero(), r};
    q.c.assign(a.degree() - db + 1, 0);
    const uint32_t lead_inv = F.inv(b.leading());
    for (int d = a.degree(); d >= db; --d) {
        if (static_cast<int>(r.c.size()) - 1 < d) continue;
        uint32_t coef = r.c[d];
        if (!coef) continue;
        uint32_t f = F.mul(coef, lead_inv);
        q.c[d - db] = f;
        for (int i = 0; i <= db; ++i)
            r.c[d - db + i] = F.sub(r.c[d - db + i], F.mul(f, b.c[i]));
    }
    q.normalize();
    r.normalize();
    return {q, r};
}

Poly poly_gcd(const PrimeField& F, Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divrem(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero() && a.leading() != 1) a = poly_scale(F, a, F.inv(a.leading()));
    return a;
}

Poly poly_derivative(const PrimeField& F, const Poly& a) {
    Poly out;
    if (a.degree() < 1) return out;
    out.c.resize(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i)
        out.c[i - 1] = F.mul(a.c[i], static_cast<uint32_t>(i % F.p()));
    out.normalize();
    return out;
}

uint32_t poly_eval(const PrimeField& F, const Poly& a, uint32_t x) {
    const uint32_t p = F.p();
    uint64_t acc = 0;
    for (std::size_t i = a.c.size(); i-- > 0;)
        acc = (acc * x + a.c[i]) % p;
    return static_cast<uint32_t>(acc);
}

std::vector<std::pair<uint32_t, int>> poly_roots(const PrimeField& F, Poly a) {
    std::vector<std::pair<uint32_t, int>> roots;
    if (a.degree() < 1) return roots;
    for (uint32_t x = 0; x < F.p() && a.degree() >= 1; ++x) {
        if (poly_eval(F, a, x) != 0) continue;
        int mult = 0;
        Poly lin = Poly::linear_root(F, x);
        while (true) {
            auto [q, r] = poly_divrem(F, a, lin);
            if (!r.is_zero()) break;
            a = q;
            ++mult;
        }
        roots.emplace_back(x, mult);
    }
    return roots;
}

bool poly_is_squarefree(const PrimeField& F, const Poly& a) {
    if (a.degree() < 1) return true;
    Poly d = poly_derivative(F, a);
    if (d.is_zero()) return false; // p-th power pattern
    return poly_gcd(F, a, d).degree() == 0;
}

} // namespace syz
