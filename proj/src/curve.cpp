#include "syz/curve.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace syz {

bool NodalRationalCurve::is_node_coordinate(uint32_t t) const {
    for (auto& [x, y] : node_pairs)
        if (x == t || y == t) return true;
    return false;
}

namespace {

Poly node_denominator(const PrimeField& F, const std::vector<std::pair<uint32_t, uint32_t>>& pairs) {
    Poly D = Poly::constant(1);
    for (auto& [x, y] : pairs) {
        D = poly_mul(F, D, Poly::linear_root(F, x));
        D = poly_mul(F, D, Poly::linear_root(F, y));
    }
    return D;
}

// kernel of the residue-condition system: h of degree <= 2m-2 with
// h(x_i)/D'(x_i) + h(y_i)/D'(y_i) = 0 for every pair
PFMatrix canonical_kernel(const PrimeField& F, const std::vector<std::pair<uint32_t, uint32_t>>& pairs,
                          const Poly& D) {
    const int m = static_cast<int>(pairs.size());
    const int width = 2 * m - 1;
    Poly Dp = poly_derivative(F, D);
    PFMatrix R(F, m, width);
    for (int i = 0; i < m; ++i) {
        auto [x, y] = pairs[i];
        uint32_t cx = F.inv(poly_eval(F, Dp, x));
        uint32_t cy = F.inv(poly_eval(F, Dp, y));
        uint32_t px = 1, py = 1;
        for (int j = 0; j < width; ++j) {
            R.at(i, j) = F.add(F.mul(cx, px), F.mul(cy, py));
            px = F.mul(px, x);
            py = F.mul(py, y);
        }
    }
    return rank_kernel(R).kernel;
}

} // namespace

NodalRationalCurve curve_from_pairs(PrimeField F, std::vector<std::pair<uint32_t, uint32_t>> pairs) {
    const int m = static_cast<int>(pairs.size());
    if (m < 1) throw std::invalid_argument("curve_from_pairs: need at least one node pair");
    std::set<uint32_t> seen;
    for (auto& [x, y] : pairs) {
        seen.insert(x);
        seen.insert(y);
    }
    if (static_cast<int>(seen.size()) != 2 * m)
        throw std::invalid_argument("curve_from_pairs: node coordinates not distinct");
    Poly D = node_denominator(F, pairs);
    PFMatrix basis = canonical_kernel(F, pairs, D);
    if (static_cast<int>(basis.rows) != m)
        throw CurveRejected("curve_from_pairs: residue system rank drop");
    return NodalRationalCurve{F, std::move(pairs), std::move(D), std::move(basis), {}};
}

NodalRationalCurve build_curve(const CurveSpec& spec, std::pair<Poly, Poly>* seeding_pencil) {
    PrimeField F(spec.modulus);
    const int g = spec.genus;
    if (g < 1) throw std::invalid_argument("build_curve: genus >= 1 required");
    if (spec.pairs) return curve_from_pairs(F, *spec.pairs);
    if (static_cast<uint32_t>(2 * g) > F.p())
        throw std::invalid_argument("build_curve: field too small for 2g distinct coordinates");

    Rng rng(spec.seed);
    const int max_attempts = 64;

    if (spec.mode == CurveMode::random_pairs) {
        for (int attempt = 0; attempt < max_attempts; ++attempt) {
            std::set<uint32_t> used;
            std::vector<std::pair<uint32_t, uint32_t>> pairs;
            int draws = 0;
            while (static_cast<int>(pairs.size()) < g && draws < 200 * g) {
                ++draws;
                uint32_t x = rng.field_element(F.p());
                uint32_t y = rng.field_element(F.p());
                if (x == y || used.count(x) || used.count(y)) continue;
                used.insert(x);
                used.insert(y);
                pairs.emplace_back(x, y);
            }
            if (static_cast<int>(pairs.size()) < g) continue;
            try {
                return curve_from_pairs(F, std::move(pairs));
            } catch (const CurveRejected&) {
                continue;
            }
        }
        throw CurveRejected("build_curve: too many degenerate draws");
    }

    // from_pencil: g = 2k, node pairs in distinct fibers of a random map of
    // degree k+1
    if (g % 2 != 0) throw std::invalid_argument("build_curve: from_pencil needs even genus");
    const int d = g / 2 + 1;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<uint32_t> uc(d + 1), vc(d + 1);
        for (auto& c : uc) c = rng.field_element(F.p());
        for (auto& c : vc) c = rng.field_element(F.p());
        Poly u = Poly::from_coeffs(uc), v = Poly::from_coeffs(vc);
        if (std::max(u.degree(), v.degree()) != d) continue;
        if (poly_gcd(F, u, v).degree() != 0) continue;

        std::set<uint32_t> used;
        std::set<std::pair<uint32_t, uint32_t>> used_fibers; // normalized (a:b)
        std::vector<std::pair<uint32_t, uint32_t>> pairs;
        int draws = 0;
        while (static_cast<int>(pairs.size()) < g && draws < 60 * g) {
            ++draws;
            uint32_t x = rng.field_element(F.p());
            if (used.count(x)) continue;
            uint32_t a = poly_eval(F, u, x), b = poly_eval(F, v, x);
            if (a == 0 && b == 0) continue;
            std::pair<uint32_t, uint32_t> fiber =
                (b != 0) ? std::make_pair(F.mul(a, F.inv(b)), 1u) : std::make_pair(1u, 0u);
            if (used_fibers.count(fiber)) continue;
            // fiber polynomial b*u - a*v vanishes on the whole fiber of (a:b)
            Poly fib = poly_sub(F, poly_scale(F, u, b), poly_scale(F, v, a));
            uint32_t y = 0;
            bool found = false;
            for (auto& [root, mult] : poly_roots(F, fib)) {
                (void)mult;
                if (root != x && !used.count(root)) {
                    y = root;
                    found = true;
                    break;
                }
            }
            if (!found) continue;
            used.insert(x);
            used.insert(y);
            used_fibers.insert(fiber);
            pairs.emplace_back(x, y);
        }
        if (static_cast<int>(pairs.size()) < g) continue;
        try {
            auto curve = curve_from_pairs(F, std::move(pairs));
            if (seeding_pencil) *seeding_pencil = {u, v};
            return curve;
        } catch (const CurveRejected&) {
            continue;
        }
    }
    throw CurveRejected("build_curve: from_pencil sampling failed");
}

Poly CanonicalRing::numerator_of(int q, std::span<const uint32_t> coords) const {
    const PrimeField& F = module.field;
    Poly out;
    for (std::size_t b = 0; b < basis_numerators[q].rows; ++b) {
        if (!coords[b]) continue;
        Poly term = Poly::from_coeffs(std::vector<uint32_t>(
            basis_numerators[q].row(b).begin(), basis_numerators[q].row(b).end()));
        out = poly_add(F, out, poly_scale(F, term, coords[b]));
    }
    return out;
}

uint32_t CanonicalRing::eval_numerator(int q, std::span<const uint32_t> coords, uint32_t t) const {
    return poly_eval(module.field, numerator_of(q, coords), t);
}

CanonicalRing canonical_ring(const NodalRationalCurve& c, int qmax) {
    const PrimeField F = c.field;
    const int g = c.genus();
    if (g < 3) throw std::invalid_argument("canonical_ring: genus >= 3 required");
    if (qmax < 1) throw std::invalid_argument("canonical_ring: qmax >= 1");

    GradedModuleData mod{F};
    mod.dim_v = g;
    mod.piece_dims.assign(qmax + 1, 0);

    std::vector<PFMatrix> numer;
    numer.reserve(qmax + 1);
    PFMatrix m0(F, 1, 1);
    m0.at(0, 0) = 1;
    numer.push_back(m0);
    numer.push_back(c.canonical_basis);
    mod.piece_dims[0] = 1;
    mod.piece_dims[1] = g;

    for (int q = 2; q <= qmax; ++q) {
        const PFMatrix& prev = numer[q - 1];
        const int width = q * (2 * g - 2) + 1;
        PFMatrix prods(F, g * prev.rows, width);
        for (int a = 0; a < g; ++a) {
            Poly ha = Poly::from_coeffs(std::vector<uint32_t>(
                c.canonical_basis.row(a).begin(), c.canonical_basis.row(a).end()));
            for (std::size_t b = 0; b < prev.rows; ++b) {
                Poly pb = Poly::from_coeffs(std::vector<uint32_t>(prev.row(b).begin(), prev.row(b).end()));
                Poly prod = poly_mul(F, ha, pb);
                for (std::size_t j = 0; j < prod.c.size(); ++j)
                    prods.at(a * prev.rows + b, j) = prod.c[j];
            }
        }
        PFMatrix basis = rref(prods);
        const int expect = (2 * q - 1) * (g - 1);
        if (static_cast<int>(basis.rows) != expect)
            throw CurveRejected("canonical_ring: dim M_q assertion failed");
        mod.piece_dims[q] = expect;
        numer.push_back(std::move(basis));
    }

    // multiplication tensors: exact polynomial products, then change of basis
    for (int q = 0; q < qmax; ++q) {
        Tensor3 T(F, g, mod.piece_dims[q], mod.piece_dims[q + 1]);
        CoordinateSolver solver(numer[q + 1]);
        for (int a = 0; a < g; ++a) {
            Poly ha = Poly::from_coeffs(std::vector<uint32_t>(
                c.canonical_basis.row(a).begin(), c.canonical_basis.row(a).end()));
            for (int j = 0; j < mod.piece_dims[q]; ++j) {
                Poly pj = Poly::from_coeffs(std::vector<uint32_t>(
                    numer[q].row(j).begin(), numer[q].row(j).end()));
                Poly prod = poly_mul(F, ha, pj);
                std::vector<uint32_t> padded(numer[q + 1].cols, 0);
                std::copy(prod.c.begin(), prod.c.end(), padded.begin());
                auto coords = solver.coords(padded);
                if (!coords)
                    throw std::runtime_error("canonical_ring: product escapes the ring (bug)");
                for (int k = 0; k < mod.piece_dims[q + 1]; ++k) T.at(a, j, k) = (*coords)[k];
            }
        }
        mod.mult.push_back(std::move(T));
    }
    return CanonicalRing{std::move(mod), std::move(numer), c.denominator, g};
}

IdealSlices quadrics_cubics(const CanonicalRing& ring) {
    const GradedModuleData& m = ring.module;
    const PrimeField F = m.field;
    const int g = m.dim_v;
    if (m.qmax() < 3)
        throw std::invalid_argument("quadrics_cubics: need module degrees up to 3");

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) pairs.emplace_back(i, j);
    PFMatrix mu2(F, pairs.size(), m.piece_dims[2]);
    for (std::size_t r = 0; r < pairs.size(); ++r) {
        auto [i, j] = pairs[r];
        for (int k = 0; k < m.piece_dims[2]; ++k) mu2.at(r, k) = m.mult[1].at(i, j, k);
    }
    PFMatrix I2 = rank_kernel(transpose(mu2)).kernel;

    std::vector<std::array<int, 3>> triples;
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j)
            for (int k = j; k < g; ++k) triples.push_back({i, j, k});
    PFMatrix mu3(F, triples.size(), m.piece_dims[3]);
    for (std::size_t r = 0; r < triples.size(); ++r) {
        auto [i, j, k] = triples[r];
        std::vector<uint32_t> jk(m.piece_dims[2]);
        for (int t = 0; t < m.piece_dims[2]; ++t) jk[t] = m.mult[1].at(j, k, t);
        std::vector<uint32_t> ei(g, 0);
        ei[i] = 1;
        auto img = m.apply_mult(2, ei, jk);
        std::copy(img.begin(), img.end(), mu3.row_mut(r).begin());
    }
    PFMatrix I3 = rank_kernel(transpose(mu3)).kernel;
    return IdealSlices{std::move(I2), std::move(I3)};
}

std::vector<PFMatrix> twist_subspaces(const NodalRationalCurve& c, const CanonicalRing& ring,
                                      uint32_t x, uint32_t y) {
    const PrimeField F = c.field;
    if (x == y) throw std::invalid_argument("twist_subspaces: points must be distinct");
    if (c.is_node_coordinate(x) || c.is_node_coordinate(y))
        throw std::invalid_argument("twist_subspaces: marked point at a node");
    std::vector<PFMatrix> out;
    out.push_back(PFMatrix(F, 0, 1)); // no constants vanish at two points
    for (int q = 1; q <= ring.module.qmax(); ++q) {
        const PFMatrix& numer = ring.basis_numerators[q];
        PFMatrix ev(F, 2, numer.rows);
        for (std::size_t b = 0; b < numer.rows; ++b) {
            Poly pb = Poly::from_coeffs(std::vector<uint32_t>(numer.row(b).begin(), numer.row(b).end()));
            ev.at(0, b) = poly_eval(F, pb, x);
            ev.at(1, b) = poly_eval(F, pb, y);
        }
        out.push_back(rank_kernel(ev).kernel);
    }
    return out;
}

IdentifyResult identify_points(const NodalRationalCurve& c, uint32_t x, uint32_t y) {
    const PrimeField F = c.field;
    if (x == y) throw std::invalid_argument("identify_points: points must be distinct");
    if (c.is_node_coordinate(x) || c.is_node_coordinate(y))
        throw std::invalid_argument("identify_points: point at a node");
    auto pairs = c.node_pairs;
    pairs.emplace_back(x, y);
    NodalRationalCurve D = curve_from_pairs(F, std::move(pairs));

    Poly shift = poly_mul(F, Poly::linear_root(F, x), Poly::linear_root(F, y));
    const int g = c.genus();
    CoordinateSolver solver(D.canonical_basis);
    PFMatrix incl(F, g, g + 1);
    for (int i = 0; i < g; ++i) {
        Poly h = Poly::from_coeffs(std::vector<uint32_t>(
            c.canonical_basis.row(i).begin(), c.canonical_basis.row(i).end()));
        Poly img = poly_mul(F, h, shift);
        std::vector<uint32_t> padded(D.canonical_basis.cols, 0);
        std::copy(img.c.begin(), img.c.end(), padded.begin());
        auto coords = solver.coords(padded);
        if (!coords)
            throw std::runtime_error("identify_points: inclusion escapes canonical space (bug)");
        for (int k = 0; k < g + 1; ++k) incl.at(i, k) = (*coords)[k];
    }
    if (rank_of(incl) != static_cast<std::size_t>(g))
        throw std::runtime_error("identify_points: inclusion not injective (bug)");
    return IdentifyResult{std::move(D), std::move(incl)};
}

AcceptedCurve build_accepted_curve(CurveSpec spec, int qmax, int max_retries) {
    for (int retry = 0; retry <= max_retries; ++retry) {
        try {
            std::pair<Poly, Poly> seed_pencil;
            NodalRationalCurve c = build_curve(spec, &seed_pencil);
            CanonicalRing ring = canonical_ring(c, qmax);
            return AcceptedCurve{std::move(c), std::move(ring), retry, std::move(seed_pencil)};
        } catch (const CurveRejected&) {
            spec.seed = spec.seed * 6364136223846793005ULL + 1442695040888963407ULL;
        }
    }
    throw CurveRejected("build_accepted_curve: retries exhausted");
}

std::vector<uint32_t> smooth_affine_points(const NodalRationalCurve& c, int count, Rng& rng) {
    std::vector<uint32_t> out;
    std::set<uint32_t> used;
    int guard = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++guard > 200 * count)
            throw std::runtime_error("smooth_affine_points: field exhausted");
        uint32_t t = rng.field_element(c.field.p());
        if (used.count(t) || c.is_node_coordinate(t)) continue;
        used.insert(t);
        out.push_back(t);
    }
    return out;
}

} // namespace syz
