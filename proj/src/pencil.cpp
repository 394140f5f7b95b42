#include "syz/pencil.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace syz {

namespace {

constexpr int kMaxNodes = 24;
constexpr int kMaxWidth = 16; // d+1

// in-place elimination on a small stacked system; returns rank
int small_rank(uint32_t* a, int rows, int cols, uint32_t p) {
    int rank = 0;
    for (int pc = 0; pc < cols && rank < rows; ++pc) {
        int sel = rank;
        while (sel < rows && a[sel * cols + pc] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != rank)
            for (int j = pc; j < cols; ++j) std::swap(a[rank * cols + j], a[sel * cols + j]);
        uint64_t inv = 1;
        { // modular inverse by Fermat would cost a pow; extended Euclid inline
            int64_t t = 0, nt = 1, r = p, nr = a[rank * cols + pc];
            while (nr != 0) {
                int64_t qq = r / nr;
                int64_t tmp = t - qq * nt; t = nt; nt = tmp;
                tmp = r - qq * nr; r = nr; nr = tmp;
            }
            if (t < 0) t += p;
            inv = static_cast<uint64_t>(t);
        }
        for (int j = pc; j < cols; ++j)
            a[rank * cols + j] = static_cast<uint32_t>(a[rank * cols + j] * inv % p);
        for (int r2 = 0; r2 < rows; ++r2) {
            if (r2 == rank) continue;
            uint64_t f = a[r2 * cols + pc];
            if (!f) continue;
            for (int j = pc; j < cols; ++j) {
                uint64_t v = a[r2 * cols + j] + f * (p - a[rank * cols + j]) % p;
                a[r2 * cols + j] = static_cast<uint32_t>(v >= p ? v - p : v);
            }
        }
        ++rank;
    }
    return rank;
}

// kernel basis of the (already reduced) system; writes nullity rows of width
// cols into ker
int small_kernel(const uint32_t* rrefd, int rank, int cols, uint32_t p, uint32_t* ker) {
    // pivot columns = leading entries of the rank rows
    std::array<int, kMaxWidth> pivots{};
    std::array<char, kMaxWidth> is_piv{};
    for (int i = 0; i < rank; ++i) {
        int c = 0;
        while (c < cols && rrefd[i * cols + c] == 0) ++c;
        pivots[i] = c;
        is_piv[c] = 1;
    }
    int nk = 0;
    for (int fc = 0; fc < cols; ++fc) {
        if (is_piv[fc]) continue;
        uint32_t* row = ker + nk * cols;
        std::fill(row, row + cols, 0);
        row[fc] = 1;
        for (int i = 0; i < rank; ++i)
            row[pivots[i]] = (p - rrefd[i * cols + fc]) % p;
        ++nk;
    }
    return nk;
}

// decode projective candidate #idx over GF(p)^width (first nonzero = 1);
// digits written little-endian into out
void decode_candidate(uint64_t idx, uint32_t p, int width, uint32_t* out) {
    // leading index k consumes p^(width-1-k) candidates
    for (int k = 0; k < width; ++k) {
        uint64_t block = 1;
        for (int i = 0; i < width - 1 - k; ++i) block *= p;
        if (idx < block) {
            std::fill(out, out + width, 0);
            out[k] = 1;
            uint64_t rest = idx;
            for (int i = k + 1; i < width; ++i) {
                out[i] = static_cast<uint32_t>(rest % p);
                rest /= p;
            }
            return;
        }
        idx -= block;
    }
    throw std::out_of_range("decode_candidate");
}

uint64_t projective_count(uint32_t p, int width) {
    uint64_t t = 0, block = 1;
    for (int k = 0; k < width; ++k) {
        t += block;
        block *= p;
    }
    // sum p^0 + ... + p^(width-1)
    return t;
}

struct NodeTables {
    int m = 0, width = 0;
    // powers[i][e] for branch values; interleaved x then y
    std::vector<uint32_t> xpow, ypow;
    std::vector<uint32_t> xs, ys;
};

NodeTables make_tables(const NodalRationalCurve& c, int d) {
    NodeTables t;
    t.m = c.genus();
    t.width = d + 1;
    const PrimeField& F = c.field;
    t.xpow.resize(t.m * t.width);
    t.ypow.resize(t.m * t.width);
    t.xs.resize(t.m);
    t.ys.resize(t.m);
    for (int i = 0; i < t.m; ++i) {
        auto [x, y] = c.node_pairs[i];
        t.xs[i] = x;
        t.ys[i] = y;
        uint32_t px = 1, py = 1;
        for (int e = 0; e < t.width; ++e) {
            t.xpow[i * t.width + e] = px;
            t.ypow[i * t.width + e] = py;
            px = F.mul(px, x);
            py = F.mul(py, y);
        }
    }
    return t;
}

bool bilinear_ok(const PrimeField& F, const NodeTables& t, const Poly& u, const Poly& v) {
    for (int i = 0; i < t.m; ++i) {
        uint32_t lhs = F.mul(poly_eval(F, u, t.xs[i]), poly_eval(F, v, t.ys[i]));
        uint32_t rhs = F.mul(poly_eval(F, u, t.ys[i]), poly_eval(F, v, t.xs[i]));
        if (lhs != rhs) return false;
    }
    return true;
}

// canonical span form; returns false when the span is not a genuine
// degree-d base-point-free pencil
bool canonicalize_span(const PrimeField& F, int d, const uint32_t* w1, const uint32_t* w2,
                       Pencil& out) {
    const int width = d + 1;
    PFMatrix span(F, 2, width);
    for (int j = 0; j < width; ++j) {
        span.at(0, j) = w1[j];
        span.at(1, j) = w2[j];
    }
    PFMatrix R = rref(span);
    if (R.rows != 2) return false;
    Poly u = Poly::from_coeffs(std::vector<uint32_t>(R.row(0).begin(), R.row(0).end()));
    Poly v = Poly::from_coeffs(std::vector<uint32_t>(R.row(1).begin(), R.row(1).end()));
    if (std::max(u.degree(), v.degree()) != d) return false; // base point at infinity
    if (poly_gcd(F, u, v).degree() != 0) return false;       // finite base point
    out = Pencil{std::move(u), std::move(v), d};
    return true;
}

} // namespace

std::vector<uint32_t> Pencil::canonical_key(int width) const {
    std::vector<uint32_t> key(2 * width, 0);
    std::copy(u.c.begin(), u.c.end(), key.begin());
    std::copy(v.c.begin(), v.c.end(), key.begin() + width);
    return key;
}

Poly Pencil::member(const PrimeField& F, uint32_t a, uint32_t b) const {
    return poly_add(F, poly_scale(F, u, a), poly_scale(F, v, b));
}

PencilSearch find_pencils(const NodalRationalCurve& c, int d, uint64_t budget) {
    const PrimeField F = c.field;
    const uint32_t p = F.p();
    const int m = c.genus();
    const int width = d + 1;
    if (m > kMaxNodes || width > kMaxWidth)
        throw std::invalid_argument("find_pencils: instance too large for the fixed buffers");

    NodeTables tables = make_tables(c, d);
    const uint64_t total = projective_count(p, width);
    const uint64_t to_try = (budget == 0 || budget >= total) ? total : budget;

    std::map<std::vector<uint32_t>, Pencil> found;

#ifdef _OPENMP
    const int nthreads = omp_get_max_threads();
#else
    const int nthreads = 1;
#endif
    std::vector<std::map<std::vector<uint32_t>, Pencil>> locals(nthreads);

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long idx = 0; idx < static_cast<long long>(to_try); ++idx) {
#ifdef _OPENMP
        auto& local = locals[omp_get_thread_num()];
#else
        auto& local = locals[0];
#endif
        uint32_t vcoef[kMaxWidth];
        decode_candidate(static_cast<uint64_t>(idx), p, width, vcoef);
        // evaluate the candidate at both branches of every node
        uint32_t sys[kMaxNodes * kMaxWidth];
        for (int i = 0; i < m; ++i) {
            const uint32_t* xp = &tables.xpow[i * width];
            const uint32_t* yp = &tables.ypow[i * width];
            uint64_t vx = 0, vy = 0;
            for (int e = 0; e < width; ++e) {
                vx += static_cast<uint64_t>(vcoef[e]) * xp[e] % p;
                vy += static_cast<uint64_t>(vcoef[e]) * yp[e] % p;
            }
            uint32_t vxm = static_cast<uint32_t>(vx % p), vym = static_cast<uint32_t>(vy % p);
            // row: u(x_i) v(y_i) - u(y_i) v(x_i) as a linear form in u
            for (int e = 0; e < width; ++e) {
                uint64_t val = static_cast<uint64_t>(xp[e]) * vym % p
                             + static_cast<uint64_t>(yp[e]) * (p - vxm) % p;
                sys[i * width + e] = static_cast<uint32_t>(val >= p ? val - p : val);
            }
        }
        int rank = small_rank(sys, m, width, p);
        int nullity = width - rank;
        if (nullity < 2) continue; // only the candidate itself
        uint32_t ker[kMaxWidth * kMaxWidth];
        small_kernel(sys, rank, width, p, ker);
        // candidate pencils: span{v, u} for u in P(kernel / <v>); enumerate
        // kernel-coordinate representatives and rely on span dedup
        uint64_t reps = projective_count(p, nullity);
        for (uint64_t ridx = 0; ridx < reps; ++ridx) {
            uint32_t kc[kMaxWidth];
            decode_candidate(ridx, p, nullity, kc);
            uint32_t ucoef[kMaxWidth];
            std::fill(ucoef, ucoef + width, 0);
            for (int b = 0; b < nullity; ++b) {
                if (!kc[b]) continue;
                uint64_t f = kc[b];
                for (int e = 0; e < width; ++e) {
                    uint64_t val = ucoef[e] + f * ker[b * width + e] % p;
                    ucoef[e] = static_cast<uint32_t>(val >= p ? val - p : val);
                }
            }
            Pencil cand{Poly::zero(), Poly::zero(), d};
            if (!canonicalize_span(F, d, vcoef, ucoef, cand)) continue;
            if (!bilinear_ok(F, tables, cand.u, cand.v))
                throw std::runtime_error("find_pencils: node condition lost (bug)");
            local.emplace(cand.canonical_key(width), std::move(cand));
        }
    }
    for (auto& local : locals)
        for (auto& [k, v] : local) found.emplace(k, v);

    PencilSearch out;
    out.complete = (to_try == total);
    out.candidates_tried = to_try;
    out.candidates_total = total;
    for (auto& [k, v] : found) out.pencils.push_back(v);
    return out;
}

GonalityResult gonality(const NodalRationalCurve& c, uint64_t budget) {
    const int g = c.genus();
    const int dmax = (g + 3) / 2 + 1;
    for (int d = 1; d <= dmax; ++d) {
        PencilSearch s = find_pencils(c, d, budget);
        if (!s.pencils.empty()) return GonalityResult{d, true, std::move(s)};
        if (!s.complete) return GonalityResult{d, false, std::move(s)};
    }
    return GonalityResult{dmax + 1, false, PencilSearch{}};
}

DivisorInfo pencil_divisor(const NodalRationalCurve& c, const Pencil& pcl,
                           uint32_t a, uint32_t b) {
    const PrimeField F = c.field;
    if (a == 0 && b == 0) throw std::invalid_argument("pencil_divisor: zero member");
    Poly s = pcl.member(F, a, b);
    DivisorInfo info;
    info.mult_at_infinity = pcl.degree - s.degree();
    info.squarefree = poly_is_squarefree(F, s);
    info.hits_node = poly_gcd(F, s, c.denominator).degree() > 0;
    info.finite_roots = poly_roots(F, s);
    info.reduced = info.squarefree && info.mult_at_infinity <= 1;
    return info;
}

PFMatrix pencil_section_space(const NodalRationalCurve& c, const Pencil& pcl,
                              uint32_t a, uint32_t b) {
    const PrimeField F = c.field;
    const int g = c.genus();
    const int width = 2 * g - 1;
    Poly s = pcl.member(F, a, b);
    const int shift_max = (2 * g - 2) - pcl.degree; // deg budget for cofactors
    if (shift_max < 0) return PFMatrix(F, 0, width);
    PFMatrix shifted(F, shift_max + 1, width);
    for (int i = 0; i <= shift_max; ++i)
        for (std::size_t j = 0; j < s.c.size(); ++j)
            shifted.at(i, i + j) = s.c[j];
    return intersect_rowspaces(c.canonical_basis, shifted);
}

// ---------- quadratic extension search ----------

namespace {

// GF(p^2) = GF(p)[alpha], alpha^2 = nqr (a fixed non-residue)
struct F2 {
    uint32_t a = 0, b = 0;
    bool operator==(const F2&) const = default;
    bool operator<(const F2& o) const { return a != o.a ? a < o.a : b < o.b; }
};

struct Ext2 {
    PrimeField F;
    uint32_t nqr;

    explicit Ext2(PrimeField f) : F(f), nqr(find_nqr(f)) {}
    static uint32_t find_nqr(const PrimeField& F) {
        for (uint32_t n = 2; n < F.p(); ++n)
            if (F.pow(n, (F.p() - 1) / 2) == F.p() - 1) return n;
        throw std::runtime_error("no quadratic non-residue found");
    }
    bool is_zero(F2 x) const { return x.a == 0 && x.b == 0; }
    F2 add(F2 x, F2 y) const { return {F.add(x.a, y.a), F.add(x.b, y.b)}; }
    F2 sub(F2 x, F2 y) const { return {F.sub(x.a, y.a), F.sub(x.b, y.b)}; }
    F2 neg(F2 x) const { return {F.neg(x.a), F.neg(x.b)}; }
    F2 mul(F2 x, F2 y) const {
        // (a + b t)(c + d t) = ac + nqr bd + (ad + bc) t
        uint32_t ac = F.mul(x.a, y.a), bd = F.mul(x.b, y.b);
        uint32_t ad = F.mul(x.a, y.b), bc = F.mul(x.b, y.a);
        return {F.add(ac, F.mul(nqr, bd)), F.add(ad, bc)};
    }
    F2 inv(F2 x) const {
        // 1/(a + b t) = (a - b t) / (a^2 - nqr b^2)
        uint32_t den = F.sub(F.mul(x.a, x.a), F.mul(nqr, F.mul(x.b, x.b)));
        uint32_t di = F.inv(den);
        return {F.mul(x.a, di), F.mul(F.neg(x.b), di)};
    }
    F2 frob(F2 x) const { return {x.a, F.neg(x.b)}; } // t -> -t
};

using P2 = std::vector<F2>; // polynomial over GF(p^2), low to high, normalized

void p2_normalize(const Ext2& E, P2& f) {
    while (!f.empty() && E.is_zero(f.back())) f.pop_back();
}
int p2_deg(const P2& f) { return static_cast<int>(f.size()) - 1; }

P2 p2_divrem_r(const Ext2& E, P2 a, const P2& b) {
    int db = p2_deg(b);
    F2 li = E.inv(b.back());
    while (p2_deg(a) >= db) {
        int sh = p2_deg(a) - db;
        F2 f = E.mul(a.back(), li);
        for (int i = 0; i <= db; ++i)
            a[sh + i] = E.sub(a[sh + i], E.mul(f, b[i]));
        p2_normalize(E, a);
        if (a.empty()) break;
    }
    return a;
}

P2 p2_gcd(const Ext2& E, P2 a, P2 b) {
    p2_normalize(E, a);
    p2_normalize(E, b);
    while (!b.empty()) {
        P2 r = p2_divrem_r(E, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

} // namespace

ExtPencilCount count_pencils_ext2(const NodalRationalCurve& c, int d, uint64_t budget) {
    const PrimeField F = c.field;
    const uint32_t p = F.p();
    Ext2 E(F);
    const int m = c.genus();
    const int width = d + 1;
    // element encoding 0..p^2-1: a + p*b  <->  a + b t
    const uint64_t q = static_cast<uint64_t>(p) * p;
    uint64_t total = 0, block = 1;
    for (int k = 0; k < width; ++k) {
        total += block;
        block *= q;
    }
    const uint64_t to_try = (budget == 0 || budget >= total) ? total : budget;

    // branch powers over GF(p^2) (values are in the prime field)
    std::vector<uint32_t> xs(m), ys(m);
    std::vector<std::vector<uint32_t>> xpow(m), ypow(m);
    for (int i = 0; i < m; ++i) {
        auto [x, y] = c.node_pairs[i];
        xs[i] = x;
        ys[i] = y;
        xpow[i].resize(width);
        ypow[i].resize(width);
        uint32_t px = 1, py = 1;
        for (int e = 0; e < width; ++e) {
            xpow[i][e] = px;
            ypow[i][e] = py;
            px = F.mul(px, x);
            py = F.mul(py, y);
        }
    }

    // distinct canonical forms; Frobenius conjugates are distinct pencils
    std::set<std::vector<F2>> seen;
    uint64_t rational = 0;

    auto decode = [&](uint64_t idx, std::vector<F2>& out) {
        out.assign(width, F2{});
        for (int k = 0; k < width; ++k) {
            uint64_t blk = 1;
            for (int i = 0; i < width - 1 - k; ++i) blk *= q;
            if (idx < blk) {
                out[k] = F2{1, 0};
                for (int i = k + 1; i < width; ++i) {
                    uint64_t e = idx % q;
                    idx /= q;
                    out[i] = F2{static_cast<uint32_t>(e % p), static_cast<uint32_t>(e / p)};
                }
                return;
            }
            idx -= blk;
        }
        throw std::out_of_range("ext2 decode");
    };

    std::vector<F2> vcoef, ucoef, row;
    std::vector<F2> sys(m * width), ker;
    for (uint64_t idx = 0; idx < to_try; ++idx) {
        decode(idx, vcoef);
        for (int i = 0; i < m; ++i) {
            F2 vx{}, vy{};
            for (int e = 0; e < width; ++e) {
                vx = E.add(vx, E.mul(vcoef[e], F2{xpow[i][e], 0}));
                vy = E.add(vy, E.mul(vcoef[e], F2{ypow[i][e], 0}));
            }
            for (int e = 0; e < width; ++e)
                sys[i * width + e] =
                    E.sub(E.mul(F2{xpow[i][e], 0}, vy), E.mul(F2{ypow[i][e], 0}, vx));
        }
        // elimination over GF(p^2)
        int rank = 0;
        for (int pc = 0; pc < width && rank < m; ++pc) {
            int sel = rank;
            while (sel < m && E.is_zero(sys[sel * width + pc])) ++sel;
            if (sel == m) continue;
            if (sel != rank)
                for (int j = pc; j < width; ++j) std::swap(sys[rank * width + j], sys[sel * width + j]);
            F2 inv = E.inv(sys[rank * width + pc]);
            for (int j = pc; j < width; ++j) sys[rank * width + j] = E.mul(sys[rank * width + j], inv);
            for (int r2 = 0; r2 < m; ++r2) {
                if (r2 == rank) continue;
                F2 f = sys[r2 * width + pc];
                if (E.is_zero(f)) continue;
                for (int j = pc; j < width; ++j)
                    sys[r2 * width + j] = E.sub(sys[r2 * width + j], E.mul(f, sys[rank * width + j]));
            }
            ++rank;
        }
        int nullity = width - rank;
        if (nullity < 2) continue;
        // kernel basis
        std::vector<int> pivots(rank);
        std::vector<char> is_piv(width, 0);
        for (int i = 0; i < rank; ++i) {
            int cpos = 0;
            while (cpos < width && E.is_zero(sys[i * width + cpos])) ++cpos;
            pivots[i] = cpos;
            is_piv[cpos] = 1;
        }
        ker.assign(nullity * width, F2{});
        int nk = 0;
        for (int fc = 0; fc < width; ++fc) {
            if (is_piv[fc]) continue;
            ker[nk * width + fc] = F2{1, 0};
            for (int i = 0; i < rank; ++i) ker[nk * width + pivots[i]] = E.neg(sys[i * width + fc]);
            ++nk;
        }
        // projective kernel representatives modulo the candidate itself
        uint64_t reps = 0, blk = 1;
        for (int k = 0; k < nullity; ++k) {
            reps += blk;
            blk *= q;
        }
        std::vector<F2> kc;
        for (uint64_t ridx = 0; ridx < reps; ++ridx) {
            // decode over GF(p^2)^nullity
            kc.assign(nullity, F2{});
            uint64_t rr = ridx;
            bool ok = false;
            for (int k = 0; k < nullity && !ok; ++k) {
                uint64_t b2 = 1;
                for (int i = 0; i < nullity - 1 - k; ++i) b2 *= q;
                if (rr < b2) {
                    kc[k] = F2{1, 0};
                    for (int i = k + 1; i < nullity; ++i) {
                        uint64_t e = rr % q;
                        rr /= q;
                        kc[i] = F2{static_cast<uint32_t>(e % p), static_cast<uint32_t>(e / p)};
                    }
                    ok = true;
                } else {
                    rr -= b2;
                }
            }
            ucoef.assign(width, F2{});
            for (int b2 = 0; b2 < nullity; ++b2) {
                if (E.is_zero(kc[b2])) continue;
                for (int e = 0; e < width; ++e)
                    ucoef[e] = E.add(ucoef[e], E.mul(kc[b2], ker[b2 * width + e]));
            }
            // canonical span form via 2-row echelon over GF(p^2)
            std::vector<F2> r0 = vcoef, r1 = ucoef;
            int l0 = 0;
            while (l0 < width && E.is_zero(r0[l0])) ++l0;
            if (l0 == width) continue;
            F2 inv0 = E.inv(r0[l0]);
            for (int j2 = 0; j2 < width; ++j2) r0[j2] = E.mul(r0[j2], inv0);
            if (!E.is_zero(r1[l0])) {
                F2 f = r1[l0];
                for (int j2 = 0; j2 < width; ++j2) r1[j2] = E.sub(r1[j2], E.mul(f, r0[j2]));
            }
            int l1 = 0;
            while (l1 < width && E.is_zero(r1[l1])) ++l1;
            if (l1 == width) continue; // dependent
            F2 inv1 = E.inv(r1[l1]);
            for (int j2 = 0; j2 < width; ++j2) r1[j2] = E.mul(r1[j2], inv1);
            if (!E.is_zero(r0[l1])) {
                F2 f = r0[l1];
                for (int j2 = 0; j2 < width; ++j2) r0[j2] = E.sub(r0[j2], E.mul(f, r1[j2]));
            }
            if (l1 < l0) std::swap(r0, r1);
            // degree and base-point filters
            P2 pu(r0.begin(), r0.end()), pv(r1.begin(), r1.end());
            p2_normalize(E, pu);
            p2_normalize(E, pv);
            if (std::max(p2_deg(pu), p2_deg(pv)) != d) continue;
            P2 g = p2_gcd(E, pu, pv);
            if (p2_deg(g) != 0) continue;
            std::vector<F2> key;
            key.reserve(2 * width);
            key.insert(key.end(), r0.begin(), r0.end());
            key.insert(key.end(), r1.begin(), r1.end());
            if (!seen.insert(key).second) continue;
            std::vector<F2> fk(key.size());
            for (std::size_t j2 = 0; j2 < key.size(); ++j2) fk[j2] = E.frob(key[j2]);
            if (fk == key) ++rational;
        }
    }
    ExtPencilCount out;
    out.rational = rational;
    out.total = seen.size();
    out.complete = (to_try == total);
    out.candidates_tried = to_try;
    return out;
}

} // namespace syz
