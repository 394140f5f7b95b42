#include "syz/graded_module.hpp"

#include <cassert>
#include <functional>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace syz {

std::vector<uint32_t> GradedModuleData::apply_mult(int q, std::span<const uint32_t> v,
                                                   std::span<const uint32_t> m) const {
    if (q < 0 || q >= static_cast<int>(mult.size()))
        throw std::out_of_range("apply_mult: degree out of range");
    const Tensor3& T = mult[q];
    const uint32_t p = field.p();
    std::vector<uint32_t> out(piece_dims[q + 1], 0);
    for (int a = 0; a < dim_v; ++a) {
        if (!v[a]) continue;
        uint64_t va = v[a];
        for (int j = 0; j < piece_dims[q]; ++j) {
            if (!m[j]) continue;
            uint64_t coef = va * m[j] % p;
            if (!coef) continue;
            for (int k = 0; k < piece_dims[q + 1]; ++k) {
                uint32_t t = T.at(a, j, k);
                if (!t) continue;
                uint64_t val = out[k] + coef * t % p;
                out[k] = static_cast<uint32_t>(val >= p ? val - p : val);
            }
        }
    }
    return out;
}

void GradedModuleData::check_action_commutes(Rng& rng, int samples) const {
    for (int s = 0; s < samples; ++s) {
        for (int q = 0; q + 2 <= qmax(); ++q) {
            std::vector<uint32_t> v(dim_v), w(dim_v), m(piece_dims[q]);
            for (auto& x : v) x = rng.field_element(field.p());
            for (auto& x : w) x = rng.field_element(field.p());
            for (auto& x : m) x = rng.field_element(field.p());
            auto vm = apply_mult(q, v, m);
            auto wvm = apply_mult(q + 1, w, vm);
            auto wm = apply_mult(q, w, m);
            auto vwm = apply_mult(q + 1, v, wm);
            if (wvm != vwm)
                throw std::runtime_error("GradedModuleData: action does not commute");
        }
    }
}

namespace {

// multiplication matrices M_q -> M_{q+1} for each basis vector of W (or of V)
std::vector<PFMatrix> mult_matrices(const GradedModuleData& m, int q, const SubspaceW* w) {
    const int wd = w ? static_cast<int>(w->basis.rows) : m.dim_v;
    const uint32_t p = m.field.p();
    std::vector<PFMatrix> out;
    out.reserve(wd);
    for (int i = 0; i < wd; ++i) {
        PFMatrix mm(m.field, m.piece_dims[q], m.piece_dims[q + 1]);
        if (w) {
            for (int a = 0; a < m.dim_v; ++a) {
                uint64_t c = w->basis.at(i, a);
                if (!c) continue;
                for (int j = 0; j < m.piece_dims[q]; ++j)
                    for (int k = 0; k < m.piece_dims[q + 1]; ++k) {
                        uint32_t t = m.mult[q].at(a, j, k);
                        if (!t) continue;
                        uint64_t val = mm.at(j, k) + c * t % p;
                        mm.at(j, k) = static_cast<uint32_t>(val >= p ? val - p : val);
                    }
            }
        } else {
            for (int j = 0; j < m.piece_dims[q]; ++j)
                for (int k = 0; k < m.piece_dims[q + 1]; ++k)
                    mm.at(j, k) = m.mult[q].at(i, j, k);
        }
        out.push_back(std::move(mm));
    }
    return out;
}

} // namespace

std::size_t chain_dim(const GradedModuleData& m, int w_dim, int p, int q) {
    if (p < 0 || q < 0 || q > m.qmax()) return 0;
    return static_cast<std::size_t>(binomial(w_dim, p)) * m.piece_dims[q];
}

PFMatrix koszul_differential(const GradedModuleData& m, KoszulPosition pos,
                             const SubspaceW* w) {
    const int p = pos.p, q = pos.q;
    if (q < 0 || q > m.qmax())
        throw std::out_of_range("koszul_differential: degree out of range");
    if (w && w->basis.cols != static_cast<std::size_t>(m.dim_v))
        throw std::invalid_argument("koszul_differential: subspace ambient mismatch");
    const int wd = w ? static_cast<int>(w->basis.rows) : m.dim_v;
    const int mq = m.piece_dims[q];
    // degenerate shapes first: they never touch the multiplication tensor
    if (p < 0 || p > wd) return PFMatrix(m.field, 0, 0);
    if (p == 0) return PFMatrix(m.field, 0, mq);
    if (q + 1 > m.qmax())
        throw std::out_of_range("koszul_differential: degree out of range");
    const int mq1 = m.piece_dims[q + 1];
    WedgeIndex src(wd, p), dst(wd, p - 1);
    PFMatrix D(m.field, dst.size() * mq1, src.size() * mq);
    if (src.size() == 0) return D;
    auto mm = mult_matrices(m, q, w);
    const uint32_t pr = m.field.p();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8) if (src.size() > 64)
#endif
    for (long long ti = 0; ti < static_cast<long long>(src.size()); ++ti) {
        const auto& T = src.tuple(ti);
        std::vector<int> sub(p - 1);
        for (int j = 0; j < p; ++j) {
            // remove position j (0-based); paper's sign is (-1)^(j+1) for the
            // 1-based index, i.e. odd positions positive
            int sign = (j % 2 == 0) ? -1 : 1;
            for (int a = 0, b = 0; a < p; ++a)
                if (a != j) sub[b++] = T[a];
            std::size_t drow = dst.rank(sub.data());
            const PFMatrix& mul = mm[T[j]];
            for (int mj = 0; mj < mq; ++mj) {
                std::size_t col = ti * mq + mj;
                for (int mk = 0; mk < mq1; ++mk) {
                    uint32_t c = mul.at(mj, mk);
                    if (!c) continue;
                    uint32_t v = (sign < 0) ? m.field.neg(c) : c;
                    std::size_t row = drow * mq1 + mk;
                    D.at(row, col) = m.field.add(D.at(row, col), v);
                }
            }
        }
    }
    (void)pr;
    return D;
}

EchelonAccumulator::EchelonAccumulator(PrimeField f, std::size_t width)
    : field_(f), width_(width) {}

std::vector<uint32_t> EchelonAccumulator::reduce(std::span<const uint32_t> v) const {
    const uint32_t p = field_.p();
    std::vector<uint32_t> w(v.begin(), v.end());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        uint32_t f = w[leads_[i]];
        if (!f) continue;
        uint64_t fp = f;
        const auto& row = rows_[i];
        for (std::size_t j = leads_[i]; j < width_; ++j) {
            if (!row[j]) continue;
            uint64_t val = w[j] + fp * (p - row[j]) % p;
            w[j] = static_cast<uint32_t>(val >= p ? val - p : val);
        }
    }
    return w;
}

std::optional<std::vector<uint32_t>> EchelonAccumulator::insert(std::span<const uint32_t> v) {
    if (v.size() != width_) throw std::invalid_argument("EchelonAccumulator: width mismatch");
    auto w = reduce(v);
    std::size_t lead = width_;
    for (std::size_t j = 0; j < width_; ++j)
        if (w[j]) { lead = j; break; }
    if (lead == width_) return std::nullopt;
    uint32_t inv = field_.inv(w[lead]);
    if (inv != 1)
        for (std::size_t j = lead; j < width_; ++j) w[j] = field_.mul(w[j], inv);
    // keep rows sorted by leading column
    std::size_t pos = 0;
    while (pos < leads_.size() && leads_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, w);
    leads_.insert(leads_.begin() + pos, lead);
    return w;
}

bool EchelonAccumulator::contains(std::span<const uint32_t> v) const {
    auto w = reduce(v);
    for (uint32_t x : w)
        if (x) return false;
    return true;
}

PFMatrix EchelonAccumulator::basis() const {
    PFMatrix out(field_, rows_.size(), width_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        std::copy(rows_[i].begin(), rows_[i].end(), out.row_mut(i).begin());
    return out;
}

KoszulCohomology koszul_cohomology(const GradedModuleData& m, KoszulPosition pos,
                                   const SubspaceW* w) {
    const int wd = w ? static_cast<int>(w->basis.rows) : m.dim_v;
    PFMatrix d2 = koszul_differential(m, pos, w);
    PFMatrix d1(m.field, 0, 0);
    bool have_d1 = pos.q >= 1 && wd >= pos.p + 1;
    if (have_d1)
        d1 = koszul_differential(m, {pos.p + 1, pos.q - 1}, w);

    auto [rank2, kernel] = rank_kernel(d2);
    (void)rank2;

    EchelonAccumulator acc(m.field, d2.cols);
    std::size_t boundary_rank = 0;
    if (have_d1) {
        // image of d1 = row space of its transpose; verify d∘d = 0 as we go
        PFMatrix d1t = transpose(d1);
        for (std::size_t i = 0; i < d1t.rows; ++i) {
            auto img = mat_vec(d2, d1t.row(i));
            for (uint32_t x : img)
                if (x) throw std::runtime_error("koszul: d∘d != 0");
            if (acc.insert(d1t.row(i))) ++boundary_rank;
        }
    }
    PFMatrix boundaries = acc.basis();

    std::vector<std::vector<uint32_t>> reps;
    for (std::size_t i = 0; i < kernel.rows; ++i) {
        auto rem = acc.insert(kernel.row(i));
        if (rem) reps.push_back(std::move(*rem));
    }
    PFMatrix cycle_reps = reps.empty() ? PFMatrix(m.field, 0, d2.cols)
                                       : PFMatrix::from_rows(m.field, reps);
    assert(reps.size() == kernel.rows - boundary_rank);
    return KoszulCohomology{pos, wd, static_cast<int>(reps.size()),
                            std::move(cycle_reps), std::move(boundaries)};
}

std::vector<KoszulClass> KoszulCohomology::classes() const {
    std::vector<KoszulClass> out;
    for (std::size_t i = 0; i < cycle_reps.rows; ++i) {
        KoszulClass c;
        c.pos = pos;
        c.rep = ClassRep::native;
        c.coeff.assign(cycle_reps.row(i).begin(), cycle_reps.row(i).end());
        out.push_back(std::move(c));
    }
    return out;
}

std::optional<std::vector<uint32_t>> KoszulCohomology::class_coords(
    std::span<const uint32_t> z) const {
    // z = b·boundaries + c·cycle_reps; return c
    PFMatrix stacked = row_stack(boundaries, cycle_reps);
    if (stacked.rows == 0) {
        for (uint32_t x : z)
            if (x) return std::nullopt;
        return std::vector<uint32_t>{};
    }
    CoordinateSolver cs(stacked);
    auto c = cs.coords(z);
    if (!c) return std::nullopt;
    return std::vector<uint32_t>(c->begin() + boundaries.rows, c->end());
}

bool is_normally_generated(const GradedModuleData& m) {
    if (m.piece_dims[0] != 1) return false;
    for (int q = 1; q <= m.qmax(); ++q) {
        // stack the multiplication images e_a · e_j as rows; surjective iff
        // rank equals dim M_q
        PFMatrix rows(m.field, m.dim_v * m.piece_dims[q - 1], m.piece_dims[q]);
        for (int a = 0; a < m.dim_v; ++a)
            for (int j = 0; j < m.piece_dims[q - 1]; ++j)
                for (int k = 0; k < m.piece_dims[q]; ++k)
                    rows.at(a * m.piece_dims[q - 1] + j, k) = m.mult[q - 1].at(a, j, k);
        if (rank_of(rows) != static_cast<std::size_t>(m.piece_dims[q])) return false;
    }
    return true;
}

PFMatrix restricted_inclusion(const GradedModuleData& m, KoszulPosition pos,
                              const SubspaceW& w,
                              const KoszulCohomology* cohW_in,
                              const KoszulCohomology* cohV_in) {
    if (pos.q != 1)
        throw std::invalid_argument("restricted_inclusion: only q = 1 strands");
    if (!is_normally_generated(m))
        throw std::runtime_error("restricted_inclusion: module is not normally generated");
    KoszulCohomology cohW = cohW_in ? *cohW_in : koszul_cohomology(m, pos, &w);
    KoszulCohomology cohV = cohV_in ? *cohV_in : koszul_cohomology(m, pos);

    const int mq = m.piece_dims[pos.q];
    WedgeIndex srcW(static_cast<int>(w.basis.rows), pos.p);
    WedgeIndex dstV(m.dim_v, pos.p);
    PFMatrix out(m.field, cohV.dim, cohW.dim);
    for (int ci = 0; ci < cohW.dim; ++ci) {
        std::vector<uint32_t> ambient(dstV.size() * mq, 0);
        for (std::size_t s = 0; s < srcW.size(); ++s) {
            auto expanded = wedge_expand(m.field, w.basis, srcW.tuple(s));
            for (int mj = 0; mj < mq; ++mj) {
                uint32_t c = cohW.cycle_reps.at(ci, s * mq + mj);
                if (!c) continue;
                for (std::size_t t = 0; t < dstV.size(); ++t) {
                    if (!expanded[t]) continue;
                    std::size_t k = t * mq + mj;
                    ambient[k] = m.field.add(ambient[k], m.field.mul(c, expanded[t]));
                }
            }
        }
        auto coords = cohV.class_coords(ambient);
        if (!coords)
            throw std::runtime_error("restricted_inclusion: image is not a cycle");
        for (int r = 0; r < cohV.dim; ++r) out.at(r, ci) = (*coords)[r];
    }
    return out;
}

GradedModuleData submodule(const GradedModuleData& m, const std::vector<PFMatrix>& sub) {
    if (static_cast<int>(sub.size()) != m.qmax() + 1)
        throw std::invalid_argument("submodule: need one subspace per degree");
    GradedModuleData out{m.field};
    out.dim_v = m.dim_v;
    out.piece_dims.resize(sub.size());
    std::vector<CoordinateSolver> solvers;
    solvers.reserve(sub.size());
    for (std::size_t q = 0; q < sub.size(); ++q) {
        out.piece_dims[q] = static_cast<int>(sub[q].rows);
        solvers.emplace_back(sub[q]);
    }
    for (int q = 0; q < m.qmax(); ++q) {
        Tensor3 T(m.field, m.dim_v, out.piece_dims[q], out.piece_dims[q + 1]);
        std::vector<uint32_t> e(m.dim_v, 0);
        for (int a = 0; a < m.dim_v; ++a) {
            std::fill(e.begin(), e.end(), 0);
            e[a] = 1;
            for (int j = 0; j < out.piece_dims[q]; ++j) {
                auto img = m.apply_mult(q, e, sub[q].row(j));
                auto coords = solvers[q + 1].coords(img);
                if (!coords)
                    throw std::runtime_error("submodule: subspaces not closed under the action");
                for (int k = 0; k < out.piece_dims[q + 1]; ++k) T.at(a, j, k) = (*coords)[k];
            }
        }
        out.mult.push_back(std::move(T));
    }
    return out;
}

GradedModuleData quotient_module(const GradedModuleData& m, const std::vector<PFMatrix>& sub) {
    if (static_cast<int>(sub.size()) != m.qmax() + 1)
        throw std::invalid_argument("quotient_module: need one subspace per degree");
    GradedModuleData out{m.field};
    out.dim_v = m.dim_v;
    const uint32_t p = m.field.p();
    struct Deg {
        PFMatrix rref;
        std::vector<std::size_t> pivots;
        std::vector<int> comp; // complement (non-pivot) columns
    };
    std::vector<Deg> degs;
    for (std::size_t q = 0; q < sub.size(); ++q) {
        Deg d{PFMatrix(m.field, 0, 0), {}, {}};
        d.rref = rref(sub[q], &d.pivots);
        if (d.rref.rows != sub[q].rows)
            throw std::invalid_argument("quotient_module: dependent subspace rows");
        std::vector<char> is_piv(m.piece_dims[q], 0);
        for (auto c : d.pivots) is_piv[c] = 1;
        for (int c = 0; c < m.piece_dims[q]; ++c)
            if (!is_piv[c]) d.comp.push_back(c);
        degs.push_back(std::move(d));
    }
    out.piece_dims.resize(sub.size());
    for (std::size_t q = 0; q < sub.size(); ++q)
        out.piece_dims[q] = static_cast<int>(degs[q].comp.size());

    auto quotient_coords = [&](int q, std::vector<uint32_t> v) {
        const Deg& d = degs[q];
        for (std::size_t i = 0; i < d.rref.rows; ++i) {
            uint32_t f = v[d.pivots[i]];
            if (!f) continue;
            uint64_t fp = f;
            for (std::size_t j = 0; j < v.size(); ++j) {
                uint32_t r = d.rref.at(i, j);
                if (!r) continue;
                uint64_t val = v[j] + fp * (p - r) % p;
                v[j] = static_cast<uint32_t>(val >= p ? val - p : val);
            }
        }
        std::vector<uint32_t> c(d.comp.size());
        for (std::size_t k = 0; k < d.comp.size(); ++k) c[k] = v[d.comp[k]];
        return c;
    };

    for (int q = 0; q < m.qmax(); ++q) {
        Tensor3 T(m.field, m.dim_v, out.piece_dims[q], out.piece_dims[q + 1]);
        std::vector<uint32_t> e(m.dim_v, 0), lift(m.piece_dims[q], 0);
        for (int a = 0; a < m.dim_v; ++a) {
            std::fill(e.begin(), e.end(), 0);
            e[a] = 1;
            for (int j = 0; j < out.piece_dims[q]; ++j) {
                std::fill(lift.begin(), lift.end(), 0);
                lift[degs[q].comp[j]] = 1;
                auto img = m.apply_mult(q, e, lift);
                auto qc = quotient_coords(q + 1, std::move(img));
                for (int k = 0; k < out.piece_dims[q + 1]; ++k) T.at(a, j, k) = qc[k];
            }
        }
        out.mult.push_back(std::move(T));
    }
    return out;
}

GradedModuleData sym_algebra_truncation(PrimeField F, int n, int qmax, bool with_grading) {
    GradedModuleData m{F};
    m.dim_v = n;
    // monomial bases: exponent vectors of total degree q, lexicographic
    std::vector<std::vector<std::vector<int>>> monos(qmax + 1);
    for (int q = 0; q <= qmax; ++q) {
        std::vector<int> cur(n, 0);
        // enumerate all exponent vectors summing to q
        std::vector<std::vector<int>> list;
        std::function<void(int, int)> rec = [&](int pos, int left) {
            if (pos == n - 1) {
                cur[pos] = left;
                list.push_back(cur);
                return;
            }
            for (int e = left; e >= 0; --e) {
                cur[pos] = e;
                rec(pos + 1, left - e);
            }
        };
        if (n > 0) rec(0, q);
        monos[q] = std::move(list);
        m.piece_dims.push_back(static_cast<int>(monos[q].size()));
    }
    auto find_mono = [&](int q, const std::vector<int>& e) -> int {
        const auto& lst = monos[q];
        for (std::size_t i = 0; i < lst.size(); ++i)
            if (lst[i] == e) return static_cast<int>(i);
        return -1;
    };
    for (int q = 0; q < qmax; ++q) {
        Tensor3 T(F, n, m.piece_dims[q], m.piece_dims[q + 1]);
        for (int a = 0; a < n; ++a)
            for (int j = 0; j < m.piece_dims[q]; ++j) {
                auto e = monos[q][j];
                e[a] += 1;
                int k = find_mono(q + 1, e);
                T.at(a, j, k) = 1;
            }
        m.mult.push_back(std::move(T));
    }
    if (with_grading) {
        m.v_grades.resize(n);
        for (int a = 0; a < n; ++a) {
            m.v_grades[a].assign(n, 0);
            m.v_grades[a][a] = 1;
        }
        m.piece_grades.resize(qmax + 1);
        for (int q = 0; q <= qmax; ++q) {
            m.piece_grades[q].resize(monos[q].size());
            for (std::size_t j = 0; j < monos[q].size(); ++j) {
                m.piece_grades[q][j].assign(monos[q][j].begin(), monos[q][j].end());
            }
        }
    }
    return m;
}

// ---------- blocked (multigraded) rank ----------

namespace {

struct GradeKey {
    std::vector<int16_t> g;
    bool operator<(const GradeKey& o) const { return g < o.g; }
};

void add_grade(std::vector<int16_t>& acc, const std::vector<int16_t>& g) {
    if (acc.size() < g.size()) acc.resize(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) acc[i] = static_cast<int16_t>(acc[i] + g[i]);
}

} // namespace

std::size_t koszul_rank_graded(const GradedModuleData& m, KoszulPosition pos) {
    if (!m.has_grading())
        throw std::invalid_argument("koszul_rank_graded: module has no grading");
    const int p = pos.p, q = pos.q;
    if (q < 0 || q + 1 > m.qmax())
        throw std::out_of_range("koszul_rank_graded: degree out of range");
    if (p <= 0) return 0;
    const int mq = m.piece_dims[q], mq1 = m.piece_dims[q + 1];
    WedgeIndex src(m.dim_v, p), dst(m.dim_v, p - 1);
    if (src.size() == 0 || dst.size() * mq1 == 0) return 0;

    // wedge grade prefix per tuple
    auto tuple_grade = [&](const std::vector<int>& T) {
        std::vector<int16_t> g;
        for (int t : T) add_grade(g, m.v_grades[t]);
        return g;
    };

    // group source columns by total grade
    std::map<GradeKey, std::vector<std::pair<std::size_t, int>>> col_groups; // (tuple, mj)
    for (std::size_t ti = 0; ti < src.size(); ++ti) {
        auto base = tuple_grade(src.tuple(ti));
        for (int mj = 0; mj < mq; ++mj) {
            auto g = base;
            add_grade(g, m.piece_grades[q][mj]);
            col_groups[GradeKey{g}].push_back({ti, mj});
        }
    }
    // row grade lookup: (dst tuple, mk) -> grade; we only need, per block,
    // a local row indexing keyed by (dst rank, mk)
    std::vector<std::vector<int16_t>> dst_grades(dst.size());
    for (std::size_t di = 0; di < dst.size(); ++di) dst_grades[di] = tuple_grade(dst.tuple(di));

    std::vector<const std::vector<std::pair<std::size_t, int>>*> groups;
    groups.reserve(col_groups.size());
    std::vector<GradeKey> keys;
    for (auto& [k, v] : col_groups) {
        keys.push_back(k);
        groups.push_back(&v);
    }

    std::size_t total_rank = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : total_rank)
#endif
    for (long long gi = 0; gi < static_cast<long long>(groups.size()); ++gi) {
        const auto& cols = *groups[gi];
        // collect rows of this grade: (dst rank, mk) with grade sum == key
        std::map<std::pair<std::size_t, int>, int> row_ids;
        // build triplets
        std::vector<std::tuple<int, int, uint32_t>> trip; // (local row, local col, val)
        std::vector<int> sub(p - 1);
        for (std::size_t lc = 0; lc < cols.size(); ++lc) {
            auto [ti, mj] = cols[lc];
            const auto& T = src.tuple(ti);
            for (int j = 0; j < p; ++j) {
                int sign = (j % 2 == 0) ? -1 : 1;
                for (int a = 0, b = 0; a < p; ++a)
                    if (a != j) sub[b++] = T[a];
                std::size_t drow = dst.rank(sub.data());
                for (int mk = 0; mk < mq1; ++mk) {
                    uint32_t c = m.mult[q].at(T[j], mj, mk);
                    if (!c) continue;
                    auto key = std::make_pair(drow, mk);
                    auto it = row_ids.find(key);
                    int rid;
                    if (it == row_ids.end()) {
                        rid = static_cast<int>(row_ids.size());
                        row_ids.emplace(key, rid);
                    } else {
                        rid = it->second;
                    }
                    trip.emplace_back(rid, static_cast<int>(lc),
                                      sign < 0 ? m.field.neg(c) : c);
                }
            }
        }
        if (trip.empty()) continue;
        PFMatrix block(m.field, row_ids.size(), cols.size());
        for (auto& [r, c, v] : trip) block.at(r, c) = m.field.add(block.at(r, c), v);
        total_rank += rank_of(block);
    }
    return total_rank;
}

int koszul_dim_graded(const GradedModuleData& m, KoszulPosition pos) {
    std::size_t cols = chain_dim(m, m.dim_v, pos.p, pos.q);
    if (cols == 0) return 0;
    std::size_t r2 = (pos.q + 1 <= m.qmax()) ? koszul_rank_graded(m, pos)
                                             : throw std::out_of_range("koszul_dim_graded");
    std::size_t r1 = 0;
    if (pos.q >= 1 && pos.p + 1 <= m.dim_v) r1 = koszul_rank_graded(m, {pos.p + 1, pos.q - 1});
    return static_cast<int>(cols - r2 - r1);
}

} // namespace syz
