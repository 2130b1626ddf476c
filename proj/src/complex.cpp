#include "siltlab/complex.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

namespace siltlab {

void AlgMatrix::remove_row(size_t r) {
    ent.erase(ent.begin() + r * cols.size(), ent.begin() + (r + 1) * cols.size());
    rows.erase(rows.begin() + r);
}

void AlgMatrix::remove_col(size_t c) {
    const size_t w = cols.size();
    std::vector<std::vector<fp_t>> ne;
    ne.reserve(rows.size() * (w - 1));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t j = 0; j < w; ++j)
            if (j != c) ne.push_back(std::move(ent[r * w + j]));
    ent = std::move(ne);
    cols.erase(cols.begin() + c);
}

AlgMatrix alg_zero(const BasedAlgebra& a, std::vector<int> rows, std::vector<int> cols) {
    AlgMatrix m;
    m.rows = std::move(rows);
    m.cols = std::move(cols);
    m.ent.resize(m.rows.size() * m.cols.size());
    for (size_t r = 0; r < m.rows.size(); ++r)
        for (size_t c = 0; c < m.cols.size(); ++c)
            m.at(r, c).assign(a.peirce_dim(m.rows[r], m.cols[c]), 0);
    return m;
}

AlgMatrix alg_identity(const BasedAlgebra& a, const std::vector<int>& verts) {
    AlgMatrix m = alg_zero(a, verts, verts);
    for (size_t i = 0; i < verts.size(); ++i)
        m.at(i, i)[a.pos_in_peirce(a.idempotent(verts[i]))] = 1;
    return m;
}

AlgMatrix alg_compose(const BasedAlgebra& a, const AlgMatrix& g, const AlgMatrix& f) {
    assert(g.cols == f.rows);
    AlgMatrix m = alg_zero(a, g.rows, f.cols);
    const uint32_t p = a.prime();
    for (size_t r = 0; r < g.rows.size(); ++r)
        for (size_t k = 0; k < g.cols.size(); ++k) {
            const auto& gr = g.at(r, k);
            bool nz = false;
            for (fp_t x : gr) nz |= x != 0;
            if (!nz) continue;
            for (size_t c = 0; c < f.cols.size(); ++c) {
                auto prod = a.pe_mul(g.rows[r], g.cols[k], f.cols[c], gr, f.at(k, c));
                auto& dst = m.at(r, c);
                for (size_t i = 0; i < dst.size(); ++i) dst[i] = fp_add(dst[i], prod[i], p);
            }
        }
    return m;
}

bool alg_is_zero(const AlgMatrix& m) {
    for (const auto& e : m.ent)
        for (fp_t x : e)
            if (x != 0) return false;
    return true;
}

TwoTermComplex stalk(const BasedAlgebra& a, int v) {
    return TwoTermComplex{alg_zero(a, {v}, {})};
}

TwoTermComplex shifted(const BasedAlgebra& a, int v) {
    return TwoTermComplex{alg_zero(a, {}, {v})};
}

TwoTermComplex direct_sum(const BasedAlgebra& a, const TwoTermComplex& t,
                          const TwoTermComplex& u) {
    std::vector<int> rows = t.deg0();
    rows.insert(rows.end(), u.deg0().begin(), u.deg0().end());
    std::vector<int> cols = t.degm1();
    cols.insert(cols.end(), u.degm1().begin(), u.degm1().end());
    AlgMatrix d = alg_zero(a, std::move(rows), std::move(cols));
    for (size_t r = 0; r < t.deg0().size(); ++r)
        for (size_t c = 0; c < t.degm1().size(); ++c) d.at(r, c) = t.d.at(r, c);
    for (size_t r = 0; r < u.deg0().size(); ++r)
        for (size_t c = 0; c < u.degm1().size(); ++c)
            d.at(t.deg0().size() + r, t.degm1().size() + c) = u.d.at(r, c);
    return TwoTermComplex{std::move(d)};
}

namespace {

bool entry_is_radical(const BasedAlgebra& a, int rv, int cv, const std::vector<fp_t>& e) {
    if (rv != cv) return true;
    return e[a.pos_in_peirce(a.idempotent(rv))] == 0;
}

}  // namespace

bool is_minimal(const BasedAlgebra& a, const TwoTermComplex& t) {
    for (size_t r = 0; r < t.deg0().size(); ++r)
        for (size_t c = 0; c < t.degm1().size(); ++c)
            if (!entry_is_radical(a, t.deg0()[r], t.degm1()[c], t.d.at(r, c))) return false;
    return true;
}

std::vector<int> g_vector(const BasedAlgebra& a, const TwoTermComplex& t) {
    if (!is_minimal(a, t))
        throw NotMinimal("g_vector: differential has a non-radical entry");
    std::vector<int> g(a.vertices(), 0);
    for (int v : t.deg0()) ++g[v - 1];
    for (int v : t.degm1()) --g[v - 1];
    return g;
}

std::vector<int> h0_dimension_vector(const BasedAlgebra& a, const TwoTermComplex& t) {
    std::vector<int> dim(a.vertices(), 0);
    for (int j = 1; j <= a.vertices(); ++j) {
        size_t rows = 0, cols = 0;
        std::vector<size_t> roff(t.deg0().size() + 1, 0), coff(t.degm1().size() + 1, 0);
        for (size_t r = 0; r < t.deg0().size(); ++r)
            roff[r + 1] = rows += a.peirce_dim(t.deg0()[r], j);
        for (size_t c = 0; c < t.degm1().size(); ++c)
            coff[c + 1] = cols += a.peirce_dim(t.degm1()[c], j);
        FMatrix m(rows, cols, a.prime());
        for (size_t r = 0; r < t.deg0().size(); ++r)
            for (size_t c = 0; c < t.degm1().size(); ++c) {
                FMatrix op = a.left_mult_op(t.deg0()[r], t.degm1()[c], t.d.at(r, c), j);
                for (size_t i = 0; i < op.rows(); ++i)
                    for (size_t k = 0; k < op.cols(); ++k) m.at(roff[r] + i, coff[c] + k) = op.at(i, k);
            }
        dim[j - 1] = static_cast<int>(rows - rank(m));
    }
    return dim;
}

ChainMap identity_map(const BasedAlgebra& a, const TwoTermComplex& t) {
    return ChainMap{alg_identity(a, t.deg0()), alg_identity(a, t.degm1())};
}

ChainMap compose(const BasedAlgebra& a, const ChainMap& g, const ChainMap& f) {
    return ChainMap{alg_compose(a, g.f0, f.f0), alg_compose(a, g.fm1, f.fm1)};
}

namespace {

// Coordinate bookkeeping for Hom_A(⊕ P_from, ⊕ P_to): one block per (row,
// col) pair, each of size peirce(to[r], from[c]).
struct ModCoords {
    std::vector<size_t> off;  // r * cols + c -> offset
    size_t total = 0;
    size_t ncols = 0;

    ModCoords() = default;
    ModCoords(const BasedAlgebra& a, const std::vector<int>& from, const std::vector<int>& to) {
        ncols = from.size();
        off.resize(to.size() * from.size() + 1, 0);
        for (size_t r = 0; r < to.size(); ++r)
            for (size_t c = 0; c < from.size(); ++c) {
                off[r * ncols + c] = total;
                total += a.peirce_dim(to[r], from[c]);
            }
        off[to.size() * from.size()] = total;
    }
    size_t block(size_t r, size_t c) const { return off[r * ncols + c]; }
};

void flatten_into(const AlgMatrix& m, const ModCoords& co, std::vector<fp_t>& out, size_t base) {
    for (size_t r = 0; r < m.rows.size(); ++r)
        for (size_t c = 0; c < m.cols.size(); ++c) {
            const auto& e = m.at(r, c);
            size_t o = base + co.block(r, c);
            for (size_t k = 0; k < e.size(); ++k) out[o + k] = e[k];
        }
}

AlgMatrix unflatten(const BasedAlgebra& a, const std::vector<int>& from,
                    const std::vector<int>& to, const ModCoords& co,
                    std::span<const fp_t> v, size_t base) {
    AlgMatrix m = alg_zero(a, to, from);
    for (size_t r = 0; r < to.size(); ++r)
        for (size_t c = 0; c < from.size(); ++c) {
            auto& e = m.at(r, c);
            size_t o = base + co.block(r, c);
            for (size_t k = 0; k < e.size(); ++k) e[k] = v[o + k];
        }
    return m;
}

// dst block (r_to, c_to) of `big` += sign * op applied to block (r_from,
// c_from); `op` maps one Peirce component to another.
void add_block_op(FMatrix& big, const FMatrix& op, size_t row_base, size_t col_base, bool neg) {
    const uint32_t p = big.prime();
    for (size_t i = 0; i < op.rows(); ++i)
        for (size_t k = 0; k < op.cols(); ++k) {
            fp_t v = op.at(i, k);
            if (neg) v = fp_neg(v, p);
            big.at(row_base + i, col_base + k) = fp_add(big.at(row_base + i, col_base + k), v, p);
        }
}

// Matrix of (s, t) |-> s . d_T + d_U . t  into Hom(T^-1, U^0), where
// s : T^0 -> U^0 and t : T^-1 -> U^-1.  This is both the homotopy-class
// obstruction for shift 1 and (with U^0/U^-1 swapped roles) the chain-map
// condition; callers assemble the variants they need.
FMatrix shift_map(const BasedAlgebra& a, const TwoTermComplex& t, const TwoTermComplex& u,
                  const ModCoords& cs, const ModCoords& ct, const ModCoords& cx) {
    FMatrix phi(cx.total, cs.total + ct.total, a.prime());
    // s . d_T : block (r in U0, c' in Tm1) gets s[r][c] * dT[c][c']
    for (size_t r = 0; r < u.deg0().size(); ++r)
        for (size_t c = 0; c < t.deg0().size(); ++c)
            for (size_t c2 = 0; c2 < t.degm1().size(); ++c2) {
                FMatrix op = a.right_mult_op(u.deg0()[r], t.d.at(c, c2), t.deg0()[c],
                                             t.degm1()[c2]);
                add_block_op(phi, op, cx.block(r, c2), cs.block(r, c), false);
            }
    // d_U . t : block (r, c') gets dU[r][m] * t[m][c']
    for (size_t r = 0; r < u.deg0().size(); ++r)
        for (size_t m = 0; m < u.degm1().size(); ++m)
            for (size_t c2 = 0; c2 < t.degm1().size(); ++c2) {
                FMatrix op = a.left_mult_op(u.deg0()[r], u.degm1()[m], u.d.at(r, m),
                                            t.degm1()[c2]);
                add_block_op(phi, op, cx.block(r, c2), cs.total + ct.block(m, c2), false);
            }
    return phi;
}

}  // namespace

HomSpace::HomSpace(const BasedAlgebra& a, const TwoTermComplex& t, const TwoTermComplex& u)
    : a_(a), t_(t), u_(u) {
    ModCoords c0(a, t.deg0(), u.deg0());
    ModCoords c1(a, t.degm1(), u.degm1());
    ModCoords cx(a, t.degm1(), u.deg0());
    d0_ = c0.total;
    d1_ = c1.total;

    // chain-map condition: f0 . d_T - d_U . fm1 = 0
    FMatrix l(cx.total, d0_ + d1_, a.prime());
    for (size_t r = 0; r < u.deg0().size(); ++r)
        for (size_t c = 0; c < t.deg0().size(); ++c)
            for (size_t c2 = 0; c2 < t.degm1().size(); ++c2) {
                FMatrix op = a.right_mult_op(u.deg0()[r], t.d.at(c, c2), t.deg0()[c],
                                             t.degm1()[c2]);
                add_block_op(l, op, cx.block(r, c2), c0.block(r, c), false);
            }
    for (size_t r = 0; r < u.deg0().size(); ++r)
        for (size_t m = 0; m < u.degm1().size(); ++m)
            for (size_t c2 = 0; c2 < t.degm1().size(); ++c2) {
                FMatrix op = a.left_mult_op(u.deg0()[r], u.degm1()[m], u.d.at(r, m),
                                            t.degm1()[c2]);
                add_block_op(l, op, cx.block(r, c2), d0_ + c1.block(m, c2), true);
            }
    auto kernel = kernel_basis(l);

    // homotopies: s : T^0 -> U^-1, (f0, fm1) = (d_U . s, s . d_T)
    ModCoords chs(a, t.deg0(), u.degm1());
    FMatrix h(d0_ + d1_, chs.total, a.prime());
    for (size_t r = 0; r < u.deg0().size(); ++r)
        for (size_t m = 0; m < u.degm1().size(); ++m)
            for (size_t c = 0; c < t.deg0().size(); ++c) {
                FMatrix op = a.left_mult_op(u.deg0()[r], u.degm1()[m], u.d.at(r, m), t.deg0()[c]);
                add_block_op(h, op, c0.block(r, c), chs.block(m, c), false);
            }
    for (size_t m = 0; m < u.degm1().size(); ++m)
        for (size_t c = 0; c < t.deg0().size(); ++c)
            for (size_t c2 = 0; c2 < t.degm1().size(); ++c2) {
                FMatrix op = a.right_mult_op(u.degm1()[m], t.d.at(c, c2), t.deg0()[c],
                                             t.degm1()[c2]);
                add_block_op(h, op, d0_ + c1.block(m, c2), chs.block(m, c), false);
            }

    RowSpace acc(d0_ + d1_, a.prime());
    span_rows_ = FMatrix(0, d0_ + d1_, a.prime());
    for (size_t j = 0; j < h.cols(); ++j) {
        std::vector<fp_t> col(d0_ + d1_);
        for (size_t i = 0; i < col.size(); ++i) col[i] = h.at(i, j);
        if (acc.absorb(col)) span_rows_.append_row(col);
    }
    h_rank_ = acc.rank();
    for (const auto& k : kernel)
        if (acc.absorb(k)) {
            span_rows_.append_row(k);
            reps_.push_back(ChainMap{unflatten(a, t.deg0(), u.deg0(), c0, k, 0),
                                     unflatten(a, t.degm1(), u.degm1(), c1, k, d0_)});
        }
    if (span_rows_.rows() > 0) solver_ = std::make_unique<RowSolver>(span_rows_);
}

std::vector<fp_t> HomSpace::flatten(const ChainMap& f) const {
    ModCoords c0(a_, t_.deg0(), u_.deg0());
    ModCoords c1(a_, t_.degm1(), u_.degm1());
    std::vector<fp_t> v(d0_ + d1_, 0);
    flatten_into(f.f0, c0, v, 0);
    flatten_into(f.fm1, c1, v, d0_);
    return v;
}

std::vector<fp_t> HomSpace::class_coords(const ChainMap& f) const {
    std::vector<fp_t> v = flatten(f);
    if (!solver_) {
        for (fp_t x : v)
            if (x != 0) throw ValidationFailure("class_coords: map outside the chain-map space");
        return {};
    }
    auto sol = solver_->solve(v);
    if (!sol) throw ValidationFailure("class_coords: map outside the chain-map space");
    return std::vector<fp_t>(sol->begin() + h_rank_, sol->end());
}

ChainMap HomSpace::from_class(std::span<const fp_t> c) const {
    assert(c.size() == reps_.size());
    const uint32_t p = a_.prime();
    ChainMap out{alg_zero(a_, u_.deg0(), t_.deg0()), alg_zero(a_, u_.degm1(), t_.degm1())};
    for (size_t i = 0; i < reps_.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t e = 0; e < out.f0.ent.size(); ++e)
            for (size_t k = 0; k < out.f0.ent[e].size(); ++k)
                out.f0.ent[e][k] =
                    fp_add(out.f0.ent[e][k], fp_mul(c[i], reps_[i].f0.ent[e][k], p), p);
        for (size_t e = 0; e < out.fm1.ent.size(); ++e)
            for (size_t k = 0; k < out.fm1.ent[e].size(); ++k)
                out.fm1.ent[e][k] =
                    fp_add(out.fm1.ent[e][k], fp_mul(c[i], reps_[i].fm1.ent[e][k], p), p);
    }
    return out;
}

int hom_degree0_dim(const BasedAlgebra& a, const TwoTermComplex& t, const TwoTermComplex& u) {
    return HomSpace(a, t, u).dim();
}

int hom_shift1(const BasedAlgebra& a, const TwoTermComplex& t, const TwoTermComplex& u) {
    ModCoords cs(a, t.deg0(), u.deg0());
    ModCoords ct(a, t.degm1(), u.degm1());
    ModCoords cx(a, t.degm1(), u.deg0());
    FMatrix phi = shift_map(a, t, u, cs, ct, cx);
    return static_cast<int>(cx.total - rank(phi));
}

bool is_presilting(const BasedAlgebra& a, const std::vector<TwoTermComplex>& summands) {
    for (const auto& t : summands)
        for (const auto& u : summands)
            if (hom_shift1(a, t, u) != 0) return false;
    return true;
}

bool is_two_term_silting(const BasedAlgebra& a, const std::vector<TwoTermComplex>& summands) {
    if (static_cast<int>(summands.size()) != a.vertices()) return false;
    std::set<std::vector<int>> gs;
    for (const auto& t : summands) gs.insert(g_vector(a, t));
    if (static_cast<int>(gs.size()) != a.vertices()) return false;
    return is_presilting(a, summands);
}

Complex3 as_complex3(const BasedAlgebra& a, const TwoTermComplex& t) {
    Complex3 c;
    c.d1 = t.d;
    c.d2 = alg_zero(a, t.degm1(), {});
    return c;
}

Complex3 cone(const BasedAlgebra& a, const ChainMap& f, const TwoTermComplex& x,
              const TwoTermComplex& z) {
    const uint32_t p = a.prime();
    Complex3 c;
    std::vector<int> mid = x.deg0();
    mid.insert(mid.end(), z.degm1().begin(), z.degm1().end());
    c.d2 = alg_zero(a, mid, x.degm1());
    for (size_t r = 0; r < x.deg0().size(); ++r)
        for (size_t cc = 0; cc < x.degm1().size(); ++cc) {
            auto e = x.d.at(r, cc);
            for (auto& v : e) v = fp_neg(v, p);
            c.d2.at(r, cc) = std::move(e);
        }
    for (size_t r = 0; r < z.degm1().size(); ++r)
        for (size_t cc = 0; cc < x.degm1().size(); ++cc)
            c.d2.at(x.deg0().size() + r, cc) = f.fm1.at(r, cc);
    c.d1 = alg_zero(a, z.deg0(), mid);
    for (size_t r = 0; r < z.deg0().size(); ++r) {
        for (size_t cc = 0; cc < x.deg0().size(); ++cc) c.d1.at(r, cc) = f.f0.at(r, cc);
        for (size_t cc = 0; cc < z.degm1().size(); ++cc)
            c.d1.at(r, x.deg0().size() + cc) = z.d.at(r, cc);
    }
    return c;
}

namespace {

// Inverse of a unit u of the local ring e_v A e_v.
std::vector<fp_t> local_inverse(const BasedAlgebra& a, int v, const std::vector<fp_t>& u) {
    FMatrix op = a.left_mult_op(v, v, u, v);
    std::vector<fp_t> ev(a.peirce_dim(v, v), 0);
    ev[a.pos_in_peirce(a.idempotent(v))] = 1;
    auto x = solve(op, ev);
    if (!x) throw ValidationFailure("local_inverse: element is not a unit");
    return *x;
}

// Cancel the contractible pair (row r, col c) of `d`; `prev` loses row c (it
// maps into the cancelled middle summand) or `next` loses column r.
void schur_cancel(const BasedAlgebra& a, AlgMatrix& d, size_t r, size_t c) {
    const uint32_t p = a.prime();
    const int v = d.rows[r];
    auto uinv = local_inverse(a, v, d.at(r, c));
    for (size_t r2 = 0; r2 < d.rows.size(); ++r2) {
        if (r2 == r) continue;
        const auto& left = d.at(r2, c);
        bool lz = true;
        for (fp_t x : left) lz &= x == 0;
        if (lz) continue;
        auto lu = a.pe_mul(d.rows[r2], v, v, left, uinv);
        for (size_t c2 = 0; c2 < d.cols.size(); ++c2) {
            if (c2 == c) continue;
            auto corr = a.pe_mul(d.rows[r2], v, d.cols[c2], lu, d.at(r, c2));
            auto& dst = d.at(r2, c2);
            for (size_t k = 0; k < dst.size(); ++k) dst[k] = fp_sub(dst[k], corr[k], p);
        }
    }
    d.remove_row(r);
    d.remove_col(c);
}

bool find_unit(const BasedAlgebra& a, const AlgMatrix& d, size_t& r, size_t& c) {
    for (r = 0; r < d.rows.size(); ++r)
        for (c = 0; c < d.cols.size(); ++c)
            if (!entry_is_radical(a, d.rows[r], d.cols[c], d.at(r, c))) return true;
    return false;
}

}  // namespace

void minimize(const BasedAlgebra& a, Complex3& cx) {
    for (;;) {
        size_t r, c;
        if (find_unit(a, cx.d1, r, c)) {
            size_t mid = c;
            schur_cancel(a, cx.d1, r, c);
            cx.d2.remove_row(mid);
            continue;
        }
        if (find_unit(a, cx.d2, r, c)) {
            size_t mid = r;
            schur_cancel(a, cx.d2, r, c);
            cx.d1.remove_col(mid);
            continue;
        }
        break;
    }
}

TwoTermComplex take_two_term(const BasedAlgebra& a, const Complex3& c) {
    if (!c.degm2().empty())
        throw ValidationFailure("take_two_term: degree -2 part is nonzero");
    // canonical summand order: sort by vertex, stable
    std::vector<size_t> rperm(c.deg0().size()), cperm(c.degm1().size());
    std::iota(rperm.begin(), rperm.end(), 0);
    std::iota(cperm.begin(), cperm.end(), 0);
    std::stable_sort(rperm.begin(), rperm.end(),
                     [&](size_t x, size_t y) { return c.deg0()[x] < c.deg0()[y]; });
    std::stable_sort(cperm.begin(), cperm.end(),
                     [&](size_t x, size_t y) { return c.degm1()[x] < c.degm1()[y]; });
    std::vector<int> rows, cols;
    for (size_t r : rperm) rows.push_back(c.deg0()[r]);
    for (size_t cc : cperm) cols.push_back(c.degm1()[cc]);
    AlgMatrix d = alg_zero(a, rows, cols);
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t cc = 0; cc < cols.size(); ++cc) d.at(r, cc) = c.d1.at(rperm[r], cperm[cc]);
    return TwoTermComplex{std::move(d)};
}

}  // namespace siltlab
