#pragma once

// Test-only oracle: homotopy-class dimensions between arbitrary bounded
// complexes of projectives, computed directly from the definition.  Kept
// independent of the production two-term implementation on purpose.

#include <map>

#include "siltlab/complex.hpp"

namespace oracle {

using namespace siltlab;

struct GenComplex {
    // degree -> projective summand vertices; differential deg -> deg+1
    std::map<int, std::vector<int>> comp;
    std::map<int, AlgMatrix> diff;  // keyed by source degree

    const std::vector<int>& at(int k) const {
        static const std::vector<int> none;
        auto it = comp.find(k);
        return it == comp.end() ? none : it->second;
    }
};

inline GenComplex from_two_term(const BasedAlgebra& a, const TwoTermComplex& t) {
    GenComplex c;
    if (!t.degm1().empty()) c.comp[-1] = t.degm1();
    if (!t.deg0().empty()) c.comp[0] = t.deg0();
    if (!t.degm1().empty() && !t.deg0().empty()) c.diff[-1] = t.d;
    (void)a;
    return c;
}

inline GenComplex shift(const BasedAlgebra& a, GenComplex c, int s) {
    GenComplex out;
    for (auto& [k, v] : c.comp) out.comp[k - s] = std::move(v);
    for (auto& [k, m] : c.diff) {
        if (s % 2 != 0)
            for (auto& e : m.ent)
                for (auto& x : e) x = fp_neg(x, a.prime());
        out.diff[k - s] = std::move(m);
    }
    return out;
}

// dim Hom_{K^b(proj A)}(T, U) from the definition: chain maps in all common
// degrees, modulo homotopies in all degrees.
inline int hom_dim(const BasedAlgebra& a, const GenComplex& t, const GenComplex& u) {
    const uint32_t p = a.prime();
    int lo = 1000, hi = -1000;
    for (auto& [k, v] : t.comp) lo = std::min(lo, k), hi = std::max(hi, k);
    for (auto& [k, v] : u.comp) lo = std::min(lo, k), hi = std::max(hi, k);
    if (hi < lo) return 0;

    auto pair_dim = [&](const std::vector<int>& from, const std::vector<int>& to) {
        size_t d = 0;
        for (int r : to)
            for (int c : from) d += a.peirce_dim(r, c);
        return d;
    };
    // coordinates of the chain-map space and the homotopy space
    std::map<int, size_t> f_off, s_off;
    size_t f_total = 0, s_total = 0;
    for (int k = lo; k <= hi; ++k) {
        f_off[k] = f_total;
        f_total += pair_dim(t.at(k), u.at(k));
        s_off[k] = s_total;
        s_total += pair_dim(t.at(k), u.at(k - 1));
    }

    auto diff_of = [&](const GenComplex& c, int k) -> const AlgMatrix* {
        auto it = c.diff.find(k);
        return it == c.diff.end() ? nullptr : &it->second;
    };
    // block fill: op maps pe(vfrom_c, x) -> pe(vto_r, x) style pieces handled
    // through left/right multiplication operators
    auto add_blocks = [&](FMatrix& big, size_t row_base, size_t col_base,
                          const std::vector<int>& from, const std::vector<int>& mid_from,
                          const std::vector<int>& mid_to, const std::vector<int>& to,
                          const AlgMatrix* pre, const AlgMatrix* post, bool neg) {
        // contribution of g |-> post . g . pre, g in Hom(mid_from-sum, mid_to-sum)
        // laid out in Hom(from-sum, to-sum)
        std::vector<size_t> g_off(mid_to.size() * mid_from.size() + 1, 0);
        size_t acc = 0;
        for (size_t r = 0; r < mid_to.size(); ++r)
            for (size_t c = 0; c < mid_from.size(); ++c) {
                g_off[r * mid_from.size() + c] = acc;
                acc += a.peirce_dim(mid_to[r], mid_from[c]);
            }
        std::vector<size_t> h_off(to.size() * from.size() + 1, 0);
        acc = 0;
        for (size_t r = 0; r < to.size(); ++r)
            for (size_t c = 0; c < from.size(); ++c) {
                h_off[r * from.size() + c] = acc;
                acc += a.peirce_dim(to[r], from[c]);
            }
        // basis element of the g-space: position (rg, cg, idx)
        for (size_t rg = 0; rg < mid_to.size(); ++rg)
            for (size_t cg = 0; cg < mid_from.size(); ++cg) {
                int pd = a.peirce_dim(mid_to[rg], mid_from[cg]);
                for (int idx = 0; idx < pd; ++idx) {
                    std::vector<fp_t> unit(pd, 0);
                    unit[idx] = 1;
                    // post . unit . pre lands in blocks (rh, ch)
                    for (size_t rh = 0; rh < to.size(); ++rh) {
                        std::vector<fp_t> lm;
                        if (post) {
                            lm = a.pe_mul(to[rh], mid_to[rg], mid_from[cg],
                                          post->at(rh, rg), unit);
                        } else {
                            if (rh != rg) continue;
                            lm = unit;
                        }
                        for (size_t ch = 0; ch < from.size(); ++ch) {
                            std::vector<fp_t> full;
                            if (pre) {
                                full = a.pe_mul(to[rh], mid_from[cg], from[ch], lm,
                                                pre->at(cg, ch));
                            } else {
                                if (ch != cg) continue;
                                full = lm;
                            }
                            size_t ro = row_base + h_off[rh * from.size() + ch];
                            size_t co = col_base + g_off[rg * mid_from.size() + cg] + idx;
                            for (size_t i = 0; i < full.size(); ++i) {
                                fp_t v = neg ? fp_neg(full[i], p) : full[i];
                                big.at(ro + i, co) = fp_add(big.at(ro + i, co), v, p);
                            }
                        }
                    }
                }
            }
    };

    // chain-map condition in Hom(T^k, U^{k+1}): d_U f^k - f^{k+1} d_T = 0
    std::map<int, size_t> c_off;
    size_t c_total = 0;
    for (int k = lo; k <= hi; ++k) {
        c_off[k] = c_total;
        c_total += pair_dim(t.at(k), u.at(k + 1));
    }
    FMatrix l(c_total, f_total, p);
    for (int k = lo; k <= hi; ++k) {
        if (const AlgMatrix* du = diff_of(u, k))
            add_blocks(l, c_off[k], f_off[k], t.at(k), t.at(k), u.at(k), u.at(k + 1), nullptr,
                       du, false);
        if (const AlgMatrix* dt = diff_of(t, k))
            add_blocks(l, c_off[k], f_off[k + 1], t.at(k), t.at(k + 1), u.at(k + 1),
                       u.at(k + 1), dt, nullptr, true);
    }
    FMatrix h(f_total, s_total, p);
    for (int k = lo; k <= hi; ++k) {
        if (const AlgMatrix* du = diff_of(u, k - 1))
            add_blocks(h, f_off[k], s_off[k], t.at(k), t.at(k), u.at(k - 1), u.at(k), nullptr,
                       du, false);
        if (const AlgMatrix* dt = diff_of(t, k))
            add_blocks(h, f_off[k], s_off[k + 1], t.at(k), t.at(k + 1), u.at(k), u.at(k), dt,
                       nullptr, false);
    }
    size_t ker = f_total - rank(l);
    return static_cast<int>(ker - rank(h));
}

inline int hom_dim_shift(const BasedAlgebra& a, const TwoTermComplex& t,
                         const TwoTermComplex& u, int s) {
    return hom_dim(a, from_two_term(a, t), shift(a, from_two_term(a, u), s));
}

}  // namespace oracle
