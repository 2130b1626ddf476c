#include "siltlab/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace siltlab {

BasedAlgebra::BasedAlgebra(int n, uint32_t p, std::vector<BasisElem> basis,
                           std::vector<SparseVec> mult_table)
    : n_(n), p_(p), basis_(std::move(basis)), mult_(std::move(mult_table)) {
    const int d = dim();
    if (mult_.size() != static_cast<size_t>(d) * d)
        throw ValidationFailure("BasedAlgebra: multiplication table has wrong size");
    idem_.assign(n_, -1);
    peirce_.assign(static_cast<size_t>(n_) * n_, {});
    pos_.assign(d, 0);
    for (int b = 0; b < d; ++b) {
        const BasisElem& e = basis_[b];
        auto& comp = peirce_[(e.src - 1) * n_ + (e.dst - 1)];
        pos_[b] = static_cast<int>(comp.size());
        comp.push_back(b);
        if (!e.radical) {
            if (e.src != e.dst || idem_[e.src - 1] != -1)
                throw ValidationFailure("BasedAlgebra: bad idempotent layout");
            idem_[e.src - 1] = b;
        }
    }
    for (int v = 0; v < n_; ++v)
        if (idem_[v] == -1) throw ValidationFailure("BasedAlgebra: missing idempotent");
}

std::vector<fp_t> BasedAlgebra::multiply(std::span<const fp_t> x, std::span<const fp_t> y) const {
    const int d = dim();
    std::vector<fp_t> out(d, 0);
    for (int b = 0; b < d; ++b) {
        if (x[b] == 0) continue;
        for (int c = 0; c < d; ++c) {
            if (y[c] == 0) continue;
            fp_t f = fp_mul(x[b], y[c], p_);
            for (auto [idx, co] : mult(b, c)) out[idx] = fp_add(out[idx], fp_mul(f, co, p_), p_);
        }
    }
    return out;
}

std::vector<fp_t> BasedAlgebra::unit() const {
    std::vector<fp_t> u(dim(), 0);
    for (int v = 1; v <= n_; ++v) u[idempotent(v)] = 1;
    return u;
}

bool BasedAlgebra::is_central(std::span<const fp_t> x) const {
    const int d = dim();
    std::vector<fp_t> eb(d, 0);
    for (int b = 0; b < d; ++b) {
        eb[b] = 1;
        auto xb = multiply(x, eb);
        auto bx = multiply(eb, x);
        eb[b] = 0;
        if (xb != bx) return false;
    }
    return true;
}

bool BasedAlgebra::in_radical_span(std::span<const fp_t> x) const {
    for (int b = 0; b < dim(); ++b)
        if (x[b] != 0 && !basis_[b].radical) return false;
    return true;
}

std::string BasedAlgebra::print_element(std::span<const fp_t> x) const {
    std::ostringstream os;
    bool first = true;
    for (int b = 0; b < dim(); ++b) {
        if (x[b] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (x[b] != 1) os << x[b] << "*";
        os << basis_[b].name;
    }
    if (first) os << "0";
    return os.str();
}

std::vector<fp_t> BasedAlgebra::from_peirce(int i, int j, std::span<const fp_t> local) const {
    std::vector<fp_t> out(dim(), 0);
    const auto& comp = peirce(i, j);
    assert(local.size() == comp.size());
    for (size_t k = 0; k < comp.size(); ++k) out[comp[k]] = local[k];
    return out;
}

std::vector<fp_t> BasedAlgebra::pe_mul(int x, int y, int z, std::span<const fp_t> a,
                                       std::span<const fp_t> b) const {
    const auto& ca = peirce(x, y);
    const auto& cb = peirce(y, z);
    const auto& cc = peirce(x, z);
    assert(a.size() == ca.size() && b.size() == cb.size());
    std::vector<fp_t> out(cc.size(), 0);
    for (size_t i = 0; i < ca.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < cb.size(); ++j) {
            if (b[j] == 0) continue;
            fp_t f = fp_mul(a[i], b[j], p_);
            for (auto [idx, co] : mult(ca[i], cb[j]))
                out[pos_[idx]] = fp_add(out[pos_[idx]], fp_mul(f, co, p_), p_);
        }
    }
    return out;
}

FMatrix BasedAlgebra::left_mult_op(int x, int y, std::span<const fp_t> m, int z) const {
    const auto& from = peirce(y, z);
    const auto& to = peirce(x, z);
    const auto& cm = peirce(x, y);
    FMatrix op(to.size(), from.size(), p_);
    for (size_t c = 0; c < from.size(); ++c)
        for (size_t i = 0; i < cm.size(); ++i) {
            if (m[i] == 0) continue;
            for (auto [idx, co] : mult(cm[i], from[c]))
                op.at(pos_[idx], c) = fp_add(op.at(pos_[idx], c), fp_mul(m[i], co, p_), p_);
        }
    return op;
}

FMatrix BasedAlgebra::right_mult_op(int z, std::span<const fp_t> m, int x, int y) const {
    const auto& from = peirce(z, x);
    const auto& to = peirce(z, y);
    const auto& cm = peirce(x, y);
    FMatrix op(to.size(), from.size(), p_);
    for (size_t c = 0; c < from.size(); ++c)
        for (size_t i = 0; i < cm.size(); ++i) {
            if (m[i] == 0) continue;
            for (auto [idx, co] : mult(from[c], cm[i]))
                op.at(pos_[idx], c) = fp_add(op.at(pos_[idx], c), fp_mul(m[i], co, p_), p_);
        }
    return op;
}

std::vector<std::vector<int>> cartan_matrix(const BasedAlgebra& a) {
    std::vector<std::vector<int>> c(a.vertices(), std::vector<int>(a.vertices(), 0));
    for (int i = 1; i <= a.vertices(); ++i)
        for (int j = 1; j <= a.vertices(); ++j) c[i - 1][j - 1] = a.peirce_dim(i, j);
    return c;
}

int algebra_dim_from_cartan(const std::vector<std::vector<int>>& c) {
    int s = 0;
    for (const auto& row : c)
        for (int x : row) s += x;
    return s;
}

BasedAlgebra opposite(const BasedAlgebra& a) {
    std::vector<BasedAlgebra::BasisElem> basis;
    basis.reserve(a.dim());
    for (int b = 0; b < a.dim(); ++b) {
        auto e = a.basis(b);
        std::swap(e.src, e.dst);
        basis.push_back(std::move(e));
    }
    std::vector<BasedAlgebra::SparseVec> mult(static_cast<size_t>(a.dim()) * a.dim());
    for (int b = 0; b < a.dim(); ++b)
        for (int c = 0; c < a.dim(); ++c) mult[b * a.dim() + c] = a.mult(c, b);
    return BasedAlgebra(a.vertices(), a.prime(), std::move(basis), std::move(mult));
}

// `keep[(i-1)*n+(j-1)]` marks kept components, `red` holds the reducers, and
// `relabel[v]` gives the new label of vertex v (0 = dropped).
BasedAlgebra subquotient(const BasedAlgebra& a, const std::vector<bool>& keep,
                         std::vector<RowSpace>& red, const std::vector<int>& relabel,
                         int new_n) {
    const int n = a.vertices();
    const int d = a.dim();
    auto comp_of = [&](int b) {
        return (a.basis(b).src - 1) * n + (a.basis(b).dst - 1);
    };
    // surviving basis elements: kept components, not reachable from the reducer pivots
    std::vector<int> new_index(d, -1);
    std::vector<BasedAlgebra::BasisElem> basis;
    for (int b = 0; b < d; ++b) {
        int cp = comp_of(b);
        if (!keep[cp]) continue;
        std::vector<fp_t> ind(a.peirce_dim(a.basis(b).src, a.basis(b).dst), 0);
        ind[a.pos_in_peirce(b)] = 1;
        if (!red[cp].contains(ind)) {
            auto rem = red[cp].reduce(ind);
            // b survives iff its own coordinate survives the reduction, i.e. b
            // is not a pivot; a pivot reduces to a combination of non-pivots.
            if (rem[a.pos_in_peirce(b)] != 0) {
                new_index[b] = static_cast<int>(basis.size());
                auto e = a.basis(b);
                e.src = relabel[e.src];
                e.dst = relabel[e.dst];
                basis.push_back(std::move(e));
            }
        }
    }
    const int nd = static_cast<int>(basis.size());
    std::vector<int> old_of(nd);
    for (int b = 0; b < d; ++b)
        if (new_index[b] >= 0) old_of[new_index[b]] = b;

    auto reduce_to_new = [&](int src, int dst, std::vector<fp_t> local) {
        BasedAlgebra::SparseVec out;
        int cp = (src - 1) * n + (dst - 1);
        if (!keep[cp]) return out;
        auto rem = red[cp].reduce(local);
        const auto& comp = a.peirce(src, dst);
        for (size_t k = 0; k < comp.size(); ++k)
            if (rem[k] != 0) {
                int nb = new_index[comp[k]];
                if (nb < 0) throw ValidationFailure("subquotient: reduction hit a pivot");
                out.emplace_back(nb, rem[k]);
            }
        return out;
    };

    std::vector<BasedAlgebra::SparseVec> mult(static_cast<size_t>(nd) * nd);
    for (int b = 0; b < nd; ++b)
        for (int c = 0; c < nd; ++c) {
            int ob = old_of[b], oc = old_of[c];
            const auto& eb = a.basis(ob);
            const auto& ec = a.basis(oc);
            if (eb.dst != ec.src) continue;
            std::vector<fp_t> bl(a.peirce_dim(eb.src, eb.dst), 0);
            bl[a.pos_in_peirce(ob)] = 1;
            std::vector<fp_t> cl(a.peirce_dim(ec.src, ec.dst), 0);
            cl[a.pos_in_peirce(oc)] = 1;
            auto prod = a.pe_mul(eb.src, eb.dst, ec.dst, bl, cl);
            mult[b * nd + c] = reduce_to_new(eb.src, ec.dst, std::move(prod));
        }
    return BasedAlgebra(new_n, a.prime(), std::move(basis), std::move(mult));
}

BasedAlgebra quotient_central(const BasedAlgebra& a,
                              const std::vector<std::vector<fp_t>>& gens) {
    const int n = a.vertices();
    const int d = a.dim();
    for (size_t g = 0; g < gens.size(); ++g) {
        if (!a.in_radical_span(gens[g]))
            throw NotInRadical("quotient_central: generator " + std::to_string(g + 1) + " = " +
                               a.print_element(gens[g]) + " is not in the radical");
        if (!a.is_central(gens[g]))
            throw NotCentral("quotient_central: generator " + std::to_string(g + 1) + " = " +
                             a.print_element(gens[g]) + " is not central");
    }
    // two-sided closure of the generators
    RowSpace seen(d, a.prime());
    std::vector<std::vector<fp_t>> span_set;
    std::vector<std::vector<fp_t>> queue;
    for (const auto& g : gens)
        if (seen.absorb(g)) {
            span_set.push_back(g);
            queue.push_back(g);
        }
    std::vector<fp_t> eb(d, 0);
    while (!queue.empty()) {
        auto v = std::move(queue.back());
        queue.pop_back();
        for (int b = 0; b < d; ++b) {
            eb[b] = 1;
            auto l = a.multiply(eb, v);
            auto r = a.multiply(v, eb);
            eb[b] = 0;
            if (seen.absorb(l)) {
                span_set.push_back(l);
                queue.push_back(std::move(l));
            }
            if (seen.absorb(r)) {
                span_set.push_back(r);
                queue.push_back(std::move(r));
            }
        }
    }
    // split into Peirce components (the ideal is e_i-bi-invariant)
    std::vector<RowSpace> red;
    red.reserve(static_cast<size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) red.emplace_back(a.peirce_dim(i, j), a.prime());
    for (const auto& v : span_set)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                const auto& comp = a.peirce(i, j);
                std::vector<fp_t> local(comp.size(), 0);
                bool nz = false;
                for (size_t k = 0; k < comp.size(); ++k) {
                    local[k] = v[comp[k]];
                    nz = nz || local[k] != 0;
                }
                if (nz) red[(i - 1) * n + (j - 1)].absorb(local);
            }
    std::vector<bool> keep(static_cast<size_t>(n) * n, true);
    std::vector<int> relabel(n + 1);
    for (int v = 1; v <= n; ++v) relabel[v] = v;
    return subquotient(a, keep, red, relabel, n);
}

BasedAlgebra idempotent_truncation(const BasedAlgebra& a, const std::vector<int>& verts) {
    if (verts.empty()) throw BadParameter("idempotent_truncation: empty vertex set");
    const int n = a.vertices();
    std::vector<int> relabel(n + 1, 0);
    for (size_t k = 0; k < verts.size(); ++k) {
        if (verts[k] < 1 || verts[k] > n || relabel[verts[k]] != 0)
            throw BadParameter("idempotent_truncation: bad vertex set");
        relabel[verts[k]] = static_cast<int>(k) + 1;
    }
    std::vector<bool> keep(static_cast<size_t>(n) * n, false);
    std::vector<RowSpace> red;
    red.reserve(static_cast<size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            keep[(i - 1) * n + (j - 1)] = relabel[i] != 0 && relabel[j] != 0;
            red.emplace_back(a.peirce_dim(i, j), a.prime());
        }
    return subquotient(a, keep, red, relabel, static_cast<int>(verts.size()));
}

bool radical_power_zero(const BasedAlgebra& a, int k) {
    if (k < 1) throw BadParameter("radical_power_zero: k must be >= 1");
    const int d = a.dim();
    std::vector<int> rad;
    for (int b = 0; b < d; ++b)
        if (a.basis(b).radical) rad.push_back(b);
    // span of products of t radical basis elements
    std::vector<std::vector<fp_t>> cur;
    for (int b : rad) {
        std::vector<fp_t> v(d, 0);
        v[b] = 1;
        cur.push_back(std::move(v));
    }
    for (int t = 1; t < k && !cur.empty(); ++t) {
        RowSpace next(d, a.prime());
        std::vector<std::vector<fp_t>> nxt;
        std::vector<fp_t> eb(d, 0);
        for (const auto& v : cur)
            for (int b : rad) {
                eb[b] = 1;
                auto w = a.multiply(v, eb);
                eb[b] = 0;
                if (next.absorb(w)) nxt.push_back(std::move(w));
            }
        cur = std::move(nxt);
    }
    return cur.empty();
}

bool detect_tau_infinite_square(const Quiver& q) {
    const int n = q.n;
    std::vector<bool> arrow(static_cast<size_t>(n) * n, false);
    for (const auto& a : q.arrows)
        if (a.from != a.to) arrow[(a.from - 1) * n + (a.to - 1)] = true;
    auto both = [&](int i, int j) {
        return arrow[(i - 1) * n + (j - 1)] && arrow[(j - 1) * n + (i - 1)];
    };
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            if (b == a || !both(a, b)) continue;
            for (int c = 1; c <= n; ++c) {
                if (c == a || c == b || !both(b, c)) continue;
                for (int dv = 1; dv <= n; ++dv) {
                    if (dv == a || dv == b || dv == c) continue;
                    if (both(c, dv) && both(dv, a)) return true;
                }
            }
        }
    return false;
}

}  // namespace siltlab
