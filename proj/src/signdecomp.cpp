#include "siltlab/signdecomp.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "siltlab/catalog.hpp"

namespace siltlab {

std::vector<SignVector> all_sign_vectors(int n) {
    if (n > 20) throw BadParameter("sign decomposition limited to n <= 20");
    std::vector<SignVector> out;
    out.reserve(size_t{1} << n);
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        SignVector s(n, 1);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) s[v] = -1;
        out.push_back(std::move(s));
    }
    return out;
}

BasedAlgebra build_a_epsilon(const BasedAlgebra& a, const SignVector& eps) {
    const int n = a.vertices();
    if (static_cast<int>(eps.size()) != n)
        throw BadParameter("sign vector length does not match the algebra");
    auto sgn = [&](int v) { return eps[v - 1]; };
    std::vector<int> plus, minus;
    for (int v = 1; v <= n; ++v) (sgn(v) > 0 ? plus : minus).push_back(v);

    std::vector<bool> keep(static_cast<size_t>(n) * n, false);
    std::vector<RowSpace> red;
    red.reserve(static_cast<size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            keep[(i - 1) * n + (j - 1)] = !(sgn(i) < 0 && sgn(j) > 0);
            red.emplace_back(a.peirce_dim(i, j), a.prime());
        }

    // J+ on a (+,+) component (i,j): radical x with x * pe(j,l) = 0 for every
    // minus vertex l.  J- on (-,-): radical x with pe(l,i) * x = 0 for every
    // plus vertex l.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (sgn(i) != sgn(j)) continue;
            bool plus_side = sgn(i) > 0;
            const auto& comp = a.peirce(i, j);
            std::vector<int> rad_pos;
            for (int b : comp)
                if (a.basis(b).radical) rad_pos.push_back(a.pos_in_peirce(b));
            if (rad_pos.empty()) continue;
            const std::vector<int>& others = plus_side ? minus : plus;
            size_t rows = 0;
            for (int l : others)
                rows += plus_side ? static_cast<size_t>(a.peirce_dim(j, l)) *
                                        a.peirce_dim(i, l)
                                  : static_cast<size_t>(a.peirce_dim(l, i)) *
                                        a.peirce_dim(l, j);
            FMatrix m(rows, rad_pos.size(), a.prime());
            for (size_t c = 0; c < rad_pos.size(); ++c) {
                std::vector<fp_t> x(comp.size(), 0);
                x[rad_pos[c]] = 1;
                size_t off = 0;
                for (int l : others) {
                    if (plus_side) {
                        for (int k = 0; k < a.peirce_dim(j, l); ++k) {
                            std::vector<fp_t> y(a.peirce_dim(j, l), 0);
                            y[k] = 1;
                            auto prod = a.pe_mul(i, j, l, x, y);
                            for (size_t t = 0; t < prod.size(); ++t) m.at(off++, c) = prod[t];
                        }
                    } else {
                        for (int k = 0; k < a.peirce_dim(l, i); ++k) {
                            std::vector<fp_t> y(a.peirce_dim(l, i), 0);
                            y[k] = 1;
                            auto prod = a.pe_mul(l, i, j, y, x);
                            for (size_t t = 0; t < prod.size(); ++t) m.at(off++, c) = prod[t];
                        }
                    }
                }
            }
            for (const auto& k : kernel_basis(m)) {
                std::vector<fp_t> full(comp.size(), 0);
                for (size_t t = 0; t < rad_pos.size(); ++t) full[rad_pos[t]] = k[t];
                red[(i - 1) * n + (j - 1)].absorb(full);
            }
        }

    std::vector<int> relabel(n + 1);
    for (int v = 1; v <= n; ++v) relabel[v] = v;
    return subquotient(a, keep, red, relabel, n);
}

OrthantCount enumerate_orthant(const BasedAlgebra& a, const SignVector& eps, uint64_t budget) {
    BasedAlgebra aeps = build_a_epsilon(a, eps);
    EnumerationResult r = enumerate_silting(aeps, budget, 1, false);
    OrthantCount out;
    out.eps = eps;
    out.complete = r.complete;
    for (const auto& t : r.totals)
        if (orthant_of(t) == eps) {
            ++out.count;
            out.totals.push_back(t);
        }
    return out;
}

SignDecompReport sign_decomposition_report(const BasedAlgebra& a, uint64_t budget,
                                           int threads) {
    SignDecompReport rep;
    EnumerationResult direct = enumerate_silting(a, budget, std::max(1, threads), false);
    rep.direct_count = direct.objects.size();
    rep.complete = direct.complete;

    auto signs = all_sign_vectors(a.vertices());
    rep.orthants.resize(signs.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= signs.size()) break;
            rep.orthants[i] = enumerate_orthant(a, signs[i], budget);
        }
    };
    int use = std::max(1, threads);
    if (use == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < use; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    for (const auto& o : rep.orthants) {
        rep.sum += o.count;
        rep.complete = rep.complete && o.complete;
    }
    rep.equal = rep.complete && rep.sum == rep.direct_count;
    return rep;
}

TiltingBijectionResult verify_tilting_bijection(const std::string& name_a,
                                                const std::string& name_b,
                                                const std::vector<int>& j_set, uint32_t p,
                                                uint64_t budget) {
    auto [na, pa] = parse_algebra_spec(name_a);
    auto [nb, pb] = parse_algebra_spec(name_b);
    BasedAlgebra a = catalog_get(na, pa, p);
    BasedAlgebra b = catalog_get(nb, pb, p);
    for (int j : j_set)
        if (j < 1 || j > a.vertices() || j > b.vertices())
            throw BadParameter("vertex out of range in J");

    EnumerationResult ra = enumerate_silting(a, budget, 1, false);
    EnumerationResult rb = enumerate_silting(b, budget, 1, false);
    TiltingBijectionResult res;
    res.complete = ra.complete && rb.complete;
    auto restricted = [&](const EnumerationResult& r, int want) {
        uint64_t c = 0;
        for (const auto& t : r.totals) {
            bool ok = true;
            for (int j : j_set) ok = ok && (want > 0 ? t[j - 1] > 0 : t[j - 1] < 0);
            if (ok) ++c;
        }
        return c;
    };
    res.count_a = restricted(ra, -1);
    res.count_b = restricted(rb, +1);
    res.equal = res.complete && res.count_a == res.count_b;
    return res;
}

}  // namespace siltlab
