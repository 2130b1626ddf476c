#include "siltlab/search.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <thread>

namespace siltlab {

std::vector<int> orthant_of(const GVec& total) {
    std::vector<int> s(total.size());
    for (size_t i = 0; i < total.size(); ++i) {
        if (total[i] == 0)
            throw ValidationFailure("orthant_of: zero entry in a total g-vector");
        s[i] = total[i] > 0 ? 1 : -1;
    }
    return s;
}

SearchContext::SearchContext(const BasedAlgebra& a, bool validate)
    : a_(a), validate_(validate) {
    for (int v = 1; v <= a.vertices(); ++v) stalks_.push_back(intern(stalk(a, v)));
    for (int v = 1; v <= a.vertices(); ++v) shifts_.push_back(intern(shifted(a, v)));
}

int SearchContext::intern(TwoTermComplex cx) {
    GVec g = g_vector(a_, cx);
    {
        std::scoped_lock lk(mtx_);
        auto it = by_g_.find(g);
        if (it == by_g_.end()) {
            int id = static_cast<int>(summands_.size());
            summands_.push_back(Summand{std::move(cx), std::move(g)});
            by_g_.emplace(summands_.back().g, id);
            return id;
        }
        if (!validate_) return it->second;
    }
    int id;
    TwoTermComplex stored;
    {
        std::scoped_lock lk(mtx_);
        id = by_g_.at(g);
        stored = summands_[id].cx;
    }
    if (!is_homotopy_iso(a_, cx, stored))
        throw ValidationFailure("two non-isomorphic summands share a g-vector");
    return id;
}

std::shared_ptr<const HomSpace> SearchContext::hom(int from, int to) {
    uint64_t key = (uint64_t(uint32_t(from)) << 32) | uint32_t(to);
    {
        std::scoped_lock lk(mtx_);
        auto it = homs_.find(key);
        if (it != homs_.end()) return it->second;
    }
    auto hs = std::make_shared<const HomSpace>(a_, summand(from).cx, summand(to).cx);
    std::scoped_lock lk(mtx_);
    auto [it, fresh] = homs_.emplace(key, std::move(hs));
    (void)fresh;
    return it->second;
}

namespace {

// Composition table of End(X) in class coordinates: t[i][j] = [rep_i o rep_j].
std::vector<std::vector<std::vector<fp_t>>> end_table(const BasedAlgebra& a,
                                                      const HomSpace& end) {
    const int d = end.dim();
    std::vector<std::vector<std::vector<fp_t>>> t(d);
    for (int i = 0; i < d; ++i) {
        t[i].resize(d);
        for (int j = 0; j < d; ++j)
            t[i][j] = end.class_coords(compose(a, end.reps()[i], end.reps()[j]));
    }
    return t;
}

FMatrix left_mult_matrix(const std::vector<std::vector<std::vector<fp_t>>>& t,
                         std::span<const fp_t> x, uint32_t p) {
    const size_t d = t.size();
    FMatrix l(d, d, p);
    for (size_t j = 0; j < d; ++j)
        for (size_t i = 0; i < d; ++i) {
            if (x[i] == 0) continue;
            for (size_t k = 0; k < d; ++k)
                l.at(k, j) = fp_add(l.at(k, j), fp_mul(x[i], t[i][j][k], p), p);
        }
    return l;
}

bool nilpotent(const FMatrix& l) {
    FMatrix b = l;
    size_t e = 1;
    while (e < l.rows()) {
        b = matmul(b, b);
        e *= 2;
    }
    for (size_t r = 0; r < b.rows(); ++r)
        for (size_t c = 0; c < b.cols(); ++c)
            if (b.at(r, c) != 0) return false;
    return true;
}

bool invertible(const FMatrix& l) { return rank(l) == l.rows(); }

}  // namespace

std::shared_ptr<const RadEndData> SearchContext::rad_end(int id) {
    {
        std::scoped_lock lk(mtx_);
        auto it = rads_.find(id);
        if (it != rads_.end()) return it->second;
    }
    auto end = hom(id, id);
    const uint32_t p = a_.prime();
    auto data = std::make_shared<RadEndData>();
    const int d = end->dim();
    if (d > 1) {
        auto table = end_table(a_, *end);
        auto idc = end->class_coords(identity_map(a_, summand(id).cx));
        RowSpace span(d, p);
        for (int i = 0; i < d; ++i) {
            bool found = false;
            for (fp_t c = 0; c < p && !found; ++c) {
                std::vector<fp_t> x(idc.size());
                for (size_t k = 0; k < x.size(); ++k) {
                    x[k] = fp_sub(k == static_cast<size_t>(i) ? 1 : 0, fp_mul(c, idc[k], p), p);
                }
                if (nilpotent(left_mult_matrix(table, x, p))) {
                    found = true;
                    if (span.absorb(x)) data->rad_reps.push_back(end->from_class(x));
                }
            }
            if (!found)
                throw ValidationFailure(
                    "endomorphism ring is not local with prime residue field");
        }
        if (span.rank() != static_cast<size_t>(d - 1))
            throw ValidationFailure("rad End has unexpected dimension");
    }
    std::scoped_lock lk(mtx_);
    auto [it, fresh] = rads_.emplace(id, std::move(data));
    (void)fresh;
    return it->second;
}

bool is_homotopy_iso(const BasedAlgebra& a, const TwoTermComplex& x, const TwoTermComplex& y) {
    if (g_vector(a, x) != g_vector(a, y)) return false;
    HomSpace xy(a, x, y), yx(a, y, x), end(a, x, x);
    if (xy.dim() == 0 || yx.dim() == 0) return false;
    auto table = end_table(a, end);
    for (const ChainMap& f : xy.reps())
        for (const ChainMap& g : yx.reps()) {
            auto cls = end.class_coords(compose(a, g, f));
            if (invertible(left_mult_matrix(table, cls, a.prime()))) return true;
        }
    return false;
}

Approximation minimal_left_approximation(SearchContext& ctx, int x_id,
                                         const std::vector<int>& y_ids) {
    const BasedAlgebra& a = ctx.algebra();
    Approximation ap;
    ap.mult.assign(y_ids.size(), 0);
    std::vector<const ChainMap*> chosen;
    std::vector<int> chosen_y;
    for (size_t j = 0; j < y_ids.size(); ++j) {
        auto hxj = ctx.hom(x_id, y_ids[j]);
        if (hxj->dim() == 0) continue;
        RowSpace rad(hxj->dim(), a.prime());
        for (size_t k = 0; k < y_ids.size(); ++k) {
            auto hxk = ctx.hom(x_id, y_ids[k]);
            if (hxk->dim() == 0) continue;
            if (k == j) {
                auto re = ctx.rad_end(y_ids[j]);
                for (const ChainMap& g : hxk->reps())
                    for (const ChainMap& h : re->rad_reps)
                        rad.absorb(hxj->class_coords(compose(a, h, g)));
            } else {
                auto hkj = ctx.hom(y_ids[k], y_ids[j]);
                for (const ChainMap& g : hxk->reps())
                    for (const ChainMap& h : hkj->reps())
                        rad.absorb(hxj->class_coords(compose(a, h, g)));
            }
        }
        std::vector<fp_t> unit(hxj->dim(), 0);
        for (int t = 0; t < hxj->dim(); ++t) {
            unit[t] = 1;
            if (rad.absorb(unit)) {
                ++ap.mult[j];
                chosen.push_back(&hxj->reps()[t]);
                chosen_y.push_back(y_ids[j]);
            }
            unit[t] = 0;
        }
    }
    // assemble Z and the stacked map
    const TwoTermComplex& x = ctx.summand(x_id).cx;
    std::vector<int> z0, zm1;
    for (int yid : chosen_y) {
        const TwoTermComplex& y = ctx.summand(yid).cx;
        z0.insert(z0.end(), y.deg0().begin(), y.deg0().end());
        zm1.insert(zm1.end(), y.degm1().begin(), y.degm1().end());
    }
    AlgMatrix zd = alg_zero(a, z0, zm1);
    ChainMap f{alg_zero(a, z0, x.deg0()), alg_zero(a, zm1, x.degm1())};
    size_t r0 = 0, rm = 0;
    for (size_t i = 0; i < chosen.size(); ++i) {
        const TwoTermComplex& y = ctx.summand(chosen_y[i]).cx;
        for (size_t r = 0; r < y.deg0().size(); ++r) {
            for (size_t c = 0; c < y.degm1().size(); ++c) zd.at(r0 + r, rm + c) = y.d.at(r, c);
            for (size_t c = 0; c < x.deg0().size(); ++c)
                f.f0.at(r0 + r, c) = chosen[i]->f0.at(r, c);
        }
        for (size_t r = 0; r < y.degm1().size(); ++r)
            for (size_t c = 0; c < x.degm1().size(); ++c)
                f.fm1.at(rm + r, c) = chosen[i]->fm1.at(r, c);
        r0 += y.deg0().size();
        rm += y.degm1().size();
    }
    ap.z = TwoTermComplex{std::move(zd)};
    ap.f = std::move(f);
    return ap;
}

std::optional<std::vector<int>> left_mutation(SearchContext& ctx,
                                              const std::vector<int>& object, int k) {
    std::vector<int> ys;
    ys.reserve(object.size() - 1);
    for (size_t i = 0; i < object.size(); ++i)
        if (static_cast<int>(i) != k) ys.push_back(object[i]);
    Approximation ap = minimal_left_approximation(ctx, object[k], ys);
    Complex3 c = cone(ctx.algebra(), ap.f, ctx.summand(object[k]).cx, ap.z);
    minimize(ctx.algebra(), c);
    if (!c.degm2().empty()) return std::nullopt;
    int ns = ctx.intern(take_two_term(ctx.algebra(), c));
    std::vector<int> child = ys;
    child.push_back(ns);
    std::sort(child.begin(), child.end(), [&](int x, int y) {
        return ctx.summand(x).g < ctx.summand(y).g;
    });
    if (ctx.validating()) {
        std::vector<TwoTermComplex> cs;
        for (int id : child) cs.push_back(ctx.summand(id).cx);
        if (!is_two_term_silting(ctx.algebra(), cs))
            throw ValidationFailure("left mutation produced a non-silting object");
    }
    return child;
}

namespace {
int count_in(const std::vector<std::pair<int, int>>& arrows, int idx) {
    int c = 0;
    for (const auto& [f, t] : arrows)
        if (t == idx) ++c;
    return c;
}
int count_out(const std::vector<std::pair<int, int>>& arrows, int idx) {
    int c = 0;
    for (const auto& [f, t] : arrows)
        if (f == idx) ++c;
    return c;
}
}  // namespace

int EnumerationResult::source_index() const {
    for (size_t i = 0; i < totals.size(); ++i) {
        bool all_pos = true;
        for (int x : totals[i]) all_pos &= x == 1;
        if (all_pos && count_in(arrows, static_cast<int>(i)) == 0) return static_cast<int>(i);
    }
    return -1;
}

long long g_matrix_det_abs(const std::vector<GVec>& rows) {
    const size_t n = rows.size();
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = rows[i][j];
    // fraction-free Gaussian elimination (Bareiss)
    long long prev = 1;
    long long sign = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    long long det = sign * m[n - 1][n - 1];
    return det < 0 ? -det : det;
}

EnumerationResult enumerate_silting(const BasedAlgebra& a, uint64_t budget, int threads,
                                    bool validate, int max_summand_size) {
    SearchContext ctx(a, validate);
    const int n = a.vertices();
    std::vector<int> start;
    for (int v = 1; v <= n; ++v) start.push_back(ctx.stalk_id(v));
    std::sort(start.begin(), start.end(),
              [&](int x, int y) { return ctx.summand(x).g < ctx.summand(y).g; });

    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> objects;
    std::vector<std::pair<int, int>> arrows;
    uint64_t mutations = 0;
    bool complete = true;

    index.emplace(start, 0);
    objects.push_back(start);
    std::vector<int> frontier{0};

    auto oversized = [&](const std::vector<int>& obj) {
        for (int id : obj) {
            const TwoTermComplex& cx = ctx.summand(id).cx;
            if (static_cast<int>(cx.deg0().size() + cx.degm1().size()) > max_summand_size)
                return true;
        }
        return false;
    };

    // Level-synchronous BFS in chunks: workers mutate, the merge runs in a
    // fixed order so budget stops are schedule-independent.
    const size_t chunk = 64;
    while (!frontier.empty() && complete) {
        std::vector<int> next_frontier;
        for (size_t base = 0; base < frontier.size() && complete; base += chunk) {
            size_t count = std::min(chunk, frontier.size() - base);
            std::vector<std::vector<std::optional<std::vector<int>>>> results(
                count, std::vector<std::optional<std::vector<int>>>(n));
            auto work = [&](size_t ci) {
                const auto& obj = objects[frontier[base + ci]];
                for (int k = 0; k < n; ++k) results[ci][k] = left_mutation(ctx, obj, k);
            };
            int nthreads = std::max(1, threads);
            if (nthreads == 1 || count == 1) {
                for (size_t ci = 0; ci < count; ++ci) work(ci);
            } else {
                std::atomic<size_t> next{0};
                std::vector<std::thread> pool;
                size_t use = std::min<size_t>(nthreads, count);
                for (size_t t = 0; t < use; ++t)
                    pool.emplace_back([&] {
                        for (;;) {
                            size_t ci = next.fetch_add(1);
                            if (ci >= count) break;
                            work(ci);
                        }
                    });
                for (auto& th : pool) th.join();
            }
            mutations += count * n;

            for (size_t ci = 0; ci < count && complete; ++ci) {
                for (int k = 0; k < n; ++k) {
                    auto& child = results[ci][k];
                    if (!child) continue;
                    if (oversized(*child)) {  // growth guard, see header
                        complete = false;
                        break;
                    }
                    auto [it, fresh] =
                        index.emplace(*child, static_cast<int>(objects.size()));
                    if (fresh) {
                        if (objects.size() + 1 > budget) {
                            index.erase(it);
                            complete = false;
                            break;
                        }
                        objects.push_back(*child);
                        next_frontier.push_back(it->second);
                    }
                    arrows.emplace_back(frontier[base + ci], it->second);
                }
            }
        }
        frontier = std::move(next_frontier);
    }

    // canonical output order: sort by the matrix of summand g-vectors
    EnumerationResult res;
    res.complete = complete;
    res.mutation_count = mutations;
    std::vector<std::vector<GVec>> keys(objects.size());
    for (size_t i = 0; i < objects.size(); ++i)
        for (int id : objects[i]) keys[i].push_back(ctx.summand(id).g);
    std::vector<int> order(objects.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return keys[x] < keys[y]; });
    std::vector<int> rankof(objects.size());
    for (size_t i = 0; i < order.size(); ++i) rankof[order[i]] = static_cast<int>(i);
    res.objects.resize(objects.size());
    res.totals.resize(objects.size());
    for (size_t i = 0; i < objects.size(); ++i) {
        res.objects[rankof[i]] = keys[i];
        GVec tot(n, 0);
        for (const GVec& g : keys[i])
            for (int v = 0; v < n; ++v) tot[v] += g[v];
        res.totals[rankof[i]] = std::move(tot);
    }
    for (const auto& [f, t] : arrows) res.arrows.emplace_back(rankof[f], rankof[t]);
    std::sort(res.arrows.begin(), res.arrows.end());
    return res;
}

int EnumerationResult::sink_index() const {
    for (size_t i = 0; i < totals.size(); ++i) {
        bool all_neg = true;
        for (int x : totals[i]) all_neg &= x == -1;
        if (all_neg && count_out(arrows, static_cast<int>(i)) == 0) return static_cast<int>(i);
    }
    return -1;
}

}  // namespace siltlab
