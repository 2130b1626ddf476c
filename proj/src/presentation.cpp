#include <algorithm>
#include <map>
#include <memory>
#include <sstream>

#include "siltlab/algebra.hpp"

namespace siltlab {

namespace {

struct Path {
    int src, dst, len;
    std::vector<int> arrows;
};

std::string path_name(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) return "e" + std::to_string(p.src);
    std::string s;
    for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += "*";
        s += q.arrows[p.arrows[i]].name;
    }
    return s;
}

struct Term {
    fp_t coeff;
    std::vector<int> arrows;
};

// One attempt at the quotient, with all paths of length >= k0 truncated to
// zero.  Exact for FQ/I whenever some radical power R^l, l < k0, lies in the
// ideal; `zero_level` reports the smallest such l visible in the model.
struct TruncModel {
    std::vector<Path> paths;                 // all paths of length < k0
    std::map<std::vector<int>, int> index;   // arrow word -> path index
    RowSpace ideal;
    int zero_level = -1;

    TruncModel(const Quiver& q, const std::vector<std::vector<Term>>& rels, uint32_t p, int k0)
        : ideal(0, p) {
        for (int v = 1; v <= q.n; ++v) paths.push_back({v, v, 0, {}});
        size_t level_start = 0, level_end = paths.size();
        for (int len = 1; len < k0 && level_start < level_end; ++len) {
            for (size_t i = level_start; i < level_end; ++i)
                for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
                    if (paths[i].dst != q.arrows[ai].from) continue;
                    Path np{paths[i].src, q.arrows[ai].to, len, paths[i].arrows};
                    np.arrows.push_back(static_cast<int>(ai));
                    index.emplace(np.arrows, static_cast<int>(paths.size()));
                    paths.push_back(std::move(np));
                }
            level_start = level_end;
            level_end = paths.size();
            if (paths.size() > 4'000'000)
                throw NotAdmissible("path explosion below the length cap");
        }
        ideal = RowSpace(paths.size(), p);

        // span of the truncated ideal: seed with the relations, close under
        // arrow multiplication on both sides
        std::vector<std::vector<fp_t>> queue;
        auto absorb = [&](std::vector<fp_t> v) {
            if (ideal.absorb(v)) queue.push_back(std::move(v));
        };
        for (const auto& rel : rels) {
            std::vector<fp_t> v(paths.size(), 0);
            for (const Term& t : rel) {
                if (static_cast<int>(t.arrows.size()) >= k0) continue;  // truncated away
                v[index.at(t.arrows)] = fp_add(v[index.at(t.arrows)], t.coeff, p);
            }
            absorb(std::move(v));
        }
        while (!queue.empty()) {
            std::vector<fp_t> v = std::move(queue.back());
            queue.pop_back();
            for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
                std::vector<fp_t> left(paths.size(), 0), right(paths.size(), 0);
                bool lnz = false, rnz = false;
                for (size_t k = 0; k < paths.size(); ++k) {
                    if (v[k] == 0) continue;
                    const Path& w = paths[k];
                    if (w.len + 1 < k0) {
                        if (q.arrows[ai].to == w.src) {
                            std::vector<int> seq;
                            seq.reserve(w.arrows.size() + 1);
                            seq.push_back(static_cast<int>(ai));
                            seq.insert(seq.end(), w.arrows.begin(), w.arrows.end());
                            left[index.at(seq)] = fp_add(left[index.at(seq)], v[k], p);
                            lnz = true;
                        }
                        if (w.dst == q.arrows[ai].from) {
                            std::vector<int> seq = w.arrows;
                            seq.push_back(static_cast<int>(ai));
                            right[index.at(seq)] = fp_add(right[index.at(seq)], v[k], p);
                            rnz = true;
                        }
                    }
                }
                if (lnz) absorb(std::move(left));
                if (rnz) absorb(std::move(right));
            }
        }

        // smallest length level that died entirely (an empty level certifies too)
        std::vector<fp_t> ind(paths.size(), 0);
        for (int l = 1; l < k0 && zero_level < 0; ++l) {
            bool all_zero = true;
            for (size_t k = 0; k < paths.size(); ++k) {
                if (paths[k].len != l) continue;
                ind[k] = 1;
                bool in = ideal.contains(ind);
                ind[k] = 0;
                if (!in) {
                    all_zero = false;
                    break;
                }
            }
            if (all_zero) zero_level = l;
        }
    }
};

}  // namespace

BasedAlgebra algebra_from_presentation(const Quiver& q, const std::vector<Relation>& rels,
                                       uint32_t p, int length_cap) {
    if (q.n < 1) throw BadParameter("quiver needs at least one vertex");
    if (length_cap < 2) throw BadParameter("length_cap must be >= 2");
    std::map<std::string, int> arrow_idx;
    for (size_t i = 0; i < q.arrows.size(); ++i) {
        const Arrow& a = q.arrows[i];
        if (a.from < 1 || a.from > q.n || a.to < 1 || a.to > q.n)
            throw BadParameter("arrow endpoint out of range: " + a.name);
        if (!arrow_idx.emplace(a.name, static_cast<int>(i)).second)
            throw BadParameter("duplicate arrow name: " + a.name);
    }

    std::vector<std::vector<Term>> relations;
    for (const Relation& rel : rels) {
        std::vector<Term> r;
        int rsrc = 0, rdst = 0;
        bool have_first = false;
        for (const PathTerm& t : rel) {
            if (t.arrows.size() < 2)
                throw NotAdmissible("relation term shorter than 2 arrows");
            std::vector<int> idx;
            int at = 0;
            for (size_t k = 0; k < t.arrows.size(); ++k) {
                auto it = arrow_idx.find(t.arrows[k]);
                if (it == arrow_idx.end())
                    throw BadParameter("unknown arrow in relation: " + t.arrows[k]);
                const Arrow& a = q.arrows[it->second];
                if (k == 0)
                    at = a.from;
                else if (at != a.from)
                    throw BadParameter("relation term is not composable at arrow " + t.arrows[k]);
                at = a.to;
                idx.push_back(it->second);
            }
            int src = q.arrows[idx.front()].from;
            if (!have_first) {
                rsrc = src;
                rdst = at;
                have_first = true;
            } else if (src != rsrc || at != rdst) {
                throw BadParameter("relation terms are not parallel");
            }
            fp_t c = fp_of(t.coeff, p);
            if (c != 0) r.push_back({c, std::move(idx)});
        }
        if (!r.empty()) relations.push_back(std::move(r));
    }
    int max_rel_len = 2;
    for (const auto& r : relations)
        for (const auto& t : r) max_rel_len = std::max<int>(max_rel_len, t.arrows.size());
    if (max_rel_len >= length_cap)
        throw NotAdmissible("a relation is as long as the length cap; raise length_cap");

    // grow the truncation until a whole radical power visibly vanishes
    std::vector<int> attempts;
    for (int k0 = std::max(4, max_rel_len + 1); k0 < length_cap; k0 += 2) attempts.push_back(k0);
    attempts.push_back(length_cap);
    std::unique_ptr<TruncModel> model;
    for (int k0 : attempts) {
        model = std::make_unique<TruncModel>(q, relations, p, k0);
        if (model->zero_level >= 0) break;
    }
    if (model->zero_level < 0) {
        std::string witness;
        for (size_t k = model->paths.size(); k-- > 0;) {
            std::vector<fp_t> ind(model->paths.size(), 0);
            ind[k] = 1;
            if (!model->ideal.contains(ind)) {
                witness = path_name(q, model->paths[k]);
                break;
            }
        }
        throw NotAdmissible("no radical power vanishes below the length cap " +
                            std::to_string(length_cap) + "; e.g. " + witness + " survives");
    }

    // basis: idempotents, then surviving paths in generation order
    const auto& paths = model->paths;
    std::vector<int> new_index(paths.size(), -1);
    std::vector<BasedAlgebra::BasisElem> basis;
    std::vector<fp_t> ind(paths.size(), 0);
    for (size_t k = 0; k < paths.size(); ++k) {
        if (paths[k].len == 0) {
            new_index[k] = static_cast<int>(basis.size());
            basis.push_back({paths[k].src, paths[k].dst, false, path_name(q, paths[k])});
            continue;
        }
        if (paths[k].len >= model->zero_level) continue;
        ind[k] = 1;
        auto rem = model->ideal.reduce(ind);
        ind[k] = 0;
        if (rem[k] != 0) {  // k is not a pivot of the ideal: it survives
            new_index[k] = static_cast<int>(basis.size());
            basis.push_back({paths[k].src, paths[k].dst, true, path_name(q, paths[k])});
        }
    }
    const int d = static_cast<int>(basis.size());
    std::vector<int> old_of(d);
    for (size_t k = 0; k < paths.size(); ++k)
        if (new_index[k] >= 0) old_of[new_index[k]] = static_cast<int>(k);

    std::vector<BasedAlgebra::SparseVec> mult(static_cast<size_t>(d) * d);
    for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) {
            const Path& pb = paths[old_of[b]];
            const Path& pc = paths[old_of[c]];
            if (pb.dst != pc.src) continue;
            if (pb.len == 0 && pc.len == 0) {
                mult[b * d + c] = {{b, 1}};
                continue;
            }
            if (pb.len == 0) {
                mult[b * d + c] = {{c, 1}};
                continue;
            }
            if (pc.len == 0) {
                mult[b * d + c] = {{b, 1}};
                continue;
            }
            if (pb.len + pc.len >= model->zero_level) continue;  // zero
            std::vector<int> seq = pb.arrows;
            seq.insert(seq.end(), pc.arrows.begin(), pc.arrows.end());
            std::vector<fp_t> v(paths.size(), 0);
            v[model->index.at(seq)] = 1;
            auto rem = model->ideal.reduce(v);
            BasedAlgebra::SparseVec out;
            for (size_t k = 0; k < rem.size(); ++k)
                if (rem[k] != 0) {
                    if (new_index[k] < 0)
                        throw ValidationFailure("presentation: reduction hit a dead path");
                    out.emplace_back(new_index[k], rem[k]);
                }
            mult[b * d + c] = std::move(out);
        }

    return BasedAlgebra(q.n, p, std::move(basis), std::move(mult));
}

}  // namespace siltlab
