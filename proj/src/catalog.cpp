#include "siltlab/catalog.hpp"

#include <algorithm>
#include <map>

namespace siltlab {

namespace {

std::string nm(const char* base, int i) { return base + std::to_string(i); }

Relation mono(std::vector<std::string> path) {
    Relation r;
    r.push_back({1, std::move(path)});
    return r;
}

Relation bino(std::vector<std::string> lhs, std::vector<std::string> rhs) {
    Relation r;
    r.push_back({1, std::move(lhs)});
    r.push_back({-1, std::move(rhs)});
    return r;
}

// 1 <-> 2 <-> ... <-> m with a_i : i -> i+1 and b_i : i+1 -> i.
Quiver double_path(int m) {
    Quiver q{m, {}};
    for (int i = 1; i < m; ++i) {
        q.arrows.push_back({nm("a", i), i, i + 1});
        q.arrows.push_back({nm("b", i), i + 1, i});
    }
    return q;
}

Presentation pres_A(int m) {
    Presentation pr{double_path(m), {}};
    pr.rels.push_back(mono({"a1", "b1"}));
    for (int i = 1; i <= m - 2; ++i) {
        pr.rels.push_back(mono({nm("a", i), nm("a", i + 1)}));
        pr.rels.push_back(mono({nm("b", i + 1), nm("b", i)}));
        pr.rels.push_back(bino({nm("b", i), nm("a", i)}, {nm("a", i + 1), nm("b", i + 1)}));
    }
    return pr;
}

Presentation pres_K4() {
    Presentation pr{double_path(4), {}};
    pr.rels.push_back(mono({"a1", "b1"}));
    pr.rels.push_back(mono({"a2", "b2"}));
    pr.rels.push_back(mono({"b3", "a3"}));
    pr.rels.push_back(mono({"a1", "a2", "a3"}));
    pr.rels.push_back(mono({"b3", "b2", "b1"}));
    pr.rels.push_back(bino({"b1", "a1", "a2"}, {"a2", "a3", "b3"}));
    pr.rels.push_back(bino({"b2", "b1", "a1"}, {"a3", "b3", "b2"}));
    return pr;
}

Presentation pres_M4() {
    Quiver q{4,
             {{"a1", 1, 2},
              {"b1", 2, 1},
              {"a2", 2, 3},
              {"b2", 3, 2},
              {"a3", 2, 4},
              {"b3", 4, 2}}};
    Presentation pr{std::move(q), {}};
    pr.rels.push_back(mono({"a1", "b1"}));
    pr.rels.push_back(mono({"b3", "a3"}));
    pr.rels.push_back(mono({"a1", "a2"}));
    pr.rels.push_back(mono({"b2", "b1"}));
    pr.rels.push_back(mono({"a1", "a3", "b3"}));
    pr.rels.push_back(mono({"a3", "b3", "b1"}));
    pr.rels.push_back(bino({"b1", "a1"}, {"a2", "b2"}));
    return pr;
}

Presentation pres_L5() {
    Quiver q{5,
             {{"a1", 1, 2},
              {"b1", 2, 1},
              {"a2", 2, 4},
              {"b2", 4, 2},
              {"a3", 4, 5},
              {"b3", 5, 4},
              {"a4", 2, 3},
              {"b4", 3, 2}}};
    Presentation pr{std::move(q), {}};
    pr.rels.push_back(mono({"a1", "b1"}));
    pr.rels.push_back(mono({"a1", "a4"}));
    pr.rels.push_back(mono({"b3", "a3"}));
    pr.rels.push_back(mono({"b2", "a2"}));
    pr.rels.push_back(mono({"b4", "a4"}));
    pr.rels.push_back(mono({"b4", "b1"}));
    pr.rels.push_back(mono({"b4", "a2", "b2"}));
    pr.rels.push_back(mono({"a1", "a2", "a3"}));
    pr.rels.push_back(mono({"a2", "b2", "a4"}));
    pr.rels.push_back(mono({"b3", "b2", "b1"}));
    pr.rels.push_back(bino({"b1", "a1", "a2"}, {"a2", "a3", "b3"}));
    pr.rels.push_back(bino({"b2", "b1", "a1"}, {"a3", "b3", "b2"}));
    pr.rels.push_back(bino({"a2", "b2", "b1", "a1"}, {"b1", "a1", "a2", "b2"}));
    return pr;
}

Presentation pres_N5() {
    Presentation pr{double_path(5), {}};
    pr.rels.push_back(mono({"a1", "b1"}));
    pr.rels.push_back(mono({"a2", "b2"}));
    pr.rels.push_back(mono({"a3", "b3"}));
    pr.rels.push_back(mono({"b4", "a4"}));
    pr.rels.push_back(mono({"a1", "a2", "a3", "a4"}));
    pr.rels.push_back(mono({"b4", "b3", "b2", "b1"}));
    pr.rels.push_back(bino({"b2", "a2"}, {"a3", "a4", "b4", "b3"}));
    pr.rels.push_back(bino({"a2", "a3", "a4", "b4"}, {"b1", "a1", "a2", "a3"}));
    pr.rels.push_back(bino({"b3", "b2", "b1", "a1"}, {"a4", "b4", "b3", "b2"}));
    return pr;
}

// Shared quiver of D_m, Dprime_m and B_m: vertices 1 and 2 hang off 3, then a
// double path 3 <-> 4 <-> ... <-> m with arrows m_i, n_i.
Quiver quiver_D(int m, bool with_a3b3) {
    Quiver q{m, {}};
    q.arrows.push_back({"a1", 1, 3});
    q.arrows.push_back({"b1", 3, 1});
    q.arrows.push_back({"a2", 2, 3});
    q.arrows.push_back({"b2", 3, 2});
    if (with_a3b3) {
        q.arrows.push_back({"a3", 1, 2});
        q.arrows.push_back({"b3", 2, 1});
    }
    for (int i = 3; i < m; ++i) {
        q.arrows.push_back({nm("m", i), i, i + 1});
        q.arrows.push_back({nm("n", i), i + 1, i});
    }
    return q;
}

void chain_relations(Presentation& pr, int m) {
    for (int i = 3; i <= m - 2; ++i) {
        pr.rels.push_back(mono({nm("m", i), nm("m", i + 1)}));
        pr.rels.push_back(mono({nm("n", i + 1), nm("n", i)}));
        pr.rels.push_back(bino({nm("n", i), nm("m", i)}, {nm("m", i + 1), nm("n", i + 1)}));
    }
}

Presentation pres_D(int m) {
    Presentation pr{quiver_D(m, false), {}};
    pr.rels.push_back(mono({"a2", "b2"}));
    pr.rels.push_back(mono({"a1", "b1"}));
    pr.rels.push_back(mono({"a2", "b1", "a1"}));
    pr.rels.push_back(mono({"b1", "a1", "b2"}));
    if (m >= 4) {
        pr.rels.push_back(mono({"a2", "m3"}));
        pr.rels.push_back(mono({"a1", "m3"}));
        pr.rels.push_back(mono({"n3", "b2"}));
        pr.rels.push_back(mono({"n3", "b1"}));
        pr.rels.push_back(bino({"m3", "n3"}, {"b1", "a1"}));
    }
    chain_relations(pr, m);
    return pr;
}

Presentation pres_Dprime(int m) {
    Presentation pr{quiver_D(m, false), {}};
    pr.rels.push_back(mono({"a2", "b2"}));
    pr.rels.push_back(mono({"a1", "b1"}));
    pr.rels.push_back(mono({"b1", "a1"}));
    pr.rels.push_back(mono({"a1", "b2", "a2", "b1"}));
    if (m >= 4) {
        pr.rels.push_back(mono({"a2", "m3"}));
        pr.rels.push_back(mono({"a1", "m3"}));
        pr.rels.push_back(mono({"n3", "b2"}));
        pr.rels.push_back(mono({"n3", "b1"}));
        pr.rels.push_back(mono({"m3", "n3"}));
        pr.rels.push_back(mono({nm("n", m - 1), nm("m", m - 1)}));
        for (int i = 3; i <= m - 2; ++i) {
            pr.rels.push_back(mono({nm("m", i), nm("m", i + 1)}));
            pr.rels.push_back(mono({nm("n", i + 1), nm("n", i)}));
            pr.rels.push_back(mono({nm("n", i), nm("m", i)}));
            pr.rels.push_back(mono({nm("m", i + 1), nm("n", i + 1)}));
        }
    }
    return pr;
}

Presentation pres_B(int m) {
    Presentation pr{quiver_D(m, false), {}};
    pr.rels.push_back(mono({"a2", "b2"}));
    pr.rels.push_back(mono({"a1", "b1"}));
    pr.rels.push_back(mono({"a2", "b1", "a1", "b2", "a2"}));
    pr.rels.push_back(mono({"a1", "b2", "a2", "b1", "a1"}));
    if (m >= 4) {
        pr.rels.push_back(mono({"a2", "m3"}));
        pr.rels.push_back(mono({"a1", "m3"}));
        pr.rels.push_back(mono({"n3", "b2"}));
        pr.rels.push_back(mono({"n3", "b1"}));
        pr.rels.push_back(bino({"m3", "n3"}, {"b1", "a1", "b2", "a2"}));
        pr.rels.push_back(bino({"m3", "n3"}, {"b2", "a2", "b1", "a1"}));
    } else {
        pr.rels.push_back(bino({"b1", "a1", "b2", "a2"}, {"b2", "a2", "b1", "a1"}));
    }
    chain_relations(pr, m);
    return pr;
}

Presentation pres_muJ_B(int m) {
    Presentation pr{quiver_D(m, true), {}};
    pr.rels.push_back(mono({"b1", "a3"}));
    pr.rels.push_back(mono({"a3", "a2"}));
    pr.rels.push_back(mono({"a2", "b1"}));
    pr.rels.push_back(mono({"a1", "b2"}));
    pr.rels.push_back(mono({"b2", "b3"}));
    pr.rels.push_back(mono({"b3", "a1"}));
    pr.rels.push_back(bino({"a1", "b1"}, {"a3", "b3"}));
    pr.rels.push_back(bino({"a2", "b2"}, {"b3", "a3"}));
    pr.rels.push_back(bino({"b2", "a2"}, {"b1", "a1"}));
    if (m >= 4) {
        pr.rels.push_back(mono({"a2", "m3"}));
        pr.rels.push_back(mono({"a1", "m3"}));
        pr.rels.push_back(mono({"n3", "b1"}));
        pr.rels.push_back(mono({"n3", "b2"}));
        pr.rels.push_back(bino({"b1", "a1"}, {"m3", "n3"}));
    }
    chain_relations(pr, m);
    return pr;
}

Presentation pres_U4() {
    Presentation pr{double_path(4), {}};
    pr.rels.push_back(mono({"a1", "b1"}));
    pr.rels.push_back(mono({"a2", "b2"}));
    pr.rels.push_back(mono({"a1", "a2", "a3"}));
    pr.rels.push_back(mono({"b3", "b2", "b1"}));
    pr.rels.push_back(bino({"a3", "b3"}, {"b2", "a2"}));
    return pr;
}

Presentation pres_R4() {
    Presentation pr{double_path(4), {}};
    pr.rels.push_back(mono({"a1", "b1"}));
    pr.rels.push_back(mono({"a1", "a2"}));
    pr.rels.push_back(mono({"b2", "b1"}));
    pr.rels.push_back(bino({"a2", "b2"}, {"b1", "a1"}));
    pr.rels.push_back(bino({"a3", "b3"}, {"b2", "a2"}));
    return pr;
}

Presentation pres_H4() {
    Quiver q{4,
             {{"a1", 1, 2},
              {"b1", 2, 1},
              {"b2", 2, 3},
              {"a2", 3, 2},
              {"a3", 2, 4},
              {"b3", 4, 2}}};
    Presentation pr{std::move(q), {}};
    pr.rels.push_back(mono({"a1", "b1"}));
    pr.rels.push_back(mono({"a1", "b2"}));
    pr.rels.push_back(mono({"a2", "b1"}));
    pr.rels.push_back(mono({"a2", "b2"}));
    pr.rels.push_back(mono({"a1", "a3"}));
    pr.rels.push_back(mono({"b3", "b1"}));
    Relation r;
    r.push_back({1, {"a3", "b3"}});
    r.push_back({-1, {"b1", "a1"}});
    r.push_back({-1, {"b2", "a2"}});
    pr.rels.push_back(std::move(r));
    return pr;
}

Presentation pres_example23() {
    Quiver q{2, {{"a", 1, 2}, {"b", 2, 1}}};
    Presentation pr{std::move(q), {}};
    pr.rels.push_back(mono({"a", "b"}));
    pr.rels.push_back(mono({"b", "a"}));
    return pr;
}

Presentation pres_gentleN5() {
    Quiver q{3, {{"al", 1, 1}, {"c", 1, 2}, {"be", 3, 3}, {"d", 3, 2}}};
    Presentation pr{std::move(q), {}};
    pr.rels.push_back(mono({"al", "al"}));
    pr.rels.push_back(mono({"be", "be"}));
    return pr;
}

Presentation pres_pathA3() {
    Quiver q{3, {{"a", 2, 1}, {"b", 2, 3}}};
    return Presentation{std::move(q), {}};
}

Presentation pres_muJ_pathA3() {
    Quiver q{3, {{"a", 1, 2}, {"b", 3, 2}}};
    return Presentation{std::move(q), {}};
}

const std::map<int, uint64_t> kDCounts = {{3, 28},    {4, 114},   {5, 456},   {6, 1816},
                                          {7, 4012},  {8, 13238}, {9, 45238}, {10, 151568}};

}  // namespace

uint64_t binomial_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    // Pascal row, exact in 64 bits for everything in scope
    std::vector<uint64_t> row(k + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
    return row[k];
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = {
        {"A", true, 2, 2, true, "double path on m vertices, count C(2m,m)"},
        {"K4", false, 0, 2, true, "wild 4-simple block, count 136"},
        {"M4", false, 0, 2, true, "wild 4-simple block, count 152"},
        {"L5", false, 0, 2, true, "wild 5-simple block, count 1656"},
        {"N5", false, 0, 2, false, "wild 5-simple block, infinitely many 2-silt"},
        {"D", true, 3, 2, true, "double path with a doubled end vertex"},
        {"Dprime", true, 3, 2, true, "central quotient of D"},
        {"B", true, 3, 2, true, "symmetric algebra over Dprime"},
        {"muJ_B", true, 3, 2, true, "tilting mutation of B at odd vertices in [3,m]"},
        {"U4", false, 0, 2, true, "4-simple block, count 136"},
        {"R4", false, 0, 3, true, "4-simple block, count 88"},
        {"H4", false, 0, 3, true, "4-simple block, count 96"},
        {"example23", false, 0, 2, true, "2-cycle with both length-2 paths zero"},
        {"gentleN5", false, 0, 2, false, "gentle quotient of a truncation of N5"},
        {"pathA3", false, 0, 2, true, "path algebra of 1 <- 2 -> 3"},
        {"muJ_pathA3", false, 0, 2, true, "path algebra of 1 -> 2 <- 3"},
    };
    return entries;
}

Presentation catalog_presentation(const std::string& name, int param) {
    const CatalogEntry* e = nullptr;
    for (const auto& c : catalog_entries())
        if (c.name == name) e = &c;
    if (!e) throw UnknownAlgebra("unknown catalog algebra: " + name);
    if (e->parametrized && param < e->min_param)
        throw BadParameter(name + " requires a parameter >= " + std::to_string(e->min_param));
    if (name == "A") return pres_A(param);
    if (name == "K4") return pres_K4();
    if (name == "M4") return pres_M4();
    if (name == "L5") return pres_L5();
    if (name == "N5") return pres_N5();
    if (name == "D") return pres_D(param);
    if (name == "Dprime") return pres_Dprime(param);
    if (name == "B") return pres_B(param);
    if (name == "muJ_B") return pres_muJ_B(param);
    if (name == "U4") return pres_U4();
    if (name == "R4") return pres_R4();
    if (name == "H4") return pres_H4();
    if (name == "example23") return pres_example23();
    if (name == "gentleN5") return pres_gentleN5();
    if (name == "pathA3") return pres_pathA3();
    if (name == "muJ_pathA3") return pres_muJ_pathA3();
    throw UnknownAlgebra("unknown catalog algebra: " + name);
}

namespace {

// An element given by an arrow-name path, multiplied out in A.
std::vector<fp_t> path_element(const BasedAlgebra& a, const std::vector<std::string>& arrows) {
    std::vector<fp_t> v;
    for (const auto& name : arrows) {
        std::vector<fp_t> x(a.dim(), 0);
        bool found = false;
        for (int b = 0; b < a.dim(); ++b)
            if (a.basis(b).name == name) {
                x[b] = 1;
                found = true;
                break;
            }
        if (!found) throw ValidationFailure("catalog: arrow not in basis: " + name);
        v = v.empty() ? std::move(x) : a.multiply(v, x);
    }
    return v;
}

}  // namespace

BasedAlgebra catalog_get(const std::string& name, int param, uint32_t p) {
    if (name == "Dprime") {
        // built as the central quotient of D; the explicit presentation is
        // kept as a cross-check only
        BasedAlgebra d = catalog_get("D", param, p);
        std::vector<std::vector<fp_t>> gens;
        gens.push_back(path_element(d, {"b1", "a1"}));
        gens.push_back(path_element(d, {"a1", "b2", "a2", "b1"}));
        for (int i = 3; i <= param - 1; ++i)
            gens.push_back(path_element(d, {nm("n", i), nm("m", i)}));
        return quotient_central(d, gens);
    }
    Presentation pr = catalog_presentation(name, param);
    return algebra_from_presentation(pr.q, pr.rels, p);
}

std::optional<uint64_t> catalog_expected_count(const std::string& name, int param) {
    if (name == "A") return binomial_u64(2 * param, param);
    if (name == "K4") return 136;
    if (name == "M4") return 152;
    if (name == "L5") return 1656;
    if (name == "U4") return 136;
    if (name == "R4") return 88;
    if (name == "H4") return 96;
    if (name == "example23") return 6;
    if (name == "pathA3") return 14;
    if (name == "muJ_pathA3") return 14;
    if (name == "B" && param == 3) return 32;
    if (name == "D" || name == "Dprime") {
        auto it = kDCounts.find(param);
        if (it != kDCounts.end()) return it->second;
    }
    return std::nullopt;
}

bool catalog_expected_complete(const std::string& name) {
    for (const auto& c : catalog_entries())
        if (c.name == name) return c.expected_complete;
    throw UnknownAlgebra("unknown catalog algebra: " + name);
}

std::pair<std::string, int> parse_algebra_spec(const std::string& spec) {
    auto pos = spec.find(':');
    if (pos == std::string::npos) return {spec, 0};
    std::string name = spec.substr(0, pos);
    int param = 0;
    try {
        param = std::stoi(spec.substr(pos + 1));
    } catch (...) {
        throw BadParameter("bad algebra parameter in: " + spec);
    }
    return {name, param};
}

}  // namespace siltlab
