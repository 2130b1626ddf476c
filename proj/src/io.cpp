#include "siltlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace siltlab {

using ordered_json = nlohmann::ordered_json;

std::string algebra_to_json(const AlgebraFile& af) {
    ordered_json j;
    j["p"] = af.p;
    j["vertices"] = af.q.n;
    j["arrows"] = ordered_json::array();
    for (const Arrow& a : af.q.arrows)
        j["arrows"].push_back({{"name", a.name}, {"from", a.from}, {"to", a.to}});
    j["relations"] = ordered_json::array();
    for (const Relation& rel : af.rels) {
        ordered_json terms = ordered_json::array();
        for (const PathTerm& t : rel)
            terms.push_back({{"coeff", t.coeff}, {"path", t.arrows}});
        j["relations"].push_back(terms);
    }
    return j.dump(2) + "\n";
}

AlgebraFile algebra_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw BadParameter(std::string("algebra file is not valid JSON: ") + e.what());
    }
    AlgebraFile af;
    try {
        af.p = j.at("p").get<uint32_t>();
        af.q.n = j.at("vertices").get<int>();
        for (const auto& a : j.at("arrows"))
            af.q.arrows.push_back(
                {a.at("name").get<std::string>(), a.at("from").get<int>(), a.at("to").get<int>()});
        if (j.contains("relations"))
            for (const auto& rel : j.at("relations")) {
                Relation r;
                for (const auto& t : rel)
                    r.push_back({t.at("coeff").get<long long>(),
                                 t.at("path").get<std::vector<std::string>>()});
                af.rels.push_back(std::move(r));
            }
    } catch (const ordered_json::exception& e) {
        throw BadParameter(std::string("algebra file has a bad field: ") + e.what());
    }
    if (af.p < 2) throw BadParameter("algebra file: p must be a prime >= 2");
    return af;
}

std::string enumeration_to_json(const std::string& algebra, uint32_t p,
                                const EnumerationResult& r) {
    ordered_json j;
    j["algebra"] = algebra;
    j["p"] = p;
    j["count"] = r.objects.size();
    j["complete"] = r.complete;
    j["g_vectors"] = ordered_json::array();
    for (const auto& t : r.totals) j["g_vectors"].push_back(t);
    j["hasse"] = ordered_json::array();
    for (const auto& [f, t] : r.arrows) j["hasse"].push_back({f, t});
    return j.dump(2) + "\n";
}

namespace {
std::string gvec_label(const GVec& g) {
    std::string s = "(";
    for (size_t i = 0; i < g.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(g[i]);
    }
    return s + ")";
}
}  // namespace

std::string enumeration_to_dot(const std::string& algebra, const EnumerationResult& r) {
    std::ostringstream os;
    os << "digraph \"" << algebra << "\" {\n";
    os << "  rankdir=TB;\n";
    for (size_t i = 0; i < r.totals.size(); ++i)
        os << "  n" << i << " [label=\"" << gvec_label(r.totals[i]) << "\"];\n";
    for (const auto& [f, t] : r.arrows) os << "  n" << f << " -> n" << t << ";\n";
    os << "}\n";
    return os.str();
}

std::string sign_report_to_json(const std::string& algebra, uint32_t p,
                                const SignDecompReport& rep) {
    ordered_json j;
    j["algebra"] = algebra;
    j["p"] = p;
    j["direct_count"] = rep.direct_count;
    j["orthant_sum"] = rep.sum;
    j["complete"] = rep.complete;
    j["equal"] = rep.equal;
    j["orthants"] = ordered_json::array();
    for (const auto& o : rep.orthants) {
        ordered_json e;
        e["eps"] = o.eps;
        e["count"] = o.count;
        e["complete"] = o.complete;
        j["orthants"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

std::string sign_report_to_text(const std::string& algebra, uint32_t p,
                                const SignDecompReport& rep) {
    std::ostringstream os;
    os << "sign decomposition of 2-silt " << algebra << " (p = " << p << ")\n";
    for (const auto& o : rep.orthants) {
        os << "  eps = ";
        for (int s : o.eps) os << (s > 0 ? '+' : '-');
        os << "  count = " << o.count;
        if (!o.complete) os << "  (budget exhausted)";
        os << "\n";
    }
    os << "sum over orthants = " << rep.sum << "\n";
    os << "direct count      = " << rep.direct_count;
    if (!rep.complete) os << "  (budget exhausted)";
    os << "\n";
    os << "verdict: " << (rep.equal ? "equal" : "unequal") << "\n";
    return os.str();
}

std::string classify_to_json(int n, int r, uint32_t p, const ClassifyResult& c) {
    ordered_json j;
    j["n"] = n;
    j["r"] = r;
    j["p"] = p;
    j["finite"] = c.finite;
    j["representation_type"] = rep_type_name(c.rep_type);
    if (!c.blocks.empty()) j["basic_algebra"] = c.blocks;
    if (c.count) j["count"] = c.count->str();
    if (!c.note.empty()) j["note"] = c.note;
    return j.dump(2) + "\n";
}

std::string classify_to_text(int n, int r, uint32_t p, const ClassifyResult& c) {
    std::ostringstream os;
    os << "S(" << n << "," << r << ") over p = " << p << ": ";
    os << (c.finite ? "tau-tilting finite" : "tau-tilting infinite");
    if (!c.blocks.empty()) {
        os << "\n  basic algebra: ";
        for (size_t i = 0; i < c.blocks.size(); ++i) {
            if (i) os << " + ";
            os << c.blocks[i];
        }
    }
    if (c.count) os << "\n  count: " << c.count->str();
    os << "\n  representation type: " << rep_type_name(c.rep_type);
    if (!c.note.empty()) os << "\n  note: " << c.note;
    os << "\n";
    return os.str();
}

std::string schur_quiver_to_text(int r, uint32_t p) {
    std::vector<int> sv;
    Quiver q = schur2_quiver(r, p, &sv);
    std::ostringstream os;
    os << "quiver of the basic algebra of S(2," << r << "), p = " << p << "\n";
    os << "vertices (s values):";
    for (int s : sv) os << " " << s;
    os << "\n";
    std::set<std::pair<int, int>> seen;
    for (const Arrow& a : q.arrows) {
        int x = sv[a.from - 1], y = sv[a.to - 1];
        if (x > y) std::swap(x, y);
        if (seen.insert({x, y}).second) os << "edge " << x << " <-> " << y << "\n";
    }
    return os.str();
}

std::string schur_quiver_to_dot(int r, uint32_t p) {
    std::vector<int> sv;
    Quiver q = schur2_quiver(r, p, &sv);
    std::ostringstream os;
    os << "digraph \"S(2," << r << ") p=" << p << "\" {\n";
    for (size_t i = 0; i < sv.size(); ++i)
        os << "  v" << sv[i] << " [label=\"" << sv[i] << "\"];\n";
    for (const Arrow& a : q.arrows)
        os << "  v" << sv[a.from - 1] << " -> v" << sv[a.to - 1] << ";\n";
    os << "}\n";
    return os.str();
}

void atomic_write(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out.good()) throw SiltError("cannot open " + tmp + " for writing");
        out << content;
        if (!out.good()) throw SiltError("failed writing " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw SiltError("failed to move " + tmp + " into place");
    }
}

}  // namespace siltlab
