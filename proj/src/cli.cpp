#include "siltlab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "siltlab/io.hpp"

namespace siltlab {

namespace {

uint64_t default_budget() {
    if (const char* env = std::getenv("SILTLAB_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return v;
        throw BadParameter("SILTLAB_BUDGET must be a positive integer");
    }
    return kDefaultBudget;
}

struct AlgebraSource {
    std::string name;  // catalog spec "NAME" or "NAME:PARAM"
    std::string file;  // or a JSON file

    bool present() const { return !name.empty() || !file.empty(); }

    // label, algebra
    std::pair<std::string, BasedAlgebra> load(uint32_t p_override) const {
        if (!name.empty() && !file.empty())
            throw BadParameter("give either --algebra or --algebra-file, not both");
        if (!file.empty()) {
            std::ifstream in(file, std::ios::binary);
            if (!in.good()) throw BadParameter("cannot read " + file);
            std::ostringstream os;
            os << in.rdbuf();
            AlgebraFile af = algebra_from_json(os.str());
            uint32_t p = p_override ? p_override : af.p;
            return {file, algebra_from_presentation(af.q, af.rels, p)};
        }
        auto [nm, param] = parse_algebra_spec(name);
        uint32_t p = p_override;
        if (!p)
            for (const auto& e : catalog_entries())
                if (e.name == nm) p = e.default_p;
        if (!p) p = 2;
        return {name, catalog_get(nm, param, p)};
    }
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty())
        out << text;
    else
        atomic_write(path, text);
}

int checked_threads(int threads) {
    if (threads == 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    return std::max(1, threads);
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"two-term silting enumeration for bound quiver algebras"};
    app.require_subcommand(1);

    // shared options, wired per subcommand
    AlgebraSource src;
    uint32_t p_override = 0;
    uint64_t budget = 0;
    int threads = 0;
    int max_summand = kDefaultMaxSummandSize;
    bool validate = false;
    std::string format = "text";
    std::string output;

    auto add_algebra_opts = [&](CLI::App* cmd, bool with_budget = true) {
        cmd->add_option("--algebra", src.name, "catalog algebra, e.g. K4 or D:6");
        cmd->add_option("--algebra-file", src.file, "algebra definition JSON file");
        cmd->add_option("--p", p_override, "prime field characteristic override");
        if (with_budget) {
            cmd->add_option("--budget", budget, "bound on the number of distinct objects");
            cmd->add_option("--max-summand", max_summand,
                            "growth guard: largest allowed summand size");
        }
        cmd->add_option("--threads", threads, "worker threads (default: all cores)");
    };

    // catalog
    CLI::App* cat = app.add_subcommand("catalog", "list or show the built-in algebras");
    CLI::App* cat_list = cat->add_subcommand("list", "list catalog entries");
    CLI::App* cat_show = cat->add_subcommand("show", "emit one presentation");
    std::string show_name;
    bool show_json = false;
    cat_show->add_option("name", show_name, "entry name, e.g. L5 or D:4")->required();
    cat_show->add_flag("--json", show_json, "emit the algebra file format");
    cat_show->add_option("--output", output, "write to a file instead of stdout");
    cat->require_subcommand(1);

    // enumerate
    CLI::App* en = app.add_subcommand("enumerate", "enumerate two-term silting complexes");
    add_algebra_opts(en);
    en->add_flag("--validate", validate, "check every object along the way");
    en->add_option("--out", format, "text | json | dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    en->add_option("--output", output, "write to a file instead of stdout");

    // sign-decompose
    CLI::App* sd = app.add_subcommand("sign-decompose", "per-orthant counts via A_eps");
    add_algebra_opts(sd);
    sd->add_option("--out", format, "text | json")->check(CLI::IsMember({"text", "json"}));
    sd->add_option("--output", output, "write to a file instead of stdout");

    // schur
    CLI::App* sc = app.add_subcommand("schur", "Schur algebra classification");
    CLI::App* sc_cl = sc->add_subcommand("classify", "tau-tilting finiteness of S(n,r)");
    uint32_t sp = 0;
    int sn = 0, sr = 0;
    bool as_json = false;
    sc_cl->add_option("--p", sp, "prime")->required();
    sc_cl->add_option("--n", sn, "n")->required();
    sc_cl->add_option("--r", sr, "r")->required();
    sc_cl->add_option("--budget", budget, "budget for on-demand block enumerations");
    sc_cl->add_flag("--json", as_json, "JSON output");
    CLI::App* sc_q = sc->add_subcommand("quiver", "quiver of the basic algebra of S(2,r)");
    bool as_dot = false;
    sc_q->add_option("--p", sp, "prime")->required();
    sc_q->add_option("--r", sr, "r")->required();
    sc_q->add_flag("--dot", as_dot, "DOT output");
    sc_q->add_option("--output", output, "write to a file instead of stdout");
    CLI::App* sc_rep = sc->add_subcommand("report", "the finite-case tables for p = 2 or 3");
    sc_rep->add_option("--p", sp, "prime, 2 or 3")->required();
    sc_rep->add_option("--output", output, "write to a file instead of stdout");
    sc->require_subcommand(1);

    // verify
    CLI::App* ver = app.add_subcommand("verify", "run the invariant suite on an algebra");
    add_algebra_opts(ver);

    try {
        std::vector<const char*> argv;
        argv.push_back("siltlab");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (budget == 0) budget = default_budget();
        int nthreads = checked_threads(threads);

        if (cat_list->parsed()) {
            for (const auto& e : catalog_entries()) {
                out << e.name;
                if (e.parametrized) out << ":m (m >= " << e.min_param << ")";
                out << "  [p=" << e.default_p << "]  " << e.summary;
                if (!e.expected_complete) out << "  (enumeration does not terminate)";
                out << "\n";
            }
            return 0;
        }
        if (cat_show->parsed()) {
            auto [nm, param] = parse_algebra_spec(show_name);
            Presentation pr = catalog_presentation(nm, param);
            uint32_t p = 2;
            for (const auto& e : catalog_entries())
                if (e.name == nm) p = e.default_p;
            if (show_json) {
                emit(algebra_to_json(AlgebraFile{p, pr.q, pr.rels}), output, out);
            } else {
                std::ostringstream os;
                os << nm;
                if (param) os << ":" << param;
                os << "  (" << pr.q.n << " vertices, default p = " << p << ")\n";
                for (const Arrow& a : pr.q.arrows)
                    os << "  " << a.name << ": " << a.from << " -> " << a.to << "\n";
                for (const Relation& rel : pr.rels) {
                    os << "  relation:";
                    for (size_t i = 0; i < rel.size(); ++i) {
                        const PathTerm& t = rel[i];
                        if (i && t.coeff >= 0) os << " +";
                        if (t.coeff == -1)
                            os << " -";
                        else if (t.coeff != 1)
                            os << " " << t.coeff << "*";
                        else if (!i)
                            os << " ";
                        for (size_t k = 0; k < t.arrows.size(); ++k)
                            os << (k ? "*" : "") << t.arrows[k];
                    }
                    os << "\n";
                }
                emit(os.str(), output, out);
            }
            return 0;
        }
        if (en->parsed()) {
            if (!src.present()) throw BadParameter("enumerate needs --algebra or --algebra-file");
            auto [label, a] = src.load(p_override);
            EnumerationResult r = enumerate_silting(a, budget, nthreads, validate, max_summand);
            if (format == "json") {
                emit(enumeration_to_json(label, a.prime(), r), output, out);
            } else if (format == "dot") {
                emit(enumeration_to_dot(label, r), output, out);
            } else {
                std::ostringstream os;
                os << "algebra=" << label << " p=" << a.prime() << " count=" << r.objects.size()
                   << " arrows=" << r.arrows.size()
                   << " complete=" << (r.complete ? "true" : "false") << "\n";
                emit(os.str(), output, out);
            }
            return r.complete ? 0 : 2;
        }
        if (sd->parsed()) {
            if (!src.present())
                throw BadParameter("sign-decompose needs --algebra or --algebra-file");
            auto [label, a] = src.load(p_override);
            SignDecompReport rep = sign_decomposition_report(a, budget, nthreads);
            emit(format == "json" ? sign_report_to_json(label, a.prime(), rep)
                                  : sign_report_to_text(label, a.prime(), rep),
                 output, out);
            return rep.complete ? 0 : 2;
        }
        if (sc_cl->parsed()) {
            ClassifyResult c = classify(sn, sr, sp, budget);
            out << (as_json ? classify_to_json(sn, sr, sp, c) : classify_to_text(sn, sr, sp, c));
            return 0;
        }
        if (sc_q->parsed()) {
            emit(as_dot ? schur_quiver_to_dot(sr, sp) : schur_quiver_to_text(sr, sp), output,
                 out);
            return 0;
        }
        if (sc_rep->parsed()) {
            emit(appendix_report(sp), output, out);
            return 0;
        }
        if (ver->parsed()) {
            if (!src.present()) throw BadParameter("verify needs --algebra or --algebra-file");
            auto [label, a] = src.load(p_override);
            // enumerate with full validation: every object is checked to be
            // presilting with unit g-matrix determinant
            EnumerationResult r = enumerate_silting(a, budget, nthreads, true);
            if (!r.complete) {
                err << "verify: enumeration exhausted the budget (" << budget << ")\n";
                return 2;
            }
            std::set<std::vector<GVec>> keys(r.objects.begin(), r.objects.end());
            if (keys.size() != r.objects.size()) {
                err << "verify: duplicate g-vector keys\n";
                return 1;
            }
            for (size_t i = 0; i < r.objects.size(); ++i)
                if (g_matrix_det_abs(r.objects[i]) != 1) {
                    err << "verify: |det| != 1 at object " << i << "\n";
                    return 1;
                }
            // orthant partition
            SignDecompReport rep = sign_decomposition_report(a, budget, nthreads);
            if (!rep.equal) {
                err << "verify: orthant partition sum " << rep.sum << " != direct count "
                    << rep.direct_count << "\n";
                return 1;
            }
            // duality against the opposite algebra
            EnumerationResult rop = enumerate_silting(opposite(a), budget, nthreads, false);
            std::multiset<GVec> neg, direct(r.totals.begin(), r.totals.end());
            for (auto t : rop.totals) {
                for (auto& x : t) x = -x;
                neg.insert(t);
            }
            if (neg != direct) {
                err << "verify: opposite-algebra g-vectors are not the exact negations\n";
                return 1;
            }
            out << "verify " << label << ": pass (" << r.objects.size() << " objects)\n";
            return 0;
        }
        err << "error: no subcommand\n";
        return 1;
    } catch (const SiltError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace siltlab
