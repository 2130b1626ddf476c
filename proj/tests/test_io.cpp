#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "siltlab/cli.hpp"
#include "siltlab/io.hpp"

using namespace siltlab;

namespace {

int run(std::initializer_list<std::string> args, std::string* out_text = nullptr,
        std::string* err_text = nullptr) {
    std::ostringstream out, err;
    int code = run_cli(std::vector<std::string>(args), out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) {
        path = (std::filesystem::temp_directory_path() / name).string();
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};

bool same_structure(const BasedAlgebra& a, const BasedAlgebra& b) {
    if (a.dim() != b.dim() || a.vertices() != b.vertices()) return false;
    for (int i = 0; i < a.dim(); ++i) {
        if (a.basis(i).src != b.basis(i).src || a.basis(i).dst != b.basis(i).dst) return false;
        for (int j = 0; j < a.dim(); ++j)
            if (a.mult(i, j) != b.mult(i, j)) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("algebra JSON round-trips every catalog presentation") {
    for (const CatalogEntry& e : catalog_entries()) {
        int param = e.parametrized ? e.min_param + 1 : 0;
        Presentation pr = catalog_presentation(e.name, param);
        AlgebraFile af{e.default_p, pr.q, pr.rels};
        AlgebraFile back = algebra_from_json(algebra_to_json(af));
        CHECK(back.p == af.p);
        BasedAlgebra a = algebra_from_presentation(pr.q, pr.rels, e.default_p);
        BasedAlgebra b = algebra_from_presentation(back.q, back.rels, back.p);
        CHECK(same_structure(a, b));
    }
}

TEST_CASE("bad algebra files are rejected") {
    CHECK_THROWS_AS(algebra_from_json("not json"), BadParameter);
    CHECK_THROWS_AS(algebra_from_json("{\"p\": 2}"), BadParameter);
}

TEST_CASE("enumeration JSON is canonical") {
    BasedAlgebra a = catalog_get("example23", 0, 2);
    EnumerationResult r = enumerate_silting(a, 100, 1, false);
    std::string j = enumeration_to_json("example23", 2, r);
    CHECK(j.find("\"count\": 6") != std::string::npos);
    CHECK(j.find("\"complete\": true") != std::string::npos);
    // two independent runs are byte-identical
    EnumerationResult r2 = enumerate_silting(a, 100, 2, false);
    CHECK(enumeration_to_json("example23", 2, r2) == j);
}

TEST_CASE("cli: enumerate text, exit codes") {
    std::string out;
    CHECK(run({"enumerate", "--algebra", "D:3", "--p", "2"}, &out) == 0);
    CHECK(out.find("count=28") != std::string::npos);
    CHECK(out.find("complete=true") != std::string::npos);

    CHECK(run({"enumerate", "--algebra", "N5", "--p", "2", "--budget", "200"}, &out) == 2);
    CHECK(out.find("complete=false") != std::string::npos);

    std::string err_text;
    CHECK(run({"enumerate", "--algebra", "doesnotexist"}, &out, &err_text) == 1);
    CHECK(err_text.find("error") != std::string::npos);
    CHECK(run({"enumerate"}, &out, &err_text) == 1);
}

TEST_CASE("cli: dot output has one node per object and one edge per arrow") {
    std::string out;
    CHECK(run({"enumerate", "--algebra", "example23", "--out", "dot"}, &out) == 0);
    size_t nodes = 0, edges = 0, pos = 0;
    while ((pos = out.find("label=", pos)) != std::string::npos) ++nodes, ++pos;
    pos = 0;
    while ((pos = out.find(" -> ", pos)) != std::string::npos) ++edges, ++pos;
    CHECK(nodes == 6);
    CHECK(edges == 6);
}

TEST_CASE("cli: file output is atomic and byte-stable across thread counts") {
    TempFile f1("siltlab_t1.json"), f2("siltlab_t2.json");
    CHECK(run({"enumerate", "--algebra", "A:3", "--out", "json", "--threads", "1", "--output",
               f1.path}) == 0);
    CHECK(run({"enumerate", "--algebra", "A:3", "--out", "json", "--threads", "4", "--output",
               f2.path}) == 0);
    CHECK(slurp(f1.path) == slurp(f2.path));
    CHECK(!std::filesystem::exists(f1.path + ".tmp"));
}

TEST_CASE("cli: algebra files round-trip through enumerate") {
    TempFile f("siltlab_alg.json");
    std::string shown;
    CHECK(run({"catalog", "show", "example23", "--json", "--output", f.path}) == 0);
    std::string out;
    CHECK(run({"enumerate", "--algebra-file", f.path}, &out) == 0);
    CHECK(out.find("count=6") != std::string::npos);
}

TEST_CASE("cli: schur surfaces") {
    std::string out;
    CHECK(run({"schur", "classify", "--p", "2", "--n", "2", "--r", "8"}, &out) == 0);
    CHECK(out.find("1656") != std::string::npos);
    CHECK(run({"schur", "classify", "--p", "3", "--n", "3", "--r", "8", "--json"}, &out) == 0);
    CHECK(out.find("\"count\": \"50688\"") != std::string::npos);
    CHECK(run({"schur", "quiver", "--p", "2", "--r", "10"}, &out) == 0);
    CHECK(out.find("edge 0 <-> 2") != std::string::npos);
    CHECK(run({"schur", "quiver", "--p", "2", "--r", "4", "--dot"}, &out) == 0);
    CHECK(out.find("digraph") != std::string::npos);
    CHECK(run({"schur", "report", "--p", "2"}, &out) == 0);
    CHECK(out.find("S(2,19)") != std::string::npos);
    CHECK(run({"schur", "report", "--p", "5"}, &out) == 1);
}

TEST_CASE("cli: verify") {
    std::string out;
    CHECK(run({"verify", "--algebra", "K4"}, &out) == 0);
    CHECK(out.find("pass (136 objects)") != std::string::npos);
}

TEST_CASE("environment budget override") {
    setenv("SILTLAB_BUDGET", "150", 1);
    std::string out;
    CHECK(run({"enumerate", "--algebra", "N5"}, &out) == 2);
    CHECK(out.find("count=150") != std::string::npos);
    setenv("SILTLAB_BUDGET", "bogus", 1);
    std::string err_text;
    CHECK(run({"enumerate", "--algebra", "example23"}, &out, &err_text) == 1);
    unsetenv("SILTLAB_BUDGET");
}

}  // TEST_SUITE
