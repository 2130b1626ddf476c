#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include "doctest.h"
#include "siltlab/catalog.hpp"
#include "siltlab/schur.hpp"

using namespace siltlab;

namespace {

// Independent memoized reimplementation of the arrow recursion, used as the
// oracle for the production version.
int arrow_oracle(long long s, long long t, uint32_t p, std::map<std::pair<long long, long long>, int>& memo) {
    if (s < t) std::swap(s, t);
    if (s == t) return 0;
    auto key = std::make_pair(s, t);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    long long q = p;
    long long s0 = s % q, s1 = s / q, t0 = t % q, t1 = t / q;
    int res = 0;
    if (p == 2) {
        bool same_digit = (s0 == t0);
        if (same_digit && (s0 == 1 || ((s1 % 2) == (t1 % 2))))
            res = arrow_oracle(s1, t1, p, memo);
        else if (same_digit && s0 == 0 && s1 == t1 + 1 && s1 % 2 == 1)
            res = 1;
    } else {
        if (s0 == t0)
            res = arrow_oracle(s1, t1, p, memo);
        else if (s0 + t0 + 2 == q && s1 == t1 + 1 && s1 % q != 0)
            res = 1;
    }
    memo[key] = res;
    return res;
}

std::string fixture_path(const std::string& name) {
    if (const char* env = std::getenv("SILTLAB_FIXTURES"))
        return std::string(env) + "/" + name;
    return std::filesystem::path(__FILE__).parent_path() / "fixtures" / name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_SUITE("schur") {

TEST_CASE("arrow recursion matches worked values") {
    CHECK(arrow_count(2, 0, 2) == 1);
    CHECK(arrow_count(1, 0, 2) == 0);
    CHECK(arrow_count(3, 0, 5) == 0);
    CHECK(arrow_count(7, 2, 5) == 0);
    CHECK(arrow_count(8, 0, 5) == 1);
    // the p^2-p-1 <-> p^2+p-1 edge for p = 5
    CHECK(arrow_count(29, 19, 5) == 1);
    // first-column edges s + t = 2p - 2, and the isolated vertex p - 1
    for (uint32_t p : {5u, 7u}) {
        for (int t = 0; t <= static_cast<int>(p) - 2; ++t)
            CHECK(arrow_count(2 * p - 2 - t, t, p) == 1);
        for (int t = 0; t < static_cast<int>(p) - 1; ++t)
            CHECK(arrow_count(p - 1, t, p) == 0);
        CHECK(arrow_count(2 * p, 2 * p - 2, p) == 1);
    }
}

TEST_CASE("arrow recursion against the memoized oracle") {
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        std::map<std::pair<long long, long long>, int> memo;
        for (long long s = 0; s <= 120; ++s)
            for (long long t = 0; t < s; ++t)
                CHECK(arrow_count(s, t, p) == arrow_oracle(s, t, p, memo));
    }
}

TEST_CASE("small Schur quivers") {
    std::vector<int> sv;
    Quiver q = schur2_quiver(2, 2, &sv);
    CHECK(sv == std::vector<int>{0, 2});
    CHECK(q.arrows.size() == 2);  // one arrow each way

    Quiver q3 = schur2_quiver(3, 2, &sv);
    CHECK(sv == std::vector<int>{1, 3});
    CHECK(q3.arrows.empty());
}

TEST_CASE("the p=5, r=25 quiver has the expected 6-vertex block") {
    SchurBlockReport rep = schur2_blocks(25, 5, 2000);
    REQUIRE(!rep.blocks.empty());
    CHECK(rep.blocks[0].size == 6);
    CHECK(rep.blocks[0].morita == "D6");
    CHECK(rep.blocks[0].svalues == std::vector<int>{3, 5, 13, 15, 23, 25});
    CHECK(rep.blocks[1].size == 5);
    CHECK(rep.blocks[1].morita == "A5");
}

TEST_CASE("blocks of S(2,r) at p=2") {
    SchurBlockReport r8 = schur2_blocks(8, 2);
    REQUIRE(r8.blocks.size() == 1);
    CHECK(r8.blocks[0].morita == "L5");
    REQUIRE(r8.total_count);
    CHECK(r8.total_count->str() == "1656");

    SchurBlockReport r19 = schur2_blocks(19, 2);
    REQUIRE(r19.blocks.size() == 4);
    CHECK(r19.blocks[0].morita == "L5");
    CHECK(r19.blocks[1].morita == "D3");
    CHECK(r19.blocks[2].morita == "F");
    CHECK(r19.blocks[3].morita == "F");
    REQUIRE(r19.total_count);
    CHECK(r19.total_count->str() == "185472");

    SchurBlockReport r10 = schur2_blocks(10, 2);
    CHECK(!r10.total_finite);
    CHECK(r10.blocks[0].size == 6);
    CHECK(r10.blocks[0].morita == "INFINITE");
    CHECK(r10.blocks[0].has_square);
}

TEST_CASE("every small block is finite (Prop-style size bound)") {
    for (uint32_t p : {2u, 3u, 5u})
        for (int r = 1; r <= 20; ++r)
            for (const auto& b : schur2_blocks(r, p, 2000).blocks)
                if (b.size <= 2) CHECK(b.finite);
}

TEST_CASE("principal block of S(2,12) at p=3 carries a square") {
    SchurBlockReport rep = schur2_blocks(12, 3, 2000);
    bool found = false;
    for (const auto& b : rep.blocks)
        if (std::find(b.svalues.begin(), b.svalues.end(), 0) != b.svalues.end()) {
            found = true;
            CHECK(b.size == 5);
            CHECK(detect_tau_infinite_square(b.quiver));
            CHECK(!b.finite);
        }
    CHECK(found);
}

TEST_CASE("classification") {
    ClassifyResult m4 = classify(3, 4, 2);
    CHECK(m4.finite);
    CHECK(m4.blocks == std::vector<std::string>{"M4"});
    REQUIRE(m4.count);
    CHECK(m4.count->str() == "152");

    ClassifyResult n5 = classify(5, 5, 2);
    CHECK(!n5.finite);
    CHECK(n5.blocks == std::vector<std::string>{"N5", "A2"});

    ClassifyResult s45 = classify(4, 5, 3);
    CHECK(s45.finite);
    CHECK(s45.blocks == std::vector<std::string>{"A3", "A2", "F"});
    REQUIRE(s45.count);
    CHECK(s45.count->str() == "240");

    ClassifyResult s217 = classify(2, 17, 2);
    REQUIRE(s217.count);
    CHECK(s217.count->str() == "39744");

    CHECK(!classify(2, 10, 2).finite);
    CHECK(classify(2, 29, 5).finite);   // r = p^2 + p - 1
    CHECK(!classify(2, 30, 5).finite);  // r = p^2 + p
    CHECK(!classify(2, 30, 3).finite);
    CHECK_THROWS_AS(classify(1, 1, 2), BadParameter);
    CHECK_THROWS_AS(classify(2, 0, 2), BadParameter);
}

TEST_CASE("representation type") {
    CHECK(representation_type(2, 3, 2) == RepType::SEMISIMPLE);
    CHECK(representation_type(2, 4, 2) == RepType::TAME);
    CHECK(representation_type(3, 7, 3) == RepType::TAME);
    CHECK(representation_type(2, 5, 2) == RepType::FINITE);
    CHECK(representation_type(2, 6, 2) == RepType::WILD);
    CHECK(representation_type(2, 8, 3) == RepType::FINITE);
    CHECK(representation_type(3, 4, 2) == RepType::WILD);
    CHECK(representation_type(4, 9, 5) == RepType::FINITE);
    CHECK(representation_type(2, 26, 5) == RepType::WILD);  // finite tau, wild rep type
}

TEST_CASE("block sizes across p=2, r=2..19 match the classification tables") {
    // expected multiset of block sizes per r, finite cases only
    std::map<int, std::multiset<int>> expect = {
        {2, {2}},           {3, {1, 1}},        {4, {3}},
        {5, {2, 1}},        {6, {4}},           {7, {2, 1, 1}},
        {8, {5}},           {9, {3, 1, 1}},     {11, {3, 2, 1}},
        {13, {4, 2, 1}},    {15, {4, 2, 1, 1}}, {17, {5, 2, 1, 1}},
        {19, {5, 3, 1, 1}},
    };
    for (auto& [r, sizes] : expect) {
        SchurBlockReport rep = schur2_blocks(r, 2);
        std::multiset<int> got;
        for (const auto& b : rep.blocks) got.insert(b.size);
        CHECK(got == sizes);
        CHECK(rep.total_finite);
    }
}

TEST_CASE("appendix tables match the fixtures byte for byte") {
    CHECK(appendix_report(2) == slurp(fixture_path("appendix_p2.txt")));
    CHECK(appendix_report(3) == slurp(fixture_path("appendix_p3.txt")));
    CHECK_THROWS_AS(appendix_report(5), BadParameter);
}

TEST_CASE("big integers") {
    BigUInt a(999999999);
    a *= BigUInt(999999999);
    CHECK(a.str() == "999999998000000001");
    BigUInt b(0);
    b += BigUInt(7);
    CHECK(b.str() == "7");
    CHECK(big_binomial(14, 7).str() == "3432");
    CHECK(big_binomial(40, 20).str() == "137846528820");
}

}  // TEST_SUITE
