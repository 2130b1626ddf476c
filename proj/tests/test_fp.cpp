#include "doctest.h"
#include "siltlab/fp.hpp"

using namespace siltlab;

namespace {

struct Rng {
    uint64_t s = 0x9e3779b97f4a7c15ULL;
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    fp_t mod(uint32_t p) { return static_cast<fp_t>(next() % p); }
};

FMatrix random_matrix(Rng& rng, size_t r, size_t c, uint32_t p) {
    FMatrix m(r, c, p);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rng.mod(p);
    return m;
}

}  // namespace

TEST_SUITE("fp") {

TEST_CASE("rref basics") {
    FMatrix z(2, 2, 5);
    CHECK(rref(z).rank == 0);

    FMatrix id = FMatrix::identity(3, 7);
    auto rr = rref(id);
    CHECK(rr.rank == 3);
    CHECK(rr.r == id);

    FMatrix m(2, 2, 2);
    m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = 1;
    CHECK(rref(m).rank == 1);
}

TEST_CASE("kernel basics") {
    CHECK(kernel_basis(FMatrix::identity(4, 3)).empty());
    CHECK(kernel_basis(FMatrix(2, 3, 5)).size() == 3);

    FMatrix m(1, 2, 2);
    m.at(0, 0) = m.at(0, 1) = 1;
    auto k = kernel_basis(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<fp_t>{1, 1});
}

TEST_CASE("solve basics") {
    FMatrix id = FMatrix::identity(3, 5);
    std::vector<fp_t> b{1, 4, 2};
    auto x = solve(id, b);
    REQUIRE(x);
    CHECK(*x == b);

    FMatrix z(2, 2, 3);
    std::vector<fp_t> nz{1, 0};
    CHECK(!solve(z, nz));

    FMatrix m(1, 1, 3);
    m.at(0, 0) = 2;
    auto y = solve(m, std::vector<fp_t>{1});
    REQUIRE(y);
    CHECK((*y)[0] == 2);  // 2*2 = 4 = 1 mod 3
}

TEST_CASE("rank equals rank of transpose") {
    Rng rng;
    for (uint32_t p : {2u, 3u, 5u})
        for (int trial = 0; trial < 20; ++trial) {
            FMatrix m = random_matrix(rng, 3 + trial % 5, 2 + trial % 7, p);
            CHECK(rank(m) == rank(transpose(m)));
        }
}

TEST_CASE("rref is idempotent") {
    Rng rng;
    for (uint32_t p : {2u, 3u, 5u})
        for (int trial = 0; trial < 10; ++trial) {
            FMatrix m = random_matrix(rng, 4, 6, p);
            FMatrix r = rref(m).r;
            CHECK(rref(r).r == r);
        }
}

TEST_CASE("solve reproduces the right-hand side") {
    Rng rng;
    for (uint32_t p : {2u, 3u, 5u})
        for (int trial = 0; trial < 25; ++trial) {
            FMatrix m = random_matrix(rng, 4, 5, p);
            std::vector<fp_t> b(4);
            for (auto& v : b) v = rng.mod(p);
            auto x = solve(m, b);
            if (!x) continue;
            CHECK(matvec(m, *x) == b);
        }
}

TEST_CASE("kernel vectors are independent and annihilate M") {
    Rng rng;
    for (uint32_t p : {2u, 3u, 5u})
        for (int trial = 0; trial < 15; ++trial) {
            FMatrix m = random_matrix(rng, 3, 6, p);
            auto k = kernel_basis(m);
            CHECK(k.size() == m.cols() - rank(m));
            FMatrix stack(k.size(), m.cols(), p);
            for (size_t i = 0; i < k.size(); ++i) {
                for (size_t j = 0; j < m.cols(); ++j) stack.at(i, j) = k[i][j];
                for (fp_t v : matvec(m, k[i])) CHECK(v == 0);
            }
            CHECK(rank(stack) == k.size());
        }
}

TEST_CASE("RowSolver solves in-span rows and rejects the rest") {
    FMatrix b(2, 3, 5);
    b.at(0, 0) = 1;
    b.at(0, 1) = 2;
    b.at(1, 2) = 3;
    RowSolver s(b);
    std::vector<fp_t> v{2, 4, 3};  // 2*row0 + 1*row1
    auto x = s.solve(v);
    REQUIRE(x);
    CHECK(*x == std::vector<fp_t>{2, 1});
    std::vector<fp_t> w{0, 1, 0};
    CHECK(!s.solve(w));
}

}  // TEST_SUITE
