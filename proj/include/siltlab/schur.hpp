#pragma once

#include <optional>
#include <string>

#include "siltlab/algebra.hpp"
#include "siltlab/search.hpp"

namespace siltlab {

// Minimal unsigned big integer (base 1e9); block-count products outgrow 64
// bits for larger primes.
class BigUInt {
  public:
    BigUInt() : d_{0} {}
    BigUInt(uint64_t v);

    BigUInt& operator*=(const BigUInt& o);
    BigUInt& operator+=(const BigUInt& o);
    bool operator==(const BigUInt& o) const = default;
    std::string str() const;

  private:
    void trim();
    std::vector<uint32_t> d_;  // little-endian, base 1e9
};

BigUInt big_binomial(int n, int k);

// Number of arrows (0 or 1) from v^s to v^t in the quiver of the basic
// algebra of S(2,r); symmetric in s, t.
int arrow_count(long long s, long long t, uint32_t p);

// Vertices are s = r mod 2, r mod 2 + 2, ..., r; vertex labels 1..k follow
// ascending s, reported in *svalues when requested.
Quiver schur2_quiver(int r, uint32_t p, std::vector<int>* svalues = nullptr);

struct SchurBlock {
    std::vector<int> svalues;  // ascending
    int size = 0;
    std::string morita;  // "F", "A2", ..., "D3", "K4", "L5" or "INFINITE"
    bool finite = false;
    std::optional<BigUInt> count;
    bool has_square = false;
    Quiver quiver;  // subquiver of the block, vertices relabeled 1..size
};

struct SchurBlockReport {
    int r = 0;
    uint32_t p = 2;
    std::vector<SchurBlock> blocks;  // descending size, then ascending min s
    bool total_finite = false;
    std::optional<BigUInt> total_count;
};

SchurBlockReport schur2_blocks(int r, uint32_t p, uint64_t budget = kDefaultBudget);

enum class RepType { SEMISIMPLE, FINITE, TAME, WILD };
std::string rep_type_name(RepType t);

RepType representation_type(int n, int r, uint32_t p);

struct ClassifyResult {
    bool finite = false;
    std::vector<std::string> blocks;  // basic-algebra decomposition when known
    std::optional<BigUInt> count;
    RepType rep_type = RepType::WILD;
    std::string note;
};

ClassifyResult classify(int n, int r, uint32_t p, uint64_t budget = kDefaultBudget);

// The finite-case tables for p = 2 or 3, regenerated; must match the
// checked-in fixtures byte-exactly.
std::string appendix_report(uint32_t p);

}  // namespace siltlab
