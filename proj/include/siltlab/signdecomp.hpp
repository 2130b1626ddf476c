#pragma once

#include <string>

#include "siltlab/search.hpp"

namespace siltlab {

using SignVector = std::vector<int>;  // entries +1 / -1, indexed by vertex

// All 2^n sign vectors; index i reads bit v-1 of i (0 = +1, 1 = -1).
std::vector<SignVector> all_sign_vectors(int n);

// The upper triangular algebra A_eps: Peirce components inside one sign block
// are cut by the ideals J+ / J-, the (+,-) block is kept whole, and the (-,+)
// block is dropped.  Idempotents keep their vertex labels, so g-vector
// coordinates match between A and A_eps.
BasedAlgebra build_a_epsilon(const BasedAlgebra& a, const SignVector& eps);

struct OrthantCount {
    SignVector eps;
    uint64_t count = 0;
    bool complete = true;
    std::vector<GVec> totals;  // total g-vectors of the objects in this orthant
};

// Enumerate 2-silt A_eps in full, then keep the objects whose total g-vector
// lies in the eps orthant.
OrthantCount enumerate_orthant(const BasedAlgebra& a, const SignVector& eps, uint64_t budget);

struct SignDecompReport {
    std::vector<OrthantCount> orthants;
    uint64_t sum = 0;
    uint64_t direct_count = 0;
    bool complete = true;
    bool equal = false;
};

SignDecompReport sign_decomposition_report(const BasedAlgebra& a, uint64_t budget,
                                           int threads = 1);

struct TiltingBijectionResult {
    uint64_t count_a = 0;
    uint64_t count_b = 0;
    bool complete = true;
    bool equal = false;
};

// #2-silt_{M(n)_{J,-}} A versus #2-silt_{M(n)_{J,+}} B for catalog algebras
// A, B; the bijection behind the equality needs B to be presented as the
// tilting mutation of A at J.
TiltingBijectionResult verify_tilting_bijection(const std::string& name_a,
                                                const std::string& name_b,
                                                const std::vector<int>& j_set, uint32_t p,
                                                uint64_t budget);

}  // namespace siltlab
