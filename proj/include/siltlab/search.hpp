#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "siltlab/complex.hpp"

namespace siltlab {

using GVec = std::vector<int>;

// Entrywise sign of a total g-vector; entries are +1/-1 (never 0 for a
// silting complex).
std::vector<int> orthant_of(const GVec& total);

struct Summand {
    TwoTermComplex cx;
    GVec g;
};

// Classes of rad End(X) for an interned summand, as chain-map representatives.
struct RadEndData {
    std::vector<ChainMap> rad_reps;
};

// Per-algebra interning of indecomposable summands by g-vector, plus caches
// of Hom spaces and endomorphism radicals.  g-vector identity of summands is
// backed by Prop-style injectivity for whole silting objects; with
// `validate` set, equal-keyed summands are additionally checked to be
// homotopy-isomorphic.
class SearchContext {
  public:
    explicit SearchContext(const BasedAlgebra& a, bool validate = false);

    const BasedAlgebra& algebra() const { return a_; }
    bool validating() const { return validate_; }

    int intern(TwoTermComplex cx);
    const Summand& summand(int id) const { return summands_[id]; }
    size_t summand_count() const { return summands_.size(); }

    std::shared_ptr<const HomSpace> hom(int from, int to);
    std::shared_ptr<const RadEndData> rad_end(int id);

    int stalk_id(int v) const { return stalks_[v - 1]; }
    int shift_id(int v) const { return shifts_[v - 1]; }

  private:
    const BasedAlgebra& a_;
    bool validate_;
    mutable std::mutex mtx_;
    std::deque<Summand> summands_;
    std::map<GVec, int> by_g_;
    std::unordered_map<uint64_t, std::shared_ptr<const HomSpace>> homs_;
    std::unordered_map<int, std::shared_ptr<const RadEndData>> rads_;
    std::vector<int> stalks_, shifts_;
};

bool is_homotopy_iso(const BasedAlgebra& a, const TwoTermComplex& x, const TwoTermComplex& y);

struct Approximation {
    std::vector<int> mult;  // copies of each target summand
    TwoTermComplex z;
    ChainMap f;  // X -> Z
};

// Minimal left add(Y)-approximation of X into the listed summands.
Approximation minimal_left_approximation(SearchContext& ctx, int x_id,
                                         const std::vector<int>& y_ids);

// Replace summand k of the object by the cone of its minimal approximation.
// nullopt = the mutation exists in silt A but leaves the two-term window.
std::optional<std::vector<int>> left_mutation(SearchContext& ctx,
                                              const std::vector<int>& object, int k);

struct EnumerationResult {
    std::vector<std::vector<GVec>> objects;  // summand g-vectors, sorted rows
    std::vector<GVec> totals;                // total g-vector per object
    std::vector<std::pair<int, int>> arrows;  // Hasse arrows (left mutations)
    bool complete = false;
    uint64_t mutation_count = 0;

    int source_index() const;  // index of T = A (identity key); -1 if absent
    int sink_index() const;    // index of T = A[1]; -1 if absent
};

inline constexpr uint64_t kDefaultBudget = 500000;

// Over an algebra with infinitely many two-term silting complexes the objects
// grow in size, not only in number, so the object budget alone cannot bound
// the work.  A mutation whose result has a summand with more than
// `max_summand_size` indecomposable projectives in its two degrees stops the
// search with complete = false, deterministically.  Finite enumerations in
// scope stay far below the default.
inline constexpr int kDefaultMaxSummandSize = 32;

// BFS over 2-silt A from T = A by irreducible left mutation.  Deduplication
// is by summand g-vectors; output is canonically sorted and independent of
// the thread count.
EnumerationResult enumerate_silting(const BasedAlgebra& a, uint64_t budget = kDefaultBudget,
                                    int threads = 1, bool validate = false,
                                    int max_summand_size = kDefaultMaxSummandSize);

// |det| of the n x n matrix of summand g-vectors (exact, Bareiss).
long long g_matrix_det_abs(const std::vector<GVec>& rows);

}  // namespace siltlab
