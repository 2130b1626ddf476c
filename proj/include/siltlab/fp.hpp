#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace siltlab {

// Residues are stored reduced, in [0, p).
using fp_t = uint32_t;

fp_t fp_inv(fp_t a, uint32_t p);

inline fp_t fp_add(fp_t a, fp_t b, uint32_t p) {
    fp_t s = a + b;
    return s >= p ? s - p : s;
}
inline fp_t fp_sub(fp_t a, fp_t b, uint32_t p) { return a >= b ? a - b : a + p - b; }
inline fp_t fp_neg(fp_t a, uint32_t p) { return a == 0 ? 0 : p - a; }
inline fp_t fp_mul(fp_t a, fp_t b, uint32_t p) {
    return static_cast<fp_t>((uint64_t(a) * b) % p);
}
// Reduce an arbitrary signed integer into [0, p).
inline fp_t fp_of(long long v, uint32_t p) {
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<fp_t>(r);
}

// Dense matrix over F_p.
class FMatrix {
  public:
    FMatrix() : rows_(0), cols_(0), p_(2) {}
    FMatrix(size_t rows, size_t cols, uint32_t p)
        : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {}

    static FMatrix identity(size_t n, uint32_t p);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    uint32_t prime() const { return p_; }

    fp_t& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    fp_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    std::span<const fp_t> row(size_t r) const { return {a_.data() + r * cols_, cols_}; }
    std::span<fp_t> row(size_t r) { return {a_.data() + r * cols_, cols_}; }

    void append_row(std::span<const fp_t> v);

    bool operator==(const FMatrix& o) const = default;

  private:
    size_t rows_, cols_;
    uint32_t p_;
    std::vector<fp_t> a_;
};

FMatrix transpose(const FMatrix& m);
FMatrix matmul(const FMatrix& a, const FMatrix& b);
std::vector<fp_t> matvec(const FMatrix& m, std::span<const fp_t> v);

struct RrefResult {
    FMatrix r;
    size_t rank = 0;
    std::vector<size_t> pivot_cols;
};

RrefResult rref(FMatrix m);
size_t rank(const FMatrix& m);

// Basis of {v : M v = 0}, as column vectors of length cols(M).
std::vector<std::vector<fp_t>> kernel_basis(const FMatrix& m);

// Some x with M x = b, or nullopt when the system is inconsistent.
std::optional<std::vector<fp_t>> solve(const FMatrix& m, std::span<const fp_t> b);

// Incremental row-space tracker: rank grows as rows are absorbed.  Rows are
// bit-packed over F_2, dense otherwise.
class RowSpace {
  public:
    RowSpace(size_t width, uint32_t p)
        : width_(width), p_(p), words_((width + 63) / 64) {}

    // Returns true when the row enlarged the span.
    bool absorb(std::span<const fp_t> v);
    // Remainder of v after reduction against the stored echelon rows.
    std::vector<fp_t> reduce(std::span<const fp_t> v) const;
    bool contains(std::span<const fp_t> v) const;

    size_t rank() const { return pivots_.size(); }
    size_t width() const { return width_; }
    const std::vector<size_t>& pivot_cols() const { return pivots_; }

  private:
    size_t width_;
    uint32_t p_;
    size_t words_;
    std::vector<std::vector<fp_t>> rows_;       // echelon rows (p > 2)
    std::vector<std::vector<uint64_t>> prows_;  // packed rows (p == 2)
    std::vector<size_t> pivots_;                // pivot column per stored row
};

// Fixed full-row-rank matrix B; answers x with x B = v for rows v in the span.
class RowSolver {
  public:
    RowSolver() = default;
    explicit RowSolver(const FMatrix& b);

    std::optional<std::vector<fp_t>> solve(std::span<const fp_t> v) const;
    size_t height() const { return height_; }

  private:
    size_t height_ = 0;
    uint32_t p_ = 2;
    size_t width_ = 0;
    FMatrix r_;  // rref of B (p > 2)
    FMatrix t_;  // row-op transform, t_ * B = r_
    std::vector<std::vector<uint64_t>> pr_, pt_;  // packed variants (p == 2)
    std::vector<size_t> pivots_;
};

}  // namespace siltlab
