#include "siltlab/fp.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace siltlab {

fp_t fp_inv(fp_t a, uint32_t p) {
    if (a == 0) throw std::domain_error("fp_inv: zero has no inverse");
    // extended Euclid on (a, p)
    int64_t t = 0, newt = 1;
    int64_t r = p, newr = a;
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::domain_error("fp_inv: modulus not prime to argument");
    if (t < 0) t += p;
    return static_cast<fp_t>(t);
}

FMatrix FMatrix::identity(size_t n, uint32_t p) {
    FMatrix m(n, n, p);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void FMatrix::append_row(std::span<const fp_t> v) {
    assert(v.size() == cols_);
    a_.insert(a_.end(), v.begin(), v.end());
    ++rows_;
}

FMatrix transpose(const FMatrix& m) {
    FMatrix t(m.cols(), m.rows(), m.prime());
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) t.at(c, r) = m.at(r, c);
    return t;
}

FMatrix matmul(const FMatrix& a, const FMatrix& b) {
    assert(a.cols() == b.rows());
    const uint32_t p = a.prime();
    FMatrix c(a.rows(), b.cols(), p);
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            fp_t aik = a.at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = fp_add(c.at(i, j), fp_mul(aik, b.at(k, j), p), p);
        }
    return c;
}

std::vector<fp_t> matvec(const FMatrix& m, std::span<const fp_t> v) {
    assert(v.size() == m.cols());
    std::vector<fp_t> out(m.rows(), 0);
    const uint32_t p = m.prime();
    for (size_t r = 0; r < m.rows(); ++r) {
        uint64_t acc = 0;
        for (size_t c = 0; c < m.cols(); ++c) acc += uint64_t(m.at(r, c)) * v[c];
        out[r] = static_cast<fp_t>(acc % p);
    }
    return out;
}

namespace {

// Bit-packed elimination over F_2: rows of 64-bit words.
struct Bits {
    size_t rows = 0, cols = 0, words = 0;
    std::vector<uint64_t> w;

    Bits(size_t r, size_t c) : rows(r), cols(c), words((c + 63) / 64), w(r * words, 0) {}

    uint64_t* row(size_t r) { return w.data() + r * words; }
    const uint64_t* row(size_t r) const { return w.data() + r * words; }
    void set(size_t r, size_t c) { row(r)[c >> 6] |= uint64_t(1) << (c & 63); }
    bool get(size_t r, size_t c) const { return (row(r)[c >> 6] >> (c & 63)) & 1; }
    void xor_into(size_t dst, size_t src) {
        uint64_t* d = row(dst);
        const uint64_t* s = row(src);
        for (size_t i = 0; i < words; ++i) d[i] ^= s[i];
    }
    void swap_rows(size_t x, size_t y) {
        if (x == y) return;
        uint64_t* a = row(x);
        uint64_t* b = row(y);
        for (size_t i = 0; i < words; ++i) std::swap(a[i], b[i]);
    }
};

Bits pack(const FMatrix& m) {
    Bits b(m.rows(), m.cols());
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c)) b.set(r, c);
    return b;
}

std::vector<uint64_t> pack_row(std::span<const fp_t> v, size_t words) {
    std::vector<uint64_t> out(words, 0);
    for (size_t c = 0; c < v.size(); ++c)
        if (v[c] & 1) out[c >> 6] |= uint64_t(1) << (c & 63);
    return out;
}

// Full reduced row echelon form in place; returns the pivot columns.
// `maxcol` restricts pivots to the first maxcol columns.
std::vector<size_t> eliminate2(Bits& m, size_t maxcol) {
    std::vector<size_t> pivots;
    size_t lead = 0;
    for (size_t c = 0; c < maxcol && lead < m.rows; ++c) {
        size_t piv = lead;
        while (piv < m.rows && !m.get(piv, c)) ++piv;
        if (piv == m.rows) continue;
        m.swap_rows(piv, lead);
        for (size_t r = 0; r < m.rows; ++r)
            if (r != lead && m.get(r, c)) m.xor_into(r, lead);
        pivots.push_back(c);
        ++lead;
    }
    return pivots;
}

size_t rank2(const FMatrix& mm) {
    Bits m = pack(mm);
    // forward elimination only
    size_t lead = 0;
    for (size_t c = 0; c < m.cols && lead < m.rows; ++c) {
        size_t piv = lead;
        while (piv < m.rows && !m.get(piv, c)) ++piv;
        if (piv == m.rows) continue;
        m.swap_rows(piv, lead);
        for (size_t r = lead + 1; r < m.rows; ++r)
            if (m.get(r, c)) m.xor_into(r, lead);
        ++lead;
    }
    return lead;
}

RrefResult rref2(const FMatrix& mm) {
    Bits m = pack(mm);
    RrefResult res;
    res.pivot_cols = eliminate2(m, m.cols);
    res.rank = res.pivot_cols.size();
    res.r = FMatrix(mm.rows(), mm.cols(), 2);
    for (size_t r = 0; r < mm.rows(); ++r)
        for (size_t c = 0; c < mm.cols(); ++c)
            if (m.get(r, c)) res.r.at(r, c) = 1;
    return res;
}

}  // namespace

RrefResult rref(FMatrix m) {
    const uint32_t p = m.prime();
    if (p == 2) return rref2(m);
    RrefResult res;
    size_t lead = 0;
    for (size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        size_t piv = lead;
        while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != lead)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(lead, j));
        fp_t inv = fp_inv(m.at(lead, c), p);
        for (size_t j = c; j < m.cols(); ++j) m.at(lead, j) = fp_mul(m.at(lead, j), inv, p);
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == lead) continue;
            fp_t f = m.at(r, c);
            if (f == 0) continue;
            for (size_t j = c; j < m.cols(); ++j)
                m.at(r, j) = fp_sub(m.at(r, j), fp_mul(f, m.at(lead, j), p), p);
        }
        res.pivot_cols.push_back(c);
        ++lead;
    }
    res.rank = res.pivot_cols.size();
    res.r = std::move(m);
    return res;
}

size_t rank(const FMatrix& m) {
    if (m.prime() == 2) return rank2(m);
    return rref(m).rank;
}

std::vector<std::vector<fp_t>> kernel_basis(const FMatrix& m) {
    const uint32_t p = m.prime();
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<fp_t>> basis;
    for (size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<fp_t> v(m.cols(), 0);
        v[free] = 1;
        for (size_t i = 0; i < rr.rank; ++i)
            v[rr.pivot_cols[i]] = fp_neg(rr.r.at(i, free), p);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<fp_t>> solve(const FMatrix& m, std::span<const fp_t> b) {
    assert(b.size() == m.rows());
    const uint32_t p = m.prime();
    FMatrix aug(m.rows(), m.cols() + 1, p);
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    RrefResult rr = rref(std::move(aug));
    std::vector<fp_t> x(m.cols(), 0);
    for (size_t i = 0; i < rr.rank; ++i) {
        size_t c = rr.pivot_cols[i];
        if (c == m.cols()) return std::nullopt;  // pivot in the RHS column
        x[c] = rr.r.at(i, m.cols());
    }
    return x;
}

bool RowSpace::absorb(std::span<const fp_t> v) {
    if (p_ == 2) {
        std::vector<uint64_t> w = pack_row(v, words_);
        for (size_t i = 0; i < prows_.size(); ++i)
            if ((w[pivots_[i] >> 6] >> (pivots_[i] & 63)) & 1)
                for (size_t k = 0; k < words_; ++k) w[k] ^= prows_[i][k];
        size_t piv = width_;
        for (size_t k = 0; k < words_ && piv == width_; ++k)
            if (w[k]) piv = k * 64 + std::countr_zero(w[k]);
        if (piv >= width_) return false;
        for (size_t i = 0; i < prows_.size(); ++i)
            if ((prows_[i][piv >> 6] >> (piv & 63)) & 1)
                for (size_t k = 0; k < words_; ++k) prows_[i][k] ^= w[k];
        prows_.push_back(std::move(w));
        pivots_.push_back(piv);
        return true;
    }
    std::vector<fp_t> w = reduce(v);
    size_t piv = 0;
    while (piv < width_ && w[piv] == 0) ++piv;
    if (piv == width_) return false;
    fp_t inv = fp_inv(w[piv], p_);
    for (auto& x : w) x = fp_mul(x, inv, p_);
    // keep earlier rows reduced against the new one
    for (size_t i = 0; i < rows_.size(); ++i) {
        fp_t f = rows_[i][piv];
        if (f == 0) continue;
        for (size_t j = piv; j < width_; ++j)
            rows_[i][j] = fp_sub(rows_[i][j], fp_mul(f, w[j], p_), p_);
    }
    rows_.push_back(std::move(w));
    pivots_.push_back(piv);
    return true;
}

std::vector<fp_t> RowSpace::reduce(std::span<const fp_t> v) const {
    assert(v.size() == width_);
    if (p_ == 2) {
        std::vector<uint64_t> w = pack_row(v, words_);
        for (size_t i = 0; i < prows_.size(); ++i)
            if ((w[pivots_[i] >> 6] >> (pivots_[i] & 63)) & 1)
                for (size_t k = 0; k < words_; ++k) w[k] ^= prows_[i][k];
        std::vector<fp_t> out(width_, 0);
        for (size_t c = 0; c < width_; ++c) out[c] = (w[c >> 6] >> (c & 63)) & 1;
        return out;
    }
    std::vector<fp_t> w(v.begin(), v.end());
    for (size_t i = 0; i < rows_.size(); ++i) {
        fp_t f = w[pivots_[i]];
        if (f == 0) continue;
        for (size_t j = pivots_[i]; j < width_; ++j)
            w[j] = fp_sub(w[j], fp_mul(f, rows_[i][j], p_), p_);
    }
    return w;
}

bool RowSpace::contains(std::span<const fp_t> v) const {
    auto w = reduce(v);
    for (fp_t x : w)
        if (x != 0) return false;
    return true;
}

RowSolver::RowSolver(const FMatrix& b) : height_(b.rows()), p_(b.prime()), width_(b.cols()) {
    if (p_ == 2) {
        // eliminate [B | I], pivots restricted to the B part
        Bits m(b.rows(), b.cols() + b.rows());
        for (size_t r = 0; r < b.rows(); ++r) {
            for (size_t c = 0; c < b.cols(); ++c)
                if (b.at(r, c)) m.set(r, c);
            m.set(r, b.cols() + r);
        }
        pivots_ = eliminate2(m, b.cols());
        if (pivots_.size() != b.rows())
            throw std::invalid_argument("RowSolver: rows are linearly dependent");
        size_t bw = (b.cols() + 63) / 64, tw = (b.rows() + 63) / 64;
        pr_.assign(b.rows(), std::vector<uint64_t>(bw, 0));
        pt_.assign(b.rows(), std::vector<uint64_t>(tw, 0));
        for (size_t r = 0; r < b.rows(); ++r) {
            for (size_t c = 0; c < b.cols(); ++c)
                if (m.get(r, c)) pr_[r][c >> 6] |= uint64_t(1) << (c & 63);
            for (size_t c = 0; c < b.rows(); ++c)
                if (m.get(r, b.cols() + c)) pt_[r][c >> 6] |= uint64_t(1) << (c & 63);
        }
        return;
    }
    // generic: row-reduce [B | I] tracking the transform
    FMatrix m = b;
    FMatrix t = FMatrix::identity(b.rows(), p_);
    size_t lead = 0;
    for (size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
        size_t piv = lead;
        while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != lead) {
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(lead, j));
            for (size_t j = 0; j < t.cols(); ++j) std::swap(t.at(piv, j), t.at(lead, j));
        }
        fp_t inv = fp_inv(m.at(lead, c), p_);
        for (size_t j = 0; j < m.cols(); ++j) m.at(lead, j) = fp_mul(m.at(lead, j), inv, p_);
        for (size_t j = 0; j < t.cols(); ++j) t.at(lead, j) = fp_mul(t.at(lead, j), inv, p_);
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == lead) continue;
            fp_t f = m.at(r, c);
            if (f == 0) continue;
            for (size_t j = 0; j < m.cols(); ++j)
                m.at(r, j) = fp_sub(m.at(r, j), fp_mul(f, m.at(lead, j), p_), p_);
            for (size_t j = 0; j < t.cols(); ++j)
                t.at(r, j) = fp_sub(t.at(r, j), fp_mul(f, t.at(lead, j), p_), p_);
        }
        pivots_.push_back(c);
        ++lead;
    }
    if (pivots_.size() != b.rows())
        throw std::invalid_argument("RowSolver: rows are linearly dependent");
    r_ = std::move(m);
    t_ = std::move(t);
}

std::optional<std::vector<fp_t>> RowSolver::solve(std::span<const fp_t> v) const {
    assert(v.size() == width_);
    if (p_ == 2) {
        size_t bw = (width_ + 63) / 64;
        std::vector<uint64_t> w = pack_row(v, bw);
        size_t tw = (height_ + 63) / 64;
        std::vector<uint64_t> x(tw, 0);
        for (size_t i = 0; i < height_; ++i) {
            if ((w[pivots_[i] >> 6] >> (pivots_[i] & 63)) & 1) {
                for (size_t k = 0; k < bw; ++k) w[k] ^= pr_[i][k];
                for (size_t k = 0; k < tw; ++k) x[k] ^= pt_[i][k];
            }
        }
        for (uint64_t word : w)
            if (word) return std::nullopt;
        std::vector<fp_t> out(height_, 0);
        for (size_t c = 0; c < height_; ++c) out[c] = (x[c >> 6] >> (c & 63)) & 1;
        return out;
    }
    std::vector<fp_t> w(v.begin(), v.end());
    std::vector<fp_t> coeff(height_, 0);
    for (size_t i = 0; i < height_; ++i) {
        fp_t f = w[pivots_[i]];
        coeff[i] = f;
        if (f == 0) continue;
        for (size_t j = pivots_[i]; j < r_.cols(); ++j)
            w[j] = fp_sub(w[j], fp_mul(f, r_.at(i, j), p_), p_);
    }
    for (fp_t x : w)
        if (x != 0) return std::nullopt;
    // v = coeff * R = coeff * T * B, so x = coeff * T
    std::vector<fp_t> x(height_, 0);
    for (size_t j = 0; j < height_; ++j) {
        uint64_t acc = 0;
        for (size_t i = 0; i < height_; ++i) acc += uint64_t(coeff[i]) * t_.at(i, j);
        x[j] = static_cast<fp_t>(acc % p_);
    }
    return x;
}

}  // namespace siltlab
