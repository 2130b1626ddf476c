#pragma once

#include <memory>

#include "siltlab/algebra.hpp"

namespace siltlab {

// Matrix of maps between sums of indecomposable projectives.  Row r carries
// the codomain summand P_{rows[r]}, column c the domain summand P_{cols[c]};
// the (r,c) entry is an element of Hom(P_cols[c], P_rows[r]) = peirce(rows[r],
// cols[c]), stored in local coordinates.  Composition of such matrices tracks
// composition of maps entry by entry.
struct AlgMatrix {
    std::vector<int> rows, cols;
    std::vector<std::vector<fp_t>> ent;

    std::vector<fp_t>& at(size_t r, size_t c) { return ent[r * cols.size() + c]; }
    const std::vector<fp_t>& at(size_t r, size_t c) const { return ent[r * cols.size() + c]; }

    void remove_row(size_t r);
    void remove_col(size_t c);
};

AlgMatrix alg_zero(const BasedAlgebra& a, std::vector<int> rows, std::vector<int> cols);
AlgMatrix alg_identity(const BasedAlgebra& a, const std::vector<int>& verts);
// g after f
AlgMatrix alg_compose(const BasedAlgebra& a, const AlgMatrix& g, const AlgMatrix& f);
bool alg_is_zero(const AlgMatrix& m);

// Complex of projectives in degrees -1, 0.
struct TwoTermComplex {
    AlgMatrix d;  // rows = degree 0 summands, cols = degree -1 summands

    const std::vector<int>& deg0() const { return d.rows; }
    const std::vector<int>& degm1() const { return d.cols; }
};

TwoTermComplex stalk(const BasedAlgebra& a, int v);    // (0 -> P_v)
TwoTermComplex shifted(const BasedAlgebra& a, int v);  // (P_v -> 0)
TwoTermComplex direct_sum(const BasedAlgebra& a, const TwoTermComplex& t,
                          const TwoTermComplex& u);

bool is_minimal(const BasedAlgebra& a, const TwoTermComplex& t);
// Degree-0 minus degree-(-1) multiplicities; requires a minimal complex.
std::vector<int> g_vector(const BasedAlgebra& a, const TwoTermComplex& t);
std::vector<int> h0_dimension_vector(const BasedAlgebra& a, const TwoTermComplex& t);

struct ChainMap {
    AlgMatrix f0;   // deg0(T) -> deg0(U)
    AlgMatrix fm1;  // degm1(T) -> degm1(U)
};

ChainMap identity_map(const BasedAlgebra& a, const TwoTermComplex& t);
ChainMap compose(const BasedAlgebra& a, const ChainMap& g, const ChainMap& f);

// Hom_{K^b(proj A)}(T, U): chain maps modulo homotopy, with stored class
// representatives and class coordinates for arbitrary chain maps.
class HomSpace {
  public:
    HomSpace(const BasedAlgebra& a, const TwoTermComplex& t, const TwoTermComplex& u);

    int dim() const { return static_cast<int>(reps_.size()); }
    const std::vector<ChainMap>& reps() const { return reps_; }

    std::vector<fp_t> class_coords(const ChainMap& f) const;
    ChainMap from_class(std::span<const fp_t> c) const;

  private:
    std::vector<fp_t> flatten(const ChainMap& f) const;

    const BasedAlgebra& a_;
    TwoTermComplex t_, u_;
    size_t d0_ = 0, d1_ = 0;
    std::vector<ChainMap> reps_;
    FMatrix span_rows_;  // homotopy-image basis rows, then representative rows
    size_t h_rank_ = 0;
    std::unique_ptr<RowSolver> solver_;
};

int hom_degree0_dim(const BasedAlgebra& a, const TwoTermComplex& t, const TwoTermComplex& u);

// dim Hom_K(T, U[1]); for two-term complexes shifts >= 2 vanish identically.
int hom_shift1(const BasedAlgebra& a, const TwoTermComplex& t, const TwoTermComplex& u);

bool is_presilting(const BasedAlgebra& a, const std::vector<TwoTermComplex>& summands);
// Presilting with |A| pairwise distinct indecomposable summands.
bool is_two_term_silting(const BasedAlgebra& a, const std::vector<TwoTermComplex>& summands);

// Complex of projectives in degrees -2..0.
struct Complex3 {
    AlgMatrix d2;  // rows = degree -1, cols = degree -2
    AlgMatrix d1;  // rows = degree 0, cols = degree -1

    const std::vector<int>& degm2() const { return d2.cols; }
    const std::vector<int>& degm1() const { return d1.cols; }
    const std::vector<int>& deg0() const { return d1.rows; }
};

Complex3 as_complex3(const BasedAlgebra& a, const TwoTermComplex& t);
// Cone of f : X -> Z over two-term complexes, with
// d_cone = [[-d_X, 0], [f, d_Z]].
Complex3 cone(const BasedAlgebra& a, const ChainMap& f, const TwoTermComplex& x,
              const TwoTermComplex& z);

// Gaussian elimination of contractible summands, in place.
void minimize(const BasedAlgebra& a, Complex3& c);

// Requires empty degree -2; returns the two-term complex with summands sorted
// by vertex.
TwoTermComplex take_two_term(const BasedAlgebra& a, const Complex3& c);

}  // namespace siltlab
