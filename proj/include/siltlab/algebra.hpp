#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "siltlab/errors.hpp"
#include "siltlab/fp.hpp"

namespace siltlab {

// Vertices are labeled 1..n throughout.
struct Arrow {
    std::string name;
    int from = 0;
    int to = 0;
};

struct Quiver {
    int n = 0;
    std::vector<Arrow> arrows;
};

// One summand of a relation: coeff * (arrow composite, read left to right).
// Path composition is left-to-right project-wide: "ab" traverses a, then b,
// so a path from i to j lives in e_i A e_j.
struct PathTerm {
    long long coeff = 1;
    std::vector<std::string> arrows;
};

using Relation = std::vector<PathTerm>;

// Finite-dimensional algebra with a fixed complete set of primitive
// orthogonal idempotents e_1..e_n and a basis adapted to the Peirce
// decomposition.  Elements are dense coefficient vectors over that basis.
//
// Conventions fixed here and used by every downstream module:
//   * peirce(i, j) spans the paths i -> j, i.e. e_i A e_j.
//   * Hom(P_i, P_j) for P_i = e_i A is identified with e_j A e_i
//     (= peirce(j, i)) acting by left multiplication, f = f(e_i).
//   * Composition of homs corresponds to multiplication in A in the same
//     order: (g of f) = x_g * x_f.
class BasedAlgebra {
  public:
    struct BasisElem {
        int src = 0;
        int dst = 0;
        bool radical = true;
        std::string name;
    };

    using SparseVec = std::vector<std::pair<int, fp_t>>;

    BasedAlgebra(int n, uint32_t p, std::vector<BasisElem> basis,
                 std::vector<SparseVec> mult_table);

    int vertices() const { return n_; }
    uint32_t prime() const { return p_; }
    int dim() const { return static_cast<int>(basis_.size()); }

    const BasisElem& basis(int b) const { return basis_[b]; }
    int idempotent(int v) const { return idem_[v - 1]; }
    const std::vector<int>& peirce(int i, int j) const { return peirce_[(i - 1) * n_ + (j - 1)]; }
    int peirce_dim(int i, int j) const { return static_cast<int>(peirce(i, j).size()); }
    int pos_in_peirce(int b) const { return pos_[b]; }

    // Hom(P_i, P_j) = e_j A e_i; basis indices of that component.
    const std::vector<int>& hom_basis(int i, int j) const { return peirce(j, i); }

    const SparseVec& mult(int b, int c) const { return mult_[b * dim() + c]; }

    // Dense element arithmetic.
    std::vector<fp_t> multiply(std::span<const fp_t> x, std::span<const fp_t> y) const;
    std::vector<fp_t> unit() const;
    bool is_central(std::span<const fp_t> x) const;
    bool in_radical_span(std::span<const fp_t> x) const;
    std::string print_element(std::span<const fp_t> x) const;

    // Element of peirce(i,j) from local coordinates, as a dense vector.
    std::vector<fp_t> from_peirce(int i, int j, std::span<const fp_t> local) const;

    // Product of Peirce-local elements a in pe(x,y), b in pe(y,z); result in
    // pe(x,z) local coordinates.
    std::vector<fp_t> pe_mul(int x, int y, int z, std::span<const fp_t> a,
                             std::span<const fp_t> b) const;

    // Operator matrix of b |-> m * b : pe(y,z) -> pe(x,z) for m in pe(x,y).
    FMatrix left_mult_op(int x, int y, std::span<const fp_t> m, int z) const;
    // Operator matrix of b |-> b * m : pe(z,x) -> pe(z,y) for m in pe(x,y).
    FMatrix right_mult_op(int z, std::span<const fp_t> m, int x, int y) const;

  private:
    int n_;
    uint32_t p_;
    std::vector<BasisElem> basis_;
    std::vector<SparseVec> mult_;
    std::vector<int> idem_;
    std::vector<std::vector<int>> peirce_;
    std::vector<int> pos_;
};

BasedAlgebra algebra_from_presentation(const Quiver& q, const std::vector<Relation>& rels,
                                       uint32_t p, int length_cap = 12);

// Entry (i,j) = dim peirce(i,j) = [P_i : S_j].
std::vector<std::vector<int>> cartan_matrix(const BasedAlgebra& a);

int algebra_dim_from_cartan(const std::vector<std::vector<int>>& c);

BasedAlgebra opposite(const BasedAlgebra& a);

// Quotient by the two-sided ideal generated by central radical elements.
BasedAlgebra quotient_central(const BasedAlgebra& a,
                              const std::vector<std::vector<fp_t>>& gens);

// eAe for e the sum of the idempotents in `verts` (1-based, sorted, distinct);
// vertices of the result are relabeled 1..|verts| in the given order.
BasedAlgebra idempotent_truncation(const BasedAlgebra& a, const std::vector<int>& verts);

// Shared building block for quotients, truncations and the sign-decomposition
// algebras: keep the Peirce components flagged in `keep`, reduce each modulo
// the rows already absorbed in `reducers[(i-1)*n+(j-1)]`, relabel vertices.
BasedAlgebra subquotient(const BasedAlgebra& a, const std::vector<bool>& keep,
                         std::vector<RowSpace>& reducers, const std::vector<int>& relabel,
                         int new_n);

bool radical_power_zero(const BasedAlgebra& a, int k);

// True iff some 4 distinct vertices carry a cycle of double arrows
// (arrows both ways on each of the 4 sides).
bool detect_tau_infinite_square(const Quiver& q);

}  // namespace siltlab
