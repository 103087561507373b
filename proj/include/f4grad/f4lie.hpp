#pragma once
#include "f4grad/algebra.hpp"
#include "f4grad/intlinalg.hpp"
#include "f4grad/jordan.hpp"

#include <array>
#include <map>
#include <memory>

namespace f4grad {

using Root4 = std::array<int, 4>;

// f4 = Der(J) in the standard basis B' = (t_a1, t_a2, t_a3, t_a4, b_1..b_48):
// the b_k are the operator commutators [R_wi, R_wj] of the fixed pair list,
// the Cartan elements are 4[b4,b28], 4[b27,b3], 8[b26,b2], 8[b25,b1].
// Everything the construction claims is certified while building: linear
// independence, bracket closure, the root-vector property, the positive
// root list, and the Cartan matrix.
class F4Model {
  public:
    F4Model();

    const AlgebraTable& lie() const { return f4_; }
    const std::vector<SpMat<Rat>>& ops() const { return ops_; } // 27x27 each

    // root of basis slot k (4 <= k < 52) in Delta coordinates
    const Root4& root(int k) const { return roots_[k - 4]; }
    int root_slot(const Root4& r) const; // -1 when r is not a root
    const std::vector<Root4>& positive_roots() const { return positive_; }

    const IntMat& coord_change() const { return m_; }       // the matrix m
    const IntMat& exponent_matrix() const { return E_; }    // rows X,Y,Z,U
    const IntMat& cartan_matrix() const { return cartan_; }
    const MatQ& gram() const { return gram_; }

    // eigenvalue exponent of t'_{x,y,z,u} on slot k when (x,y,z,u) are the
    // zeta_24 powers a; 0 on the Cartan. Also the raw integer pairing
    // n^T E g for a one-parameter direction g (for surrogate spread checks).
    int tprime_exponent(int k, const std::array<int, 4>& a) const;
    std::vector<int> direction_exponents(const std::array<int, 4>& g) const;

    // Ad(t_{x,y,z,u}) as a diagonal map on f4; a = zeta exponents
    AlgebraMap tprime(const std::array<int, 4>& a) const;

    // Ad(f) d = f d f^-1 expressed in B'
    AlgebraMap ad_transfer(const AlgebraMap& f_on_albert) const;

    // Z^4 labels of the Cartan grading: per J basis element and per B' slot
    std::array<Root4, 27> cartan_labels_albert() const;
    std::vector<Root4> cartan_labels_f4() const;

    // unordered pairs (i,j) with [R_wi, R_wj] nonzero; the paper counts 228
    int commutator_pair_count() const { return distinct_products_; }

  private:
    void build();
    AlgebraTable f4_;
    std::vector<SpMat<Rat>> ops_;
    std::vector<Root4> roots_;     // 48, order b_1..b_48
    std::vector<Root4> positive_;  // 24
    std::map<Root4, int> root_index_;
    IntMat E_, m_, cartan_;
    MatQ gram_;
    int distinct_products_ = 0;
    mutable std::unique_ptr<RowReducer<Cyc>> coords_; // B' rows over Q(zeta24)
    RowReducer<Cyc>& coords() const;
};

const F4Model& f4model();

} // namespace f4grad
