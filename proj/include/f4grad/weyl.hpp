#pragma once
#include "f4grad/f4lie.hpp"
#include "f4grad/intlinalg.hpp"

#include <array>
#include <optional>
#include <set>
#include <vector>

namespace f4grad {

using Mat4 = std::array<std::array<int, 4>, 4>;

// Torus point of Ad(T0), either with concrete zeta_24 exponents per
// coordinate or with symbolic free directions (for stabilizer queries).
struct TorusPoint {
    std::array<int, 4> zeta_exp{};             // finite part, mod 24
    std::vector<std::array<int, 4>> free_dirs; // symbolic one-param directions
    static TorusPoint identity() { return {}; }
    static TorusPoint from_exponents(std::array<int, 4> e) { return {e, {}}; }
};

struct ConjugacyClass {
    int representative; // 1-based index, minimal in the class
    int order;
    int size;
};

// Generators of T^sigma_j: finite part as (exponent vector, order) pairs and
// saturated kernel-lattice columns for the continuous factors.
struct TorusFixedSubgroup {
    AbelianGroup structure;
    std::vector<std::pair<std::array<int, 4>, long long>> torsion; // zeta exps
    std::vector<std::array<int, 4>> continuous;                    // directions
};

// A concrete generator list for the quasitorus A(j,t): the lift sigma~_j t
// plus torsion generators of T^sigma_j and one surrogate root of unity per
// continuous factor (order recorded).
struct QuasitorusGenerators {
    int j = 0;
    std::vector<AlgebraMap> maps;      // on f4, lift first
    std::vector<int> surrogate_orders; // per continuous factor
};

class WeylGroup {
  public:
    WeylGroup(); // generates and sorts all 1152 elements

    int size() const { return (int)elems_.size(); }
    const Mat4& matrix(int j) const { return elems_[j - 1]; } // 1-based
    int index_of(const Mat4& m) const;                        // 1-based
    int multiply(int i, int j) const;                         // index of product
    int element_order(int j) const;

    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    std::vector<int> representative_indices() const;

    // action on the torus: sigma_j . t'_{x,y,z,u} has exponent matrix
    // B_j = m sigma_j m^-1
    IntMat action_matrix(int j) const;
    TorusPoint act(int j, const TorusPoint& t) const;
    bool fixes(int j, const TorusPoint& t) const;

    AbelianGroup fixed_subgroup_structure(int j) const;
    TorusFixedSubgroup fixed_subgroup(int j) const; // paper generators where printed

    // { i : sigma_i . t = t }, scanning all 1152 actions
    std::vector<int> stabilizer_indices(const TorusPoint& t) const;
    std::vector<int> stabilizer_indices(const std::vector<TorusPoint>& ts) const;

    // the lift sigma~ in the basis B', certified as an automorphism of f4
    const AlgebraMap& sigma_tilde(int j) const;

    QuasitorusGenerators quasitorus_A(int j, const TorusPoint& t) const;

    // bounded search for the Appendix element psi inside the normalizer;
    // returns the witness (j, t) or nullopt (inconclusive by design: psi
    // cannot lie in N, since it must map a torus element to sigma~_105).
    std::optional<std::pair<int, TorusPoint>> appendix_psi_search(int max_candidates = 1152) const;

  private:
    std::vector<Mat4> elems_;
    std::vector<ConjugacyClass> classes_;
    std::vector<IntMat> action_;  // cached B_j
    mutable std::vector<std::optional<AlgebraMap>> lifts_;
};

const WeylGroup& weyl();

} // namespace f4grad
