#pragma once
#include <Eigen/Core>
#include <string>
#include <vector>

namespace f4grad {

using IntMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

struct SmithForm {
    IntMat S; // diagonal with divisibility chain d_i | d_{i+1}
    IntMat U; // unimodular, S = U * M * V
    IntMat V; // unimodular
    int rank() const;
    std::vector<long long> elementary_divisors() const; // nonzero diagonal
};

// S = U M V with U, V unimodular and S diagonal, d_i | d_{i+1}, d_i >= 0.
SmithForm smith_normal_form(const IntMat& M);

// Finitely generated abelian group (F^x)^torus_rank x prod Z_{d_i},
// invariant factors in divisibility order, all >= 2.
struct AbelianGroup {
    int torus_rank = 0;
    std::vector<long long> factors;
    bool operator==(const AbelianGroup&) const = default;
    std::string str() const; // e.g. "F* x Z2^2", "Z4 x Z2", "1"
};

// Structure of {t in (F^x)^n : prod_j t_j^(M_ij) = 1 for all i}.
AbelianGroup multiplicative_kernel_structure(const IntMat& M);

// Generators of the solution group above, derived from the Smith form:
// one exponent column per continuous factor (saturated kernel lattice) and
// one (column, order) pair per finite invariant factor.
struct MultiplicativeKernelGenerators {
    std::vector<IntVec> continuous;                     // exponent vectors
    std::vector<std::pair<IntVec, long long>> torsion;  // (exponents, order)
};
MultiplicativeKernelGenerators multiplicative_kernel_generators(const IntMat& M);

// Exact integer determinant (fraction-free), for unimodularity checks.
long long det_int(const IntMat& M);

} // namespace f4grad
