#pragma once
#include "f4grad/errors.hpp"
#include "f4grad/linalg.hpp"

#include <vector>

namespace f4grad {

struct EigenComponent {
    std::vector<int> label;              // zeta_24 exponent per map
    std::vector<std::vector<Cyc>> basis; // rows in ambient coordinates
    int dim() const { return (int)basis.size(); }
};

// All 24th roots of unity, the default eigenvalue candidate set.
std::vector<Cyc> all_roots24();

// Joint eigenspace decomposition of a family of commuting diagonalizable
// maps. Components are labeled by eigenvalue exponent tuples; empty
// intersections are omitted. Throws CommutatorNonzero when two maps fail to
// commute and EigenvalueOutsideCandidates when the eigenspaces of one map
// do not fill the space.
std::vector<EigenComponent>
simultaneous_eigenspaces(const std::vector<MatC>& maps,
                         const std::vector<Cyc>& candidates = all_roots24());

} // namespace f4grad
