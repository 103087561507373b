#pragma once
#include "f4grad/algebra.hpp"
#include "f4grad/eigensplit.hpp"

#include <optional>

namespace f4grad {

// Split Cayley algebra in the standard basis (e1, e2, u1, u2, u3, v1, v2, v3):
// e1, e2 orthogonal idempotents, u_i u_j = v_k = -u_j u_i and v_j v_i = u_k
// cyclically, u_i v_i = e1, v_i u_i = e2, all other products zero.
const AlgebraTable& cayley();

// Conjugation x -> tr(x) 1 - x (swaps e1, e2 and negates u, v).
std::vector<Cyc> oct_conj(const std::vector<Cyc>& x);
std::vector<Rat> oct_conj(const std::vector<Rat>& x);

// Norm n(x) with x xbar = n(x) 1, and the halved polar form
// f(x,y) = (n(x+y) - n(x) - n(y)) / 2.
Cyc oct_norm(const std::vector<Cyc>& x);
Cyc oct_polar(const std::vector<Cyc>& x, const std::vector<Cyc>& y);

// Maximal torus of G2: diag(1,1,a,b,(ab)^-1,a^-1,b^-1,ab).
AlgebraMap g2_torus(const Cyc& alpha, const Cyc& beta);

// Order-two automorphism completing {t_{1,-1}, t_{-1,1}} to the generators
// of the nontoral Z2^3 grading on C.
AlgebraMap cayley_f0();

// The three grading automorphisms {t_{1,-1}, t_{-1,1}, f0}.
std::vector<AlgebraMap> cayley_z23_generators();

// Joint eigenspaces of the three involutions: eight one-dimensional pieces.
std::vector<EigenComponent> octonion_z23_grading();

// U(xy) = U'(x) U''(y) on all basis pairs and all three preserve the norm.
bool verify_triality(const MatC& U, const MatC& U1, const MatC& U2);

// Searches monomial companions (U', U'') with root-of-unity entries for a
// monomial U; the only case the construction needs.
std::optional<std::pair<MatC, MatC>> monomial_triality_complements(const MatC& U);

} // namespace f4grad
