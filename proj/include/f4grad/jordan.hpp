#pragma once
#include "f4grad/algebra.hpp"
#include "f4grad/eigensplit.hpp"

#include <array>
#include <optional>
#include <string>

namespace f4grad {

// ---- Albert algebra J = H3(C) in the paper's 27-element standard basis ----
// (E1, E2, E3, e1^(3), e2^(3), u1^(3), ..., v3^(3), e2^(2), e1^(2),
//  -u1^(2), ..., -v3^(2), e1^(1), e2^(1), u1^(1), ..., v3^(1))

const AlgebraTable& albert();

// index and sign of the basis element carrying oct basis element `o` in slot
// `slot` (1, 2 or 3); E_i live at indices 0..2.
std::pair<int, int> albert_slot_index(int oct, int slot);

// coordinates of a^(slot) for octonion coordinate vector a
std::vector<Cyc> albert_embed(const std::vector<Cyc>& a, int slot);

std::vector<Cyc> albert_unit();

// diag(1,1,1, a, 1/a, b, c, d^2/(abc), ...) per the maximal torus of F4;
// exponent table exposed for the symbolic Cartan-label bookkeeping.
AlgebraMap albert_torus(const Cyc& a, const Cyc& b, const Cyc& c, const Cyc& d);
const std::array<std::array<int, 4>, 27>& albert_torus_exponents();

// extension of an automorphism of C fixing the idempotents, o^(i) -> f(o)^(i)
AlgebraMap hat_extend(const AlgebraMap& f);

// x -> p x p^-1 for p in SO(3,F); restricts to Aut(H3(F))
AlgebraMap so3_extend(const MatC& p);

// x -> p x p^t for orthogonal p (det -1 allowed); used by vartheta
AlgebraMap orthogonal_conjugation(const MatC& p);

AlgebraMap albert_theta();    // E_i -> E_{i+1}, x^(i) -> x^(i+1)
AlgebraMap albert_vartheta(); // swaps the (1) and (2) slots, conjugating

// Psi_U of the triality principle: fixes E_i, x^(1) -> U x, x^(3) -> U' x,
// x^(2) -> U'' x.
AlgebraMap psi_u(const MatC& U, const MatC& Uprime, const MatC& Udoubleprime);

// tau_{alpha,beta} = In(p_{alpha,beta}), the H3(F) torus inside F4
AlgebraMap tau(const Cyc& alpha, const Cyc& beta);
AlgebraMap in_s(); // In(-E1 + 1^(1))

// ---- H3(F), the 6-dimensional diagonal Jordan subalgebra ----

const AlgebraTable& h3f();
// restriction of a J-automorphism preserving H3(F) to the 6-dim table
AlgebraMap restrict_to_h3f(const AlgebraMap& f);

struct H3FGrading {
    std::string name;
    std::vector<AlgebraMap> generators; // on the 6-dim table
    std::vector<EigenComponent> components;
};
// the five gradings gr1..gr5 (gr1 instantiated at z = zeta_8)
std::vector<H3FGrading> h3f_gradings();

// ---- Tits construction: A^3 for A = M3(F) ----

const AlgebraTable& m3f();  // 9-dim associative matrix algebra
const AlgebraTable& tits(); // 27-dim Jordan algebra on triples

Rat m3_trace(const MatQ& x);
Rat m3_quadratic(const MatQ& x); // sum of principal 2x2 minors
Rat m3_det(const MatQ& x);

// N(a,b,c) = N(a) + N(b) + N(c) - Tr(abc)
Rat tits_norm(const MatQ& a, const MatQ& b, const MatQ& c);
Cyc tits_norm(const std::vector<Cyc>& v); // on coordinate vectors

// f^bullet(x,y,z) = (f x f^-1, ...) for f = In(p) on A, p invertible
AlgebraMap tits_bullet_in(const MatQ& p);
AlgebraMap tits_phi(); // (a0, a1, a2) -> (a0, w a1, w^2 a2)

// the Pauli pair In(diag(1,w,w^2)), In(cyclic shift)
std::pair<AlgebraMap, AlgebraMap> pauli_pair_on_m3();
std::pair<AlgebraMap, AlgebraMap> pauli_pair_on_tits();

std::vector<EigenComponent> pauli_grading(); // 9 one-dim components of M3

} // namespace f4grad
