#pragma once
#include "f4grad/errors.hpp"
#include "f4grad/linalg.hpp"

#include <string>
#include <vector>

namespace f4grad {

enum class Flavor { Jordan, Associative, Alternative, Lie };

// Finite-dimensional algebra given by structure constants over Q.
// prod[i][j] is the sparse expansion of e_i * e_j in the basis.
struct AlgebraTable {
    std::string name;
    int dim = 0;
    Flavor flavor = Flavor::Jordan;
    std::vector<std::string> basis_names;
    std::vector<std::vector<SparseRow<Rat>>> prod;

    void init(std::string nm, int d, Flavor f) {
        name = std::move(nm);
        dim = d;
        flavor = f;
        basis_names.assign(d, "");
        prod.assign(d, std::vector<SparseRow<Rat>>(d));
    }

    void set_product(int i, int j, SparseRow<Rat> v) { prod[i][j] = std::move(v); }

    template <class S>
    std::vector<S> mul(const std::vector<S>& u, const std::vector<S>& v) const {
        std::vector<S> out(dim, S(0));
        for (int i = 0; i < dim; ++i) {
            if (is_zero(u[i])) continue;
            for (int j = 0; j < dim; ++j) {
                if (is_zero(v[j])) continue;
                S uv = u[i] * v[j];
                for (const auto& [k, c] : prod[i][j]) out[k] += uv * S(c);
            }
        }
        return out;
    }

    // e_i * v
    template <class S> std::vector<S> mul_left_basis(int i, const std::vector<S>& v) const {
        std::vector<S> out(dim, S(0));
        for (int j = 0; j < dim; ++j) {
            if (is_zero(v[j])) continue;
            for (const auto& [k, c] : prod[i][j]) out[k] += v[j] * S(c);
        }
        return out;
    }

    // Right multiplication operator R_v : x -> x*v as a dense matrix over Q.
    MatQ right_mul_operator(const std::vector<Rat>& v) const;

    // Exhaustive flavor identities on the basis (commutativity, alternativity
    // via the alternating associator, associativity, or anticommutativity +
    // Jacobi). Returns false and a reason when one fails.
    bool check_flavor(std::string* why = nullptr) const;
};

// Linear endomorphism of an algebra, column-action on coordinates.
struct AlgebraMap {
    const AlgebraTable* alg = nullptr;
    MatC m;

    AlgebraMap() = default;
    AlgebraMap(const AlgebraTable& a, MatC mat) : alg(&a), m(std::move(mat)) {}

    int dim() const { return (int)m.rows(); }
    std::vector<Cyc> apply(const std::vector<Cyc>& v) const;
    AlgebraMap compose(const AlgebraMap& o) const { return {*alg, (m * o.m).eval()}; }
    AlgebraMap inverse() const { return {*alg, inverse_of(m)}; }
    std::optional<int> order(int max_order = 200) const { return matrix_order(m, max_order); }

    static AlgebraMap identity(const AlgebraTable& a);
    static AlgebraMap diagonal(const AlgebraTable& a, const std::vector<Cyc>& d);
    static AlgebraMap from_rat(const AlgebraTable& a, const MatQ& mq);
};

bool is_automorphism(const AlgebraMap& f);
bool is_derivation(const AlgebraMap& d);

// Span of vectors closed under the ambient product, with its own structure
// constants (over Q(zeta24)); the carrier for fixed subalgebras and grading
// zero components.
struct Subalgebra {
    const AlgebraTable* ambient = nullptr;
    std::vector<std::vector<Cyc>> basis; // rows
    std::vector<std::vector<SparseRow<Cyc>>> prod;

    int dim() const { return (int)basis.size(); }
};

// Builds the internal product table of a span; throws NotClosedUnderBracket
// when some product of basis vectors leaves the span.
Subalgebra close_span(const AlgebraTable& ambient, std::vector<std::vector<Cyc>> basis_rows);

// Joint fixed space of a set of automorphisms, certified bracket-closed.
Subalgebra fixed_subalgebra(const AlgebraTable& L, const std::vector<AlgebraMap>& maps);

// Rank estimate: minimum of dim ker(ad x) over the deterministic generic
// samples (1,2,3,...), (1,4,9,...), (1,2,4,...). For reductive L this is the
// rank; cross-checked against the literature values in the tests.
int lie_rank(const Subalgebra& L);
int lie_rank(const AlgebraTable& L);

// Basis of all derivations by the full linear solve d(e_i e_j) =
// d(e_i) e_j + e_i d(e_j), as dim x dim matrices over Q.
std::vector<MatQ> full_derivation_solve(const AlgebraTable& A);

// Derivation algebra packaged as a Lie algebra table plus the operators
// realizing the basis. Uses the full solve.
struct DerivationAlgebra {
    AlgebraTable lie;
    std::vector<MatQ> ops;
};
DerivationAlgebra derivation_algebra(const AlgebraTable& A);

// Coefficients (Tr, Q, N) of the exact cubic x^3 - Tr x^2 + Q x - N 1 = 0
// satisfied by x in a unital degree-3 Jordan algebra; solved linearly from
// the computed powers, no closed-form transcription. unit = coordinates of 1.
struct CubicCoefficients {
    Cyc tr, q, n;
};
std::optional<CubicCoefficients> cubic_coefficients(const AlgebraTable& A,
                                                    const std::vector<Cyc>& unit,
                                                    const std::vector<Cyc>& x);

// Same coefficients from the generic trace form via power sums
// (q = (s1^2 - s2)/2, n = (s1^3 - 3 s1 s2 + 2 s3)/6); `identity` reports
// whether x^3 - tr x^2 + q x - n 1 vanished exactly.
struct CubicForms {
    Cyc tr, q, n;
    bool identity = false;
};
template <class Trace>
CubicForms cubic_via_trace(const AlgebraTable& A, const std::vector<Cyc>& unit, Trace&& trace,
                           const std::vector<Cyc>& x) {
    auto x2 = A.mul(x, x);
    auto x3 = A.mul(x2, x);
    Cyc s1 = trace(x), s2 = trace(x2), s3 = trace(x3);
    CubicForms f;
    f.tr = s1;
    f.q = (s1 * s1 - s2) * Cyc(Rat(1, 2));
    f.n = (s1 * s1 * s1 - Cyc(3) * s1 * s2 + Cyc(2) * s3) * Cyc(Rat(1, 6));
    f.identity = true;
    for (int k = 0; k < A.dim; ++k) {
        Cyc lhs = x3[k] - f.tr * x2[k] + f.q * x[k] - f.n * unit[k];
        if (!lhs.is_zero()) {
            f.identity = false;
            break;
        }
    }
    return f;
}

// Minimal polynomial of a square matrix over Q(zeta24), lowest-degree monic
// p with p(M) = 0; coefficients ascending.
std::vector<Cyc> minimal_polynomial(const MatC& M);
bool squarefree(const std::vector<Cyc>& poly);

} // namespace f4grad
