#pragma once
#include "f4grad/algebra.hpp"
#include "f4grad/eigensplit.hpp"
#include "f4grad/f4lie.hpp"

#include <optional>
#include <string>
#include <vector>

namespace f4grad {

// Group grading of an algebra: components labeled by tuples of residues,
// one slot per grading automorphism (modulus = order of that automorphism)
// or a free Z slot (modulus 0) for symbolically labeled gradings.
struct Grading {
    const AlgebraTable* alg = nullptr;
    std::string name;
    std::vector<int> moduli; // per label slot; 0 = free Z slot
    struct Comp {
        std::vector<int> label;
        std::vector<std::vector<Cyc>> basis;
        int dim() const { return (int)basis.size(); }
    };
    std::vector<Comp> comps;
    std::vector<AlgebraMap> provenance;

    int total_dim() const;
    const Comp* find(const std::vector<int>& label) const;
    std::vector<int> add_labels(const std::vector<int>& a, const std::vector<int>& b) const;
    std::vector<int> zero_label() const { return std::vector<int>(moduli.size(), 0); }
};

// Simultaneous diagonalization of commuting automorphisms; labels converted
// to residues modulo each map's multiplicative order.
Grading grading_from_automorphisms(std::string name, const AlgebraTable& alg,
                                   std::vector<AlgebraMap> maps);

// Exhaustive closure: every product of components lands inside the
// component of the label sum; also checks joint independence and that the
// dimensions fill the algebra. Returns an explanation on failure.
bool check_grading_closure(const Grading& g, std::string* why = nullptr);

// Dimension histogram (h_1, ..., h_l).
std::vector<int> grading_type(const Grading& g);
std::string type_string(const std::vector<int>& t);

// Universal grading group Z(Supp)/<i + j - k : 0 != V_i V_j <= V_k>.
AbelianGroup universal_group(const Grading& g);

// Torality via the rank of the zero component of the induced f4 grading.
struct ToralityReport {
    bool toral = false;
    int zero_dim = 0;
    int zero_rank = 0;
};
ToralityReport torality(const Grading& g);

// The joint fixed subalgebra in f4 of the provenance (Ad-transferred when
// the grading lives on J).
Subalgebra zero_component_in_f4(const Grading& g);

// Coarsening: keep the listed slots with new moduli (each dividing the old
// one; a free slot may be reduced to any modulus). Throws NotHomomorphic.
struct CoarsenSlot {
    int slot;
    int new_modulus;
};
Grading coarsen(const Grading& g, const std::vector<CoarsenSlot>& plan, std::string name);

// ---- fixtures: span lists transcribed from printed tables ----

struct Fixture {
    std::string name;
    const AlgebraTable* alg = nullptr;
    std::vector<int> moduli;
    struct Comp {
        std::vector<int> label;
        std::vector<std::string> spans; // textual elements
    };
    std::vector<Comp> comps;
};

struct FixtureValidation {
    bool closed = false;
    std::vector<std::string> violations;
    // single-term corrections (textual) that restore closure, when searched
    std::vector<std::string> errata;
    Fixture validated; // fixture with errata applied (equal to input if clean)
};

// element parser: names like "E1", "u2(3)", "1(2)", "b17", "t4", "e13"
std::vector<Cyc> parse_element(const AlgebraTable& alg, const std::string& text);

Fixture fixture_by_name(const std::string& name); // nt1..nt5, grad1, coar,
                                                  // ztrescubo, mm2, gr1..gr5,
                                                  // pauli, A15, A105, A405, A110-zero
FixtureValidation validate_fixture(const Fixture& f, bool search_errata = true);

// exact span comparison, components matched bijectively (label permutation)
bool matches_fixture(const Grading& g, const Fixture& f, std::string* why = nullptr);

// Certifies that a printed f4 fine-grading fixture is the A(j, t)-grading for
// some torus element t: the fixture is closed, the diagonal-on-fixture map of
// `slot` equals sigma~_j composed with a torus element, and the remaining
// slots are realized by torus elements. This is the lift-normalization
// freedom: lifts of sigma_j differ by elements of T.
bool fixture_in_lift_coset(const Fixture& f, int j, int slot, std::string* why = nullptr);

// ---- named gradings (presets) ----

// nt1..nt5, grad1, coar, ztrescubo, gr1..gr5, cartan, cartanJ, A3, A15,
// A105, A106, A110, A405, I, II, III, II1, II2, II31, II32, II41, II42
Grading preset_grading(const std::string& name);
std::vector<std::string> preset_names();

// JSON grading report (deterministic ordering)
std::string grading_report_json(const Grading& g);
std::string grading_report_table(const Grading& g);

} // namespace f4grad
