#include "f4grad/octonion.hpp"

#include <array>

namespace f4grad {

namespace {

// basis indices
constexpr int E1 = 0, E2 = 1, U1 = 2, U2 = 3, U3 = 4, V1 = 5, V2 = 6, V3 = 7;

AlgebraTable build_cayley_table() {
    AlgebraTable C;
    C.init("C", 8, Flavor::Alternative);
    C.basis_names = {"e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"};
    auto set = [&](int i, int j, int k, long c) { C.prod[i][j] = {{k, Rat(c)}}; };
    set(E1, E1, E1, 1);
    set(E2, E2, E2, 1);
    for (int t = 0; t < 3; ++t) {
        int ui = U1 + t, vi = V1 + t;
        set(E1, ui, ui, 1);
        set(ui, E2, ui, 1);
        set(E2, vi, vi, 1);
        set(vi, E1, vi, 1);
        set(ui, vi, E1, 1);
        set(vi, ui, E2, 1);
    }
    // u_i u_j = v_k = -u_j u_i,  v_j v_i = u_k = -v_i v_j, (i,j,k) cyclic
    const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    for (auto [i, j, k] : cyc) {
        set(U1 + i, U1 + j, V1 + k, 1);
        set(U1 + j, U1 + i, V1 + k, -1);
        set(V1 + j, V1 + i, U1 + k, 1);
        set(V1 + i, V1 + j, U1 + k, -1);
    }
    return C;
}

} // namespace

const AlgebraTable& cayley() {
    static const AlgebraTable C = build_cayley_table();
    return C;
}

template <class S> static std::vector<S> conj_impl(const std::vector<S>& x) {
    std::vector<S> y(8, S(0));
    y[E1] = x[E2];
    y[E2] = x[E1];
    for (int k = 2; k < 8; ++k) y[k] = -x[k];
    return y;
}

std::vector<Cyc> oct_conj(const std::vector<Cyc>& x) { return conj_impl(x); }
std::vector<Rat> oct_conj(const std::vector<Rat>& x) { return conj_impl(x); }

Cyc oct_norm(const std::vector<Cyc>& x) {
    auto p = cayley().mul(x, oct_conj(x));
    // x xbar lands in F 1, 1 = e1 + e2
    if (!(p[E1] == p[E2])) throw std::logic_error("oct_norm: product not scalar");
    for (int k = 2; k < 8; ++k)
        if (!p[k].is_zero()) throw std::logic_error("oct_norm: product not scalar");
    return p[E1];
}

Cyc oct_polar(const std::vector<Cyc>& x, const std::vector<Cyc>& y) {
    std::vector<Cyc> s(8);
    for (int k = 0; k < 8; ++k) s[k] = x[k] + y[k];
    Cyc half(Rat(1, 2));
    return (oct_norm(s) - oct_norm(x) - oct_norm(y)) * half;
}

AlgebraMap g2_torus(const Cyc& alpha, const Cyc& beta) {
    if (alpha.is_zero() || beta.is_zero())
        throw std::invalid_argument("g2_torus: parameters must be nonzero");
    Cyc ai = alpha.inverse(), bi = beta.inverse();
    std::vector<Cyc> d = {Cyc(1), Cyc(1), alpha, beta, ai * bi, ai, bi, alpha * beta};
    return AlgebraMap::diagonal(cayley(), d);
}

AlgebraMap cayley_f0() {
    MatQ m(8, 8);
    m.setConstant(Rat(0));
    m(E2, E1) = 1;
    m(E1, E2) = 1;
    m(V1, U1) = 1;
    m(V2, U2) = 1;
    m(V3, U3) = -1;
    m(U1, V1) = 1;
    m(U2, V2) = 1;
    m(U3, V3) = -1;
    return AlgebraMap::from_rat(cayley(), m);
}

std::vector<AlgebraMap> cayley_z23_generators() {
    return {g2_torus(Cyc(1), Cyc(-1)), g2_torus(Cyc(-1), Cyc(1)), cayley_f0()};
}

std::vector<EigenComponent> octonion_z23_grading() {
    std::vector<MatC> maps;
    for (const auto& f : cayley_z23_generators()) maps.push_back(f.m);
    return simultaneous_eigenspaces(maps);
}

bool verify_triality(const MatC& U, const MatC& U1, const MatC& U2) {
    const AlgebraTable& C = cayley();
    auto col = [](const MatC& M, int j) {
        std::vector<Cyc> v(8);
        for (int r = 0; r < 8; ++r) v[r] = M(r, j);
        return v;
    };
    for (const MatC* M : {&U, &U1, &U2}) {
        // norm preservation via the polarized form on basis pairs
        for (int a = 0; a < 8; ++a)
            for (int b = a; b < 8; ++b) {
                std::vector<Cyc> ea(8, Cyc(0)), eb(8, Cyc(0));
                ea[a] = Cyc(1);
                eb[b] = Cyc(1);
                if (oct_polar(col(*M, a), col(*M, b)) != oct_polar(ea, eb)) return false;
            }
    }
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            std::vector<Cyc> prod(8, Cyc(0));
            for (const auto& [k, c] : C.prod[a][b])
                for (int r = 0; r < 8; ++r)
                    if (!U(r, k).is_zero()) prod[r] += U(r, k) * Cyc(c);
            if (C.mul(col(U1, a), col(U2, b)) != prod) return false;
        }
    return true;
}

namespace {

struct MonomialMap {
    std::array<int, 8> p;   // image index, -1 unknown
    std::array<Cyc, 8> c;   // scalar per column
    std::array<bool, 8> has_c;
    MonomialMap() {
        p.fill(-1);
        c.fill(Cyc(0));
        has_c.fill(false);
    }
};

struct TrialitySearch {
    const AlgebraTable& C = cayley();
    std::array<int, 8> up;  // U as monomial: image index per column
    std::array<Cyc, 8> uc;  // entry
    MonomialMap A, B;       // candidates U', U''
    std::array<bool, 8> usedA{}, usedB{};

    // single-entry product e_a e_b -> (target, coeff) or target = -1
    std::pair<int, Rat> bprod(int a, int b) const {
        const auto& s = C.prod[a][b];
        if (s.empty()) return {-1, Rat(0)};
        return {s[0].first, s[0].second};
    }

    bool zero_pattern_ok(int a, int b) const {
        if (A.p[a] < 0 || B.p[b] < 0) return true;
        auto [t, s] = bprod(a, b);
        auto [t2, s2] = bprod(A.p[a], B.p[b]);
        return (t < 0) == (t2 < 0) && (t < 0 || up[t] == t2);
    }

    bool assign(bool left, int idx, int target) {
        auto& M = left ? A : B;
        auto& used = left ? usedA : usedB;
        if (used[target]) return false;
        M.p[idx] = target;
        used[target] = true;
        for (int o = 0; o < 8; ++o) {
            if (left && !zero_pattern_ok(idx, o)) return false;
            if (!left && !zero_pattern_ok(o, idx)) return false;
        }
        return true;
    }

    bool solve_scalars() {
        // constraints A.c[a] * B.c[b] = v for nonzero products
        struct Rel { int a, b; Cyc v; };
        std::vector<Rel> rels;
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                auto [t, s] = bprod(a, b);
                if (t < 0) continue;
                auto [t2, s2] = bprod(A.p[a], B.p[b]);
                if (t2 < 0 || up[t] != t2) return false;
                // U(e_a e_b) = s * uc[t] e_{up[t]},  lhs = A.c B.c s2 e_{t2}
                rels.push_back({a, b, Cyc(s) * uc[t] / Cyc(s2)});
            }
        A.has_c.fill(false);
        B.has_c.fill(false);
        bool progress = true;
        while (progress) {
            progress = false;
            for (const auto& r : rels) {
                if (A.has_c[r.a] && B.has_c[r.b]) {
                    if (A.c[r.a] * B.c[r.b] != r.v) return false;
                } else if (A.has_c[r.a]) {
                    B.c[r.b] = r.v / A.c[r.a];
                    B.has_c[r.b] = true;
                    progress = true;
                } else if (B.has_c[r.b]) {
                    A.c[r.a] = r.v / B.c[r.b];
                    A.has_c[r.a] = true;
                    progress = true;
                }
            }
            if (!progress) {
                // gauge-fix one undetermined scalar and keep propagating
                for (const auto& r : rels)
                    if (!A.has_c[r.a] && !B.has_c[r.b]) {
                        A.c[r.a] = Cyc(1);
                        A.has_c[r.a] = true;
                        progress = true;
                        break;
                    }
            }
        }
        for (int k = 0; k < 8; ++k) {
            if (!A.has_c[k]) { A.c[k] = Cyc(1); }
            if (!B.has_c[k]) { B.c[k] = Cyc(1); }
        }
        return true;
    }

    bool search(int slot) {
        if (slot == 16) return solve_scalars();
        bool left = (slot % 2 == 0);
        int idx = slot / 2;
        auto& M = left ? A : B;
        auto& used = left ? usedA : usedB;
        for (int target = 0; target < 8; ++target) {
            auto savedA = A, savedB = B;
            auto su = usedA, sv = usedB;
            if (assign(left, idx, target) && search(slot + 1)) return true;
            A = savedA;
            B = savedB;
            usedA = su;
            usedB = sv;
            (void)M;
            (void)used;
        }
        return false;
    }
};

} // namespace

std::optional<std::pair<MatC, MatC>> monomial_triality_complements(const MatC& U) {
    TrialitySearch S;
    // decompose U as monomial
    for (int j = 0; j < 8; ++j) {
        int found = -1;
        for (int r = 0; r < 8; ++r) {
            if (U(r, j).is_zero()) continue;
            if (found >= 0) return std::nullopt; // not monomial
            found = r;
        }
        if (found < 0) return std::nullopt;
        S.up[j] = found;
        S.uc[j] = U(found, j);
    }
    if (!S.search(0)) return std::nullopt;
    MatC A(8, 8), B(8, 8);
    A.setConstant(Cyc(0));
    B.setConstant(Cyc(0));
    for (int j = 0; j < 8; ++j) {
        A(S.A.p[j], j) = S.A.c[j];
        B(S.B.p[j], j) = S.B.c[j];
    }
    // The product identity pins (U', U'') only up to (lambda U', U''/lambda);
    // re-gauge so U' preserves the norm, when the needed root stays in the field.
    {
        std::vector<Cyc> x(8, Cyc(0));
        x[U1] = Cyc(1);
        x[V1] = Cyc(1); // n(u1 + v1) = -1
        std::vector<Cyc> img(8, Cyc(0));
        for (int j = 0; j < 8; ++j)
            if (!x[j].is_zero())
                for (int r = 0; r < 8; ++r)
                    if (!A(r, j).is_zero()) img[r] += A(r, j) * x[j];
        Cyc mu = oct_norm(img) / Cyc(-1);
        if (mu != Cyc(1)) {
            auto e = mu.root_exponent();
            if (!e || (*e % 2) != 0) return std::nullopt;
            Cyc lam = Cyc::zeta(-*e / 2);
            A = (A * lam).eval();
            B = (B * lam.inverse()).eval();
        }
    }
    if (!verify_triality(U, A, B)) return std::nullopt;
    return std::make_pair(A, B);
}

} // namespace f4grad
