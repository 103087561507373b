#include "f4grad/jordan.hpp"
#include "f4grad/octonion.hpp"

#include <map>

namespace f4grad {

namespace {

// (i, j, k) cyclic slot triples
constexpr int CYC[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};

int cyc_third(int i, int j) {
    for (auto [a, b, c] : CYC)
        if (a == i && b == j) return c;
    return -1;
}

struct BasisInfo {
    int kind;     // 0 = E_i, 1 = octonion slot
    int e;        // which E (1..3)
    int oct;      // octonion basis index 0..7
    int slot;     // 1..3
    int sign;     // +-1 baked into the basis element
};

std::array<BasisInfo, 27> make_basis_info() {
    std::array<BasisInfo, 27> b{};
    for (int i = 0; i < 3; ++i) b[i] = {0, i + 1, -1, -1, 1};
    for (int o = 0; o < 8; ++o) b[3 + o] = {1, -1, o, 3, 1};
    b[11] = {1, -1, 1, 2, 1};  // e2^(2)
    b[12] = {1, -1, 0, 2, 1};  // e1^(2)
    for (int o = 2; o < 8; ++o) b[11 + o] = {1, -1, o, 2, -1};
    for (int o = 0; o < 8; ++o) b[19 + o] = {1, -1, o, 1, 1};
    return b;
}

const std::array<BasisInfo, 27>& basis_info() {
    static const auto b = make_basis_info();
    return b;
}

// polar form f(a,b) on octonion basis pairs
Rat polar_basis(int a, int b) {
    if ((a == 0 && b == 1) || (a == 1 && b == 0)) return Rat(1, 2);
    if (a >= 2 && b >= 2 && (a == b + 3 || b == a + 3)) return Rat(-1, 2);
    return Rat(0);
}

AlgebraTable build_albert_table() {
    const AlgebraTable& C = cayley();
    const auto& info = basis_info();
    AlgebraTable J;
    J.init("J", 27, Flavor::Jordan);
    for (int i = 0; i < 27; ++i) {
        const auto& bi = info[i];
        if (bi.kind == 0) {
            J.basis_names[i] = "E" + std::to_string(bi.e);
        } else {
            J.basis_names[i] = std::string(bi.sign < 0 ? "-" : "") + C.basis_names[bi.oct] + "(" +
                               std::to_string(bi.slot) + ")";
        }
    }
    auto add = [&](SparseRow<Rat>& row, int idx, const Rat& v) {
        if (is_zero(v)) return;
        for (auto& [k, c] : row)
            if (k == idx) {
                c += v;
                return;
            }
        row.emplace_back(idx, v);
    };
    // coordinates of a^(slot) for a a C-basis element, with basis signs
    auto slot_term = [&](int oct, int slot, const Rat& coef, SparseRow<Rat>& row) {
        int idx, sg;
        if (slot == 2) {
            if (oct == 0) { idx = 12; sg = 1; }
            else if (oct == 1) { idx = 11; sg = 1; }
            else { idx = 11 + oct; sg = -1; }
        } else {
            idx = (slot == 3 ? 3 : 19) + oct;
            sg = 1;
        }
        add(row, idx, coef * sg);
    };
    for (int x = 0; x < 27; ++x)
        for (int y = x; y < 27; ++y) {
            const auto& bx = info[x];
            const auto& by = info[y];
            SparseRow<Rat> row;
            if (bx.kind == 0 && by.kind == 0) {
                if (bx.e == by.e) add(row, x, Rat(1));
            } else if (bx.kind == 0 || by.kind == 0) {
                const auto& be = bx.kind == 0 ? bx : by;
                const auto& bo = bx.kind == 0 ? by : bx;
                if (be.e != bo.slot) slot_term(bo.oct, bo.slot, Rat(1, 2) * bo.sign, row);
            } else if (bx.slot == by.slot) {
                // a^(i) b^(i) = f(a,b)(E_j + E_k)
                Rat f = polar_basis(bx.oct, by.oct) * bx.sign * by.sign;
                if (!is_zero(f)) {
                    for (int e = 1; e <= 3; ++e)
                        if (e != bx.slot) add(row, e - 1, f);
                }
            } else {
                // a^(i) b^(j) = 1/2 (bbar abar)^(k), (i,j,k) cyclic
                int i = bx.slot, j = by.slot, a = bx.oct, b = by.oct;
                int sg = bx.sign * by.sign;
                if (cyc_third(i, j) < 0) {
                    std::swap(i, j);
                    std::swap(a, b);
                }
                int k = cyc_third(i, j);
                // conj(e_b) conj(e_a) in C
                std::vector<Rat> eb(8, Rat(0)), ea(8, Rat(0));
                eb[b] = 1;
                ea[a] = 1;
                auto p = C.mul(oct_conj(eb), oct_conj(ea));
                for (int o = 0; o < 8; ++o)
                    if (!is_zero(p[o])) slot_term(o, k, Rat(1, 2) * sg * p[o], row);
            }
            J.prod[x][y] = row;
            J.prod[y][x] = std::move(row);
        }
    return J;
}

} // namespace

const AlgebraTable& albert() {
    static const AlgebraTable J = build_albert_table();
    return J;
}

std::pair<int, int> albert_slot_index(int oct, int slot) {
    if (slot == 3) return {3 + oct, 1};
    if (slot == 1) return {19 + oct, 1};
    if (oct == 0) return {12, 1};
    if (oct == 1) return {11, 1};
    return {11 + oct, -1};
}

std::vector<Cyc> albert_embed(const std::vector<Cyc>& a, int slot) {
    std::vector<Cyc> v(27, Cyc(0));
    for (int o = 0; o < 8; ++o) {
        if (a[o].is_zero()) continue;
        auto [idx, sg] = albert_slot_index(o, slot);
        v[idx] += a[o] * Cyc(Rat(sg));
    }
    return v;
}

std::vector<Cyc> albert_unit() {
    std::vector<Cyc> v(27, Cyc(0));
    v[0] = v[1] = v[2] = Cyc(1);
    return v;
}

const std::array<std::array<int, 4>, 27>& albert_torus_exponents() {
    // eigenvalue of t_{a,b,c,d} on the k-th standard basis element, as the
    // exponent vector of the monomial in (a, b, c, d)
    static const std::array<std::array<int, 4>, 27> q = {{
        {0, 0, 0, 0},   {0, 0, 0, 0},  {0, 0, 0, 0},
        {1, 0, 0, 0},   {-1, 0, 0, 0}, {0, 1, 0, 0},  {0, 0, 1, 0},
        {-1, -1, -1, 2}, {0, -1, 0, 0}, {0, 0, -1, 0}, {1, 1, 1, -2},
        {0, 0, 0, 1},   {0, 0, 0, -1}, {1, 1, 0, -1}, {1, 0, 1, -1},
        {0, -1, -1, 1}, {-1, -1, 0, 1}, {-1, 0, -1, 1}, {0, 1, 1, -1},
        {-1, 0, 0, 1},  {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1},
        {-1, -1, -1, 1}, {0, -1, 0, 1}, {0, 0, -1, 1}, {1, 1, 1, -1},
    }};
    return q;
}

AlgebraMap albert_torus(const Cyc& a, const Cyc& b, const Cyc& c, const Cyc& d) {
    for (const Cyc* x : {&a, &b, &c, &d})
        if (x->is_zero()) throw std::invalid_argument("albert_torus: zero parameter");
    const Cyc ai = a.inverse(), bi = b.inverse(), ci = c.inverse(), di = d.inverse();
    auto pw = [&](const Cyc& base, const Cyc& binv, int e) {
        Cyc r(1);
        for (int k = 0; k < (e > 0 ? e : -e); ++k) r *= (e > 0 ? base : binv);
        return r;
    };
    std::vector<Cyc> diag(27);
    const auto& q = albert_torus_exponents();
    for (int k = 0; k < 27; ++k)
        diag[k] = pw(a, ai, q[k][0]) * pw(b, bi, q[k][1]) * pw(c, ci, q[k][2]) * pw(d, di, q[k][3]);
    return AlgebraMap::diagonal(albert(), diag);
}

AlgebraMap hat_extend(const AlgebraMap& f) {
    if (f.alg != &cayley() || !is_automorphism(f))
        throw NotAutomorphism("hat_extend: input is not an automorphism of C");
    MatC m(27, 27);
    m.setConstant(Cyc(0));
    for (int i = 0; i < 3; ++i) m(i, i) = Cyc(1);
    const auto& info = basis_info();
    for (int col = 3; col < 27; ++col) {
        const auto& bi = info[col];
        std::vector<Cyc> a(8, Cyc(0));
        a[bi.oct] = Cyc(Rat(bi.sign));
        auto img = albert_embed(f.apply(a), bi.slot);
        for (int r = 0; r < 27; ++r) m(r, col) = img[r];
    }
    return {albert(), std::move(m)};
}

namespace {

// J element as Hermitian 3x3 matrix over C: diagonal scalars and o1, o2, o3
struct Herm {
    std::array<Cyc, 3> diag;
    std::array<std::vector<Cyc>, 3> o; // o[0] = (1,2), o[1] = (1,3), o[2] = (2,3)
    Herm() {
        for (auto& v : o) v.assign(8, Cyc(0));
    }
};

Herm to_herm(const std::vector<Cyc>& v) {
    const auto& info = basis_info();
    Herm h;
    for (int i = 0; i < 3; ++i) h.diag[i] = v[i];
    for (int k = 3; k < 27; ++k) {
        if (v[k].is_zero()) continue;
        const auto& bi = info[k];
        Cyc coef = v[k] * Cyc(Rat(bi.sign)); // coefficient of raw oct^(slot)
        // a^(3): o1 = a ; a^(2): o2 = conj(a) ; a^(1): o3 = a
        if (bi.slot == 3) h.o[0][bi.oct] += coef;
        else if (bi.slot == 1) h.o[2][bi.oct] += coef;
        else {
            std::vector<Cyc> a(8, Cyc(0));
            a[bi.oct] = coef;
            auto ca = oct_conj(a);
            for (int t = 0; t < 8; ++t) h.o[1][t] += ca[t];
        }
    }
    return h;
}

std::vector<Cyc> from_herm(const Herm& h) {
    std::vector<Cyc> v(27, Cyc(0));
    for (int i = 0; i < 3; ++i) v[i] = h.diag[i];
    auto acc = [&](const std::vector<Cyc>& a, int slot) {
        auto part = albert_embed(a, slot);
        for (int t = 0; t < 27; ++t) v[t] += part[t];
    };
    acc(h.o[0], 3);
    acc(oct_conj(h.o[1]), 2);
    acc(h.o[2], 1);
    return v;
}

// p x p^t entrywise for scalar p; x Hermitian with octonion entries
Herm conj_by(const MatC& p, const Herm& x) {
    // full 3x3 matrix of x: entries m[i][j] as octonion vectors
    std::array<std::array<std::vector<Cyc>, 3>, 3> m;
    auto scal = [](const Cyc& c) {
        std::vector<Cyc> v(8, Cyc(0));
        v[0] = c;
        v[1] = c;
        return v; // c * 1 = c(e1 + e2)
    };
    m[0][0] = scal(x.diag[0]);
    m[1][1] = scal(x.diag[1]);
    m[2][2] = scal(x.diag[2]);
    m[0][1] = x.o[0];
    m[1][0] = oct_conj(x.o[0]);
    m[0][2] = x.o[1];
    m[2][0] = oct_conj(x.o[1]);
    m[1][2] = x.o[2];
    m[2][1] = oct_conj(x.o[2]);
    std::array<std::array<std::vector<Cyc>, 3>, 3> y;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            y[i][j].assign(8, Cyc(0));
            for (int k = 0; k < 3; ++k) {
                if (p(i, k).is_zero()) continue;
                for (int l = 0; l < 3; ++l) {
                    if (p(j, l).is_zero()) continue;
                    Cyc c = p(i, k) * p(j, l);
                    for (int t = 0; t < 8; ++t)
                        if (!m[k][l][t].is_zero()) y[i][j][t] += c * m[k][l][t];
                }
            }
        }
    Herm out;
    for (int i = 0; i < 3; ++i) {
        // diagonal entries are scalars c(e1+e2)
        if (!(y[i][i][0] == y[i][i][1])) throw std::logic_error("conj_by: diagonal not scalar");
        for (int t = 2; t < 8; ++t)
            if (!y[i][i][t].is_zero()) throw std::logic_error("conj_by: diagonal not scalar");
        out.diag[i] = y[i][i][0];
    }
    out.o[0] = y[0][1];
    out.o[1] = y[0][2];
    out.o[2] = y[1][2];
    return out;
}

Cyc det3(const MatC& p) {
    return p(0, 0) * (p(1, 1) * p(2, 2) - p(1, 2) * p(2, 1)) -
           p(0, 1) * (p(1, 0) * p(2, 2) - p(1, 2) * p(2, 0)) +
           p(0, 2) * (p(1, 0) * p(2, 1) - p(1, 1) * p(2, 0));
}

bool is_orthogonal3(const MatC& p) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Cyc s(0);
            for (int k = 0; k < 3; ++k) s += p(i, k) * p(j, k);
            if (s != (i == j ? Cyc(1) : Cyc(0))) return false;
        }
    return true;
}

} // namespace

AlgebraMap orthogonal_conjugation(const MatC& p) {
    if (!is_orthogonal3(p)) throw NotSpecialOrthogonal("conjugation needs p p^t = 1");
    MatC m(27, 27);
    m.setConstant(Cyc(0));
    for (int col = 0; col < 27; ++col) {
        std::vector<Cyc> e(27, Cyc(0));
        e[col] = Cyc(1);
        auto img = from_herm(conj_by(p, to_herm(e)));
        for (int r = 0; r < 27; ++r) m(r, col) = img[r];
    }
    return {albert(), std::move(m)};
}

AlgebraMap so3_extend(const MatC& p) {
    if (!is_orthogonal3(p) || det3(p) != Cyc(1))
        throw NotSpecialOrthogonal("so3_extend: need p p^t = 1 and det p = 1");
    return orthogonal_conjugation(p);
}

AlgebraMap albert_theta() {
    MatC p(3, 3);
    p.setConstant(Cyc(0));
    p(1, 0) = Cyc(1);
    p(2, 1) = Cyc(1);
    p(0, 2) = Cyc(1);
    return so3_extend(p);
}

AlgebraMap albert_vartheta() {
    MatC p(3, 3);
    p.setConstant(Cyc(0));
    p(0, 1) = Cyc(1);
    p(1, 0) = Cyc(1);
    p(2, 2) = Cyc(1);
    return orthogonal_conjugation(p);
}

AlgebraMap psi_u(const MatC& U, const MatC& Uprime, const MatC& Udoubleprime) {
    MatC m(27, 27);
    m.setConstant(Cyc(0));
    for (int i = 0; i < 3; ++i) m(i, i) = Cyc(1);
    const auto& info = basis_info();
    auto fi = [&](int slot) -> const MatC& {
        return slot == 1 ? U : (slot == 2 ? Udoubleprime : Uprime);
    };
    for (int col = 3; col < 27; ++col) {
        const auto& bi = info[col];
        const MatC& F = fi(bi.slot);
        std::vector<Cyc> a(8, Cyc(0));
        for (int r = 0; r < 8; ++r) a[r] = F(r, bi.oct) * Cyc(Rat(bi.sign));
        auto img = albert_embed(a, bi.slot);
        for (int r = 0; r < 27; ++r) m(r, col) = img[r];
    }
    return {albert(), std::move(m)};
}

AlgebraMap tau(const Cyc& alpha, const Cyc& beta) {
    if (alpha * alpha + beta * beta != Cyc(1))
        throw NotSpecialOrthogonal("tau: alpha^2 + beta^2 must be 1");
    MatC p(3, 3);
    p.setConstant(Cyc(0));
    p(0, 0) = Cyc(1);
    p(1, 1) = alpha;
    p(1, 2) = beta;
    p(2, 1) = -beta;
    p(2, 2) = alpha;
    return so3_extend(p);
}

AlgebraMap in_s() {
    MatC s(3, 3);
    s.setConstant(Cyc(0));
    s(0, 0) = Cyc(-1);
    s(1, 2) = Cyc(1);
    s(2, 1) = Cyc(1);
    return so3_extend(s);
}

// ---------------- H3(F) ----------------

namespace {

std::vector<std::vector<Cyc>> h3f_basis_in_j() {
    std::vector<std::vector<Cyc>> rows;
    for (int i = 0; i < 3; ++i) {
        std::vector<Cyc> v(27, Cyc(0));
        v[i] = Cyc(1);
        rows.push_back(v);
    }
    std::vector<Cyc> one(8, Cyc(0));
    one[0] = one[1] = Cyc(1);
    for (int slot = 1; slot <= 3; ++slot) rows.push_back(albert_embed(one, slot));
    return rows;
}

AlgebraTable build_h3f() {
    auto rows = h3f_basis_in_j();
    Subalgebra S = close_span(albert(), rows);
    AlgebraTable H;
    H.init("H3F", 6, Flavor::Jordan);
    H.basis_names = {"E1", "E2", "E3", "1(1)", "1(2)", "1(3)"};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            SparseRow<Rat> row;
            for (const auto& [k, c] : S.prod[i][j]) {
                if (!c.is_rational()) throw std::logic_error("h3f: irrational constant");
                row.emplace_back(k, c.coeff(0));
            }
            H.prod[i][j] = std::move(row);
        }
    return H;
}

} // namespace

const AlgebraTable& h3f() {
    static const AlgebraTable H = build_h3f();
    return H;
}

AlgebraMap restrict_to_h3f(const AlgebraMap& f) {
    auto rows = h3f_basis_in_j();
    RowReducer<Cyc> red(27, true);
    for (const auto& r : rows) red.add_row(r);
    MatC m(6, 6);
    m.setConstant(Cyc(0));
    for (int col = 0; col < 6; ++col) {
        auto t = red.coordinates(f.apply(rows[col]));
        if (!t) throw std::invalid_argument("restrict_to_h3f: image leaves H3(F)");
        for (int r = 0; r < 6; ++r) m(r, col) = (*t)[r];
    }
    return {h3f(), std::move(m)};
}

std::vector<H3FGrading> h3f_gradings() {
    const Cyc half(Rat(1, 2));
    const Cyc z8 = Cyc::zeta(3);
    const Cyc alpha1 = (z8 + z8.inverse()) * half;
    const Cyc beta1 = (z8 - z8.inverse()) * (Cyc(2) * Cyc::i()).inverse();
    std::vector<H3FGrading> out;
    auto push = [&](std::string name, std::vector<AlgebraMap> gens) {
        H3FGrading g;
        g.name = std::move(name);
        std::vector<MatC> maps;
        for (auto& f : gens) {
            g.generators.push_back(restrict_to_h3f(f));
            maps.push_back(g.generators.back().m);
        }
        g.components = simultaneous_eigenspaces(maps);
        out.push_back(std::move(g));
    };
    push("gr1", {tau(alpha1, beta1)});
    push("gr2", {tau(Cyc(-1), Cyc(0))});
    push("gr3", {tau(Cyc(Rat(-1, 2)), Cyc::sqrt3() * half)});
    push("gr4", {tau(Cyc(0), Cyc(1))});
    push("gr5", {tau(Cyc(-1), Cyc(0)), in_s()});
    return out;
}

// ---------------- Tits construction ----------------

namespace {

AlgebraTable build_m3f() {
    AlgebraTable A;
    A.init("M3F", 9, Flavor::Associative);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A.basis_names[3 * i + j] = "e" + std::to_string(i + 1) + std::to_string(j + 1);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    if (j == k) A.prod[3 * i + j][3 * k + l] = {{3 * i + l, Rat(1)}};
    return A;
}

MatQ unvec3(const std::vector<Rat>& v, int off) {
    MatQ m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = v[off + 3 * i + j];
    return m;
}

MatQ sharp(const MatQ& x) {
    MatQ x2 = x * x;
    Rat tr = x(0, 0) + x(1, 1) + x(2, 2);
    Rat q = m3_quadratic(x);
    MatQ r = x2 - tr * x;
    for (int i = 0; i < 3; ++i) r(i, i) += q;
    return r;
}

MatQ cross(const MatQ& x, const MatQ& y) { return sharp(x + y) - sharp(x) - sharp(y); }

MatQ star(const MatQ& x) {
    MatQ r = x * Rat(-1, 2);
    Rat h = m3_trace(x) / 2;
    for (int i = 0; i < 3; ++i) r(i, i) += h;
    return r;
}

AlgebraTable build_tits() {
    AlgebraTable T;
    T.init("TITS", 27, Flavor::Jordan);
    auto nm = [&](int s, int i, int j) {
        static const char* slot[] = {"a", "b", "c"};
        return std::string(slot[s]) + std::to_string(i + 1) + std::to_string(j + 1);
    };
    for (int s = 0; s < 3; ++s)
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) T.basis_names[9 * s + 3 * i + j] = nm(s, i, j);
    auto basis_triple = [&](int t) {
        std::array<MatQ, 3> m;
        for (auto& x : m) {
            x = MatQ(3, 3);
            x.setConstant(Rat(0));
        }
        m[t / 9]((t % 9) / 3, t % 3) = 1;
        return m;
    };
    auto jordan = [](const MatQ& x, const MatQ& y) { return ((x * y + y * x) * Rat(1, 2)).eval(); };
    for (int x = 0; x < 27; ++x)
        for (int y = x; y < 27; ++y) {
            auto [a1, b1, c1] = basis_triple(x);
            auto [a2, b2, c2] = basis_triple(y);
            MatQ ra = jordan(a1, a2) + star(b1 * c2) + star(b2 * c1);
            MatQ rb = star(a1) * b2 + star(a2) * b1 + cross(c1, c2) * Rat(1, 2);
            MatQ rc = c2 * star(a1) + c1 * star(a2) + cross(b1, b2) * Rat(1, 2);
            SparseRow<Rat> row;
            const MatQ* parts[3] = {&ra, &rb, &rc};
            for (int s = 0; s < 3; ++s)
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j)
                        if (!is_zero((*parts[s])(i, j))) row.emplace_back(9 * s + 3 * i + j, (*parts[s])(i, j));
            std::sort(row.begin(), row.end(), [](auto& l, auto& r) { return l.first < r.first; });
            T.prod[x][y] = row;
            T.prod[y][x] = std::move(row);
        }
    return T;
}

} // namespace

const AlgebraTable& m3f() {
    static const AlgebraTable A = build_m3f();
    return A;
}

const AlgebraTable& tits() {
    static const AlgebraTable T = build_tits();
    return T;
}

Rat m3_trace(const MatQ& x) { return x(0, 0) + x(1, 1) + x(2, 2); }

Rat m3_quadratic(const MatQ& x) {
    return -x(0, 1) * x(1, 0) + x(0, 0) * x(1, 1) - x(0, 2) * x(2, 0) - x(1, 2) * x(2, 1) +
           x(0, 0) * x(2, 2) + x(1, 1) * x(2, 2);
}

Rat m3_det(const MatQ& x) {
    return x(0, 0) * (x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)) -
           x(0, 1) * (x(1, 0) * x(2, 2) - x(1, 2) * x(2, 0)) +
           x(0, 2) * (x(1, 0) * x(2, 1) - x(1, 1) * x(2, 0));
}

Rat tits_norm(const MatQ& a, const MatQ& b, const MatQ& c) {
    MatQ abc = a * b * c;
    return m3_det(a) + m3_det(b) + m3_det(c) - m3_trace(abc);
}

Cyc tits_norm(const std::vector<Cyc>& v) {
    // same formula over Q(zeta24) coordinates
    auto slot = [&](int s) {
        MatC m(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = v[9 * s + 3 * i + j];
        return m;
    };
    MatC a = slot(0), b = slot(1), c = slot(2);
    auto detC = [](const MatC& x) {
        return x(0, 0) * (x(1, 1) * x(2, 2) - x(1, 2) * x(2, 1)) -
               x(0, 1) * (x(1, 0) * x(2, 2) - x(1, 2) * x(2, 0)) +
               x(0, 2) * (x(1, 0) * x(2, 1) - x(1, 1) * x(2, 0));
    };
    MatC abc = a * b * c;
    return detC(a) + detC(b) + detC(c) - (abc(0, 0) + abc(1, 1) + abc(2, 2));
}

AlgebraMap tits_bullet_in(const MatQ& p) {
    MatC pc(3, 3), pinv(3, 3);
    MatQ pi = inverse_of(MatQ(p));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            pc(i, j) = Cyc(p(i, j));
            pinv(i, j) = Cyc(pi(i, j));
        }
    MatC m(27, 27);
    m.setConstant(Cyc(0));
    for (int col = 0; col < 27; ++col) {
        int s = col / 9, i = (col % 9) / 3, j = col % 3;
        MatC x(3, 3);
        x.setConstant(Cyc(0));
        x(i, j) = Cyc(1);
        MatC y = pc * x * pinv;
        for (int r = 0; r < 3; ++r)
            for (int c2 = 0; c2 < 3; ++c2) m(9 * s + 3 * r + c2, col) = y(r, c2);
    }
    return {tits(), std::move(m)};
}

AlgebraMap tits_phi() {
    std::vector<Cyc> d(27);
    for (int t = 0; t < 27; ++t) d[t] = Cyc::zeta(8 * (t / 9)); // 1, w, w^2 per slot
    return AlgebraMap::diagonal(tits(), d);
}

std::pair<AlgebraMap, AlgebraMap> pauli_pair_on_m3() {
    // In(diag(1, w, w^2)) and In(cyclic shift) on the 9-dim matrix algebra
    MatC f(9, 9), g(9, 9);
    f.setConstant(Cyc(0));
    g.setConstant(Cyc(0));
    const Cyc w = Cyc::omega();
    std::array<Cyc, 3> d = {Cyc(1), w, w * w};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            // p e_ij p^-1 = d_i / d_j * e_ij
            f(3 * i + j, 3 * i + j) = d[i] * d[j].inverse();
            // q e_ij q^-1 = e_{i-1, j-1} for the shift q (q e_k = e_{k-1})
            int qi = (i + 2) % 3, qj = (j + 2) % 3;
            g(3 * qi + qj, 3 * i + j) = Cyc(1);
        }
    return {AlgebraMap(m3f(), f), AlgebraMap(m3f(), g)};
}

std::pair<AlgebraMap, AlgebraMap> pauli_pair_on_tits() {
    // f acts slotwise, so build the lift from the 9-dim matrices
    auto [f9, g9] = pauli_pair_on_m3();
    auto lift = [&](const AlgebraMap& f) {
        MatC m(27, 27);
        m.setConstant(Cyc(0));
        for (int s = 0; s < 3; ++s)
            for (int i = 0; i < 9; ++i)
                for (int j = 0; j < 9; ++j) m(9 * s + i, 9 * s + j) = f.m(i, j);
        return AlgebraMap(tits(), std::move(m));
    };
    return {lift(f9), lift(g9)};
}

std::vector<EigenComponent> pauli_grading() {
    auto [f, g] = pauli_pair_on_m3();
    return simultaneous_eigenspaces({f.m, g.m});
}

} // namespace f4grad
