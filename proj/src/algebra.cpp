#include "f4grad/algebra.hpp"

#include <algorithm>
#include <functional>

namespace f4grad {

MatQ AlgebraTable::right_mul_operator(const std::vector<Rat>& v) const {
    MatQ R(dim, dim);
    R.setConstant(Rat(0));
    for (int i = 0; i < dim; ++i) { // column i: e_i * v
        for (int j = 0; j < dim; ++j) {
            if (is_zero(v[j])) continue;
            for (const auto& [k, c] : prod[i][j]) R(k, i) += c * v[j];
        }
    }
    return R;
}

namespace {

template <class S> std::vector<S> basis_vec(int dim, int i) {
    std::vector<S> v(dim, S(0));
    v[i] = S(1);
    return v;
}

std::vector<Rat> sparse_to_dense(const SparseRow<Rat>& s, int dim) {
    std::vector<Rat> v(dim, Rat(0));
    for (const auto& [k, c] : s) v[k] = c;
    return v;
}

} // namespace

bool AlgebraTable::check_flavor(std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    auto P = [&](int i, int j) { return sparse_to_dense(prod[i][j], dim); };
    switch (flavor) {
    case Flavor::Jordan:
        for (int i = 0; i < dim; ++i)
            for (int j = i; j < dim; ++j)
                if (P(i, j) != P(j, i)) return fail("not commutative at " + std::to_string(i) + "," + std::to_string(j));
        return true;
    case Flavor::Associative:
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                for (int k = 0; k < dim; ++k) {
                    auto l = mul(P(i, j), basis_vec<Rat>(dim, k));
                    auto r = mul(basis_vec<Rat>(dim, i), P(j, k));
                    if (l != r) return fail("associativity fails");
                }
        return true;
    case Flavor::Alternative: {
        // associator alternating in its first two and last two arguments,
        // checked on the polarized basis identities
        auto assoc = [&](int i, int j, int k) {
            auto l = mul(P(i, j), basis_vec<Rat>(dim, k));
            auto r = mul(basis_vec<Rat>(dim, i), P(j, k));
            for (int t = 0; t < dim; ++t) l[t] -= r[t];
            return l;
        };
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                for (int k = 0; k < dim; ++k) {
                    auto a = assoc(i, j, k), b = assoc(j, i, k);
                    for (int t = 0; t < dim; ++t)
                        if (a[t] + b[t] != 0) return fail("associator not alternating (left)");
                    auto c = assoc(i, k, j);
                    for (int t = 0; t < dim; ++t)
                        if (a[t] + c[t] != 0) return fail("associator not alternating (right)");
                }
        return true;
    }
    case Flavor::Lie:
        for (int i = 0; i < dim; ++i) {
            if (!prod[i][i].empty()) return fail("[x,x] != 0");
            for (int j = i + 1; j < dim; ++j) {
                auto a = P(i, j), b = P(j, i);
                for (int t = 0; t < dim; ++t)
                    if (a[t] + b[t] != 0) return fail("not anticommutative");
            }
        }
        for (int i = 0; i < dim; ++i)
            for (int j = i + 1; j < dim; ++j)
                for (int k = j + 1; k < dim; ++k) {
                    auto s = mul(P(i, j), basis_vec<Rat>(dim, k));
                    auto t1 = mul(P(j, k), basis_vec<Rat>(dim, i));
                    auto t2 = mul(P(k, i), basis_vec<Rat>(dim, j));
                    bool ok = true;
                    for (int t = 0; t < dim && ok; ++t)
                        if (s[t] + t1[t] + t2[t] != 0) ok = false;
                    if (!ok) return fail("Jacobi fails");
                }
        return true;
    }
    return false;
}

std::vector<Cyc> AlgebraMap::apply(const std::vector<Cyc>& v) const {
    const int n = dim();
    std::vector<Cyc> out(n, Cyc(0));
    for (int j = 0; j < n; ++j) {
        if (v[j].is_zero()) continue;
        for (int k = 0; k < n; ++k) {
            const Cyc& e = m(k, j);
            if (!e.is_zero()) out[k] += e * v[j];
        }
    }
    return out;
}

AlgebraMap AlgebraMap::identity(const AlgebraTable& a) {
    MatC id(a.dim, a.dim);
    id.setConstant(Cyc(0));
    for (int k = 0; k < a.dim; ++k) id(k, k) = Cyc(1);
    return {a, std::move(id)};
}

AlgebraMap AlgebraMap::diagonal(const AlgebraTable& a, const std::vector<Cyc>& d) {
    MatC m(a.dim, a.dim);
    m.setConstant(Cyc(0));
    for (int k = 0; k < a.dim; ++k) m(k, k) = d[k];
    return {a, std::move(m)};
}

AlgebraMap AlgebraMap::from_rat(const AlgebraTable& a, const MatQ& mq) {
    MatC m(mq.rows(), mq.cols());
    for (int r = 0; r < mq.rows(); ++r)
        for (int c = 0; c < mq.cols(); ++c) m(r, c) = Cyc(mq(r, c));
    return {a, std::move(m)};
}

bool is_automorphism(const AlgebraMap& f) {
    const AlgebraTable& A = *f.alg;
    if (f.dim() != A.dim) return false;
    if (rank_of(f.m) != A.dim) return false;
    const bool sym = (A.flavor == Flavor::Jordan);
    std::vector<std::vector<Cyc>> img(A.dim);
    for (int i = 0; i < A.dim; ++i) img[i] = f.apply(basis_vec<Cyc>(A.dim, i));
    for (int i = 0; i < A.dim; ++i)
        for (int j = sym ? i : 0; j < A.dim; ++j) {
            std::vector<Cyc> lhs(A.dim, Cyc(0));
            for (const auto& [k, c] : A.prod[i][j])
                for (int t = 0; t < A.dim; ++t)
                    if (!f.m(t, k).is_zero()) lhs[t] += f.m(t, k) * Cyc(c);
            auto rhs = A.mul(img[i], img[j]);
            if (lhs != rhs) return false;
        }
    return true;
}

bool is_derivation(const AlgebraMap& d) {
    const AlgebraTable& A = *d.alg;
    if (d.dim() != A.dim) return false;
    const bool sym = (A.flavor == Flavor::Jordan);
    std::vector<std::vector<Cyc>> img(A.dim);
    for (int i = 0; i < A.dim; ++i) img[i] = d.apply(basis_vec<Cyc>(A.dim, i));
    for (int i = 0; i < A.dim; ++i)
        for (int j = sym ? i : 0; j < A.dim; ++j) {
            std::vector<Cyc> lhs(A.dim, Cyc(0));
            for (const auto& [k, c] : A.prod[i][j])
                for (int t = 0; t < A.dim; ++t)
                    if (!d.m(t, k).is_zero()) lhs[t] += d.m(t, k) * Cyc(c);
            auto rhs = A.mul(img[i], basis_vec<Cyc>(A.dim, j));
            auto rhs2 = A.mul(basis_vec<Cyc>(A.dim, i), img[j]);
            for (int t = 0; t < A.dim; ++t) rhs[t] += rhs2[t];
            if (lhs != rhs) return false;
        }
    return true;
}

Subalgebra close_span(const AlgebraTable& ambient, std::vector<std::vector<Cyc>> basis_rows) {
    Subalgebra S;
    S.ambient = &ambient;
    S.basis = std::move(basis_rows);
    const int d = S.dim();
    RowReducer<Cyc> red(ambient.dim, true);
    for (const auto& row : S.basis)
        if (!red.add_row(row)) throw DependentBasis("close_span: dependent basis");
    S.prod.assign(d, std::vector<SparseRow<Cyc>>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            auto p = ambient.mul(S.basis[i], S.basis[j]);
            auto t = red.coordinates(std::move(p));
            if (!t)
                throw NotClosedUnderBracket("span not closed at pair " + std::to_string(i) + "," +
                                            std::to_string(j));
            for (int k = 0; k < d; ++k)
                if (!(*t)[k].is_zero()) S.prod[i][j].emplace_back(k, (*t)[k]);
        }
    return S;
}

Subalgebra fixed_subalgebra(const AlgebraTable& L, const std::vector<AlgebraMap>& maps) {
    RowReducer<Cyc> red(L.dim);
    for (const auto& f : maps) {
        MatC A = f.m;
        for (int k = 0; k < L.dim; ++k) A(k, k) -= Cyc(1);
        for (int r = 0; r < L.dim; ++r) red.add_row(to_row(A, r));
    }
    return close_span(L, red.kernel());
}

namespace {

int rank_sample(const Subalgebra& L, const std::vector<Cyc>& x) {
    const int d = L.dim();
    MatC ad(d, d);
    ad.setConstant(Cyc(0));
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) {
            if (x[i].is_zero()) continue;
            for (const auto& [k, c] : L.prod[i][j]) ad(k, j) += x[i] * c;
        }
    }
    return d - rank_of(ad);
}

} // namespace

int lie_rank(const Subalgebra& L) {
    const int d = L.dim();
    if (d == 0) return 0;
    std::vector<std::vector<Cyc>> samples(3, std::vector<Cyc>(d));
    Rat pow2(1);
    for (int i = 0; i < d; ++i) {
        samples[0][i] = Cyc(Rat(i + 1));
        samples[1][i] = Cyc(Rat((i + 1)) * Rat(i + 1));
        samples[2][i] = Cyc(pow2);
        pow2 *= 2;
    }
    int best = d;
    for (const auto& x : samples) best = std::min(best, rank_sample(L, x));
    return best;
}

int lie_rank(const AlgebraTable& L) {
    Subalgebra S;
    S.ambient = &L;
    S.basis.resize(L.dim);
    for (int i = 0; i < L.dim; ++i) {
        S.basis[i].assign(L.dim, Cyc(0));
        S.basis[i][i] = Cyc(1);
    }
    S.prod.assign(L.dim, std::vector<SparseRow<Cyc>>(L.dim));
    for (int i = 0; i < L.dim; ++i)
        for (int j = 0; j < L.dim; ++j)
            for (const auto& [k, c] : L.prod[i][j]) S.prod[i][j].emplace_back(k, Cyc(c));
    return lie_rank(S);
}

std::vector<MatQ> full_derivation_solve(const AlgebraTable& A) {
    // Unknowns D(m,k) = coefficient of e_m in d(e_k), vectorized as m*dim+k.
    // One equation per (i <= j or all i,j; l):
    //   sum_k c_ijk D(l,k) - sum_m c_mjl D(m,i) - sum_m c_iml D(m,j) = 0.
    const int n = A.dim;
    const int nun = n * n;
    const bool sym = (A.flavor == Flavor::Jordan || A.flavor == Flavor::Lie);
    RowReducer<Rat> red(nun);
    std::vector<Rat> row(nun, Rat(0));
    std::vector<int> touched;
    auto bump = [&](int m, int k, const Rat& v) {
        int idx = m * n + k;
        if (is_zero(row[idx])) touched.push_back(idx);
        row[idx] += v;
    };
    for (int i = 0; i < n; ++i)
        for (int j = sym ? i : 0; j < n; ++j) {
            // expand all l at once: collect per-l sparse contributions
            // lhs: c_ijk D(l,k); rhs1: c_mjl D(m,i); rhs2: c_iml D(m,j)
            for (int l = 0; l < n; ++l) {
                touched.clear();
                for (const auto& [k, c] : A.prod[i][j]) bump(l, k, c);
                for (int m = 0; m < n; ++m) {
                    for (const auto& [t, c] : A.prod[m][j])
                        if (t == l) bump(m, i, -c);
                    for (const auto& [t, c] : A.prod[i][m])
                        if (t == l) bump(m, j, -c);
                }
                if (touched.empty()) continue;
                std::vector<Rat> eq(nun, Rat(0));
                bool nz = false;
                for (int idx : touched) {
                    if (!is_zero(row[idx])) { eq[idx] = row[idx]; nz = true; }
                    row[idx] = 0;
                }
                if (nz) red.add_row(std::move(eq));
            }
        }
    std::vector<MatQ> out;
    for (const auto& v : red.kernel()) {
        MatQ D(n, n);
        for (int m = 0; m < n; ++m)
            for (int k = 0; k < n; ++k) D(m, k) = v[m * n + k];
        out.push_back(std::move(D));
    }
    return out;
}

DerivationAlgebra derivation_algebra(const AlgebraTable& A) {
    DerivationAlgebra der;
    der.ops = full_derivation_solve(A);
    const int d = (int)der.ops.size();
    const int n = A.dim;
    der.lie.init("Der(" + A.name + ")", d, Flavor::Lie);
    RowReducer<Rat> red(n * n, true);
    auto vecize = [&](const MatQ& M) {
        std::vector<Rat> v(n * n, Rat(0));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) v[r * n + c] = M(r, c);
        return v;
    };
    for (const auto& op : der.ops) red.add_row(vecize(op));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            MatQ br = der.ops[i] * der.ops[j] - der.ops[j] * der.ops[i];
            auto t = red.coordinates(vecize(br));
            if (!t) throw NotClosedUnderBracket("derivation bracket left the span");
            SparseRow<Rat> s;
            for (int k = 0; k < d; ++k)
                if (!is_zero((*t)[k])) s.emplace_back(k, (*t)[k]);
            der.lie.set_product(i, j, std::move(s));
        }
    for (int i = 0; i < d; ++i) der.lie.basis_names[i] = "d" + std::to_string(i + 1);
    return der;
}

std::optional<CubicCoefficients> cubic_coefficients(const AlgebraTable& A,
                                                    const std::vector<Cyc>& unit,
                                                    const std::vector<Cyc>& x) {
    auto x2 = A.mul(x, x);
    auto x3 = A.mul(x2, x);
    // x3 = tr*x2 - q*x + n*1
    RowReducer<Cyc> red(A.dim, true);
    red.add_row(x2);
    red.add_row(x);
    red.add_row(unit);
    auto t = red.coordinates(x3);
    if (!t) return std::nullopt;
    CubicCoefficients c;
    c.tr = (*t)[0];
    c.q = -(*t)[1];
    c.n = (*t)[2];
    return c;
}

std::vector<Cyc> minimal_polynomial(const MatC& M) {
    const int n = (int)M.rows();
    // lcm over unit starting vectors of the local Krylov annihilators
    std::vector<std::vector<Cyc>> lcm_poly{{Cyc(1)}}; // monic 1
    auto poly_mul = [](const std::vector<Cyc>& a, const std::vector<Cyc>& b) {
        std::vector<Cyc> out(a.size() + b.size() - 1, Cyc(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        return out;
    };
    auto poly_mod = [](std::vector<Cyc> a, const std::vector<Cyc>& b) {
        while (a.size() >= b.size()) {
            Cyc f = a.back() / b.back();
            size_t off = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
            while (!a.empty() && a.back().is_zero()) a.pop_back();
            if (a.empty()) break;
        }
        return a;
    };
    std::function<std::vector<Cyc>(std::vector<Cyc>, std::vector<Cyc>)> poly_gcd =
        [&](std::vector<Cyc> a, std::vector<Cyc> b) {
            while (!b.empty()) {
                auto r = poly_mod(a, b);
                a = std::move(b);
                b = std::move(r);
            }
            Cyc lead = a.back().inverse();
            for (auto& cfe : a) cfe *= lead;
            return a;
        };
    std::vector<Cyc> mu{Cyc(1)};
    for (int start = 0; start < n; ++start) {
        // check whether mu already annihilates e_start
        {
            std::vector<Cyc> v(n, Cyc(0));
            v[start] = Cyc(1);
            std::vector<Cyc> acc(n, Cyc(0));
            std::vector<Cyc> cur = v;
            for (size_t d = 0; d < mu.size(); ++d) {
                for (int r = 0; r < n; ++r) acc[r] += mu[d] * cur[r];
                if (d + 1 < mu.size()) {
                    std::vector<Cyc> nxt(n, Cyc(0));
                    for (int c = 0; c < n; ++c) {
                        if (cur[c].is_zero()) continue;
                        for (int r = 0; r < n; ++r)
                            if (!M(r, c).is_zero()) nxt[r] += M(r, c) * cur[c];
                    }
                    cur = std::move(nxt);
                }
            }
            bool zero = true;
            for (const auto& a : acc)
                if (!a.is_zero()) { zero = false; break; }
            if (zero) continue;
        }
        // Krylov sequence from e_start
        RowReducer<Cyc> red(n, true);
        std::vector<std::vector<Cyc>> seq;
        std::vector<Cyc> v(n, Cyc(0));
        v[start] = Cyc(1);
        for (;;) {
            auto coords = red.coordinates(v);
            if (coords) {
                // v_k = sum c_j v_j  ->  annihilator x^k - sum c_j x^j
                std::vector<Cyc> p(seq.size() + 1, Cyc(0));
                p[seq.size()] = Cyc(1);
                for (size_t j = 0; j < seq.size(); ++j) p[j] = -(*coords)[j];
                auto g = poly_gcd(mu, p);
                // mu = mu * p / gcd(mu, p)
                auto q = poly_mul(mu, p);
                // divide q by g exactly
                std::vector<Cyc> quot(q.size() - g.size() + 1, Cyc(0));
                for (int d = (int)q.size() - (int)g.size(); d >= 0; --d) {
                    Cyc f = q[d + g.size() - 1] / g.back();
                    quot[d] = f;
                    for (size_t j = 0; j < g.size(); ++j) q[d + j] -= f * g[j];
                }
                mu = std::move(quot);
                break;
            }
            red.add_row(v);
            seq.push_back(v);
            std::vector<Cyc> nxt(n, Cyc(0));
            for (int c = 0; c < n; ++c) {
                if (v[c].is_zero()) continue;
                for (int r = 0; r < n; ++r)
                    if (!M(r, c).is_zero()) nxt[r] += M(r, c) * v[c];
            }
            v = std::move(nxt);
        }
    }
    return mu;
}

bool squarefree(const std::vector<Cyc>& poly) {
    if (poly.size() <= 2) return true;
    std::vector<Cyc> der(poly.size() - 1);
    for (size_t k = 1; k < poly.size(); ++k) der[k - 1] = poly[k] * Cyc(Rat((long)k));
    // gcd(p, p') constant <=> squarefree
    auto poly_mod = [](std::vector<Cyc> a, const std::vector<Cyc>& b) {
        while (a.size() >= b.size() && !a.empty()) {
            Cyc f = a.back() / b.back();
            size_t off = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j) a[off + j] -= f * b[j];
            while (!a.empty() && a.back().is_zero()) a.pop_back();
        }
        return a;
    };
    std::vector<Cyc> a = poly, b = der;
    while (!b.empty()) {
        auto r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1;
}

} // namespace f4grad
