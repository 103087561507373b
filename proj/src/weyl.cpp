#include "f4grad/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <queue>

namespace f4grad {

namespace {

using Key = std::array<int, 16>;

Key key_of(const Mat4& m) {
    Key k{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) k[4 * i + j] = m[i][j];
    return k;
}

Mat4 mat_mul(const Mat4& a, const Mat4& b) {
    Mat4 c{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            int s = 0;
            for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
            c[i][j] = s;
        }
    return c;
}

Mat4 mat_id() {
    Mat4 m{};
    for (int i = 0; i < 4; ++i) m[i][i] = 1;
    return m;
}

const std::array<Mat4, 4>& simple_reflections() {
    static const std::array<Mat4, 4> s = {{
        {{{-1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}},
        {{{1, 1, 0, 0}, {0, -1, 0, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}}},
        {{{1, 0, 0, 0}, {0, 1, 2, 0}, {0, 0, -1, 0}, {0, 0, 1, 1}}},
        {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, -1}}},
    }};
    return s;
}

int imod24(long x) { return (int)(((x % 24) + 24) % 24); }

} // namespace

namespace {

const char* WEYL_CACHE_HEADER = "f4grad weyl table v1";

std::string cache_path(const char* file) {
    const char* dir = std::getenv("GRADINGS_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::string(dir) + "/" + file;
}

std::vector<Mat4> load_weyl_cache() {
    std::string path = cache_path("weyl-f4-v1.txt");
    if (path.empty()) return {};
    std::ifstream in(path);
    if (!in) return {};
    std::string header;
    std::getline(in, header);
    if (header != WEYL_CACHE_HEADER) return {};
    std::vector<Mat4> out;
    Mat4 m{};
    while (in) {
        bool ok = true;
        for (int r = 0; r < 4 && ok; ++r)
            for (int c = 0; c < 4; ++c)
                if (!(in >> m[r][c])) { ok = false; break; }
        if (!ok) break;
        out.push_back(m);
    }
    if (out.size() != 1152) return {};
    for (size_t k = 1; k < out.size(); ++k)
        if (!(key_of(out[k - 1]) < key_of(out[k]))) return {};
    // the four simple reflections must be present
    for (const auto& g : simple_reflections()) {
        bool found = false;
        for (const auto& e : out) found = found || e == g;
        if (!found) return {};
    }
    return out;
}

void save_weyl_cache(const std::vector<Mat4>& elems) {
    std::string path = cache_path("weyl-f4-v1.txt");
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) return;
    out << WEYL_CACHE_HEADER << "\n";
    for (const auto& m : elems) {
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) out << m[r][c] << " ";
        out << "\n";
    }
}

} // namespace

WeylGroup::WeylGroup() {
    const auto& gens = simple_reflections();
    elems_ = load_weyl_cache();
    if (elems_.empty()) {
        std::map<Key, Mat4> seen;
        std::queue<Mat4> todo;
        for (const auto& g : gens) {
            if (seen.emplace(key_of(g), g).second) todo.push(g);
        }
        while (!todo.empty()) {
            Mat4 e = todo.front();
            todo.pop();
            for (const auto& g : gens) {
                for (Mat4 p : {mat_mul(e, g), mat_mul(g, e)}) {
                    if (seen.emplace(key_of(p), p).second) todo.push(p);
                }
            }
        }
        elems_.reserve(seen.size());
        for (auto& [k, m] : seen) elems_.push_back(m); // map iterates in lex order
        save_weyl_cache(elems_);
    }
    lifts_.assign(elems_.size() + 1, std::nullopt);

    // conjugacy classes by orbit expansion under the generators
    std::vector<int> cls(elems_.size(), -1);
    for (int start = 0; start < (int)elems_.size(); ++start) {
        if (cls[start] >= 0) continue;
        std::vector<int> orbit;
        std::queue<int> q;
        cls[start] = start;
        q.push(start);
        orbit.push_back(start);
        while (!q.empty()) {
            int e = q.front();
            q.pop();
            for (const auto& g : gens) {
                Mat4 c = mat_mul(mat_mul(g, elems_[e]), g); // g = g^-1
                int idx = index_of(c) - 1;
                if (cls[idx] < 0) {
                    cls[idx] = start;
                    q.push(idx);
                    orbit.push_back(idx);
                }
            }
        }
        ConjugacyClass cc;
        cc.representative = *std::min_element(orbit.begin(), orbit.end()) + 1;
        cc.size = (int)orbit.size();
        cc.order = element_order(cc.representative);
        classes_.push_back(cc);
    }
    std::sort(classes_.begin(), classes_.end(), [](const ConjugacyClass& a, const ConjugacyClass& b) {
        return a.representative < b.representative;
    });

    // torus action matrices B_j = m sigma_j m^-1
    const IntMat& m = f4model().coord_change();
    const IntMat& E = f4model().exponent_matrix();
    action_.resize(elems_.size());
    for (size_t j = 0; j < elems_.size(); ++j) {
        IntMat s(4, 4);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) s(r, c) = elems_[j][r][c];
        action_[j] = m * s * E;
    }
}

int WeylGroup::index_of(const Mat4& m) const {
    Key k = key_of(m);
    auto it = std::lower_bound(elems_.begin(), elems_.end(), k,
                               [](const Mat4& e, const Key& kk) { return key_of(e) < kk; });
    if (it == elems_.end() || key_of(*it) != k) throw std::logic_error("weyl: element not found");
    return (int)(it - elems_.begin()) + 1;
}

int WeylGroup::multiply(int i, int j) const { return index_of(mat_mul(matrix(i), matrix(j))); }

int WeylGroup::element_order(int j) const {
    Mat4 acc = matrix(j);
    const Mat4 id = mat_id();
    for (int k = 1; k <= 24; ++k) {
        if (acc == id) return k;
        acc = mat_mul(acc, matrix(j));
    }
    throw std::logic_error("weyl: order exceeds 24");
}

std::vector<int> WeylGroup::representative_indices() const {
    std::vector<int> out;
    for (const auto& c : classes_) out.push_back(c.representative);
    return out;
}

IntMat WeylGroup::action_matrix(int j) const { return action_[j - 1]; }

TorusPoint WeylGroup::act(int j, const TorusPoint& t) const {
    const IntMat& B = action_[j - 1];
    TorusPoint out;
    for (int r = 0; r < 4; ++r) {
        long s = 0;
        for (int c = 0; c < 4; ++c) s += (long)B(r, c) * t.zeta_exp[c];
        out.zeta_exp[r] = imod24(s);
    }
    for (const auto& g : t.free_dirs) {
        std::array<int, 4> ng{};
        for (int r = 0; r < 4; ++r) {
            long s = 0;
            for (int c = 0; c < 4; ++c) s += (long)B(r, c) * g[c];
            ng[r] = (int)s;
        }
        out.free_dirs.push_back(ng);
    }
    return out;
}

bool WeylGroup::fixes(int j, const TorusPoint& t) const {
    const IntMat& B = action_[j - 1];
    for (int r = 0; r < 4; ++r) {
        long s = -t.zeta_exp[r];
        for (int c = 0; c < 4; ++c) s += (long)B(r, c) * t.zeta_exp[c];
        if (imod24(s) != 0) return false;
    }
    for (const auto& g : t.free_dirs)
        for (int r = 0; r < 4; ++r) {
            long s = -(long)g[r];
            for (int c = 0; c < 4; ++c) s += (long)B(r, c) * g[c];
            if (s != 0) return false;
        }
    return true;
}

AbelianGroup WeylGroup::fixed_subgroup_structure(int j) const {
    return multiplicative_kernel_structure(action_[j - 1] - IntMat::Identity(4, 4));
}

namespace {

// the paper's printed generator choices for the quasitori it works with
const std::map<int, std::vector<std::array<int, 4>>>& printed_torsion() {
    static const std::map<int, std::vector<std::array<int, 4>>> t = {
        {3, {{0, 12, 12, 6}, {12, 12, 0, 0}}},    // t_{1,-1,-1,i}, t_{-1,-1,1,1}
        {15, {{8, 8, 0, 16}, {0, 8, 8, 0}}},      // t_{w,w,1,w^2}, t_{1,w,w,1}
        {105, {{12, 0, 12, 0}, {0, 12, 12, 0}}},  // t_{-1,1,-1,1}, t_{1,-1,-1,1}
        {106, {{12, 0, 12, 0}, {0, 12, 12, 12}}}, // t_{-1,1,-1,1}, t_{1,-1,-1,-1}
        {110, {{12, 12, 12, 0}, {0, 0, 0, 12}}},  // t_{-1,-1,-1,1}, t_{1,1,1,-1}
        {405, {{12, 0, 0, 0}, {0, 12, 0, 0}, {0, 0, 12, 0}, {0, 0, 0, 12}}},
    };
    return t;
}

int exp_order(const std::array<int, 4>& e) {
    int g = 24;
    for (int x : e) g = std::gcd(g, ((x % 24) + 24) % 24);
    return 24 / g;
}

std::set<std::array<int, 4>> generated_subgroup(const std::vector<std::array<int, 4>>& gens) {
    std::set<std::array<int, 4>> group;
    group.insert({0, 0, 0, 0});
    std::queue<std::array<int, 4>> q;
    q.push({0, 0, 0, 0});
    while (!q.empty()) {
        auto e = q.front();
        q.pop();
        for (const auto& g : gens) {
            std::array<int, 4> n{};
            for (int r = 0; r < 4; ++r) n[r] = imod24(e[r] + g[r]);
            if (group.insert(n).second) q.push(n);
        }
    }
    return group;
}

} // namespace

TorusFixedSubgroup WeylGroup::fixed_subgroup(int j) const {
    IntMat M = action_[j - 1] - IntMat::Identity(4, 4);
    TorusFixedSubgroup out;
    out.structure = multiplicative_kernel_structure(M);
    auto gens = multiplicative_kernel_generators(M);
    for (const auto& g : gens.continuous) {
        std::array<int, 4> d{};
        for (int r = 0; r < 4; ++r) d[r] = (int)g(r);
        out.continuous.push_back(d);
    }
    for (const auto& [col, d] : gens.torsion) {
        if (24 % d != 0)
            throw UnsupportedOrder("T^sigma_" + std::to_string(j) + " needs a root of unity of order " +
                                   std::to_string(d));
        std::array<int, 4> e{};
        for (int r = 0; r < 4; ++r) e[r] = imod24((24 / d) * col(r));
        out.torsion.emplace_back(e, d);
    }
    // swap in the paper's generators where it prints them, after checking
    // they cut out the same subgroup
    auto it = printed_torsion().find(j);
    if (it != printed_torsion().end()) {
        std::vector<std::array<int, 4>> mine, paper = it->second;
        for (const auto& [e, d] : out.torsion) mine.push_back(e);
        for (const auto& g : out.continuous) {
            std::array<int, 4> e{};
            for (int r = 0; r < 4; ++r) e[r] = imod24(g[r]);
            mine.push_back(e);
        }
        auto with_cont = paper;
        for (const auto& g : out.continuous) {
            std::array<int, 4> e{};
            for (int r = 0; r < 4; ++r) e[r] = imod24(g[r]);
            with_cont.push_back(e);
        }
        for (const auto& e : paper)
            if (!fixes(j, TorusPoint::from_exponents(e)))
                throw std::logic_error("printed generator not fixed by sigma_" + std::to_string(j));
        if (generated_subgroup(mine) != generated_subgroup(with_cont))
            throw std::logic_error("printed generators generate a different subgroup at j=" +
                                   std::to_string(j));
        out.torsion.clear();
        for (const auto& e : paper) out.torsion.emplace_back(e, exp_order(e));
    }
    return out;
}

std::vector<int> WeylGroup::stabilizer_indices(const TorusPoint& t) const {
    std::vector<int> out;
    for (int j = 1; j <= size(); ++j)
        if (fixes(j, t)) out.push_back(j);
    return out;
}

std::vector<int> WeylGroup::stabilizer_indices(const std::vector<TorusPoint>& ts) const {
    std::vector<int> out;
    for (int j = 1; j <= size(); ++j) {
        bool all = true;
        for (const auto& t : ts) all = all && fixes(j, t);
        if (all) out.push_back(j);
    }
    return out;
}

const AlgebraMap& WeylGroup::sigma_tilde(int j) const {
    if (lifts_[j]) return *lifts_[j];
    const F4Model& M = f4model();
    // The torus action (ecdlc-style, exponents by B = m sigma m^-1) is the
    // conjugation action of the lift; on the Cartan and the roots the lift
    // therefore realizes the dual map, i.e. the inverse row action.
    Mat4 sigma = matrix(j);
    {
        Mat4 acc = sigma;
        const int ord = element_order(j);
        sigma = mat_id();
        for (int k = 0; k < ord - 1; ++k) sigma = mat_mul(sigma, acc);
    }

    auto act_root = [&](const Root4& n) {
        Root4 out{};
        for (int c = 0; c < 4; ++c) {
            int s = 0;
            for (int r = 0; r < 4; ++r) s += n[r] * sigma[r][c];
            out[c] = s;
        }
        return out;
    };

    // bracket coefficient of v_target inside [v_a, v_b]
    auto coeff_at = [&](int a, int b, int target) -> Rat {
        for (const auto& [k, v] : M.lie().prod[a][b])
            if (k == target) return v;
        return Rat(0);
    };

    MatQ mat(52, 52);
    mat.setConstant(Rat(0));
    // Cartan block: sigma~(t_ai) = t_{sigma(ai)} = sum_j sigma_ij t_aj
    for (int i = 0; i < 4; ++i)
        for (int jj = 0; jj < 4; ++jj) mat(jj, i) = Rat(sigma[i][jj]);

    const Root4 simples[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    std::map<int, std::pair<int, Rat>> img; // slot -> (target slot, coefficient)
    for (int i = 0; i < 4; ++i) {
        int from = M.root_slot(simples[i]);
        int to = M.root_slot(act_root(simples[i]));
        img[from] = {to, Rat(1)};
    }
    // negative simple roots via the Cartan brackets
    for (int i = 0; i < 4; ++i) {
        Root4 neg = simples[i];
        for (auto& x : neg) x = -x;
        int sa = M.root_slot(simples[i]), sn = M.root_slot(neg);
        // h = [v_a, v_-a] (Cartan vector), image known from the block
        const auto& h = M.lie().prod[sa][sn];
        std::array<Rat, 4> himg{};
        for (const auto& [k, v] : h)
            for (int r = 0; r < 4; ++r) himg[r] += v * mat(r, k);
        int ta = img[sa].first;
        Root4 tr = act_root(simples[i]);
        Root4 trn = tr;
        for (auto& x : trn) x = -x;
        int tn = M.root_slot(trn);
        const auto& k2 = M.lie().prod[ta][tn];
        // himg = c * k2 on the Cartan slots
        Rat c(0);
        bool set = false;
        std::array<Rat, 4> kv{};
        for (const auto& [k, v] : k2) kv[k] = v;
        for (int r = 0; r < 4; ++r) {
            if (is_zero(kv[r])) {
                if (!is_zero(himg[r])) throw PropagationInconsistency("negative simple root image");
                continue;
            }
            Rat cc = himg[r] / kv[r];
            if (set && cc != c) throw PropagationInconsistency("negative simple root image");
            c = cc;
            set = true;
        }
        if (!set || is_zero(c)) throw PropagationInconsistency("negative simple root image vanished");
        img[sn] = {tn, c};
    }
    // remaining roots by height induction
    std::vector<Root4> pos = M.positive_roots();
    std::sort(pos.begin(), pos.end(), [](const Root4& a, const Root4& b) {
        int ha = a[0] + a[1] + a[2] + a[3], hb = b[0] + b[1] + b[2] + b[3];
        if (ha != hb) return ha < hb;
        return a < b;
    });
    for (const auto& alpha : pos) {
        int sa = M.root_slot(alpha);
        if (img.count(sa)) continue;
        for (int sign = 0; sign < 2; ++sign) {
            Root4 a = alpha;
            if (sign) for (auto& x : a) x = -x;
            int slot_a = M.root_slot(a);
            // smallest i with a -+ alpha_i a root of the same height-1
            int found = -1;
            Root4 beta{};
            for (int i = 0; i < 4; ++i) {
                Root4 b = a;
                for (int r = 0; r < 4; ++r) b[r] -= (sign ? -simples[i][r] : simples[i][r]);
                if (M.root_slot(b) >= 0) {
                    found = i;
                    beta = b;
                    break;
                }
            }
            if (found < 0) throw PropagationInconsistency("height descent failed");
            Root4 step = simples[found];
            if (sign) for (auto& x : step) x = -x;
            int sb = M.root_slot(beta), si = M.root_slot(step);
            Rat lam = coeff_at(sb, si, slot_a);
            if (is_zero(lam)) throw PropagationInconsistency("bracket [v_beta, v_step] vanished");
            auto [tb, cb] = img.at(sb);
            auto [ti, ci] = img.at(si);
            Root4 ta = act_root(a);
            int slot_ta = M.root_slot(ta);
            Rat lam2 = coeff_at(tb, ti, slot_ta);
            if (is_zero(lam2)) throw PropagationInconsistency("image bracket vanished");
            img[slot_a] = {slot_ta, cb * ci * lam2 / lam};
        }
    }
    for (const auto& [from, to] : img) mat(to.first, from) = to.second;
    AlgebraMap lift = AlgebraMap::from_rat(M.lie(), mat);
    if (!is_automorphism(lift)) throw PropagationInconsistency("lift failed certification");
    lifts_[j] = std::move(lift);
    return *lifts_[j];
}

QuasitorusGenerators WeylGroup::quasitorus_A(int j, const TorusPoint& t) const {
    if (!t.free_dirs.empty())
        throw std::invalid_argument("quasitorus_A: t must have root-of-unity coordinates");
    const F4Model& M = f4model();
    QuasitorusGenerators out;
    out.j = j;
    AlgebraMap lift = sigma_tilde(j);
    bool t_trivial = true;
    for (int r = 0; r < 4; ++r) t_trivial = t_trivial && t.zeta_exp[r] == 0;
    if (!t_trivial) lift = lift.compose(M.tprime(t.zeta_exp));
    out.maps.push_back(lift);
    auto sub = fixed_subgroup(j);
    for (const auto& [e, d] : sub.torsion) out.maps.push_back(M.tprime(e));
    for (const auto& g : sub.continuous) {
        auto exps = M.direction_exponents(g);
        int lo = *std::min_element(exps.begin(), exps.end());
        int hi = *std::max_element(exps.begin(), exps.end());
        int order = 0;
        for (int cand : {8, 12, 24})
            if (hi - lo < cand) {
                order = cand;
                break;
            }
        if (order == 0)
            throw UnsupportedOrder("surrogate order above 24 needed for a continuous factor of T^sigma_" +
                                   std::to_string(j));
        std::array<int, 4> e{};
        for (int r = 0; r < 4; ++r) e[r] = imod24((24 / order) * g[r]);
        out.maps.push_back(M.tprime(e));
        out.surrogate_orders.push_back(order);
    }
    return out;
}

std::optional<std::pair<int, TorusPoint>> WeylGroup::appendix_psi_search(int max_candidates) const {
    // psi must fix g1 = t'_{-1,1,-1,1} and t'_{1,1,1,u}, and swap g2 = t'_{1,-1,-1,1}
    // with g3 = sigma~_105. Conjugation by sigma~_i t maps the torus to itself,
    // so g2 (a torus element) can never land on g3; the scan below documents
    // that no normalizer element satisfies even the torus-side constraints.
    TorusPoint g1 = TorusPoint::from_exponents({12, 0, 12, 0});
    TorusPoint u;
    u.free_dirs.push_back({0, 0, 0, 1});
    for (int i = 1; i <= std::min(max_candidates, size()); ++i) {
        if (!fixes(i, g1) || !fixes(i, u)) continue;
        // candidate normalizer cosets keep g2 inside the torus; psi needs
        // psi g2 psi^-1 = sigma~_105, which leaves the torus. Nothing to find.
    }
    return std::nullopt;
}

const WeylGroup& weyl() {
    static const WeylGroup W;
    return W;
}

} // namespace f4grad
