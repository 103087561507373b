#include "f4grad/f4lie.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

namespace f4grad {

namespace {

// pair list for b_1..b_48, 1-based indices into the standard basis of J
constexpr int BPAIRS[48][2] = {
    {1, 4},  {1, 13}, {6, 7},  {8, 9},  {2, 21}, {1, 19}, {7, 8},  {1, 17},
    {2, 27}, {5, 11}, {2, 25}, {1, 11}, {5, 9},  {1, 9},  {4, 11}, {5, 7},
    {1, 7},  {4, 9},  {2, 23}, {4, 7},  {1, 15}, {9, 11}, {7, 11}, {7, 9},
    {1, 5},  {1, 12}, {9, 10}, {6, 11}, {2, 20}, {1, 16}, {10, 11}, {1, 14},
    {2, 24}, {4, 8},  {2, 22}, {1, 8},  {4, 6},  {1, 6},  {5, 8},  {4, 10},
    {1, 10}, {5, 6},  {2, 26}, {5, 10}, {1, 18}, {6, 8},  {8, 10}, {6, 10}};

// roots of b_1..b_24 in Delta coordinates (negatives follow in the same order)
constexpr int BROOTS[24][4] = {
    {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 1},
    {0, 1, 1, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}, {0, 1, 1, 1}, {0, 1, 2, 0},
    {1, 1, 1, 1}, {0, 1, 2, 1}, {1, 1, 2, 0}, {1, 1, 2, 1}, {0, 1, 2, 2},
    {1, 2, 2, 0}, {1, 2, 2, 1}, {1, 1, 2, 2}, {1, 2, 3, 1}, {1, 2, 2, 2},
    {1, 2, 3, 2}, {1, 2, 4, 2}, {1, 3, 4, 2}, {2, 3, 4, 2}};

SpMat<Rat> commutator(const SpMat<Rat>& a, const SpMat<Rat>& b) {
    SpMat<Rat> ab = a * b;
    SpMat<Rat> ba = b * a;
    SpMat<Rat> out;
    out.rows = ab.rows;
    out.cols = ab.cols;
    out.row.resize(out.rows);
    for (int r = 0; r < out.rows; ++r) {
        SparseRow<Rat> merged;
        size_t i = 0, j = 0;
        const auto& x = ab.row[r];
        const auto& y = ba.row[r];
        while (i < x.size() || j < y.size()) {
            if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) merged.push_back(x[i++]);
            else if (i == x.size() || y[j].first < x[i].first) {
                merged.emplace_back(y[j].first, -y[j].second);
                ++j;
            } else {
                Rat v = x[i].second - y[j].second;
                if (!is_zero(v)) merged.emplace_back(x[i].first, v);
                ++i, ++j;
            }
        }
        out.row[r] = std::move(merged);
    }
    return out;
}

std::vector<Rat> vectorize(const SpMat<Rat>& m) {
    std::vector<Rat> v(m.rows * m.cols, Rat(0));
    for (int r = 0; r < m.rows; ++r)
        for (const auto& [c, val] : m.row[r]) v[r * m.cols + c] = val;
    return v;
}

bool is_empty(const SpMat<Rat>& m) {
    for (const auto& r : m.row)
        if (!r.empty()) return false;
    return true;
}

} // namespace

namespace {

const char* BPRIME_CACHE_HEADER = "f4grad bprime basis v1";

std::string bprime_cache_path() {
    const char* dir = std::getenv("GRADINGS_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::string(dir) + "/bprime-v1.txt";
}

std::vector<SpMat<Rat>> load_bprime_cache() {
    std::string path = bprime_cache_path();
    if (path.empty()) return {};
    std::ifstream in(path);
    if (!in) return {};
    std::string header;
    std::getline(in, header);
    if (header != BPRIME_CACHE_HEADER) return {};
    std::vector<SpMat<Rat>> ops(52);
    for (auto& op : ops) {
        int nnz = -1;
        if (!(in >> nnz) || nnz <= 0) return {};
        op.rows = op.cols = 27;
        op.row.resize(27);
        for (int t = 0; t < nnz; ++t) {
            int r, c;
            std::string val;
            if (!(in >> r >> c >> val)) return {};
            if (r < 0 || r >= 27 || c < 0 || c >= 27) return {};
            op.row[r].emplace_back(c, Rat(val));
        }
    }
    return ops;
}

void save_bprime_cache(const std::vector<SpMat<Rat>>& ops) {
    std::string path = bprime_cache_path();
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) return;
    out << BPRIME_CACHE_HEADER << "\n";
    for (const auto& op : ops) {
        int nnz = 0;
        for (const auto& row : op.row) nnz += (int)row.size();
        out << nnz << "\n";
        for (int r = 0; r < 27; ++r)
            for (const auto& [c, v] : op.row[r]) out << r << " " << c << " " << v.get_str() << "\n";
    }
}

} // namespace

F4Model::F4Model() { build(); }

void F4Model::build() {
    const AlgebraTable& J = albert();

    // right-multiplication operators of the 27 basis elements
    std::vector<SpMat<Rat>> R(27);
    for (int i = 0; i < 27; ++i) {
        std::vector<Rat> v(27, Rat(0));
        v[i] = 1;
        R[i] = SpMat<Rat>::from_dense(J.right_mul_operator(v));
    }

    // the cache replaces only the commutator computations; every structural
    // certification below runs either way
    bool from_cache = false;
    ops_ = load_bprime_cache();
    if (ops_.size() == 52) {
        from_cache = true;
    } else {
        ops_.assign(52, {});
        for (int k = 0; k < 48; ++k)
            ops_[4 + k] = commutator(R[BPAIRS[k][0] - 1], R[BPAIRS[k][1] - 1]);
        auto scaled_comm = [&](int bi, int bj, long s) {
            SpMat<Rat> c = commutator(ops_[4 + bi - 1], ops_[4 + bj - 1]);
            for (auto& row : c.row)
                for (auto& [idx, v] : row) v *= s;
            return c;
        };
        ops_[0] = scaled_comm(4, 28, 4);
        ops_[1] = scaled_comm(27, 3, 4);
        ops_[2] = scaled_comm(26, 2, 8);
        ops_[3] = scaled_comm(25, 1, 8);
    }
    if (!from_cache) save_bprime_cache(ops_);

    RowReducer<Rat> red(27 * 27, true);
    for (int k = 0; k < 52; ++k) {
        if (is_empty(ops_[k])) throw DependentBasis("f4 basis op " + std::to_string(k) + " vanished");
        if (!red.add_row(vectorize(ops_[k])))
            throw DependentBasis("f4 basis op " + std::to_string(k) + " is dependent");
    }

    // torus change of coordinates: X = u^2/(x y^2 z), Y = yz, Z = 1/u, U = x
    E_ = IntMat(4, 4);
    E_ << -1, -2, -1, 2, 0, 1, 1, 0, 0, 0, 0, -1, 1, 0, 0, 0;
    m_ = IntMat(4, 4);
    m_ << 0, 0, 0, 1, -1, -1, -2, -1, 1, 2, 2, 1, 0, 0, -1, 0;
    {
        IntMat prod = E_ * m_;
        if (prod != IntMat::Identity(4, 4)) throw std::logic_error("f4: m is not E^-1");
    }

    // roots symbolically: n_k = m^T (q_i + q_j), checked against the printed list
    const auto& q = albert_torus_exponents();
    roots_.resize(48);
    for (int k = 0; k < 48; ++k) {
        const int i = BPAIRS[k][0] - 1, j = BPAIRS[k][1] - 1;
        Root4 n{};
        for (int r = 0; r < 4; ++r) {
            long s = 0;
            for (int c = 0; c < 4; ++c) s += (long)m_(c, r) * (q[i][c] + q[j][c]);
            n[r] = (int)s;
        }
        roots_[k] = n;
    }
    for (int k = 0; k < 24; ++k) {
        Root4 expect = {BROOTS[k][0], BROOTS[k][1], BROOTS[k][2], BROOTS[k][3]};
        if (roots_[k] != expect) throw std::logic_error("f4: root of b_" + std::to_string(k + 1) + " mismatch");
        Root4 neg = expect;
        for (auto& x : neg) x = -x;
        if (roots_[24 + k] != neg)
            throw std::logic_error("f4: root of b_" + std::to_string(k + 25) + " mismatch");
        positive_.push_back(expect);
    }
    for (int k = 0; k < 48; ++k) root_index_[roots_[k]] = 4 + k;

    // size of the pair set S = {(i,j) : [R_wi, R_wj] != 0}, unordered
    {
        int count = 0;
        for (int i = 0; i < 27; ++i)
            for (int j = i + 1; j < 27; ++j)
                if (!is_empty(commutator(R[i], R[j]))) ++count;
        distinct_products_ = count;
    }

    // structure constants in B'
    f4_.init("f4", 52, Flavor::Lie);
    f4_.basis_names = {"t1", "t2", "t3", "t4"};
    f4_.basis_names.resize(52);
    for (int k = 0; k < 48; ++k) f4_.basis_names[4 + k] = "b" + std::to_string(k + 1);
    for (int a = 0; a < 52; ++a)
        for (int b = a + 1; b < 52; ++b) {
            SpMat<Rat> br = commutator(ops_[a], ops_[b]);
            SparseRow<Rat> row;
            if (!is_empty(br)) {
                auto t = red.coordinates(vectorize(br));
                if (!t) throw NotClosedUnderBracket("f4 bracket left the span");
                for (int k = 0; k < 52; ++k)
                    if (!is_zero((*t)[k])) row.emplace_back(k, (*t)[k]);
            }
            SparseRow<Rat> neg;
            for (const auto& [k, v] : row) neg.emplace_back(k, -v);
            f4_.prod[a][b] = std::move(row);
            f4_.prod[b][a] = std::move(neg);
        }

    // root-vector property and the Gram matrix of the simple roots
    // simple roots alpha_1..alpha_4 sit at slots of b4, b3, b2, b1
    const int simple_slot[4] = {7, 6, 5, 4};
    auto eigen_of = [&](int t, int k) -> Rat {
        const auto& row = f4_.prod[t][k];
        if (row.empty()) return Rat(0);
        if (row.size() != 1 || row[0].first != k)
            throw std::logic_error("f4: [t, b] is not a multiple of b");
        return row[0].second;
    };
    gram_ = MatQ(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int a = 0; a < 4; ++a) gram_(i, a) = eigen_of(a, simple_slot[i]);
    for (int i = 0; i < 4; ++i)
        for (int a = 0; a < 4; ++a)
            if (gram_(i, a) != gram_(a, i)) throw std::logic_error("f4: Gram matrix not symmetric");
    for (int k = 0; k < 48; ++k)
        for (int a = 0; a < 4; ++a) {
            Rat expect(0);
            for (int i = 0; i < 4; ++i) expect += Rat((long)roots_[k][i]) * gram_(i, a);
            if (eigen_of(a, 4 + k) != expect)
                throw std::logic_error("f4: root-vector property fails at b_" + std::to_string(k + 1));
        }
    cartan_ = IntMat(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Rat c = 2 * gram_(i, j) / gram_(j, j);
            if (c.get_den() != 1) throw std::logic_error("f4: Cartan integer not integral");
            cartan_(i, j) = c.get_num().get_si();
        }

    // bracket compatibility with the root structure
    for (int a = 4; a < 52; ++a)
        for (int b = 4; b < 52; ++b) {
            if (a == b) continue;
            Root4 s{};
            bool zero = true;
            for (int c = 0; c < 4; ++c) {
                s[c] = roots_[a - 4][c] + roots_[b - 4][c];
                zero = zero && s[c] == 0;
            }
            const auto& row = f4_.prod[a][b];
            if (zero) {
                for (const auto& [k, v] : row)
                    if (k >= 4) throw std::logic_error("f4: [v_a, v_-a] outside Cartan");
            } else if (auto it = root_index_.find(s); it != root_index_.end()) {
                for (const auto& [k, v] : row)
                    if (k != it->second) throw std::logic_error("f4: bracket misses its root space");
            } else {
                if (!row.empty()) throw std::logic_error("f4: bracket of non-root sum nonzero");
            }
        }
}

int F4Model::root_slot(const Root4& r) const {
    auto it = root_index_.find(r);
    return it == root_index_.end() ? -1 : it->second;
}

int F4Model::tprime_exponent(int k, const std::array<int, 4>& a) const {
    if (k < 4) return 0;
    long e = 0;
    for (int r = 0; r < 4; ++r) {
        long row = 0;
        for (int c = 0; c < 4; ++c) row += (long)E_(r, c) * a[c];
        e += (long)roots_[k - 4][r] * row;
    }
    return (int)(((e % 24) + 24) % 24);
}

std::vector<int> F4Model::direction_exponents(const std::array<int, 4>& g) const {
    std::vector<int> out;
    std::array<long, 4> eg{};
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) eg[r] += (long)E_(r, c) * g[c];
    for (const auto& n : roots_) {
        long e = 0;
        for (int r = 0; r < 4; ++r) e += (long)n[r] * eg[r];
        out.push_back((int)e);
    }
    out.push_back(0); // the Cartan
    return out;
}

AlgebraMap F4Model::tprime(const std::array<int, 4>& a) const {
    std::vector<Cyc> d(52);
    for (int k = 0; k < 52; ++k) d[k] = Cyc::zeta(tprime_exponent(k, a));
    return AlgebraMap::diagonal(f4_, d);
}

RowReducer<Cyc>& F4Model::coords() const {
    if (!coords_) {
        coords_ = std::make_unique<RowReducer<Cyc>>(27 * 27, true);
        for (const auto& op : ops_) {
            std::vector<Cyc> v(27 * 27, Cyc(0));
            for (int r = 0; r < 27; ++r)
                for (const auto& [c, val] : op.row[r]) v[r * 27 + c] = Cyc(val);
            coords_->add_row(std::move(v));
        }
    }
    return *coords_;
}

AlgebraMap F4Model::ad_transfer(const AlgebraMap& f) const {
    if (f.alg != &albert()) throw std::invalid_argument("ad_transfer: map must act on J");
    SpMat<Cyc> fs = SpMat<Cyc>::from_dense(f.m);
    SpMat<Cyc> fi = SpMat<Cyc>::from_dense(inverse_of(f.m));
    auto& red = coords();
    MatC out(52, 52);
    out.setConstant(Cyc(0));
    for (int k = 0; k < 52; ++k) {
        SpMat<Cyc> op;
        op.rows = op.cols = 27;
        op.row.resize(27);
        for (int r = 0; r < 27; ++r)
            for (const auto& [c, val] : ops_[k].row[r]) op.row[r].emplace_back(c, Cyc(val));
        SpMat<Cyc> conj = fs * op * fi;
        std::vector<Cyc> v(27 * 27, Cyc(0));
        for (int r = 0; r < 27; ++r)
            for (const auto& [c, val] : conj.row[r]) v[r * 27 + c] = val;
        auto t = red.coordinates(std::move(v));
        if (!t) throw std::logic_error("ad_transfer: image not in Der(J) span");
        for (int r = 0; r < 52; ++r) out(r, k) = (*t)[r];
    }
    return {f4_, std::move(out)};
}

std::array<Root4, 27> F4Model::cartan_labels_albert() const {
    const auto& q = albert_torus_exponents();
    std::array<Root4, 27> out{};
    for (int i = 0; i < 27; ++i)
        for (int r = 0; r < 4; ++r) {
            long s = 0;
            for (int c = 0; c < 4; ++c) s += (long)m_(c, r) * q[i][c];
            out[i][r] = (int)s;
        }
    return out;
}

std::vector<Root4> F4Model::cartan_labels_f4() const {
    std::vector<Root4> out(52, Root4{0, 0, 0, 0});
    for (int k = 4; k < 52; ++k) out[k] = roots_[k - 4];
    return out;
}

const F4Model& f4model() {
    static const F4Model model;
    return model;
}

} // namespace f4grad
