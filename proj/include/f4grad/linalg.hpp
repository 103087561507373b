#pragma once
#include "f4grad/cyclotomic.hpp"
#include "f4grad/rational.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <optional>
#include <vector>

namespace f4grad {

using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using MatC = Eigen::Matrix<Cyc, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using VecC = Eigen::Matrix<Cyc, Eigen::Dynamic, 1>;

template <class S> using SparseRow = std::vector<std::pair<int, S>>;

// Incremental reduced row echelon form over an exact field scalar.
// Pivot rows are kept normalized (pivot entry 1) and fully reduced against
// each other, so reducing an incoming row is a single sweep in column order.
// Optionally tracks how each pivot row was formed from the absorbed inputs,
// which turns the reducer into a coordinate extractor for span bases.
template <class S> class RowReducer {
  public:
    explicit RowReducer(int cols, bool track = false) : cols_(cols), track_(track) {}

    int cols() const { return cols_; }
    int rank() const { return (int)pivots_.size(); }
    const std::vector<int>& pivot_cols() const { return pivot_cols_; }

    // Absorbs a row into the echelon. `input_index` names the row for
    // tracking purposes. Returns true iff the row increased the rank.
    bool add_row(std::vector<S> row, int input_index = -1) {
        std::vector<S> track;
        if (track_) {
            track.assign(ninputs_ + 1, S(0));
            track[ninputs_] = S(1);
        }
        ++ninputs_;
        (void)input_index;
        auto piv = reduce_only_mut(row, track_ ? &track : nullptr);
        if (!piv) return false;
        insert_pivot(*piv, std::move(row), std::move(track));
        return true;
    }

    // Expresses v in the absorbed rows: returns coefficients t with
    // v = sum_k t[k] * input_row[k], or nullopt if v is outside the span.
    // Requires tracking.
    std::optional<std::vector<S>> coordinates(std::vector<S> v) const {
        std::vector<S> track(ninputs_, S(0));
        for (size_t p = 0; p < pivots_.size(); ++p) {
            const int c = pivot_cols_[p];
            if (is_zero(v[c])) continue;
            S f = v[c];
            axpy(v, f, pivots_[p].row);
            axpy_any(track, f, pivots_[p].track);
        }
        for (int c = 0; c < cols_; ++c)
            if (!is_zero(v[c])) return std::nullopt;
        for (auto& t : track) t = -t;
        return track;
    }

    bool contains(std::vector<S> v) const {
        for (size_t p = 0; p < pivots_.size(); ++p) {
            const int c = pivot_cols_[p];
            if (is_zero(v[c])) continue;
            S f = v[c]; // copy: axpy writes through v[c]
            axpy(v, f, pivots_[p].row);
        }
        for (int c = 0; c < cols_; ++c)
            if (!is_zero(v[c])) return false;
        return true;
    }

    // Basis of {x : R x = 0} for R the absorbed row set, as dense rows.
    std::vector<std::vector<S>> kernel() const {
        std::vector<bool> is_piv(cols_, false);
        for (int c : pivot_cols_) is_piv[c] = true;
        std::vector<std::vector<S>> out;
        for (int f = 0; f < cols_; ++f) {
            if (is_piv[f]) continue;
            std::vector<S> x(cols_, S(0));
            x[f] = S(1);
            for (size_t p = 0; p < pivots_.size(); ++p) {
                for (const auto& [j, v] : pivots_[p].row)
                    if (j == f) x[pivot_cols_[p]] = -v;
            }
            out.push_back(std::move(x));
        }
        return out;
    }

    // Canonical RREF rows (dense), sorted by pivot column. Two spans are
    // equal iff their canonical rows coincide.
    std::vector<std::vector<S>> canonical_rows() const {
        std::vector<size_t> order(pivots_.size());
        for (size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::sort(order.begin(), order.end(),
                  [&](size_t a, size_t b) { return pivot_cols_[a] < pivot_cols_[b]; });
        std::vector<std::vector<S>> out;
        for (size_t k : order) {
            std::vector<S> r(cols_, S(0));
            for (const auto& [j, v] : pivots_[k].row) r[j] = v;
            out.push_back(std::move(r));
        }
        return out;
    }

  private:
    struct Pivot {
        SparseRow<S> row;   // normalized: entry at pivot col is 1
        SparseRow<S> track; // combination of inputs forming this row
    };

    static void axpy(std::vector<S>& dense, const S& f, const SparseRow<S>& sp) {
        for (const auto& [j, v] : sp) dense[j] -= f * v;
    }
    static void axpy_any(std::vector<S>& dense, const S& f, const SparseRow<S>& sp) {
        for (const auto& [j, v] : sp) {
            if ((size_t)j >= dense.size()) dense.resize(j + 1, S(0));
            dense[j] -= f * v;
        }
    }

    std::optional<int> reduce_only_mut(std::vector<S>& row, std::vector<S>* track) const {
        for (size_t p = 0; p < pivots_.size(); ++p) {
            const int c = pivot_cols_[p];
            if (is_zero(row[c])) continue;
            S f = row[c];
            axpy(row, f, pivots_[p].row);
            if (track) axpy_any(*track, f, pivots_[p].track);
        }
        for (int c = 0; c < cols_; ++c)
            if (!is_zero(row[c])) return c;
        return std::nullopt;
    }

    void insert_pivot(int col, std::vector<S> dense, std::vector<S> track) {
        S inv = S(1) / dense[col];
        Pivot pv;
        for (int j = 0; j < cols_; ++j)
            if (!is_zero(dense[j])) pv.row.emplace_back(j, dense[j] * inv);
        for (size_t j = 0; j < track.size(); ++j)
            if (!is_zero(track[j])) pv.track.emplace_back((int)j, track[j] * inv);
        // keep full RREF: clear the new pivot column from existing rows
        for (size_t p = 0; p < pivots_.size(); ++p) {
            auto it = std::lower_bound(pivots_[p].row.begin(), pivots_[p].row.end(), col,
                                       [](const auto& e, int c) { return e.first < c; });
            if (it == pivots_[p].row.end() || it->first != col) continue;
            S f = it->second;
            sparse_axpy(pivots_[p].row, f, pv.row);
            if (track_) sparse_axpy(pivots_[p].track, f, pv.track);
        }
        pivots_.push_back(std::move(pv));
        pivot_cols_.push_back(col);
    }

    static void sparse_axpy(SparseRow<S>& a, const S& f, const SparseRow<S>& b) {
        SparseRow<S> out;
        out.reserve(a.size() + b.size());
        size_t ia = 0, ib = 0;
        while (ia < a.size() || ib < b.size()) {
            if (ib == b.size() || (ia < a.size() && a[ia].first < b[ib].first)) {
                out.push_back(a[ia++]);
            } else if (ia == a.size() || b[ib].first < a[ia].first) {
                S v = -f * b[ib].second;
                if (!is_zero(v)) out.emplace_back(b[ib].first, std::move(v));
                ++ib;
            } else {
                S v = a[ia].second - f * b[ib].second;
                if (!is_zero(v)) out.emplace_back(a[ia].first, std::move(v));
                ++ia, ++ib;
            }
        }
        a = std::move(out);
    }

    int cols_;
    bool track_;
    int ninputs_ = 0;
    std::vector<Pivot> pivots_;
    std::vector<int> pivot_cols_;
};

template <class S>
std::vector<S> to_row(const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& m, int r) {
    std::vector<S> out(m.cols());
    for (int j = 0; j < m.cols(); ++j) out[j] = m(r, j);
    return out;
}

template <class S>
std::vector<S> to_vec(const Eigen::Matrix<S, Eigen::Dynamic, 1>& v) {
    std::vector<S> out(v.size());
    for (int j = 0; j < v.size(); ++j) out[j] = v(j);
    return out;
}

template <class S>
Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>
rows_to_matrix(const std::vector<std::vector<S>>& rows, int cols) {
    Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> m((int)rows.size(), cols);
    m.setConstant(S(0));
    for (int r = 0; r < (int)rows.size(); ++r)
        for (int j = 0; j < cols; ++j) m(r, j) = rows[r][j];
    return m;
}

// Exact rank of a dense matrix.
template <class S>
int rank_of(const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& m) {
    RowReducer<S> red((int)m.cols());
    for (int r = 0; r < m.rows(); ++r) red.add_row(to_row(m, r));
    return red.rank();
}

// Basis of the right null space {x : M x = 0}, as rows.
template <class S>
std::vector<std::vector<S>> kernel_basis(const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& m) {
    RowReducer<S> red((int)m.cols());
    for (int r = 0; r < m.rows(); ++r) red.add_row(to_row(m, r));
    return red.kernel();
}

// Exact inverse; throws std::domain_error when singular.
template <class S>
Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>
inverse_of(const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& m) {
    const int n = (int)m.rows();
    RowReducer<S> red(n, true);
    for (int r = 0; r < n; ++r) red.add_row(to_row(m, r));
    if (red.rank() != n) throw std::domain_error("inverse_of: singular matrix");
    Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> inv(n, n);
    inv.setConstant(S(0));
    for (int c = 0; c < n; ++c) {
        std::vector<S> e(n, S(0));
        e[c] = S(1);
        auto t = red.coordinates(std::move(e));
        if (!t) throw std::domain_error("inverse_of: singular matrix");
        // e_c = sum_j t_j row_j(M), i.e. t is row c of M^-1
        for (int j = 0; j < n; ++j) inv(c, j) = (*t)[j];
    }
    return inv;
}

template <class S>
Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>
matrix_power(Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> base, long e) {
    const int n = (int)base.rows();
    Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> acc =
        Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>::Identity(n, n);
    while (e > 0) {
        if (e & 1) acc = (acc * base).eval();
        base = (base * base).eval();
        e >>= 1;
    }
    return acc;
}

// Multiplicative order of an invertible matrix, or nullopt past max_order.
template <class S>
std::optional<int>
matrix_order(const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& m, int max_order = 200) {
    const int n = (int)m.rows();
    auto id = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>::Identity(n, n);
    Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> acc = m;
    for (int k = 1; k <= max_order; ++k) {
        if (acc == id) return k;
        acc = (acc * m).eval();
    }
    return std::nullopt;
}

// Sparse matrix (rows of (col, value)); cheap conjugation of sparse algebra
// operators f b f^-1 without touching the zero bulk.
template <class S> struct SpMat {
    int rows = 0, cols = 0;
    std::vector<SparseRow<S>> row;

    static SpMat from_dense(const Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>& m) {
        SpMat sp;
        sp.rows = (int)m.rows();
        sp.cols = (int)m.cols();
        sp.row.resize(sp.rows);
        for (int r = 0; r < sp.rows; ++r)
            for (int c = 0; c < sp.cols; ++c)
                if (!is_zero(m(r, c))) sp.row[r].emplace_back(c, m(r, c));
        return sp;
    }

    Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> to_dense() const {
        Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic> m(rows, cols);
        m.setConstant(S(0));
        for (int r = 0; r < rows; ++r)
            for (const auto& [c, v] : row[r]) m(r, c) = v;
        return m;
    }

    friend SpMat operator*(const SpMat& a, const SpMat& b) {
        SpMat out;
        out.rows = a.rows;
        out.cols = b.cols;
        out.row.resize(out.rows);
        std::vector<S> acc(b.cols, S(0));
        std::vector<int> touched;
        for (int r = 0; r < a.rows; ++r) {
            touched.clear();
            for (const auto& [k, av] : a.row[r]) {
                for (const auto& [c, bv] : b.row[k]) {
                    if (is_zero(acc[c])) touched.push_back(c);
                    acc[c] += av * bv;
                }
            }
            std::sort(touched.begin(), touched.end());
            for (int c : touched) {
                if (!is_zero(acc[c])) out.row[r].emplace_back(c, acc[c]);
                acc[c] = S(0);
            }
        }
        return out;
    }
};

} // namespace f4grad
