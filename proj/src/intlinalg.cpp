#include "f4grad/intlinalg.hpp"

#include <gmpxx.h>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace f4grad {

namespace {

using ZMat = std::vector<std::vector<mpz_class>>;

ZMat to_z(const IntMat& m) {
    ZMat z(m.rows(), std::vector<mpz_class>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) z[r][c] = (long)m(r, c);
    return z;
}

IntMat from_z(const ZMat& z) {
    IntMat m((int)z.size(), (int)z[0].size());
    for (size_t r = 0; r < z.size(); ++r)
        for (size_t c = 0; c < z[0].size(); ++c) {
            if (!z[r][c].fits_slong_p())
                throw std::overflow_error("smith_normal_form: entry exceeds long long");
            m((int)r, (int)c) = z[r][c].get_si();
        }
    return m;
}

void swap_rows(ZMat& a, int i, int j) { std::swap(a[i], a[j]); }
void swap_cols(ZMat& a, int i, int j) {
    for (auto& row : a) std::swap(row[i], row[j]);
}
// row i -= q * row j
void row_sub(ZMat& a, int i, int j, const mpz_class& q) {
    for (size_t c = 0; c < a[0].size(); ++c) a[i][c] -= q * a[j][c];
}
void col_sub(ZMat& a, int i, int j, const mpz_class& q) {
    for (auto& row : a) row[i] -= q * row[j];
}
void negate_row(ZMat& a, int i) {
    for (auto& x : a[i]) x = -x;
}

} // namespace

int SmithForm::rank() const {
    int n = (int)std::min(S.rows(), S.cols());
    int r = 0;
    for (int k = 0; k < n; ++k)
        if (S(k, k) != 0) ++r;
    return r;
}

std::vector<long long> SmithForm::elementary_divisors() const {
    std::vector<long long> d;
    int n = (int)std::min(S.rows(), S.cols());
    for (int k = 0; k < n; ++k)
        if (S(k, k) != 0) d.push_back(S(k, k));
    return d;
}

SmithForm smith_normal_form(const IntMat& M) {
    const int nr = (int)M.rows(), nc = (int)M.cols();
    ZMat A = to_z(M);
    ZMat U(nr, std::vector<mpz_class>(nr, 0)), V(nc, std::vector<mpz_class>(nc, 0));
    for (int i = 0; i < nr; ++i) U[i][i] = 1;
    for (int i = 0; i < nc; ++i) V[i][i] = 1;

    const int n = std::min(nr, nc);
    for (int t = 0; t < n; ++t) {
        // find the nonzero entry of least absolute value in the trailing block
        int pr = -1, pc = -1;
        mpz_class best = 0;
        for (int r = t; r < nr; ++r)
            for (int c = t; c < nc; ++c) {
                if (A[r][c] == 0) continue;
                mpz_class v = abs(A[r][c]);
                if (pr < 0 || v < best) { best = v; pr = r; pc = c; }
            }
        if (pr < 0) break;
        if (pr != t) { swap_rows(A, t, pr); swap_rows(U, t, pr); }
        if (pc != t) { swap_cols(A, t, pc); swap_cols(V, t, pc); }

        for (;;) {
            bool clean = true;
            for (int r = t + 1; r < nr; ++r) {
                if (A[r][t] == 0) continue;
                mpz_class q = A[r][t] / A[t][t];
                row_sub(A, r, t, q);
                row_sub(U, r, t, q);
                if (A[r][t] != 0) {
                    swap_rows(A, t, r);
                    swap_rows(U, t, r);
                    clean = false;
                }
            }
            for (int c = t + 1; c < nc; ++c) {
                if (A[t][c] == 0) continue;
                mpz_class q = A[t][c] / A[t][t];
                col_sub(A, c, t, q);
                col_sub(V, c, t, q);
                if (A[t][c] != 0) {
                    swap_cols(A, t, c);
                    swap_cols(V, t, c);
                    clean = false;
                }
            }
            if (!clean) continue;
            // entries below/right of the pivot in its row/col are zero;
            // enforce divisibility of the remaining block by the pivot
            bool divides_all = true;
            for (int r = t + 1; r < nr && divides_all; ++r)
                for (int c = t + 1; c < nc; ++c)
                    if (A[r][c] % A[t][t] != 0) {
                        // add row r to row t, then restart the cleanup
                        for (int k = 0; k < nc; ++k) A[t][k] += A[r][k];
                        for (int k = 0; k < nr; ++k) U[t][k] += U[r][k];
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
        if (A[t][t] < 0) { negate_row(A, t); negate_row(U, t); }
    }
    SmithForm out;
    out.S = from_z(A);
    out.U = from_z(U);
    out.V = from_z(V);
    return out;
}

std::string AbelianGroup::str() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " x ";
        first = false;
    };
    if (torus_rank == 1) { sep(); os << "F*"; }
    else if (torus_rank > 1) { sep(); os << "(F*)^" << torus_rank; }
    // print largest factor first, grouping equal ones, to match table style
    for (size_t k = factors.size(); k-- > 0;) {
        size_t j = k + 1;
        while (k > 0 && factors[k - 1] == factors[k]) --k;
        sep();
        os << "Z" << factors[k];
        if (j - k > 1) os << "^" << (j - k);
    }
    if (first) os << "1";
    return os.str();
}

AbelianGroup multiplicative_kernel_structure(const IntMat& M) {
    if (M.rows() == 0 || M.cols() == 0)
        return AbelianGroup{(int)M.cols(), {}};
    SmithForm sf = smith_normal_form(M);
    AbelianGroup g;
    g.torus_rank = (int)M.cols() - sf.rank();
    for (long long d : sf.elementary_divisors())
        if (d > 1) g.factors.push_back(d);
    return g;
}

MultiplicativeKernelGenerators multiplicative_kernel_generators(const IntMat& M) {
    SmithForm sf = smith_normal_form(M);
    const int n = (int)M.cols();
    MultiplicativeKernelGenerators out;
    // t = phi_V(s) solves phi_M(t) = 1 iff s_i^{d_i} = 1; generator for slot i
    // has exponent vector = column i of V.
    for (int i = 0; i < n; ++i) {
        long long d = (i < std::min(sf.S.rows(), sf.S.cols())) ? sf.S(i, i) : 0;
        if (d == 1) continue;
        IntVec col = sf.V.col(i);
        if (d == 0) out.continuous.push_back(col);
        else out.torsion.emplace_back(col, d);
    }
    return out;
}

long long det_int(const IntMat& M) {
    // Bareiss fraction-free elimination over mpz.
    const int n = (int)M.rows();
    if (n != M.cols()) throw std::invalid_argument("det_int: square only");
    if (n == 0) return 1;
    ZMat a = to_z(M);
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) { p = r; break; }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        prev = a[k][k];
    }
    mpz_class d = a[n - 1][n - 1] * sign;
    if (!d.fits_slong_p()) throw std::overflow_error("det_int: overflow");
    return d.get_si();
}

} // namespace f4grad
