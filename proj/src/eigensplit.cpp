#include "f4grad/eigensplit.hpp"

#include <algorithm>

namespace f4grad {

std::vector<Cyc> all_roots24() {
    std::vector<Cyc> out;
    out.reserve(24);
    for (int k = 0; k < 24; ++k) out.push_back(Cyc::zeta(k));
    return out;
}

std::vector<EigenComponent>
simultaneous_eigenspaces(const std::vector<MatC>& maps, const std::vector<Cyc>& candidates) {
    if (maps.empty())
        throw std::invalid_argument("simultaneous_eigenspaces: ambient dimension unknown for empty map list");
    const int n = (int)maps[0].rows();
    for (size_t a = 0; a < maps.size(); ++a)
        for (size_t b = a + 1; b < maps.size(); ++b)
            if (maps[a] * maps[b] != maps[b] * maps[a])
                throw CommutatorNonzero("maps " + std::to_string(a) + " and " + std::to_string(b) +
                                        " do not commute");

    std::vector<EigenComponent> comps(1);
    comps[0].basis.resize(n);
    for (int r = 0; r < n; ++r) {
        comps[0].basis[r].assign(n, Cyc(0));
        comps[0].basis[r][r] = Cyc(1);
    }

    for (const MatC& M : maps) {
        std::vector<EigenComponent> next;
        for (EigenComponent& comp : comps) {
            const int d = comp.dim();
            // restriction of M to the component, in its basis rows
            RowReducer<Cyc> red(n, true);
            for (const auto& row : comp.basis) red.add_row(row);
            MatC R(d, d);
            R.setConstant(Cyc(0));
            for (int r = 0; r < d; ++r) {
                std::vector<Cyc> img(n, Cyc(0));
                for (int j = 0; j < n; ++j) {
                    const Cyc& x = comp.basis[r][j];
                    if (x.is_zero()) continue;
                    for (int k = 0; k < n; ++k) {
                        const Cyc& m = M(k, j);
                        if (!m.is_zero()) img[k] += m * x;
                    }
                }
                auto t = red.coordinates(std::move(img));
                if (!t)
                    throw EigenvalueOutsideCandidates("component is not invariant under a map");
                for (int j = 0; j < d; ++j) R(r, j) = (*t)[j];
            }
            int found = 0;
            for (const Cyc& lam : candidates) {
                MatC A = R.transpose();
                for (int k = 0; k < d; ++k) A(k, k) -= lam;
                auto ker = kernel_basis(A);
                if (ker.empty()) continue;
                EigenComponent sub;
                sub.label = comp.label;
                auto e = lam.root_exponent();
                sub.label.push_back(e ? *e : -1);
                for (const auto& y : ker) {
                    std::vector<Cyc> v(n, Cyc(0));
                    for (int r = 0; r < d; ++r) {
                        if (y[r].is_zero()) continue;
                        for (int j = 0; j < n; ++j)
                            if (!comp.basis[r][j].is_zero()) v[j] += y[r] * comp.basis[r][j];
                    }
                    sub.basis.push_back(std::move(v));
                }
                found += sub.dim();
                next.push_back(std::move(sub));
            }
            if (found != d)
                throw EigenvalueOutsideCandidates(
                    "eigenspaces of a map sum to " + std::to_string(found) + " of " + std::to_string(d));
        }
        comps = std::move(next);
    }
    std::sort(comps.begin(), comps.end(),
              [](const EigenComponent& a, const EigenComponent& b) { return a.label < b.label; });
    return comps;
}

} // namespace f4grad
