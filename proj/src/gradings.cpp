#include "f4grad/gradings.hpp"
#include "f4grad/jordan.hpp"
#include "f4grad/octonion.hpp"
#include "f4grad/weyl.hpp"

#include "json.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace f4grad {

int Grading::total_dim() const {
    int d = 0;
    for (const auto& c : comps) d += c.dim();
    return d;
}

const Grading::Comp* Grading::find(const std::vector<int>& label) const {
    for (const auto& c : comps)
        if (c.label == label) return &c;
    return nullptr;
}

std::vector<int> Grading::add_labels(const std::vector<int>& a, const std::vector<int>& b) const {
    std::vector<int> out(a.size());
    for (size_t s = 0; s < a.size(); ++s) {
        long v = (long)a[s] + b[s];
        out[s] = moduli[s] > 0 ? (int)(((v % moduli[s]) + moduli[s]) % moduli[s]) : (int)v;
    }
    return out;
}

Grading grading_from_automorphisms(std::string name, const AlgebraTable& alg,
                                   std::vector<AlgebraMap> maps) {
    std::vector<MatC> ms;
    for (const auto& f : maps) ms.push_back(f.m);
    auto comps = simultaneous_eigenspaces(ms);
    Grading g;
    g.alg = &alg;
    g.name = std::move(name);
    g.provenance = std::move(maps);
    // slot modulus: lcm of the eigenvalue orders of that map
    const int nslots = (int)ms.size();
    g.moduli.assign(nslots, 1);
    for (const auto& c : comps)
        for (int s = 0; s < nslots; ++s) {
            int e = c.label[s];
            int order = e == 0 ? 1 : 24 / std::gcd(24, e);
            g.moduli[s] = std::lcm(g.moduli[s], order);
        }
    for (const auto& c : comps) {
        Grading::Comp gc;
        gc.basis = c.basis;
        gc.label.resize(nslots);
        for (int s = 0; s < nslots; ++s)
            gc.label[s] = (c.label[s] * g.moduli[s] / 24) % g.moduli[s];
        g.comps.push_back(std::move(gc));
    }
    std::sort(g.comps.begin(), g.comps.end(),
              [](const Grading::Comp& a, const Grading::Comp& b) { return a.label < b.label; });
    return g;
}

bool check_grading_closure(const Grading& g, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int n = g.alg->dim;
    RowReducer<Cyc> all(n);
    int total = 0;
    for (const auto& c : g.comps) {
        for (const auto& row : c.basis)
            if (!all.add_row(row)) return fail("components are not jointly independent");
        total += c.dim();
    }
    if (total != n) return fail("component dimensions sum to " + std::to_string(total));
    std::vector<RowReducer<Cyc>> reds;
    for (const auto& c : g.comps) {
        reds.emplace_back(n);
        for (const auto& row : c.basis) reds.back().add_row(row);
    }
    for (size_t i = 0; i < g.comps.size(); ++i)
        for (size_t j = i; j < g.comps.size(); ++j) {
            auto lab = g.add_labels(g.comps[i].label, g.comps[j].label);
            const Grading::Comp* target = g.find(lab);
            int target_idx = target ? (int)(target - g.comps.data()) : -1;
            for (const auto& x : g.comps[i].basis)
                for (const auto& y : g.comps[j].basis) {
                    auto p = g.alg->mul(x, y);
                    bool zero = true;
                    for (const auto& v : p) zero = zero && v.is_zero();
                    if (zero) continue;
                    if (!target) return fail("product lands outside the support");
                    if (!reds[target_idx].contains(p)) return fail("product escapes its component");
                }
        }
    return true;
}

std::vector<int> grading_type(const Grading& g) {
    int maxd = 0;
    for (const auto& c : g.comps)
        if (!(c.label == g.zero_label() && c.dim() == 0)) maxd = std::max(maxd, c.dim());
    std::vector<int> h(maxd, 0);
    for (const auto& c : g.comps)
        if (c.dim() > 0) h[c.dim() - 1]++;
    return h;
}

std::string type_string(const std::vector<int>& t) {
    std::ostringstream os;
    os << "(";
    for (size_t k = 0; k < t.size(); ++k) os << (k ? "," : "") << t[k];
    os << ")";
    return os.str();
}

AbelianGroup universal_group(const Grading& g) {
    // relation lattice spanned by e_i + e_j - e_k inside Z^{|Supp|}
    std::vector<const Grading::Comp*> supp;
    for (const auto& c : g.comps)
        if (c.dim() > 0) supp.push_back(&c);
    const int s = (int)supp.size();
    const int n = g.alg->dim;
    std::vector<RowReducer<Cyc>> reds;
    for (const auto* c : supp) {
        reds.emplace_back(n);
        for (const auto& row : c->basis) reds.back().add_row(row);
    }
    std::vector<std::vector<long long>> rel_rows;
    for (int i = 0; i < s; ++i)
        for (int j = i; j < s; ++j) {
            bool nonzero = false;
            int target = -1;
            for (const auto& x : supp[i]->basis) {
                for (const auto& y : supp[j]->basis) {
                    auto p = g.alg->mul(x, y);
                    bool zero = true;
                    for (const auto& v : p) zero = zero && v.is_zero();
                    if (zero) continue;
                    nonzero = true;
                    for (int k = 0; k < s && target < 0; ++k)
                        if (reds[k].contains(p)) target = k;
                }
            }
            if (!nonzero) continue;
            if (target < 0) throw NotClosedUnderBracket("universal_group: unlabeled product");
            std::vector<long long> row(s, 0);
            row[i] += 1;
            row[j] += 1;
            row[target] -= 1;
            bool allzero = true;
            for (auto v : row) allzero = allzero && v == 0;
            if (!allzero) rel_rows.push_back(std::move(row));
        }
    if (rel_rows.empty()) return AbelianGroup{s, {}};
    IntMat M((int)rel_rows.size(), s);
    for (int r = 0; r < (int)rel_rows.size(); ++r)
        for (int c = 0; c < s; ++c) M(r, c) = rel_rows[r][c];
    SmithForm sf = smith_normal_form(M);
    AbelianGroup out;
    out.torus_rank = s - sf.rank(); // free rank of the quotient
    for (long long d : sf.elementary_divisors())
        if (d > 1) out.factors.push_back(d);
    return out;
}

Subalgebra zero_component_in_f4(const Grading& g) {
    const F4Model& M = f4model();
    std::vector<AlgebraMap> maps;
    for (const auto& f : g.provenance) {
        if (f.alg == &albert()) maps.push_back(M.ad_transfer(f));
        else if (f.alg == &M.lie()) maps.push_back(f);
        else throw std::invalid_argument("torality: grading must live on J or f4");
    }
    if (maps.empty()) throw std::invalid_argument("torality: no provenance maps");
    return fixed_subalgebra(M.lie(), maps);
}

ToralityReport torality(const Grading& g) {
    Subalgebra L = zero_component_in_f4(g);
    ToralityReport r;
    r.zero_dim = L.dim();
    if (r.zero_dim < 4) {
        r.zero_rank = r.zero_dim;
        r.toral = false;
        return r;
    }
    r.zero_rank = lie_rank(L);
    r.toral = (r.zero_rank == 4);
    return r;
}

Grading coarsen(const Grading& g, const std::vector<CoarsenSlot>& plan, std::string name) {
    for (const auto& p : plan) {
        if (p.slot < 0 || p.slot >= (int)g.moduli.size())
            throw NotHomomorphic("coarsen: bad slot index");
        int old = g.moduli[p.slot];
        if (old > 0) {
            if (p.new_modulus <= 0 || old % p.new_modulus != 0)
                throw NotHomomorphic("coarsen: new modulus must divide the old one");
        } else if (p.new_modulus < 0) {
            throw NotHomomorphic("coarsen: bad modulus");
        }
    }
    Grading out;
    out.alg = g.alg;
    out.name = std::move(name);
    out.provenance = g.provenance; // informational
    for (const auto& p : plan) out.moduli.push_back(p.new_modulus);
    std::map<std::vector<int>, std::vector<std::vector<Cyc>>> merged;
    for (const auto& c : g.comps) {
        std::vector<int> lab;
        for (const auto& p : plan) {
            int v = c.label[p.slot];
            lab.push_back(p.new_modulus > 0 ? (((v % p.new_modulus) + p.new_modulus) % p.new_modulus)
                                            : v);
        }
        auto& rows = merged[lab];
        rows.insert(rows.end(), c.basis.begin(), c.basis.end());
    }
    for (auto& [lab, rows] : merged) {
        Grading::Comp c;
        c.label = lab;
        c.basis = std::move(rows);
        out.comps.push_back(std::move(c));
    }
    std::string why;
    if (!check_grading_closure(out, &why)) throw NotHomomorphic("coarsen: " + why);
    return out;
}

std::string grading_report_json(const Grading& g) {
    nlohmann::json j;
    j["algebra"] = g.alg->name;
    j["name"] = g.name;
    AbelianGroup ug = universal_group(g);
    j["group"] = {{"free_rank", ug.torus_rank}, {"factors", ug.factors}, {"pretty", ug.str()}};
    j["type"] = grading_type(g);
    const bool torality_applies =
        !g.provenance.empty() && (g.alg == &albert() || g.alg == &f4model().lie());
    if (torality_applies) {
        auto t = torality(g);
        j["toral"] = t.toral;
        j["zero_component_dim"] = t.zero_dim;
    }
    j["moduli"] = g.moduli;
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : g.comps) {
        nlohmann::json jc;
        jc["label"] = c.label;
        jc["dim"] = c.dim();
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& row : c.basis) {
            nlohmann::json jr = nlohmann::json::array();
            for (const auto& v : row) jr.push_back(v.str());
            basis.push_back(jr);
        }
        jc["basis"] = basis;
        comps.push_back(jc);
    }
    j["components"] = comps;
    j["provenance"] = g.name;
    return j.dump(2);
}

std::string grading_report_table(const Grading& g) {
    std::ostringstream os;
    os << "grading " << g.name << " on " << g.alg->name << "\n";
    os << "  type " << type_string(grading_type(g)) << ", universal group "
       << universal_group(g).str();
    if (!g.provenance.empty() && (g.alg == &albert() || g.alg == &f4model().lie())) {
        auto t = torality(g);
        os << ", " << (t.toral ? "toral" : "nontoral") << " (zero component dim " << t.zero_dim
           << ")";
    }
    os << "\n";
    for (const auto& c : g.comps) {
        os << "  [";
        for (size_t s = 0; s < c.label.size(); ++s) os << (s ? "," : "") << c.label[s];
        os << "] dim " << c.dim() << ":";
        for (const auto& row : c.basis) {
            os << "  ";
            bool first = true;
            for (int k = 0; k < g.alg->dim; ++k) {
                if (row[k].is_zero()) continue;
                std::string cs = row[k].str();
                bool neg = cs[0] == '-';
                if (neg) cs = cs.substr(1);
                os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
                if (cs != "1") os << cs << "*";
                os << g.alg->basis_names[k];
                first = false;
            }
            os << ";";
        }
        os << "\n";
    }
    return os.str();
}

} // namespace f4grad
