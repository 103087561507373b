// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include "f4grad/verify.hpp"

#include <chrono>
#include <iostream>

using namespace f4grad;

namespace {

struct Criterion {
    int number;
    std::string description;
    std::vector<std::string> tables;
    double time_limit_s = 0; // 0 = no explicit limit
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Weyl group: 1152 elements, 25 classes, per-order counts, representative set", {"weyl-classes"}, 60},
        {2, "fixed subgroups reproduce all 25 table rows", {"tablon"}, 0},
        {3, "f4 construction: dim 52 twice, roots, Cartan matrix", {"f4"}, 300},
        {4, "A(j,id) nontoral exactly for j in {3,15,105,106,405}", {"nonto"}, 0},
        {5, "A(j,id) type table", {"ajid-types"}, 0},
        {6, "fine gradings: groups, types, zero-component dims", {"fine"}, 0},
        {7, "nontoral f4 table: 9 rows", {"main2"}, 0},
        {8, "Albert table: 8 rows, fixtures validated, spans matched", {"albert"}, 0},
        {9, "H3(F) gradings gr1..gr5", {"h3f"}, 0},
        {10, "lift orders and the order lemma", {"lifts"}, 0},
        {11, "appendix conjugation table", {"appendix"}, 0},
        {12, "stabilizer sets {15,748,1075} and {105,748}", {"stabilizers"}, 0},
        {13, "universal groups of grad1, coar, ztrescubo, cartan", {"universal"}, 0},
        {14, "property suites (torality lemma, closure, minpolys, invertibility)", {"properties"}, 0},
    };
    std::map<std::string, std::function<Report()>> by_name;
    for (const auto& [name, fn] : all_verifications()) by_name[name] = fn;

    auto t_start = std::chrono::steady_clock::now();
    bool all_pass = true;
    std::vector<Report> failures;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        bool pass = true;
        for (const auto& t : c.tables) {
            Report rep = by_name.at(t)();
            if (!rep.pass()) {
                pass = false;
                failures.push_back(rep);
            }
        }
        double secs =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
                .count() /
            1000.0;
        if (c.time_limit_s > 0 && secs > c.time_limit_s) pass = false;
        std::cout << "CRITERION " << c.number << ": " << (pass ? "PASS" : "FAIL") << " - "
                  << c.description << " (" << secs << " s)" << std::endl;
        all_pass = all_pass && pass;
    }
    double total =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t_start)
            .count() /
        1000.0;
    bool runtime_ok = total < 900;
    std::cout << "TOTAL RUNTIME: " << total << " s " << (runtime_ok ? "(within the 15 min target)" : "(OVER the 15 min target)")
              << std::endl;
    for (const auto& rep : failures) std::cout << render(rep);
    return (all_pass && runtime_ok) ? 0 : 1;
}
