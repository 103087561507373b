#pragma once
#include "f4grad/gradings.hpp"
#include "f4grad/weyl.hpp"

#include <functional>
#include <string>
#include <vector>

namespace f4grad {

struct ReportRow {
    std::string name;
    std::string expected;
    std::string computed;
    bool pass = false;
};

struct Report {
    std::string table;
    std::vector<ReportRow> rows;
    std::vector<std::string> notes;
    bool pass() const {
        for (const auto& r : rows)
            if (!r.pass) return false;
        return true;
    }
};

// cached preset gradings (several tables share them)
const Grading& cached_grading(const std::string& name);

Report verify_weyl_classes(); // Prop 4.1
Report verify_tablon();       // 25 fixed-subgroup rows
Report verify_f4();           // dim 52 twice, roots, Cartan matrix, pair count
Report verify_nonto();        // torality of A(j,id) over the 25 representatives
Report verify_ajid_types();   // the 5-row type table
Report verify_fine();         // fine gradings: group, type, zero dims
Report verify_main2();        // 9 nontoral f4 rows
Report verify_albert();       // 8 Albert rows + fixture validation
Report verify_h3f();          // gr1..gr5 types
Report verify_lifts();        // Remark 1 and the order lemma (iii)
Report verify_appendix();     // conjugation table rows
Report verify_stabilizers();  // {15,748,1075} and {105,748}
Report verify_universal();    // grad1, coar, ztrescubo, cartan groups
Report verify_properties();   // property suites

// torus-corrected representative of the sigma_j coset realizing the printed
// appendix action on (g1, g2, g3, u); nullopt when no torus correction works
std::optional<AlgebraMap> appendix_representative(int j, const std::string& img1,
                                                  const std::string& img2, const std::string& img3);

const std::vector<std::pair<std::string, std::function<Report()>>>& all_verifications();

std::string render(const Report& r);

} // namespace f4grad
