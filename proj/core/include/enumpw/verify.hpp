#pragma once

#include <string>
#include <vector>

namespace enumpw::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

CriterionResult heat_polynomial_facts();
CriterionResult factorization();
CriterionResult kernel_theorems();
CriterionResult lowest_defect_solution();
CriterionResult perverse_grading();
CriterionResult three_route_integration();
CriterionResult closed_form_oracle();
CriterionResult general_classes();
CriterionResult w_determinants(unsigned jobs = 1);

// Criteria 1..9 in order; ids outside that range are ignored.
std::vector<CriterionResult> run(const std::vector<int>& ids, unsigned jobs = 1);

}  // namespace enumpw::verify
