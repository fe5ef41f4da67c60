#pragma once

#include <functional>
#include <string>
#include <vector>

namespace bvd::verify {

struct CriterionResult {
    int id;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

constexpr int criterion_count = 10;

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_acceptance(
    const std::function<void(const CriterionResult&)>& on_result = {});
// "[PASS] 1 independence closed form (0.41 s): ..."
std::string format_result(const CriterionResult& r);

} // namespace bvd::verify
