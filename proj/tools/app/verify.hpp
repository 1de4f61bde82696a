#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crossint/structure.hpp"
#include "report.hpp"

namespace crossint::app {

enum class Scale { smoke, desk };

Scale parse_scale(const std::string& text);
std::string to_string(Scale scale);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool informative = false;  // carries a report that asserts nothing extra
    json detail;
};

/// Seeded saturated pairs at (n, k, t): random generator families G0 of two
/// to four k-sets, F0 one member of T(G0), then saturate. Duplicates are
/// dropped; generation stops after `count` distinct pairs or a fixed number
/// of attempts.
std::vector<SaturatedPair> saturated_corpus(int n, int k, int t, std::size_t count, std::uint64_t seed);

/// Runs the acceptance criteria 1..11 at the given scale. Reports contain no
/// timings, so equal seeds give byte-identical output.
class Verifier {
public:
    Verifier(std::uint64_t seed, Scale scale);

    static constexpr int kCriteria = 11;

    CriterionResult run(int id);
    std::vector<CriterionResult> run_all();
    json report(const std::vector<CriterionResult>& results) const;

private:
    const std::vector<SaturatedPair>& corpus(int n, int k, int t);
    json corpus_summary();

    CriterionResult constructions();
    CriterionResult example_properties();
    CriterionResult hmf();
    CriterionResult pyber();
    CriterionResult pair_feasibility();
    CriterionResult basis_suite();
    CriterionResult branching_suite();
    CriterionResult trichotomy();
    CriterionResult lex_suite();
    CriterionResult inequalities();
    CriterionResult determinism();

    std::uint64_t seed_;
    Scale scale_;
    std::map<std::string, std::vector<SaturatedPair>> corpora_;
};

}  // namespace crossint::app
