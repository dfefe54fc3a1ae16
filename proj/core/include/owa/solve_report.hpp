#ifndef OWA_SOLVE_REPORT_HPP
#define OWA_SOLVE_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "owa/instance.hpp"

namespace owa {

/// Outcome of a solver run: the solution, the objective under the solver's
/// own criterion, and the parameters needed to reproduce the run.
struct SolveReport {
    Solution solution;
    double reported_objective = 0.0;
    std::string solver;
    std::optional<int> K;
    std::optional<std::uint64_t> seed;
    double wall_time_s = 0.0;
    std::vector<std::pair<std::string, std::string>> params;
};

} // namespace owa

#endif // OWA_SOLVE_REPORT_HPP
