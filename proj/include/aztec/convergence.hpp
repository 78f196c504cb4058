#pragma once

#include <string>
#include <vector>

#include "aztec/wave.hpp"

// Empirical checks of the scaling limits: decay of the fundamental solution,
// f_E -> psi_E, T_n -> z and O'_n -> (-theta, 0). Errors are sup norms over a
// banded compact subset of the diamond.
namespace aztec::convergence {

struct Row {
    int n = 0;
    double value = 0.0;
    std::size_t samples = 0;
};

struct Table {
    std::string name;
    std::vector<Row> rows;
    /// Each value strictly below every earlier one.
    bool decreasing() const;
};

struct SampleRegion {
    double compact = 0.95;  // |x|+|y| <= compact
    double band = 0.05;     // distance kept from the arctic circle and the jump set
};

/// True if (x, y) lies in the banded compact set.
bool in_region(double x, double y, const SampleRegion& region);
/// Distance from (x, y) to the arctic circle and the frozen jump lines.
double distance_to_discontinuity(double x, double y);

struct ConvergenceReport {
    std::string check;
    std::vector<int> n_list;
    SampleRegion region;
    std::vector<Table> tables;
    /// Empty unless the check carries an internal consistency test.
    std::vector<std::string> consistency_failures;

    bool all_decreasing() const;
    bool ok() const { return all_decreasing() && consistency_failures.empty(); }
};

/// slice_max of f0 at each n; requires ascending n_list.
ConvergenceReport check_f0_decay(const std::vector<int>& n_list, const wave::SolverOptions& opts = {});

/// sup |f_E(j,k,n) - psi_E(j/n,k/n)| over the sample region.
ConvergenceReport check_fE_limit(const std::vector<int>& n_list, double band, const wave::SolverOptions& opts = {});

/// Tables "T-z", "ReO'+theta" (banded) and "ImO'" (all faces); the last one
/// is cross-checked against an independent fundamental-solution run.
ConvergenceReport check_embedding_limit(const std::vector<int>& n_list, double band,
                                        const wave::SolverOptions& opts = {});

/// Human-readable table.
std::string format_report(const ConvergenceReport& r);

}  // namespace aztec::convergence
