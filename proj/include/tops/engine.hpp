#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tops/lattice.hpp"

namespace tops {

enum class SweepDirection { forward, backward };
enum class ReportGrid { even_t, all_t };

struct EngineConfig {
    double temperature = 2.0;
    ReportGrid report_grid = ReportGrid::even_t;
    std::optional<int> max_abs_x;  // search window; full lattice when unset
};

/// Per-slice probability distributions over the lag coordinate, one slice per
/// diagonal time t in [0, 2n-2]. prob[t] is indexed over admissible_x(t)
/// ascending and sums to 1; log_scale[t] tracks the cumulative magnitude of
/// the raw (unnormalized) partition weights so that
/// G(t,x) = exp(log_scale[t]) * prob[t][k].
struct SliceDistributions {
    int n = 0;
    SweepDirection direction = SweepDirection::forward;
    std::optional<int> max_abs_x;
    std::vector<Eigen::VectorXd> prob;
    std::vector<double> log_scale;

    int slices() const { return 2 * n - 1; }
    std::vector<int> x_values(int t) const { return admissible_x(t, n, max_abs_x); }

    /// Expected lag sum_x x * P(t,x) for one slice.
    double mean_lag(int t) const;
};

SliceDistributions forward_weights(const DistanceMatrix& E, double temperature,
                                   std::optional<int> max_abs_x = {});
SliceDistributions backward_weights(const DistanceMatrix& E, double temperature,
                                    std::optional<int> max_abs_x = {});

/// The TOPS output: <x(t)> with its forward and backward components,
/// sampled on the reporting grid.
struct LeadLagPath {
    std::vector<int> t;            // lattice slice of each sample
    std::vector<std::string> dates;  // empty when no calendar was supplied
    Eigen::VectorXd x_mean;
    Eigen::VectorXd x_fwd;
    Eigen::VectorXd x_bwd;
    double temperature = 2.0;
    ReportGrid grid = ReportGrid::even_t;

    Eigen::Index size() const { return x_mean.size(); }
};

/// Symmetric thermal average path. When `dates` (length n, the common
/// calendar of the two input series) is supplied, each even-grid sample is
/// stamped with the date of its day index; on the all_t grid odd slices take
/// the earlier of their two bracketing dates.
LeadLagPath tops_path(const DistanceMatrix& E, const EngineConfig& config = {},
                      std::span<const std::string> dates = {});

/// Zero-temperature (globally minimal energy) alignment path. `nodes` is the
/// full monotone step sequence from (0,0) to (n-1,n-1); `phi` maps each t1 to
/// the last row visited in its column. Ties in the dynamic program are broken
/// by preferring the diagonal predecessor, then the predecessor with the
/// smaller |t2 - t1| (horizontal when still tied).
struct OptimalPath {
    std::vector<std::pair<int, int>> nodes;  // (t1, t2)
    std::vector<int> phi;
    double total_energy = 0.0;
};

OptimalPath zero_temperature_path(const DistanceMatrix& E);

std::vector<LeadLagPath> temperature_sweep(const DistanceMatrix& E,
                                           std::span<const double> temperatures,
                                           EngineConfig config = {});

} // namespace tops
