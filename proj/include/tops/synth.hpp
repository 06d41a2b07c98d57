#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "tops/series.hpp"

namespace tops {

/// Deterministic standard-normal stream: mt19937_64 bits mapped to (0,1]
/// uniforms and fed through Box-Muller. Avoids std::normal_distribution,
/// whose output sequence is implementation-defined.
class NormalSampler {
  public:
    explicit NormalSampler(std::uint64_t seed) : rng_(seed) {}

    double operator()();

  private:
    double uniform01();  // in (0, 1]

    std::mt19937_64 rng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Piecewise-constant integer lag profile over [0, n).
/// Segment (start, lag) applies from `start` to the next segment's start.
struct LagProfile {
    std::vector<std::pair<int, int>> segments;  // (start index, lag in days)
    int n = 0;

    static LagProfile constant(int n, int lag) { return {{{0, lag}}, n}; }

    void validate() const;  // throws InvalidProfile
    int lag_at(int i) const;
};

struct SynthOptions {
    double noise_sigma = 0.0;
    double ar_rho = 0.0;  // AR(1) coefficient of the driving process; 0 = iid
    std::uint64_t seed = 0;
    NormalizeMode mode = NormalizeMode::minmax;
};

/// Raw (pre-normalization) pair: X is the driving process, Y(i) = X(i - tau(i))
/// plus observation noise; source indices out of range are filled with fresh
/// noise.
std::pair<Eigen::VectorXd, Eigen::VectorXd> generate_lagged_pair_raw(
    int n, const LagProfile& profile, const SynthOptions& opts);

std::pair<NormalizedSeries, NormalizedSeries> generate_lagged_pair(
    int n, const LagProfile& profile, const SynthOptions& opts);

/// Sequential calendar dates ("2000-01-03" + i days), for emitting synthetic
/// series in the ingest CSV format.
std::vector<std::string> synthetic_dates(int n);

} // namespace tops
