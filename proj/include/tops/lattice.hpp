#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>
#include <vector>

#include "tops/errors.hpp"
#include "tops/series.hpp"

namespace tops {

/// n x n matrix of pointwise distances eps(t1,t2) = |X(t1) - Y(t2)|.
struct DistanceMatrix {
    Eigen::MatrixXd eps;  // row t1, column t2

    int n() const { return static_cast<int>(eps.rows()); }
};

DistanceMatrix distance_matrix(const Eigen::VectorXd& x, const Eigen::VectorXd& y);
DistanceMatrix distance_matrix(const NormalizedSeries& x, const NormalizedSeries& y);

/// Rotated lattice coordinate: t = t1 + t2 (diagonal time), x = t2 - t1 (lag).
/// Parity x == t (mod 2); |x| <= min(t, 2(n-1) - t).
struct LatticeCoord {
    int t = 0;
    int x = 0;
};

inline LatticeCoord rotate(int t1, int t2) { return {t1 + t2, t2 - t1}; }

/// Inverse of rotate. Throws ParityViolation / OutOfBounds on invalid input.
std::pair<int, int> unrotate(int t, int x);

/// Largest |x| reachable at slice t on an n-point lattice.
inline int max_lag(int t, int n) { return std::min(t, 2 * (n - 1) - t); }

/// Ascending list of admissible lag coordinates at slice t, optionally
/// clipped to |x| <= max_abs_x.
std::vector<int> admissible_x(int t, int n, std::optional<int> max_abs_x = {});

} // namespace tops
