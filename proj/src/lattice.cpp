#include "tops/lattice.hpp"

#include <cmath>
#include <string>

namespace tops {

DistanceMatrix distance_matrix(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
    if (x.size() != y.size())
        throw LengthMismatch("distance_matrix: lengths " + std::to_string(x.size()) + " vs " +
                             std::to_string(y.size()));
    if (x.size() < 2) throw TooShort("distance_matrix needs n >= 2");
    DistanceMatrix E;
    E.eps = (x.rowwise().replicate(y.size()) -
             y.transpose().colwise().replicate(x.size()))
                .cwiseAbs();
    return E;
}

DistanceMatrix distance_matrix(const NormalizedSeries& x, const NormalizedSeries& y) {
    return distance_matrix(x.values, y.values);
}

std::pair<int, int> unrotate(int t, int x) {
    if (((x - t) % 2 + 2) % 2 != 0)
        throw ParityViolation("unrotate: x=" + std::to_string(x) + " has wrong parity for t=" +
                              std::to_string(t));
    if (t < 0 || std::abs(x) > t)
        throw OutOfBounds("unrotate: (t,x)=(" + std::to_string(t) + "," + std::to_string(x) +
                          ") maps outside the grid");
    return {(t - x) / 2, (t + x) / 2};
}

std::vector<int> admissible_x(int t, int n, std::optional<int> max_abs_x) {
    if (t < 0 || t > 2 * (n - 1))
        throw OutOfBounds("admissible_x: t=" + std::to_string(t) + " outside [0, 2n-2]");
    int m = max_lag(t, n);
    if (max_abs_x) m = std::min(m, *max_abs_x);
    // shrink to matching parity
    if (((m - t) % 2 + 2) % 2 != 0) --m;
    std::vector<int> xs;
    if (m < 0) return xs;  // window excludes every admissible node (degenerate)
    xs.reserve(static_cast<size_t>(m) + 1);
    for (int x = -m; x <= m; x += 2) xs.push_back(x);
    return xs;
}

} // namespace tops
