#pragma once

#include <Eigen/Dense>

#include "tops/engine.hpp"
#include "tops/lattice.hpp"

namespace tops::oracle {

/// Enumeration is exponential in n; instances above this size are refused.
inline constexpr int kMaxOracleN = 8;

/// Number of full monotone paths from (0,0) to (n-1,n-1), counted by direct
/// enumeration. Equals the central Delannoy number D(n-1, n-1).
long long full_path_count(int n);

/// P(x | t) by direct summation of exp(-energy/T) over every partial path
/// from (0,0) ending at slice t. Indexed over admissible_x(t, n) ascending.
Eigen::VectorXd forward_marginal(const DistanceMatrix& E, double temperature, int t);

/// Same, over partial paths from (n-1,n-1) walked in reverse.
Eigen::VectorXd backward_marginal(const DistanceMatrix& E, double temperature, int t);

/// All slices from a single enumeration pass.
std::vector<Eigen::VectorXd> forward_marginals(const DistanceMatrix& E, double temperature);
std::vector<Eigen::VectorXd> backward_marginals(const DistanceMatrix& E, double temperature);

/// The symmetric thermal average path evaluated from enumerated marginals,
/// on the all_t grid.
LeadLagPath tops(const DistanceMatrix& E, double temperature);

/// Exhaustive minimum-energy path with the engine's tie rule.
OptimalPath min_path(const DistanceMatrix& E);

} // namespace tops::oracle
