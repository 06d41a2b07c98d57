#include "tops/oracle.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace tops::oracle {

namespace {

void require_small(int n) {
    if (n > kMaxOracleN)
        throw TooLarge("oracle: n=" + std::to_string(n) + " exceeds cap " +
                       std::to_string(kMaxOracleN));
}

// Walk every monotone partial path from one corner, accumulating
// exp(-energy/T) at each visited node. dir = +1 enumerates from (0,0),
// dir = -1 from (n-1,n-1) in reverse. Accumulators are long double so the
// enumerated marginals can serve as numeric ground truth.
struct Enumerator {
    const Eigen::MatrixXd& eps;
    int n;
    int dir;
    double T;
    std::vector<std::vector<long double>> acc;  // acc[t1][t2]

    Enumerator(const DistanceMatrix& E, double temperature, int direction)
        : eps(E.eps), n(E.n()), dir(direction), T(temperature),
          acc(static_cast<size_t>(E.n()),
              std::vector<long double>(static_cast<size_t>(E.n()), 0.0L)) {}

    void run() {
        const int start = dir > 0 ? 0 : n - 1;
        walk(start, start, 0.0L);
    }

    void walk(int t1, int t2, long double energy) {
        energy += eps(t1, t2);
        acc[static_cast<size_t>(t1)][static_cast<size_t>(t2)] += std::exp(-energy / T);
        const int a = t1 + dir, b = t2 + dir;
        if (a >= 0 && a < n) walk(a, t2, energy);
        if (b >= 0 && b < n) walk(t1, b, energy);
        if (a >= 0 && a < n && b >= 0 && b < n) walk(a, b, energy);
    }
};

Eigen::VectorXd marginal_at(const Enumerator& e, int t) {
    const auto xs = admissible_x(t, e.n);
    Eigen::VectorXd p(static_cast<Eigen::Index>(xs.size()));
    long double total = 0.0L;
    for (size_t k = 0; k < xs.size(); ++k) {
        const auto [t1, t2] = unrotate(t, xs[k]);
        total += e.acc[static_cast<size_t>(t1)][static_cast<size_t>(t2)];
    }
    for (size_t k = 0; k < xs.size(); ++k) {
        const auto [t1, t2] = unrotate(t, xs[k]);
        p[static_cast<Eigen::Index>(k)] = static_cast<double>(
            e.acc[static_cast<size_t>(t1)][static_cast<size_t>(t2)] / total);
    }
    return p;
}

double mean_of(const Enumerator& e, int t) {
    const auto xs = admissible_x(t, e.n);
    const Eigen::VectorXd p = marginal_at(e, t);
    double m = 0.0;
    for (size_t k = 0; k < xs.size(); ++k) m += xs[k] * p[static_cast<Eigen::Index>(k)];
    return m;
}

} // namespace

long long full_path_count(int n) {
    require_small(n);
    // count by explicit walk, no closed form
    struct Counter {
        int n;
        long long count = 0;
        void walk(int t1, int t2) {
            if (t1 == n - 1 && t2 == n - 1) {
                ++count;
                return;
            }
            if (t1 + 1 < n) walk(t1 + 1, t2);
            if (t2 + 1 < n) walk(t1, t2 + 1);
            if (t1 + 1 < n && t2 + 1 < n) walk(t1 + 1, t2 + 1);
        }
    } c{n};
    c.walk(0, 0);
    return c.count;
}

Eigen::VectorXd forward_marginal(const DistanceMatrix& E, double temperature, int t) {
    require_small(E.n());
    if (!(temperature > 0.0)) throw NonPositiveTemperature("oracle: temperature must be > 0");
    Enumerator e(E, temperature, +1);
    e.run();
    return marginal_at(e, t);
}

Eigen::VectorXd backward_marginal(const DistanceMatrix& E, double temperature, int t) {
    require_small(E.n());
    if (!(temperature > 0.0)) throw NonPositiveTemperature("oracle: temperature must be > 0");
    Enumerator e(E, temperature, -1);
    e.run();
    return marginal_at(e, t);
}

std::vector<Eigen::VectorXd> forward_marginals(const DistanceMatrix& E, double temperature) {
    require_small(E.n());
    if (!(temperature > 0.0)) throw NonPositiveTemperature("oracle: temperature must be > 0");
    Enumerator e(E, temperature, +1);
    e.run();
    std::vector<Eigen::VectorXd> out;
    out.reserve(static_cast<size_t>(2 * E.n() - 1));
    for (int t = 0; t < 2 * E.n() - 1; ++t) out.push_back(marginal_at(e, t));
    return out;
}

std::vector<Eigen::VectorXd> backward_marginals(const DistanceMatrix& E, double temperature) {
    require_small(E.n());
    if (!(temperature > 0.0)) throw NonPositiveTemperature("oracle: temperature must be > 0");
    Enumerator e(E, temperature, -1);
    e.run();
    std::vector<Eigen::VectorXd> out;
    out.reserve(static_cast<size_t>(2 * E.n() - 1));
    for (int t = 0; t < 2 * E.n() - 1; ++t) out.push_back(marginal_at(e, t));
    return out;
}

LeadLagPath tops(const DistanceMatrix& E, double temperature) {
    require_small(E.n());
    if (!(temperature > 0.0)) throw NonPositiveTemperature("oracle: temperature must be > 0");
    Enumerator fwd(E, temperature, +1), bwd(E, temperature, -1);
    fwd.run();
    bwd.run();
    const int slices = 2 * E.n() - 1;
    LeadLagPath p;
    p.temperature = temperature;
    p.grid = ReportGrid::all_t;
    p.x_mean.resize(slices);
    p.x_fwd.resize(slices);
    p.x_bwd.resize(slices);
    for (int t = 0; t < slices; ++t) {
        p.t.push_back(t);
        p.x_fwd[t] = mean_of(fwd, t);
        p.x_bwd[t] = mean_of(bwd, t);
        p.x_mean[t] = 0.5 * (p.x_fwd[t] + p.x_bwd[t]);
    }
    return p;
}

OptimalPath min_path(const DistanceMatrix& E) {
    const int n = E.n();
    require_small(n);

    // minimal energy to reach each node, by exhaustive walk of every
    // partial path (no recursion over the cost table)
    std::vector<std::vector<double>> best(
        static_cast<size_t>(n),
        std::vector<double>(static_cast<size_t>(n), std::numeric_limits<double>::infinity()));
    struct Walker {
        const Eigen::MatrixXd& eps;
        int n;
        std::vector<std::vector<double>>& best;
        void walk(int t1, int t2, double energy) {
            energy += eps(t1, t2);
            auto& b = best[static_cast<size_t>(t1)][static_cast<size_t>(t2)];
            b = std::min(b, energy);
            if (t1 + 1 < n) walk(t1 + 1, t2, energy);
            if (t2 + 1 < n) walk(t1, t2 + 1, energy);
            if (t1 + 1 < n && t2 + 1 < n) walk(t1 + 1, t2 + 1, energy);
        }
    } w{E.eps, n, best};
    w.walk(0, 0, 0.0);

    // backtrack with the engine's tie rule over the enumerated costs
    OptimalPath path;
    path.total_energy = best[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
    int t1 = n - 1, t2 = n - 1;
    path.nodes.emplace_back(t1, t2);
    while (t1 != 0 || t2 != 0) {
        struct Cand { int t1, t2; };
        Cand cands[3];
        int nc = 0;
        if (t1 > 0 && t2 > 0) cands[nc++] = {t1 - 1, t2 - 1};
        const Cand h{t1 - 1, t2}, v{t1, t2 - 1};
        const bool has_h = t1 > 0, has_v = t2 > 0;
        if (has_h && has_v) {
            if (std::abs(v.t2 - v.t1) < std::abs(h.t2 - h.t1)) {
                cands[nc++] = v;
                cands[nc++] = h;
            } else {
                cands[nc++] = h;
                cands[nc++] = v;
            }
        } else if (has_h) {
            cands[nc++] = h;
        } else {
            cands[nc++] = v;
        }
        double bmin = std::numeric_limits<double>::infinity();
        for (int i = 0; i < nc; ++i)
            bmin = std::min(bmin, best[static_cast<size_t>(cands[i].t1)]
                                      [static_cast<size_t>(cands[i].t2)]);
        for (int i = 0; i < nc; ++i) {
            if (best[static_cast<size_t>(cands[i].t1)][static_cast<size_t>(cands[i].t2)] ==
                bmin) {
                t1 = cands[i].t1;
                t2 = cands[i].t2;
                break;
            }
        }
        path.nodes.emplace_back(t1, t2);
    }
    std::reverse(path.nodes.begin(), path.nodes.end());
    path.phi.assign(static_cast<size_t>(n), 0);
    for (const auto& [a, b] : path.nodes) path.phi[static_cast<size_t>(a)] = b;
    return path;
}

} // namespace tops::oracle
