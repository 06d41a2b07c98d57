#include <doctest.h>

#include <cmath>
#include <random>

#include "tops/engine.hpp"
#include "tops/oracle.hpp"

using namespace tops;

namespace {

Eigen::VectorXd random_vector(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = unif(rng);
    return v;
}

// Delannoy recurrence, independent of the oracle's walk
long long delannoy(int m, int n) {
    std::vector<std::vector<long long>> d(static_cast<size_t>(m + 1),
                                          std::vector<long long>(static_cast<size_t>(n + 1), 1));
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            d[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                d[static_cast<size_t>(i - 1)][static_cast<size_t>(j)] +
                d[static_cast<size_t>(i)][static_cast<size_t>(j - 1)] +
                d[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    return d[static_cast<size_t>(m)][static_cast<size_t>(n)];
}

} // namespace

TEST_CASE("full path counts equal central Delannoy numbers") {
    CHECK(oracle::full_path_count(3) == 13);
    CHECK(oracle::full_path_count(4) == 63);
    for (int n = 2; n <= 8; ++n)
        CHECK(oracle::full_path_count(n) == delannoy(n - 1, n - 1));
}

TEST_CASE("oracle refuses large instances") {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(9), y = Eigen::VectorXd::Ones(9);
    const DistanceMatrix E = distance_matrix(x, y);
    CHECK_THROWS_AS(oracle::forward_marginal(E, 2.0, 0), TooLarge);
    CHECK_THROWS_AS(oracle::tops(E, 2.0), TooLarge);
    CHECK_THROWS_AS(oracle::min_path(E), TooLarge);
    CHECK_THROWS_AS(oracle::full_path_count(9), TooLarge);
}

TEST_CASE("two-point enumeration closed form") {
    const DistanceMatrix E = distance_matrix(Eigen::Vector2d{0, 0}, Eigen::Vector2d{0, 1});
    const Eigen::VectorXd p = oracle::forward_marginal(E, 2.0, 1);
    REQUIRE(p.size() == 2);
    CHECK(p[0] == doctest::Approx(0.6225).epsilon(1e-3));
    CHECK(p[1] == doctest::Approx(0.3775).epsilon(1e-3));
    const Eigen::VectorXd p0 = oracle::forward_marginal(E, 2.0, 0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0] == 1.0);
}

TEST_CASE("oracle marginals sum to one") {
    std::mt19937_64 rng(21);
    const DistanceMatrix E = distance_matrix(random_vector(6, rng), random_vector(6, rng));
    for (int t = 0; t < 11; ++t) {
        CHECK(oracle::forward_marginal(E, 1.0, t).sum() == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(oracle::backward_marginal(E, 1.0, t).sum() == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("recursion matches enumeration on random 5x5 instances") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 10; ++trial) {
        const DistanceMatrix E = distance_matrix(random_vector(5, rng), random_vector(5, rng));
        for (double T : {0.5, 2.0}) {
            const SliceDistributions fwd = forward_weights(E, T);
            const SliceDistributions bwd = backward_weights(E, T);
            for (int t = 0; t < 9; ++t) {
                const Eigen::VectorXd of = oracle::forward_marginal(E, T, t);
                const Eigen::VectorXd ob = oracle::backward_marginal(E, T, t);
                CHECK((fwd.prob[static_cast<size_t>(t)] - of).cwiseAbs().maxCoeff() < 1e-10);
                CHECK((bwd.prob[static_cast<size_t>(t)] - ob).cwiseAbs().maxCoeff() < 1e-10);
            }
        }
    }
}

TEST_CASE("oracle tops equals the engine on random n=6 instances") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const DistanceMatrix E = distance_matrix(random_vector(6, rng), random_vector(6, rng));
        const LeadLagPath engine = tops_path(E, {2.0, ReportGrid::all_t, {}});
        const LeadLagPath ref = oracle::tops(E, 2.0);
        CHECK((engine.x_mean - ref.x_mean).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("oracle tops all-zero on identical series and antisymmetric under swap") {
    std::mt19937_64 rng(24);
    const Eigen::VectorXd x = random_vector(4, rng), y = random_vector(4, rng);
    const LeadLagPath same = oracle::tops(distance_matrix(x, x), 2.0);
    CHECK(same.x_mean.cwiseAbs().maxCoeff() < 1e-14);
    const LeadLagPath pxy = oracle::tops(distance_matrix(x, y), 2.0);
    const LeadLagPath pyx = oracle::tops(distance_matrix(y, x), 2.0);
    CHECK((pxy.x_mean + pyx.x_mean).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("diagonal beats any staircase on a uniform distance matrix") {
    DistanceMatrix E;
    E.eps = Eigen::MatrixXd::Ones(3, 3);
    const OptimalPath p = oracle::min_path(E);
    CHECK(p.total_energy == 3.0);  // 3 nodes; any staircase visits 5
    CHECK(p.nodes.size() == 3);
}

TEST_CASE("DP equals exhaustive minimum on 200 random 6x6 matrices") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 200; ++trial) {
        const DistanceMatrix E = distance_matrix(random_vector(6, rng), random_vector(6, rng));
        const OptimalPath dp = zero_temperature_path(E);
        const OptimalPath ex = oracle::min_path(E);
        CHECK(dp.total_energy == ex.total_energy);
        CHECK(dp.nodes == ex.nodes);
        CHECK(dp.phi == ex.phi);
    }
}

TEST_CASE("low temperature argmax chain approaches the optimal path energy") {
    // chain over the day grid (even slices); odd slices are skipped by
    // diagonal steps, so including them would overcount against the path
    std::mt19937_64 rng(26);
    const Eigen::VectorXd x = random_vector(6, rng);
    const DistanceMatrix same = distance_matrix(x, x);

    auto chain_energy = [](const DistanceMatrix& E, double T) {
        const SliceDistributions fwd = forward_weights(E, T);
        const SliceDistributions bwd = backward_weights(E, T);
        double energy = 0.0;
        for (int t = 0; t < fwd.slices(); t += 2) {
            const Eigen::VectorXd avg = 0.5 * (fwd.prob[static_cast<size_t>(t)] +
                                               bwd.prob[static_cast<size_t>(t)]);
            Eigen::Index k;
            avg.maxCoeff(&k);
            const auto xs = fwd.x_values(t);
            const auto [t1, t2] = unrotate(t, xs[static_cast<size_t>(k)]);
            energy += E.eps(t1, t2);
        }
        return energy;
    };

    // X=Y: the argmax chain sits on the zero-energy diagonal, matching the DP
    CHECK(chain_energy(same, 0.05) == zero_temperature_path(same).total_energy);

    // random instance: the chain tightens toward the DP optimum as T falls
    const DistanceMatrix E = distance_matrix(x, random_vector(6, rng));
    const double dp_energy = zero_temperature_path(E).total_energy;
    const double hot = chain_energy(E, 2.0);
    const double cold = chain_energy(E, 0.05);
    CHECK(std::abs(cold - dp_energy) <= std::abs(hot - dp_energy) + 1e-12);
}
