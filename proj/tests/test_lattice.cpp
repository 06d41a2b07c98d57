#include <doctest.h>

#include <random>

#include "tops/lattice.hpp"

using namespace tops;

TEST_CASE("distance_matrix direct evaluation") {
    const DistanceMatrix E = distance_matrix(Eigen::Vector2d{0, 0}, Eigen::Vector2d{0, 1});
    CHECK(E.n() == 2);
    CHECK(E.eps(0, 0) == 0.0);
    CHECK(E.eps(0, 1) == 1.0);
    CHECK(E.eps(1, 0) == 0.0);
    CHECK(E.eps(1, 1) == 1.0);
}

TEST_CASE("distance_matrix zero diagonal for identical inputs") {
    Eigen::VectorXd x(5);
    x << 0.3, -1.2, 0.7, 2.0, -0.5;
    const DistanceMatrix E = distance_matrix(x, x);
    CHECK(E.eps.diagonal().cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("distance_matrix transpose symmetry under swap") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> unif(-1, 1);
    Eigen::VectorXd x(7), y(7);
    for (int i = 0; i < 7; ++i) {
        x[i] = unif(rng);
        y[i] = unif(rng);
    }
    const DistanceMatrix E1 = distance_matrix(x, y);
    const DistanceMatrix E2 = distance_matrix(y, x);
    CHECK((E1.eps - E2.eps.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("distance_matrix rejects length mismatch") {
    CHECK_THROWS_AS(distance_matrix(Eigen::Vector2d{0, 1}, Eigen::Vector3d{0, 1, 2}),
                    LengthMismatch);
}

TEST_CASE("rotate and unrotate") {
    const auto c = rotate(3, 5);
    CHECK(c.t == 8);
    CHECK(c.x == 2);
    const auto [t1, t2] = unrotate(8, 2);
    CHECK(t1 == 3);
    CHECK(t2 == 5);
    CHECK_THROWS_AS(unrotate(3, 0), ParityViolation);
    CHECK_THROWS_AS(unrotate(2, 4), OutOfBounds);
}

TEST_CASE("rotate round-trips over the whole grid") {
    const int n = 9;
    for (int t1 = 0; t1 < n; ++t1) {
        for (int t2 = 0; t2 < n; ++t2) {
            const auto c = rotate(t1, t2);
            const auto [a, b] = unrotate(c.t, c.x);
            CHECK(a == t1);
            CHECK(b == t2);
        }
    }
}

TEST_CASE("admissible_x pinched corners and interior slices") {
    CHECK(admissible_x(0, 5) == std::vector<int>{0});
    CHECK(admissible_x(1, 2) == std::vector<int>{-1, 1});
    CHECK(admissible_x(8, 5) == std::vector<int>{0});  // terminal slice, t = 2(n-1)
    CHECK(admissible_x(4, 5) == std::vector<int>{-4, -2, 0, 2, 4});
    CHECK_THROWS_AS(admissible_x(9, 5), OutOfBounds);
    CHECK_THROWS_AS(admissible_x(-1, 5), OutOfBounds);
}

TEST_CASE("admissible_x honors the search window") {
    CHECK(admissible_x(6, 7, 2) == std::vector<int>{-2, 0, 2});
    CHECK(admissible_x(5, 7, 2) == std::vector<int>{-1, 1});
    CHECK(admissible_x(5, 7, 1) == std::vector<int>{-1, 1});
}

TEST_CASE("admissible nodes biject with the original grid") {
    for (int n : {2, 3, 5, 8}) {
        long long count = 0;
        for (int t = 0; t <= 2 * (n - 1); ++t) {
            for (int x : admissible_x(t, n)) {
                const auto [t1, t2] = unrotate(t, x);
                CHECK(t1 >= 0);
                CHECK(t1 < n);
                CHECK(t2 >= 0);
                CHECK(t2 < n);
                ++count;
            }
        }
        CHECK(count == static_cast<long long>(n) * n);
    }
}
