#include <doctest.h>

#include <cmath>

#include "tops/stats.hpp"
#include "tops/synth.hpp"

using namespace tops;

TEST_CASE("moments of a large normal sample") {
    NormalSampler normal(101);
    Eigen::VectorXd v(100000);
    for (int i = 0; i < v.size(); ++i) v[i] = normal();
    const StatsRow r = descriptive_stats(v);
    CHECK(std::abs(r.skewness) < 0.03);
    CHECK(r.kurtosis == doctest::Approx(3.0).epsilon(0.02));
    CHECK(r.std == doctest::Approx(1.0).epsilon(0.02));
    CHECK(r.min <= r.mean);
    CHECK(r.mean <= r.max);
}

TEST_CASE("zero-skew kurtosis-3 construction gives JB = 0 and p = 1") {
    // symmetric 8-point set {+-1, +-1, +-b, 0, 0} with b^4 - 12 b^2 - 4 = 0
    const double b = std::sqrt(6.0 + 2.0 * std::sqrt(10.0));
    Eigen::VectorXd v(8);
    v << -b, -1, -1, 0, 0, 1, 1, b;
    const StatsRow r = descriptive_stats(v);
    CHECK(std::abs(r.skewness) < 1e-12);
    CHECK(r.kurtosis == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(r.jb_stat < 1e-12);
    CHECK(r.jb_p > 1.0 - 1e-12);
}

TEST_CASE("jb_p is floored at 0.001") {
    NormalSampler normal(55);
    Eigen::VectorXd v(5000);
    for (int i = 0; i < v.size(); ++i) {
        const double g = normal();
        v[i] = g * g * g;  // heavily kurtotic
    }
    const StatsRow r = descriptive_stats(v);
    CHECK(r.jb_p == 0.001);
}

TEST_CASE("descriptive_stats shift and scale invariances") {
    NormalSampler normal(7);
    Eigen::VectorXd v(500);
    for (int i = 0; i < v.size(); ++i) v[i] = normal();
    const StatsRow base = descriptive_stats(v);
    const StatsRow shifted = descriptive_stats((v.array() + 4.2).matrix());
    CHECK(shifted.mean == doctest::Approx(base.mean + 4.2).epsilon(1e-10));
    CHECK(shifted.std == doctest::Approx(base.std).epsilon(1e-10));
    CHECK(shifted.skewness == doctest::Approx(base.skewness).epsilon(1e-8));
    CHECK(shifted.kurtosis == doctest::Approx(base.kurtosis).epsilon(1e-8));
    const StatsRow scaled = descriptive_stats((v.array() * 2.5).matrix());
    CHECK(scaled.skewness == doctest::Approx(base.skewness).epsilon(1e-10));
    CHECK(scaled.kurtosis == doctest::Approx(base.kurtosis).epsilon(1e-10));
    CHECK(scaled.jb_stat == doctest::Approx(base.jb_stat).epsilon(1e-8));
}

TEST_CASE("descriptive_stats error paths") {
    Eigen::VectorXd tiny(4);
    tiny << 1, 2, 3, 4;
    CHECK_THROWS_AS(descriptive_stats(tiny), TooShort);
    CHECK_THROWS_AS(descriptive_stats(Eigen::VectorXd::Constant(20, 3.0)), DegenerateSeries);
}

TEST_CASE("ADF rejects a unit root for iid noise") {
    // decisions cross-checked against a reference statistics package on the
    // same regression specification (constant only, fixed lag order)
    NormalSampler normal(42);
    Eigen::VectorXd v(2000);
    for (int i = 0; i < v.size(); ++i) v[i] = normal();
    const AdfResult r = adf_test(v);
    CHECK(r.lags == 25);  // floor(12 * (2000/100)^(1/4))
    CHECK(r.stat < -3.43);
    CHECK(r.reject_1pct);
    CHECK(r.reject_5pct);
}

TEST_CASE("ADF fails to reject for a random walk") {
    NormalSampler normal(43);
    Eigen::VectorXd v(2000);
    double acc = 0.0;
    for (int i = 0; i < v.size(); ++i) {
        acc += normal();
        v[i] = acc;
    }
    const AdfResult r = adf_test(v);
    CHECK_FALSE(r.reject_5pct);
    CHECK_FALSE(r.reject_1pct);
}

TEST_CASE("ADF error paths") {
    Eigen::VectorXd shorty(10);
    shorty.setRandom();
    CHECK_THROWS_AS(adf_test(shorty), TooShort);
    CHECK_THROWS_AS(adf_test(Eigen::VectorXd::Constant(100, 1.0)), SingularRegression);
}

TEST_CASE("leadlag_summary basic rows") {
    LeadLagPath p;
    p.x_mean = Eigen::Vector3d{1, 2, 3};
    p.x_fwd = p.x_mean;
    p.x_bwd = p.x_mean;
    p.t = {0, 2, 4};
    SummaryRow s = leadlag_summary(p);
    CHECK(s.length == 3);
    CHECK(s.mean == 2.0);
    CHECK(s.median == 2.0);
    CHECK(s.pct_positive == 100.0);
    CHECK(s.pct_negative == 0.0);

    p.x_mean = Eigen::Vector3d{-1, 0, 1};
    s = leadlag_summary(p);
    CHECK(s.pct_positive == doctest::Approx(100.0 / 3));
    CHECK(s.pct_negative == doctest::Approx(100.0 / 3));
    CHECK(s.pct_positive + s.pct_negative <= 100.0);
}

TEST_CASE("median midpoint rule for even lengths") {
    Eigen::VectorXd v(4);
    v << 4, 1, 3, 2;
    CHECK(median(v) == 2.5);
}

TEST_CASE("summary of a negated path mirrors the row") {
    NormalSampler normal(11);
    LeadLagPath p;
    p.x_mean.resize(101);
    for (int i = 0; i < 101; ++i) p.x_mean[i] = normal();
    p.x_fwd = p.x_mean;
    p.x_bwd = p.x_mean;
    LeadLagPath neg = p;
    neg.x_mean = -p.x_mean;
    const SummaryRow a = leadlag_summary(p), b = leadlag_summary(neg);
    CHECK(a.pct_positive == b.pct_negative);
    CHECK(a.pct_negative == b.pct_positive);
    CHECK(b.mean == doctest::Approx(-a.mean).epsilon(1e-12));
    CHECK(b.median == doctest::Approx(-a.median).epsilon(1e-12));
    CHECK(b.max == doctest::Approx(-a.min).epsilon(1e-12));
    CHECK(b.min == doctest::Approx(-a.max).epsilon(1e-12));
}

TEST_CASE("empty path is rejected") {
    CHECK_THROWS_AS(leadlag_summary(LeadLagPath{}), EmptyPath);
}
