#include "tops/stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tops {

double median(Eigen::VectorXd v) {
    const auto n = v.size();
    std::sort(v.data(), v.data() + n);
    if (n % 2 == 1) return v[n / 2];
    return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

StatsRow descriptive_stats(const Eigen::VectorXd& v) {
    const auto n = v.size();
    if (n < 8) throw TooShort("descriptive_stats needs length >= 8");
    const double mean = v.mean();
    const Eigen::ArrayXd c = v.array() - mean;
    const double m2 = c.square().sum() / static_cast<double>(n);
    if (m2 <= 0.0) throw DegenerateSeries("descriptive_stats: constant series");
    const double m3 = c.cube().sum() / static_cast<double>(n);
    const double m4 = c.square().square().sum() / static_cast<double>(n);

    StatsRow row;
    row.mean = mean;
    row.max = v.maxCoeff();
    row.min = v.minCoeff();
    row.std = std::sqrt(c.square().sum() / static_cast<double>(n - 1));
    row.skewness = m3 / std::pow(m2, 1.5);
    row.kurtosis = m4 / (m2 * m2);
    row.jb_stat = static_cast<double>(n) / 6.0 *
                  (row.skewness * row.skewness +
                   0.25 * (row.kurtosis - 3.0) * (row.kurtosis - 3.0));
    row.jb_p = std::max(std::exp(-row.jb_stat / 2.0), 0.001);
    if (n >= 30) row.adf = adf_test(v);
    return row;
}

StatsRow descriptive_stats(const NormalizedSeries& s) { return descriptive_stats(s.values); }

AdfResult adf_test(const Eigen::VectorXd& y, std::optional<int> max_lag) {
    const auto n0 = y.size();
    if (n0 < 30) throw TooShort("adf_test needs length >= 30");
    const int p = max_lag ? *max_lag
                          : static_cast<int>(std::floor(
                                12.0 * std::pow(static_cast<double>(n0) / 100.0, 0.25)));

    const Eigen::VectorXd dy = y.tail(n0 - 1) - y.head(n0 - 1);
    const Eigen::Index rows = dy.size() - p;
    const Eigen::Index cols = 2 + p;
    if (rows <= cols) throw TooShort("adf_test: too few observations for lag order");

    // dy[t] = alpha + beta*y[t-1] + sum_j gamma_j*dy[t-j] + e,  t = p..end
    Eigen::MatrixXd X(rows, cols);
    X.col(0).setOnes();
    X.col(1) = y.segment(p, rows);
    for (int j = 1; j <= p; ++j) X.col(1 + j) = dy.segment(p - j, rows);
    const Eigen::VectorXd target = dy.tail(rows);

    const Eigen::MatrixXd xtx = X.transpose() * X;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(xtx);
    if (!lu.isInvertible()) throw SingularRegression("adf_test: singular design matrix");
    const Eigen::VectorXd beta = lu.solve(X.transpose() * target);
    const Eigen::VectorXd resid = target - X * beta;
    const double s2 = resid.squaredNorm() / static_cast<double>(rows - cols);
    const double se = std::sqrt(s2 * lu.inverse()(1, 1));
    if (!(se > 0.0)) throw SingularRegression("adf_test: zero standard error");

    AdfResult r;
    r.stat = beta[1] / se;
    r.lags = p;
    r.reject_1pct = r.stat < -3.43;
    r.reject_5pct = r.stat < -2.86;
    r.reject_10pct = r.stat < -2.57;
    return r;
}

SummaryRow leadlag_summary(const LeadLagPath& p) {
    if (p.size() == 0) throw EmptyPath("leadlag_summary: empty path");
    SummaryRow row;
    row.length = p.size();
    row.mean = p.x_mean.mean();
    row.median = median(p.x_mean);
    row.max = p.x_mean.maxCoeff();
    row.min = p.x_mean.minCoeff();
    const auto pos = (p.x_mean.array() > 0.0).count();
    const auto neg = (p.x_mean.array() < 0.0).count();
    row.pct_positive = 100.0 * static_cast<double>(pos) / static_cast<double>(row.length);
    row.pct_negative = 100.0 * static_cast<double>(neg) / static_cast<double>(row.length);
    return row;
}

} // namespace tops
