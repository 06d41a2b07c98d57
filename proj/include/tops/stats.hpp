#pragma once

#include <Eigen/Dense>
#include <optional>

#include "tops/engine.hpp"
#include "tops/series.hpp"

namespace tops {

/// Augmented Dickey-Fuller result: constant-only regression, decisions by
/// comparison with the asymptotic critical values -3.43 / -2.86 / -2.57.
struct AdfResult {
    double stat = 0.0;
    int lags = 0;
    bool reject_1pct = false;
    bool reject_5pct = false;
    bool reject_10pct = false;
};

/// Descriptive-statistics row. Skewness and kurtosis use population central
/// moments (kurtosis is non-excess); std is the sample (n-1) convention.
/// JB p-value is the asymptotic chi-square(2) tail exp(-JB/2), floored at
/// 0.001. ADF is present only when the series is long enough (>= 30).
struct StatsRow {
    double mean = 0, max = 0, min = 0, std = 0;
    double skewness = 0, kurtosis = 0;
    double jb_stat = 0, jb_p = 0;
    std::optional<AdfResult> adf;
};

/// Lead-lag path summary. Percentages count strictly positive / strictly
/// negative values over the total length; zeros count toward neither.
struct SummaryRow {
    Eigen::Index length = 0;
    double mean = 0, median = 0, max = 0, min = 0;
    double pct_positive = 0, pct_negative = 0;
};

StatsRow descriptive_stats(const NormalizedSeries& s);
StatsRow descriptive_stats(const Eigen::VectorXd& v);

AdfResult adf_test(const Eigen::VectorXd& y, std::optional<int> max_lag = {});

SummaryRow leadlag_summary(const LeadLagPath& p);

double median(Eigen::VectorXd v);  // midpoint-of-two rule for even lengths

} // namespace tops
