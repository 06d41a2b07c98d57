#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tops/errors.hpp"

namespace tops {

enum class NormalizeMode { minmax, zscore };

/// Date-indexed level series (prices or index values) as ingested.
/// Dates are ISO-8601 strings (lexicographic order == chronological order),
/// strictly increasing, values finite and strictly positive.
struct RawSeries {
    std::string name;
    std::vector<std::string> dates;
    Eigen::VectorXd values;

    Eigen::Index size() const { return values.size(); }
};

/// Log returns; one fewer observation than the source, each return dated
/// at the later endpoint of its interval.
struct ReturnSeries {
    std::vector<std::string> dates;
    Eigen::VectorXd values;

    Eigen::Index size() const { return values.size(); }
};

/// Standardized series feeding the distance matrix.
struct NormalizedSeries {
    std::vector<std::string> dates;
    Eigen::VectorXd values;
    NormalizeMode mode = NormalizeMode::minmax;

    Eigen::Index size() const { return values.size(); }
};

struct CsvOptions {
    std::string date_column = "date";
    std::string value_column = "value";
};

/// True iff `s` is a valid YYYY-MM-DD calendar date.
bool is_valid_iso_date(std::string_view s);

/// Parse a CSV document (header row required) into a RawSeries.
/// Rows are sorted ascending by date; duplicate dates, malformed rows and
/// non-positive values are rejected.
RawSeries parse_series(std::string_view text, const CsvOptions& opts = {},
                       std::string name = "");

/// Restrict both series to the exact intersection of their calendars.
/// Throws EmptyIntersection when fewer than 3 dates are shared.
std::pair<RawSeries, RawSeries> align(const RawSeries& a, const RawSeries& b);

/// Re-label the values of `s` with dates `k` observations later (k > 0)
/// or earlier (k < 0) on its own calendar, dropping the overhang.
RawSeries shift_observations(const RawSeries& s, int k);

ReturnSeries log_returns(const RawSeries& s);

NormalizedSeries normalize(const ReturnSeries& r, NormalizeMode mode);

/// Normalization on a bare vector (used by synth and tests).
Eigen::VectorXd normalize_values(const Eigen::VectorXd& v, NormalizeMode mode);

} // namespace tops
