#include "tops/series.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace tops {

namespace {

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            out.push_back(trim(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

} // namespace

bool is_valid_iso_date(std::string_view s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    int y = (s[0] - '0') * 1000 + (s[1] - '0') * 100 + (s[2] - '0') * 10 + (s[3] - '0');
    int m = (s[5] - '0') * 10 + (s[6] - '0');
    int d = (s[8] - '0') * 10 + (s[9] - '0');
    return std::chrono::year_month_day{std::chrono::year{y}, std::chrono::month{unsigned(m)},
                                       std::chrono::day{unsigned(d)}}
        .ok();
}

RawSeries parse_series(std::string_view text, const CsvOptions& opts, std::string name) {
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line)) throw EmptyInput("empty CSV input");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    auto header = split_csv_line(line);
    auto find_col = [&](const std::string& want) -> size_t {
        auto it = std::find(header.begin(), header.end(), want);
        if (it == header.end())
            throw MalformedRow("column '" + want + "' not found in header");
        return static_cast<size_t>(it - header.begin());
    };
    const size_t date_idx = find_col(opts.date_column);
    const size_t value_idx = find_col(opts.value_column);

    std::vector<std::pair<std::string, double>> rows;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() <= std::max(date_idx, value_idx))
            throw MalformedRow("line " + std::to_string(lineno) + ": too few fields");
        const std::string& date = fields[date_idx];
        if (!is_valid_iso_date(date))
            throw MalformedRow("line " + std::to_string(lineno) + ": bad date '" + date + "'");
        const std::string& vs = fields[value_idx];
        double v = 0.0;
        auto [p, ec] = std::from_chars(vs.data(), vs.data() + vs.size(), v);
        if (ec != std::errc{} || p != vs.data() + vs.size() || !std::isfinite(v))
            throw MalformedRow("line " + std::to_string(lineno) + ": bad value '" + vs + "'");
        if (v <= 0.0)
            throw NonPositiveValue("line " + std::to_string(lineno) + ": non-positive value " + vs);
        rows.emplace_back(date, v);
    }
    if (rows.empty()) throw EmptyInput("CSV has a header but no data rows");

    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < rows.size(); ++i)
        if (rows[i].first == rows[i - 1].first)
            throw DuplicateDate("duplicate date " + rows[i].first);

    RawSeries s;
    s.name = std::move(name);
    s.dates.reserve(rows.size());
    s.values.resize(static_cast<Eigen::Index>(rows.size()));
    for (size_t i = 0; i < rows.size(); ++i) {
        s.dates.push_back(rows[i].first);
        s.values[static_cast<Eigen::Index>(i)] = rows[i].second;
    }
    return s;
}

std::pair<RawSeries, RawSeries> align(const RawSeries& a, const RawSeries& b) {
    if (a.size() == 0 || b.size() == 0) throw EmptyInput("align: empty series");
    std::unordered_set<std::string> in_b(b.dates.begin(), b.dates.end());
    std::unordered_set<std::string> common;
    for (const auto& d : a.dates)
        if (in_b.count(d)) common.insert(d);
    if (common.size() < 3)
        throw EmptyIntersection("align: only " + std::to_string(common.size()) +
                                " common dates between '" + a.name + "' and '" + b.name + "'");

    auto restrict_to = [&](const RawSeries& s) {
        RawSeries out;
        out.name = s.name;
        std::vector<double> vals;
        for (Eigen::Index i = 0; i < s.size(); ++i) {
            if (common.count(s.dates[static_cast<size_t>(i)])) {
                out.dates.push_back(s.dates[static_cast<size_t>(i)]);
                vals.push_back(s.values[i]);
            }
        }
        out.values = Eigen::Map<Eigen::VectorXd>(vals.data(),
                                                 static_cast<Eigen::Index>(vals.size()));
        return out;
    };
    return {restrict_to(a), restrict_to(b)};
}

RawSeries shift_observations(const RawSeries& s, int k) {
    if (k == 0) return s;
    const auto n = static_cast<int>(s.size());
    if (std::abs(k) >= n) throw TooShort("shift larger than series length");
    RawSeries out;
    out.name = s.name;
    const int m = n - std::abs(k);
    out.values.resize(m);
    out.dates.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        // k > 0: value i gets the date k steps later on the same calendar
        const int vi = k > 0 ? i : i - k;
        const int di = k > 0 ? i + k : i;
        out.values[i] = s.values[vi];
        out.dates.push_back(s.dates[static_cast<size_t>(di)]);
    }
    return out;
}

ReturnSeries log_returns(const RawSeries& s) {
    if (s.size() < 2) throw TooShort("log_returns needs at least 2 observations");
    if ((s.values.array() <= 0.0).any())
        throw NonPositiveValue("log_returns: non-positive level");
    ReturnSeries r;
    const auto n = s.size();
    r.values = (s.values.tail(n - 1).array().log() - s.values.head(n - 1).array().log()).matrix();
    r.dates.assign(s.dates.begin() + 1, s.dates.end());
    return r;
}

Eigen::VectorXd normalize_values(const Eigen::VectorXd& v, NormalizeMode mode) {
    if (v.size() < 2) throw TooShort("normalize needs at least 2 values");
    if (mode == NormalizeMode::minmax) {
        const double lo = v.minCoeff(), hi = v.maxCoeff();
        if (hi <= lo) throw DegenerateRange("normalize: constant series");
        return ((v.array() - lo) / (hi - lo)).matrix();
    }
    const double mean = v.mean();
    const double var = (v.array() - mean).square().sum() / static_cast<double>(v.size());
    if (var <= 0.0) throw DegenerateRange("normalize: zero variance");
    return ((v.array() - mean) / std::sqrt(var)).matrix();
}

NormalizedSeries normalize(const ReturnSeries& r, NormalizeMode mode) {
    NormalizedSeries out;
    out.dates = r.dates;
    out.mode = mode;
    out.values = normalize_values(r.values, mode);
    return out;
}

} // namespace tops
