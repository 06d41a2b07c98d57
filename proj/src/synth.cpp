#include "tops/synth.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace tops {

double NormalSampler::uniform01() {
    // top 53 bits -> (0, 1]; never returns 0, so log() below is safe
    const std::uint64_t bits = rng_() >> 11;
    return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
}

double NormalSampler::operator()() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

void LagProfile::validate() const {
    if (n < 1 || segments.empty()) throw InvalidProfile("profile needs n >= 1 and a segment");
    int prev_start = -1;
    for (const auto& [start, lag] : segments) {
        if (start <= prev_start)
            throw InvalidProfile("segment starts must be strictly increasing");
        if (start < 0 || start >= n) throw InvalidProfile("segment start outside [0, n)");
        if (std::abs(lag) * 4 >= n)
            throw InvalidProfile("lag " + std::to_string(lag) + " too large: |lag| must be < n/4");
        prev_start = start;
    }
    if (segments.front().first != 0) throw InvalidProfile("first segment must start at 0");
}

int LagProfile::lag_at(int i) const {
    int lag = segments.front().second;
    for (const auto& [start, l] : segments) {
        if (start > i) break;
        lag = l;
    }
    return lag;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> generate_lagged_pair_raw(
    int n, const LagProfile& profile, const SynthOptions& opts) {
    if (n < 32) throw InvalidProfile("generate_lagged_pair needs n >= 32");
    if (profile.n != n) throw InvalidProfile("profile length does not match n");
    if (opts.noise_sigma < 0.0) throw InvalidProfile("noise_sigma must be >= 0");
    if (std::abs(opts.ar_rho) >= 1.0) throw InvalidProfile("|ar_rho| must be < 1");
    profile.validate();

    NormalSampler normal(opts.seed);
    Eigen::VectorXd x(n), y(n);
    for (int i = 0; i < n; ++i) {
        const double innov = normal();
        x[i] = (i > 0 && opts.ar_rho != 0.0) ? opts.ar_rho * x[i - 1] + innov : innov;
    }
    for (int i = 0; i < n; ++i) {
        const int src = i - profile.lag_at(i);
        y[i] = (src >= 0 && src < n) ? x[src] : normal();
    }
    if (opts.noise_sigma > 0.0)
        for (int i = 0; i < n; ++i) y[i] += opts.noise_sigma * normal();
    return {x, y};
}

std::pair<NormalizedSeries, NormalizedSeries> generate_lagged_pair(
    int n, const LagProfile& profile, const SynthOptions& opts) {
    auto [x, y] = generate_lagged_pair_raw(n, profile, opts);
    auto dates = synthetic_dates(n);
    NormalizedSeries xs{dates, normalize_values(x, opts.mode), opts.mode};
    NormalizedSeries ys{std::move(dates), normalize_values(y, opts.mode), opts.mode};
    return {std::move(xs), std::move(ys)};
}

std::vector<std::string> synthetic_dates(int n) {
    using namespace std::chrono;
    std::vector<std::string> out;
    out.reserve(static_cast<size_t>(n));
    const sys_days start = sys_days{year{2000} / January / day{3}};
    char buf[16];
    for (int i = 0; i < n; ++i) {
        const year_month_day ymd{start + days{i}};
        std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                      static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
        out.emplace_back(buf);
    }
    return out;
}

} // namespace tops
