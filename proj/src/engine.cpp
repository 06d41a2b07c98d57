#include "tops/engine.hpp"

#include <cmath>
#include <string>

namespace tops {

namespace {

// Index of lag x within the ascending admissible list of slice t (all lists
// are contiguous with stride 2 starting at -m).
struct SliceIndex {
    int m = -1;  // largest |x| in the slice; -1 = empty

    int size() const { return m < 0 ? 0 : m + 1; }
    bool contains(int x) const { return m >= 0 && std::abs(x) <= m; }
    int pos(int x) const { return (x + m) / 2; }
    int x_at(int k) const { return -m + 2 * k; }
};

SliceIndex slice_index(int t, int n, const std::optional<int>& max_abs_x) {
    int m = max_lag(t, n);
    if (max_abs_x) m = std::min(m, *max_abs_x);
    if (((m - t) % 2 + 2) % 2 != 0) --m;
    return {m};
}

void validate(double temperature, const std::optional<int>& max_abs_x) {
    if (!(temperature > 0.0))
        throw NonPositiveTemperature("temperature must be > 0, got " +
                                     std::to_string(temperature));
    if (max_abs_x && *max_abs_x < 1)
        throw OutOfBounds("max_abs_x must be >= 1");
}

// Shared sweep body. `reversed` runs the time-mirrored recursion: slice order
// 2n-2 .. 0 with the distance matrix read at the untransformed node, which is
// exactly the backward recursion initialized at (n-1, n-1).
SliceDistributions sweep(const DistanceMatrix& E, double temperature,
                         std::optional<int> max_abs_x, bool reversed) {
    validate(temperature, max_abs_x);
    const int n = E.n();
    const int slices = 2 * n - 1;

    SliceDistributions out;
    out.n = n;
    out.direction = reversed ? SweepDirection::backward : SweepDirection::forward;
    out.max_abs_x = max_abs_x;
    out.prob.resize(static_cast<size_t>(slices));
    out.log_scale.assign(static_cast<size_t>(slices), 0.0);

    auto node_eps = [&](int t, int x) {
        const int t1 = (t - x) / 2, t2 = (t + x) / 2;
        return E.eps(t1, t2);
    };

    // step 0 is the pinned corner slice, step s the s-th slice processed
    auto slice_of = [&](int step) { return reversed ? slices - 1 - step : step; };

    for (int step = 0; step < slices; ++step) {
        const int t = slice_of(step);
        const SliceIndex idx = slice_index(t, n, max_abs_x);
        Eigen::VectorXd w(idx.size());

        if (step == 0) {
            w[0] = 1.0;
            out.log_scale[static_cast<size_t>(t)] = -node_eps(t, 0) / temperature;
            out.prob[static_cast<size_t>(t)] = std::move(w);
            continue;
        }

        const int t_prev = slice_of(step - 1);
        const SliceIndex prev = slice_index(t_prev, n, max_abs_x);
        const Eigen::VectorXd& p_prev = out.prob[static_cast<size_t>(t_prev)];

        // relative scale of the slice two steps back (diagonal moves)
        double r = 0.0;
        const Eigen::VectorXd* p_prev2 = nullptr;
        SliceIndex prev2;
        if (step >= 2) {
            const int t_prev2 = slice_of(step - 2);
            prev2 = slice_index(t_prev2, n, max_abs_x);
            p_prev2 = &out.prob[static_cast<size_t>(t_prev2)];
            r = std::exp(out.log_scale[static_cast<size_t>(t_prev2)] -
                         out.log_scale[static_cast<size_t>(t_prev)]);
        }

        for (int k = 0; k < idx.size(); ++k) {
            const int x = idx.x_at(k);
            double s = 0.0;
            if (prev.contains(x - 1)) s += p_prev[prev.pos(x - 1)];
            if (prev.contains(x + 1)) s += p_prev[prev.pos(x + 1)];
            if (p_prev2 && prev2.contains(x)) s += r * (*p_prev2)[prev2.pos(x)];
            w[k] = s * std::exp(-node_eps(t, x) / temperature);
        }

        const double total = w.sum();
        if (!(total > 0.0) || !std::isfinite(total))
            throw Error("sweep: degenerate slice weight at t=" + std::to_string(t));
        out.prob[static_cast<size_t>(t)] = w / total;
        out.log_scale[static_cast<size_t>(t)] =
            out.log_scale[static_cast<size_t>(t_prev)] + std::log(total);
    }
    return out;
}

} // namespace

double SliceDistributions::mean_lag(int t) const {
    const Eigen::VectorXd& p = prob[static_cast<size_t>(t)];
    const SliceIndex idx = slice_index(t, n, max_abs_x);
    // sum mirror pairs together so a symmetric slice gives exactly zero
    double m = 0.0;
    for (int k = 0; 2 * k < idx.size() - 1; ++k) {
        const int j = idx.size() - 1 - k;
        m += idx.x_at(k) * p[k] + idx.x_at(j) * p[j];
    }
    if (idx.size() % 2 == 1) m += idx.x_at(idx.size() / 2) * p[idx.size() / 2];
    return m;
}

SliceDistributions forward_weights(const DistanceMatrix& E, double temperature,
                                   std::optional<int> max_abs_x) {
    return sweep(E, temperature, max_abs_x, false);
}

SliceDistributions backward_weights(const DistanceMatrix& E, double temperature,
                                    std::optional<int> max_abs_x) {
    return sweep(E, temperature, max_abs_x, true);
}

LeadLagPath tops_path(const DistanceMatrix& E, const EngineConfig& config,
                      std::span<const std::string> dates) {
    const SliceDistributions fwd = forward_weights(E, config.temperature, config.max_abs_x);
    const SliceDistributions bwd = backward_weights(E, config.temperature, config.max_abs_x);
    const int n = E.n();
    if (!dates.empty() && static_cast<int>(dates.size()) != n)
        throw LengthMismatch("tops_path: calendar length " + std::to_string(dates.size()) +
                             " does not match series length " + std::to_string(n));

    LeadLagPath p;
    p.temperature = config.temperature;
    p.grid = config.report_grid;
    const int stride = config.report_grid == ReportGrid::even_t ? 2 : 1;
    const int count = config.report_grid == ReportGrid::even_t ? n : 2 * n - 1;
    p.t.reserve(static_cast<size_t>(count));
    p.x_mean.resize(count);
    p.x_fwd.resize(count);
    p.x_bwd.resize(count);
    for (int i = 0; i < count; ++i) {
        const int t = i * stride;
        p.t.push_back(t);
        p.x_fwd[i] = fwd.mean_lag(t);
        p.x_bwd[i] = bwd.mean_lag(t);
        p.x_mean[i] = 0.5 * (p.x_fwd[i] + p.x_bwd[i]);
        if (!dates.empty()) p.dates.push_back(dates[static_cast<size_t>(t / 2)]);
    }
    return p;
}

OptimalPath zero_temperature_path(const DistanceMatrix& E) {
    const int n = E.n();
    Eigen::MatrixXd C(n, n);
    C(0, 0) = E.eps(0, 0);
    for (int t1 = 0; t1 < n; ++t1) {
        for (int t2 = 0; t2 < n; ++t2) {
            if (t1 == 0 && t2 == 0) continue;
            double best = std::numeric_limits<double>::infinity();
            if (t1 > 0 && t2 > 0) best = std::min(best, C(t1 - 1, t2 - 1));
            if (t1 > 0) best = std::min(best, C(t1 - 1, t2));
            if (t2 > 0) best = std::min(best, C(t1, t2 - 1));
            C(t1, t2) = E.eps(t1, t2) + best;
        }
    }

    OptimalPath path;
    path.total_energy = C(n - 1, n - 1);
    int t1 = n - 1, t2 = n - 1;
    path.nodes.emplace_back(t1, t2);
    while (t1 != 0 || t2 != 0) {
        // candidates in preference order: diagonal, then smaller |t2 - t1|
        // of the predecessor, horizontal before vertical when still tied
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
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < nc; ++i) best = std::min(best, C(cands[i].t1, cands[i].t2));
        for (int i = 0; i < nc; ++i) {
            if (C(cands[i].t1, cands[i].t2) == best) {
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

std::vector<LeadLagPath> temperature_sweep(const DistanceMatrix& E,
                                           std::span<const double> temperatures,
                                           EngineConfig config) {
    std::vector<LeadLagPath> out;
    out.reserve(temperatures.size());
    for (double T : temperatures) {
        config.temperature = T;
        out.push_back(tops_path(E, config));
    }
    return out;
}

} // namespace tops
