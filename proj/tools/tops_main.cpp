// Command-line front end for the thermal optimal path lead-lag pipeline.
//
// Exit codes: 0 success, 1 check failure, 2 input error, 3 config error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tops/engine.hpp"
#include "tops/oracle.hpp"
#include "tops/path_io.hpp"
#include "tops/series.hpp"
#include "tops/stats.hpp"
#include "tops/synth.hpp"

namespace {

using namespace tops;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitConfigError = 3;

struct CommonOpts {
    std::string date_col = "date";
    std::string value_col = "value";
    double temperature = 2.0;
    std::string normalize_mode = "minmax";
    std::string grid = "even";
    std::optional<int> max_abs_x;
    std::string out;
    std::string format = "csv";
    int pre_shift = 0;
};

NormalizeMode parse_mode(const std::string& s) {
    if (s == "minmax") return NormalizeMode::minmax;
    if (s == "zscore") return NormalizeMode::zscore;
    throw CLI::ValidationError("--normalize must be minmax or zscore");
}

ReportGrid parse_grid(const std::string& s) {
    if (s == "even") return ReportGrid::even_t;
    if (s == "all") return ReportGrid::all_t;
    throw CLI::ValidationError("--grid must be even or all");
}

RawSeries load_series(const std::string& path, const CommonOpts& o, const std::string& name) {
    return parse_series(read_file(path), CsvOptions{o.date_col, o.value_col}, name);
}

void write_manifest(const std::string& out_path, const nlohmann::json& config,
                    const std::vector<std::pair<std::string, std::string>>& inputs,
                    const std::vector<std::pair<std::string, std::string>>& outputs) {
    nlohmann::json m;
    m["config"] = config;
    for (const auto& [path, content] : inputs)
        m["inputs"].push_back({{"path", path}, {"fnv1a64", fnv1a64_hex(content)}});
    for (const auto& [path, content] : outputs)
        m["outputs"].push_back({{"path", path}, {"fnv1a64", fnv1a64_hex(content)}});
    write_file(out_path, m.dump(2) + "\n");
}

std::string series_csv(const std::vector<std::string>& dates, const Eigen::VectorXd& values) {
    std::string out = "date,value\n";
    char buf[48];
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%s,%.17g\n", dates[static_cast<size_t>(i)].c_str(),
                      values[i]);
        out += buf;
    }
    return out;
}

void print_summary(const SummaryRow& s) {
    std::printf("length %lld  mean %.4f  median %.4f  max %.4f  min %.4f  "
                "positive %.2f%%  negative %.2f%%\n",
                static_cast<long long>(s.length), s.mean, s.median, s.max, s.min,
                s.pct_positive, s.pct_negative);
}

int cmd_analyze(const std::string& x_file, const std::string& y_file, const CommonOpts& o) {
    const std::string x_text = read_file(x_file);
    const std::string y_text = read_file(y_file);
    RawSeries a = parse_series(x_text, CsvOptions{o.date_col, o.value_col}, x_file);
    RawSeries b = parse_series(y_text, CsvOptions{o.date_col, o.value_col}, y_file);
    if (o.pre_shift != 0) a = shift_observations(a, o.pre_shift);
    auto [ax, ay] = align(a, b);

    const NormalizeMode mode = parse_mode(o.normalize_mode);
    const NormalizedSeries X = normalize(log_returns(ax), mode);
    const NormalizedSeries Y = normalize(log_returns(ay), mode);

    EngineConfig cfg;
    cfg.temperature = o.temperature;
    cfg.report_grid = parse_grid(o.grid);
    cfg.max_abs_x = o.max_abs_x;
    const LeadLagPath path = tops_path(distance_matrix(X, Y), cfg, X.dates);
    print_summary(leadlag_summary(path));

    if (!o.out.empty()) {
        const std::string body = o.format == "json" ? path_to_json(path) : path_to_csv(path);
        write_file(o.out, body);
        nlohmann::json cfgj = {{"command", "analyze"},
                               {"x_file", x_file},
                               {"y_file", y_file},
                               {"temperature", o.temperature},
                               {"normalize", o.normalize_mode},
                               {"grid", o.grid},
                               {"pre_shift", o.pre_shift},
                               {"format", o.format}};
        if (o.max_abs_x) cfgj["max_abs_x"] = *o.max_abs_x;
        write_manifest(o.out + ".manifest.json", cfgj, {{x_file, x_text}, {y_file, y_text}},
                       {{o.out, body}});
    }
    return kExitOk;
}

int cmd_sweep(const std::string& x_file, const std::string& y_file,
              const std::vector<double>& temps, const CommonOpts& o) {
    if (temps.empty()) throw CLI::ValidationError("--temperatures must be non-empty");
    const std::string x_text = read_file(x_file);
    const std::string y_text = read_file(y_file);
    RawSeries a = parse_series(x_text, CsvOptions{o.date_col, o.value_col}, x_file);
    RawSeries b = parse_series(y_text, CsvOptions{o.date_col, o.value_col}, y_file);
    if (o.pre_shift != 0) a = shift_observations(a, o.pre_shift);
    auto [ax, ay] = align(a, b);
    const NormalizeMode mode = parse_mode(o.normalize_mode);
    const NormalizedSeries X = normalize(log_returns(ax), mode);
    const NormalizedSeries Y = normalize(log_returns(ay), mode);

    EngineConfig cfg;
    cfg.report_grid = parse_grid(o.grid);
    cfg.max_abs_x = o.max_abs_x;
    const auto paths = temperature_sweep(distance_matrix(X, Y), temps, cfg);

    std::vector<std::pair<std::string, std::string>> outputs;
    for (size_t i = 0; i < paths.size(); ++i) {
        LeadLagPath p = paths[i];
        p.dates.assign(X.dates.begin(), X.dates.end());
        if (p.grid == ReportGrid::all_t) p.dates.clear();  // calendar is per-day only
        const SummaryRow s = leadlag_summary(p);
        std::printf("T=%g: ", temps[i]);
        print_summary(s);
        if (!o.out.empty()) {
            char suffix[32];
            std::snprintf(suffix, sizeof suffix, "_T%g", temps[i]);
            const std::string file = o.out + suffix + (o.format == "json" ? ".json" : ".csv");
            const std::string body = o.format == "json" ? path_to_json(p) : path_to_csv(p);
            write_file(file, body);
            outputs.emplace_back(file, body);
        }
    }
    if (!o.out.empty()) {
        nlohmann::json cfgj = {{"command", "sweep"},
                               {"x_file", x_file},
                               {"y_file", y_file},
                               {"temperatures", temps},
                               {"normalize", o.normalize_mode},
                               {"grid", o.grid}};
        write_manifest(o.out + ".manifest.json", cfgj, {{x_file, x_text}, {y_file, y_text}},
                       outputs);
    }
    return kExitOk;
}

LagProfile parse_profile(const std::string& spec, int n) try {
    // either a single integer lag or "start:lag,start:lag,..."
    LagProfile p;
    p.n = n;
    if (spec.find(':') == std::string::npos) {
        p.segments = {{0, std::stoi(spec)}};
        return p;
    }
    size_t pos = 0;
    while (pos < spec.size()) {
        size_t comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        const std::string seg = spec.substr(pos, comma - pos);
        const size_t colon = seg.find(':');
        if (colon == std::string::npos) throw InvalidProfile("bad profile segment '" + seg + "'");
        p.segments.emplace_back(std::stoi(seg.substr(0, colon)),
                                std::stoi(seg.substr(colon + 1)));
        pos = comma + 1;
    }
    return p;
} catch (const InvalidProfile&) {
    throw;
} catch (const std::exception&) {
    throw InvalidProfile("cannot parse lag profile '" + spec + "'");
}

int cmd_synth(int n, const std::string& profile_spec, double noise, double ar_rho,
              std::uint64_t seed, const std::string& out_x, const std::string& out_y,
              const CommonOpts& o) {
    const LagProfile profile = parse_profile(profile_spec, n);
    SynthOptions sopts;
    sopts.noise_sigma = noise;
    sopts.ar_rho = ar_rho;
    sopts.seed = seed;
    sopts.mode = parse_mode(o.normalize_mode);
    auto [x, y] = generate_lagged_pair_raw(n, profile, sopts);

    // emit levels exp(cumsum(returns)) so the files round-trip through the
    // ingest pipeline: log_returns(levels) == the generated series
    auto to_levels = [](const Eigen::VectorXd& r) {
        Eigen::VectorXd lv(r.size() + 1);
        lv[0] = 1.0;
        double acc = 0.0;
        for (Eigen::Index i = 0; i < r.size(); ++i) {
            acc += r[i];
            lv[i + 1] = std::exp(acc);
        }
        return lv;
    };
    const auto dates = synthetic_dates(n + 1);
    const std::string cx = series_csv(dates, to_levels(x));
    const std::string cy = series_csv(dates, to_levels(y));
    write_file(out_x, cx);
    write_file(out_y, cy);
    nlohmann::json cfgj = {{"command", "synth"}, {"n", n},          {"profile", profile_spec},
                           {"noise", noise},    {"ar_rho", ar_rho}, {"seed", seed}};
    write_manifest(out_x + ".manifest.json", cfgj, {}, {{out_x, cx}, {out_y, cy}});
    return kExitOk;
}

int cmd_stats(const std::vector<std::string>& files, const CommonOpts& o) {
    const NormalizeMode mode = parse_mode(o.normalize_mode);
    std::vector<std::string> names;
    std::vector<StatsRow> rows;
    for (const auto& f : files) {
        const RawSeries s = load_series(f, o, f);
        rows.push_back(descriptive_stats(normalize(log_returns(s), mode)));
        names.push_back(f);
    }
    const bool csv = o.format == "csv" && !o.out.empty();
    std::string out;
    auto emit_row = [&](const std::string& label, auto get) {
        out += label;
        for (const auto& r : rows) {
            char buf[32];
            std::snprintf(buf, sizeof buf, csv ? ",%.4f" : "  %10.4f", get(r));
            out += buf;
        }
        out += '\n';
    };
    out += csv ? "statistic" : "statistic   ";
    for (const auto& n : names) out += (csv ? "," : "  ") + n;
    out += '\n';
    emit_row(csv ? "mean" : "mean        ", [](const StatsRow& r) { return r.mean; });
    emit_row(csv ? "maximum" : "maximum     ", [](const StatsRow& r) { return r.max; });
    emit_row(csv ? "minimum" : "minimum     ", [](const StatsRow& r) { return r.min; });
    emit_row(csv ? "std_dev" : "std_dev     ", [](const StatsRow& r) { return r.std; });
    emit_row(csv ? "skewness" : "skewness    ", [](const StatsRow& r) { return r.skewness; });
    emit_row(csv ? "kurtosis" : "kurtosis    ", [](const StatsRow& r) { return r.kurtosis; });
    emit_row(csv ? "jb_p" : "jb_p        ", [](const StatsRow& r) { return r.jb_p; });
    emit_row(csv ? "adf_stat" : "adf_stat    ",
             [](const StatsRow& r) { return r.adf ? r.adf->stat : std::nan(""); });
    out += csv ? "adf_reject_5pct" : "adf(5%)     ";
    for (const auto& r : rows) {
        const char* d = !r.adf ? "n/a" : (r.adf->reject_5pct ? "reject" : "accept");
        out += csv ? std::string(",") + d : std::string("  ") + d;
    }
    out += '\n';
    if (!o.out.empty()) {
        write_file(o.out, out);
        std::vector<std::pair<std::string, std::string>> inputs;
        for (const auto& f : files) inputs.emplace_back(f, read_file(f));
        write_manifest(o.out + ".manifest.json",
                       {{"command", "stats"}, {"files", files}, {"normalize", o.normalize_mode}},
                       inputs, {{o.out, out}});
    } else {
        std::fputs(out.c_str(), stdout);
    }
    return kExitOk;
}

int cmd_summary(const std::string& path_file) {
    const LeadLagPath p = parse_path_file(read_file(path_file));
    print_summary(leadlag_summary(p));
    return kExitOk;
}

int cmd_check(std::uint64_t seed, int instances) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const double temps[] = {0.5, 1.0, 2.0, 5.0};
    double worst = 0.0;
    for (int inst = 0; inst < instances; ++inst) {
        const int n = 3 + static_cast<int>(rng() % 6);  // 3..8
        Eigen::VectorXd x(n), y(n);
        for (int i = 0; i < n; ++i) {
            x[i] = unif(rng);
            y[i] = unif(rng);
        }
        const DistanceMatrix E = distance_matrix(x, y);
        for (double T : temps) {
            const SliceDistributions fwd = forward_weights(E, T);
            const SliceDistributions bwd = backward_weights(E, T);
            const LeadLagPath engine = tops_path(E, {T, ReportGrid::all_t, {}});
            const LeadLagPath ref = oracle::tops(E, T);
            const auto of = oracle::forward_marginals(E, T);
            const auto ob = oracle::backward_marginals(E, T);
            for (int t = 0; t < 2 * n - 1; ++t) {
                worst = std::max(worst, (fwd.prob[static_cast<size_t>(t)] -
                                         of[static_cast<size_t>(t)]).cwiseAbs().maxCoeff());
                worst = std::max(worst, (bwd.prob[static_cast<size_t>(t)] -
                                         ob[static_cast<size_t>(t)]).cwiseAbs().maxCoeff());
                worst = std::max(worst, std::abs(engine.x_mean[t] - ref.x_mean[t]));
            }
        }
        // zero-temperature path against exhaustive enumeration
        const OptimalPath dp = zero_temperature_path(E);
        const OptimalPath ex = oracle::min_path(E);
        if (dp.total_energy != ex.total_energy || dp.nodes != ex.nodes) {
            std::printf("check: FAILED (zero-temperature path mismatch at instance %d)\n", inst);
            return kExitCheckFailure;
        }
    }
    std::printf("check: worst marginal/path deviation %.3e over %d instances\n", worst,
                instances);
    if (worst > 1e-10) {
        std::printf("check: FAILED (tolerance 1e-10)\n");
        return kExitCheckFailure;
    }
    std::printf("check: OK\n");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symmetric thermal optimal path lead-lag analysis"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string x_file, y_file, path_file;
    std::vector<std::string> stat_files;
    std::vector<double> temps;
    int n = 500, check_instances = 50;
    std::string profile_spec = "0";
    double noise = 0.0, ar_rho = 0.0;
    std::uint64_t seed = 0;
    std::string out_x = "synth_x.csv", out_y = "synth_y.csv";

    auto add_common = [&](CLI::App* cmd, bool io) {
        if (io) {
            cmd->add_option("--date-col", o.date_col, "date column name");
            cmd->add_option("--value-col", o.value_col, "value column name");
        }
        cmd->add_option("--normalize", o.normalize_mode, "minmax|zscore");
        cmd->add_option("--out", o.out, "output file path");
        cmd->add_option("--format", o.format, "csv|json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    auto* analyze = app.add_subcommand("analyze", "lead-lag path between two series");
    analyze->add_option("--x-file", x_file, "first (leading-sign) series CSV")->required();
    analyze->add_option("--y-file", y_file, "second series CSV")->required();
    analyze->add_option("--temperature", o.temperature, "Boltzmann temperature");
    analyze->add_option("--grid", o.grid, "even|all")->check(CLI::IsMember({"even", "all"}));
    analyze->add_option("--max-abs-x", [&o](const CLI::results_t& r) {
        o.max_abs_x = std::stoi(r[0]);
        return true;
    }, "lag search window (truncates the reachable lag range)");
    analyze->add_option("--pre-shift", o.pre_shift, "shift x series by k observations");
    add_common(analyze, true);

    auto* sweep = app.add_subcommand("sweep", "lead-lag paths over several temperatures");
    sweep->add_option("--x-file", x_file)->required();
    sweep->add_option("--y-file", y_file)->required();
    sweep->add_option("--temperatures", temps, "comma-separated list")
        ->required()
        ->delimiter(',');
    sweep->add_option("--grid", o.grid)->check(CLI::IsMember({"even", "all"}));
    sweep->add_option("--pre-shift", o.pre_shift);
    add_common(sweep, true);

    auto* synth = app.add_subcommand("synth", "generate a lagged synthetic pair");
    synth->add_option("--n", n, "number of return observations");
    synth->add_option("--lag", profile_spec, "constant lag or start:lag,start:lag profile");
    synth->add_option("--noise", noise, "observation noise sigma");
    synth->add_option("--ar", ar_rho, "AR(1) coefficient of the driving process");
    synth->add_option("--seed", seed);
    synth->add_option("--out-x", out_x);
    synth->add_option("--out-y", out_y);
    add_common(synth, false);

    auto* stats = app.add_subcommand("stats", "descriptive statistics of return series");
    stats->add_option("files", stat_files, "input CSV files")->required();
    add_common(stats, true);

    auto* summary = app.add_subcommand("summary", "summary row for a stored path file");
    summary->add_option("path_file", path_file, "path file (csv or json)")->required();

    auto* check = app.add_subcommand("check", "engine-vs-enumeration self verification");
    check->add_option("--seed", seed);
    check->add_option("--instances", check_instances);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfigError;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(x_file, y_file, o);
        if (sweep->parsed()) return cmd_sweep(x_file, y_file, temps, o);
        if (synth->parsed()) return cmd_synth(n, profile_spec, noise, ar_rho, seed, out_x, out_y, o);
        if (stats->parsed()) return cmd_stats(stat_files, o);
        if (summary->parsed()) return cmd_summary(path_file);
        if (check->parsed()) return cmd_check(seed, check_instances);
    } catch (const NonPositiveTemperature& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const InvalidProfile& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfigError;
    } catch (const Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitConfigError;
}
