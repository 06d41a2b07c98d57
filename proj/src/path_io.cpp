#include "tops/path_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tops {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

std::string path_to_csv(const LeadLagPath& p) {
    std::string out = "index,date,x_mean,x_fwd,x_bwd\n";
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        out += std::to_string(p.t[static_cast<size_t>(i)] / (p.grid == ReportGrid::even_t ? 2 : 1));
        out += ',';
        if (!p.dates.empty()) out += p.dates[static_cast<size_t>(i)];
        out += ',';
        out += fmt(p.x_mean[i]);
        out += ',';
        out += fmt(p.x_fwd[i]);
        out += ',';
        out += fmt(p.x_bwd[i]);
        out += '\n';
    }
    return out;
}

std::string path_to_json(const LeadLagPath& p) {
    nlohmann::json j;
    j["temperature"] = p.temperature;
    j["grid"] = p.grid == ReportGrid::even_t ? "even" : "all";
    j["t"] = p.t;
    j["dates"] = p.dates;
    j["x_mean"] = std::vector<double>(p.x_mean.data(), p.x_mean.data() + p.x_mean.size());
    j["x_fwd"] = std::vector<double>(p.x_fwd.data(), p.x_fwd.data() + p.x_fwd.size());
    j["x_bwd"] = std::vector<double>(p.x_bwd.data(), p.x_bwd.data() + p.x_bwd.size());
    return j.dump(2) + "\n";
}

LeadLagPath parse_path_file(const std::string& text) {
    LeadLagPath p;
    auto first_nonspace = text.find_first_not_of(" \t\r\n");
    if (first_nonspace == std::string::npos) throw EmptyInput("empty path file");

    if (text[first_nonspace] == '{') {
        const auto j = nlohmann::json::parse(text);
        p.temperature = j.value("temperature", 2.0);
        p.grid = j.value("grid", "even") == std::string("all") ? ReportGrid::all_t
                                                               : ReportGrid::even_t;
        p.t = j.value("t", std::vector<int>{});
        p.dates = j.value("dates", std::vector<std::string>{});
        auto vec = [&](const char* key) {
            const auto v = j.at(key).get<std::vector<double>>();
            return Eigen::Map<const Eigen::VectorXd>(v.data(),
                                                     static_cast<Eigen::Index>(v.size()))
                .eval();
        };
        p.x_mean = vec("x_mean");
        p.x_fwd = vec("x_fwd");
        p.x_bwd = vec("x_bwd");
        return p;
    }

    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw EmptyInput("empty path file");
    std::vector<double> xm, xf, xb;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(row, field, ',')) fields.push_back(field);
        // a trailing empty x_bwd field would be dropped by getline; pad
        while (fields.size() < 5) fields.emplace_back();
        if (fields.size() != 5) throw MalformedRow("path file: bad row '" + line + "'");
        auto num = [&](const std::string& s) {
            double v = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
            if (ec != std::errc{} || ptr != s.data() + s.size())
                throw MalformedRow("path file: bad number '" + s + "'");
            return v;
        };
        p.t.push_back(static_cast<int>(num(fields[0])));
        if (!fields[1].empty()) p.dates.push_back(fields[1]);
        xm.push_back(num(fields[2]));
        xf.push_back(num(fields[3]));
        xb.push_back(num(fields[4]));
    }
    if (xm.empty()) throw EmptyInput("path file has no rows");
    auto to_vec = [](std::vector<double>& v) {
        return Eigen::Map<Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())).eval();
    };
    p.x_mean = to_vec(xm);
    p.x_fwd = to_vec(xf);
    p.x_bwd = to_vec(xb);
    // CSV index column stores the day index; recover lattice slices
    for (auto& t : p.t) t *= 2;
    return p;
}

std::string fnv1a64_hex(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw EmptyInput("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

} // namespace tops
