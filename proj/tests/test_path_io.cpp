#include <doctest.h>

#include <algorithm>
#include <random>

#include "tops/engine.hpp"
#include "tops/path_io.hpp"
#include "tops/synth.hpp"

using namespace tops;

namespace {

LeadLagPath sample_path() {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unif(-1, 1);
    Eigen::VectorXd x(12), y(12);
    for (int i = 0; i < 12; ++i) {
        x[i] = unif(rng);
        y[i] = unif(rng);
    }
    return tops_path(distance_matrix(x, y), {2.0, ReportGrid::even_t, {}},
                     synthetic_dates(12));
}

} // namespace

TEST_CASE("csv header and shape") {
    const LeadLagPath p = sample_path();
    const std::string csv = path_to_csv(p);
    CHECK(csv.substr(0, 33) == "index,date,x_mean,x_fwd,x_bwd\n0,2");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 13);  // header + 12 rows
}

TEST_CASE("round trip through both serializations") {
    const LeadLagPath p = sample_path();
    for (const std::string text : {path_to_csv(p), path_to_json(p)}) {
        const LeadLagPath q = parse_path_file(text);
        REQUIRE(q.size() == p.size());
        CHECK((q.x_mean - p.x_mean).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((q.x_fwd - p.x_fwd).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((q.x_bwd - p.x_bwd).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(q.dates == p.dates);
        CHECK(q.t == p.t);
    }
}

TEST_CASE("parse rejects empty and malformed content") {
    CHECK_THROWS_AS(parse_path_file(""), EmptyInput);
    CHECK_THROWS_AS(parse_path_file("index,date,x_mean,x_fwd,x_bwd\n"), EmptyInput);
    CHECK_THROWS_AS(parse_path_file("index,date,x_mean,x_fwd,x_bwd\n0,d,a,b,c\n"), MalformedRow);
}

TEST_CASE("fnv fingerprint is stable and content sensitive") {
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("a") != fnv1a64_hex("b"));
    CHECK(fnv1a64_hex("abc") == fnv1a64_hex("abc"));
}
