#include "bjgeo/io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

using namespace bjgeo;
using Catch::Approx;

TEST_CASE("space JSON round-trips") {
    for (const auto& sp : {NormSpace::euclidean(3), NormSpace::lp(2, 3.0),
                           NormSpace::lp_inf(4), NormSpace::lp(5, 1.0),
                           NormSpace::regular_hexagon()}) {
        const Json j = space_to_json(sp);
        const NormSpace back = space_from_json(j);
        CHECK(back.kind == sp.kind);
        CHECK(back.dim == sp.dim);
        CHECK(space_to_json(back) == j);
        // the norms agree on sample points
        std::mt19937_64 rng(1);
        std::normal_distribution<double> gauss;
        for (int i = 0; i < 50; ++i) {
            Vec x(sp.dim);
            for (int k = 0; k < sp.dim; ++k) x[k] = gauss(rng);
            CHECK(norm_eval(back, x) == Approx(norm_eval(sp, x)).margin(1e-14));
        }
    }
    Mat g(2, 2);
    g << 2, 1, 1, 3;
    const auto wip = NormSpace::inner_product(g);
    CHECK(space_to_json(space_from_json(space_to_json(wip))) == space_to_json(wip));
}

TEST_CASE("operator JSON round-trips") {
    Mat m(2, 2);
    m << 0.5, -0.5, 0.5, 0.5;
    const Operator T(m, NormSpace::lp_inf(2), NormSpace::lp_inf(2));
    const Json j = operator_to_json(T);
    const Operator back = operator_from_json(j);
    CHECK(back.matrix == T.matrix);
    CHECK(operator_to_json(back) == j);
}

TEST_CASE("attainment set JSON round-trips for every form") {
    Mat m(2, 2);
    m << 1, 0, 0, 0;
    const auto sq = NormSpace::lp_inf(2);
    const auto hex = NormSpace::regular_hexagon();
    const auto e2 = NormSpace::euclidean(2);
    const std::vector<AttainmentSet> sets = {
        attain(Operator(m, sq, sq), AttainMode::Max),       // segments
        attain(Operator(m, sq, sq), AttainMode::Min),       // finite pairs
        attain(Operator(m, e2, e2), AttainMode::Min),       // subspace sphere
        attain(Operator(Mat::Identity(2, 2), e2, e2), AttainMode::Max),  // whole
        attain(Operator(m, NormSpace::lp(2, 3.0), NormSpace::lp(2, 3.0)),
               AttainMode::Max),                            // approximate
    };
    for (const auto& s : sets) {
        const Json j = attainment_to_json(s);
        const AttainmentSet back = attainment_from_json(j);
        CHECK(back.form == s.form);
        CHECK(back.value == s.value);
        CHECK(back.approximate == s.approximate);
        CHECK(attainment_to_json(back) == j);
        CHECK(back.points.size() == s.points.size());
        CHECK(back.basis.size() == s.basis.size());
        CHECK(back.segments.size() == s.segments.size());
    }
}

TEST_CASE("serialization is byte-stable") {
    Mat m(2, 2);
    m << 2, 0, 0, 1;
    const auto e2 = NormSpace::euclidean(2);
    const Operator T(m, e2, e2);
    const std::string a = attainment_to_json(attain(T, AttainMode::Max)).dump();
    const std::string b = attainment_to_json(attain(T, AttainMode::Max)).dump();
    CHECK(a == b);
    const std::string r1 = report_to_json(check_nonsmooth_counterexample()).dump();
    const std::string r2 = report_to_json(check_nonsmooth_counterexample()).dump();
    CHECK(r1 == r2);
}

TEST_CASE("certificate serialization carries the verdict") {
    Mat m(2, 2);
    m << 2, 0, 0, 1;
    const auto e2 = NormSpace::euclidean(2);
    const Operator T(m, e2, e2);
    Vec x(2);
    x << 1, 0;
    const Json j =
        sip_certificate_to_json(certify_attainment_via_sip(T, x, AttainMode::Max));
    CHECK(j.at("pass").get<bool>());
    CHECK(j.at("mode").get<std::string>() == "max");
    CHECK(j.at("value").get<double>() == Approx(2.0));
    Vec y(2);
    y << 0, 1;
    const Json o = ortho_certificate_to_json(is_bj_orthogonal(e2, x, y));
    CHECK(o.at("orthogonal").get<bool>());
    CHECK(o.at("rho_minus").get<double>() == Approx(0.0).margin(1e-12));
}

TEST_CASE("malformed input is rejected with InvalidInput") {
    CHECK_THROWS_AS(vec_from_json(Json::parse("{}")), InvalidInput);
    CHECK_THROWS_AS(vec_from_json(Json::parse("[]")), InvalidInput);
    CHECK_THROWS_AS(mat_from_json(Json::parse("[[1,2],[3]]")), InvalidInput);
    CHECK_THROWS_AS(space_from_json(Json::parse(R"({"kind":"weird"})")), InvalidInput);
    CHECK_THROWS_AS(space_from_json(Json::parse(R"({"kind":"lp","p":"huge","dim":2})")),
                    InvalidInput);
    CHECK_THROWS_AS(
        attainment_from_json(Json::parse(R"({"form":"blob","value":1})")),
        InvalidInput);
    // non-SPD gram and collinear polygons are invalid at construction
    CHECK_THROWS_AS(
        space_from_json(Json::parse(R"({"kind":"inner_product","gram":[[1,2],[2,1]]})")),
        InvalidInput);
}

TEST_CASE("profile CSV has the documented header and one row per sample") {
    Mat m(2, 2);
    m << 2, 0, 0, 1;
    const auto e2 = NormSpace::euclidean(2);
    const auto profile = oracle_profile(Operator(m, e2, e2), 128);
    std::ostringstream os;
    write_profile_csv(os, profile);
    const std::string out = os.str();
    CHECK(out.rfind("angle,x1,x2,norm_Tx\n", 0) == 0);
    std::size_t lines = 0;
    for (char c : out)
        if (c == '\n') ++lines;
    CHECK(lines == 129);
}
