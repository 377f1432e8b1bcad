#include <doctest.h>

#include <cmath>

#include "croftonlab/io.hpp"

using namespace croftonlab;

TEST_CASE("body JSON parsing") {
    SUBCASE("polygon") {
        ConvexBody b = body_from_json_text(
            R"({"kind":"polygon","vertices":[[1,-1],[1,1],[-1,1],[-1,-1]]})");
        CHECK(b.kind == ConvexBody::Kind::polygon);
        CHECK(b.vertices.size() == 4);
        CHECK(b.vertices[0].x == 1.0);
    }
    SUBCASE("circle") {
        ConvexBody b = body_from_json_text(
            R"({"kind":"circle","center":[0.1,-0.2],"chart_radius":0.5})");
        CHECK(b.kind == ConvexBody::Kind::smooth);
        CHECK(b.point_at(0.0).x == doctest::Approx(0.6).epsilon(1e-15));
        CHECK(b.point_at(0.0).y == doctest::Approx(-0.2).epsilon(1e-15));
    }
    SUBCASE("trig") {
        ConvexBody b = body_from_json_text(
            R"({"kind":"trig","x_coeffs":[0,1.3,0],"y_coeffs":[0,0,0.8]})");
        CHECK(b.kind == ConvexBody::Kind::smooth);
        CHECK(b.point_at(0.0).x == doctest::Approx(1.3).epsilon(1e-15));
    }
    SUBCASE("malformed inputs raise BAD_INPUT") {
        for (const char* text :
             {"", "{", R"({"kind":"polygon"})", R"({"kind":"sphere"})",
              R"({"kind":"circle","center":[1],"chart_radius":0.5})",
              R"({"kind":"trig","x_coeffs":[],"y_coeffs":[]})",
              R"({"kind":"polygon","vertices":[[0,"a"]]})"}) {
            try {
                (void)body_from_json_text(text);
                CHECK_MESSAGE(false, text);
            } catch (const Error& e) {
                CHECK(e.code() == ErrorCode::bad_input);
            }
        }
    }
}

TEST_CASE("17-digit formatting round-trips") {
    for (double v : {0.1, 2.0 / 3.0, 7.3840068728826447, -1e-17, 123456.789}) {
        CHECK(std::stod(format_g17(v)) == v);
    }
}

TEST_CASE("MC result serialization is stable") {
    McResult r;
    r.estimate = 0.5493061443340549;
    r.std_error = 0.001953125;
    r.n = 1000000;
    r.seed = 42;
    CHECK(mc_result_to_json(r) ==
          "{\"estimate\": 0.54930614433405489, \"std_error\": 0.001953125, \"n\": 1000000, "
          "\"seed\": 42}");
}
