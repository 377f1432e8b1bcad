#include "croftonlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace croftonlab {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::bad_input, std::string(what) + ": malformed JSON");
    return j;
}

std::vector<double> number_list(const json& j, const char* field) {
    if (!j.is_array()) fail(ErrorCode::bad_input, std::string(field) + " must be an array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number()) fail(ErrorCode::bad_input, std::string(field) + " must hold numbers");
        out.push_back(v.get<double>());
    }
    return out;
}

ConvexBody body_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        fail(ErrorCode::bad_input, "body: missing \"kind\"");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "polygon") {
        if (!j.contains("vertices") || !j["vertices"].is_array())
            fail(ErrorCode::bad_input, "polygon body: missing \"vertices\"");
        std::vector<ChartPoint> verts;
        for (const auto& v : j["vertices"]) {
            const auto pair = number_list(v, "vertex");
            if (pair.size() != 2) fail(ErrorCode::bad_input, "vertex must be [x, y]");
            verts.push_back({pair[0], pair[1]});
        }
        return ConvexBody::polygon(std::move(verts));
    }
    if (kind == "circle") {
        if (!j.contains("center") || !j.contains("chart_radius"))
            fail(ErrorCode::bad_input, "circle body: needs \"center\" and \"chart_radius\"");
        const auto c = number_list(j["center"], "center");
        if (c.size() != 2 || !j["chart_radius"].is_number())
            fail(ErrorCode::bad_input, "circle body: malformed fields");
        return ConvexBody::circle({c[0], c[1]}, j["chart_radius"].get<double>());
    }
    if (kind == "trig") {
        if (!j.contains("x_coeffs") || !j.contains("y_coeffs"))
            fail(ErrorCode::bad_input, "trig body: needs \"x_coeffs\" and \"y_coeffs\"");
        TrigPoly x, y;
        x.coeffs = number_list(j["x_coeffs"], "x_coeffs");
        y.coeffs = number_list(j["y_coeffs"], "y_coeffs");
        if (x.coeffs.empty() || y.coeffs.empty())
            fail(ErrorCode::bad_input, "trig body: empty coefficient list");
        return ConvexBody::smooth(std::move(x), std::move(y));
    }
    fail(ErrorCode::bad_input, "body: unknown kind \"" + kind + "\"");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::bad_input, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

ConvexBody body_from_json_text(const std::string& text) {
    return body_from_json(parse_json(text, "body"));
}

ConvexBody load_body_file(const std::string& path) {
    return body_from_json(parse_json(read_file(path), path.c_str()));
}

ConvexBody load_domain_file(const std::string& path) {
    const json j = parse_json(read_file(path), path.c_str());
    if (j.contains("role") &&
        (!j["role"].is_string() || j["role"].get<std::string>() != "hilbert_domain"))
        fail(ErrorCode::bad_input, path + ": role must be \"hilbert_domain\"");
    return body_from_json(j);
}

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string mc_result_to_json(const McResult& result) {
    std::string out = "{\"estimate\": " + format_g17(result.estimate);
    out += ", \"std_error\": " + format_g17(result.std_error);
    out += ", \"n\": " + std::to_string(result.n);
    out += ", \"seed\": " + std::to_string(result.seed);
    out += "}";
    return out;
}

} // namespace croftonlab
