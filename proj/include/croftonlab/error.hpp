#pragma once

#include <stdexcept>
#include <string>

namespace croftonlab {

enum class ErrorCode {
    bad_input,        // malformed file / argument
    domain,           // precondition violated (argument outside valid range)
    non_convex,
    not_ccw,
    outside_chart,
    irregular_curve,
    near_pole,        // curve passes too close to the polar-coordinate origin
    vertex,           // frame requested exactly at a polygon vertex
    nonconverged,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

} // namespace croftonlab
