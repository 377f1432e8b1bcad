#pragma once

#include <string>

#include "croftonlab/body.hpp"
#include "croftonlab/hilbert.hpp"

namespace croftonlab {

// Body schema: {"kind":"polygon","vertices":[[x,y],...]}
//            | {"kind":"circle","center":[x,y],"chart_radius":r}
//            | {"kind":"trig","x_coeffs":[a0,a1,b1,...],"y_coeffs":[...]}
// Coordinates are chart coordinates. Returns an unvalidated body.
ConvexBody body_from_json_text(const std::string& text);
ConvexBody load_body_file(const std::string& path);

// Domain files carry the same schema plus {"role":"hilbert_domain"}; a
// conflicting role is rejected.
ConvexBody load_domain_file(const std::string& path);

std::string mc_result_to_json(const McResult& result);

// 17 significant digits, round-trip safe
std::string format_g17(double v);

} // namespace croftonlab
