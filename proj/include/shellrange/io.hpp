#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "shellrange/oracle.hpp"
#include "shellrange/ranges.hpp"

namespace shellrange {

using Json = nlohmann::json;

/// Inline "a11,a12;a21,a22" with complex literals (1, -2.5, 3i, -i, 1+2i, 1e-3-4i)
/// or a JSON document {"matrix": [[[re,im],[re,im]],[[re,im],[re,im]]]}.
/// Whitespace is ignored. Throws ParseError or NonFiniteEntry.
Mat2C parse_matrix(std::string_view text);

/// Extended reals: numbers, or the strings "inf" / "-inf".
Json ext_real_to_json(double v);
double ext_real_from_json(const Json& j);

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

/// Planar or spatial point in its model; the ideal point is written "inf".
Json point_to_json(const HPoint& p);
HPoint point_from_json(const Json& j, Model model);

/// Points (foci, vertex) are written in `model`; the document records it so
/// that reading restores BCK coordinates.
Json range_to_json(const RangeDescriptor& d, Model model = Model::BCK2);
RangeDescriptor range_from_json(const Json& j);

Json shell_to_json(const ShellDescriptor& d, Model model = Model::BCK3);
ShellDescriptor shell_from_json(const Json& j);

Json numerical_range_to_json(const NumericalRangeDescriptor& d);
NumericalRangeDescriptor numerical_range_from_json(const Json& j);

Json canonical_rep_to_json(const CanonicalRep& r);
Json classification_to_json(const Mat2C& a);

Json report_to_json(const Report& r);

Model model_from_string(std::string_view s);

}  // namespace shellrange
