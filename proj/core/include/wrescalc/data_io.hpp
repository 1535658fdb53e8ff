// Text round-trip for BoundaryData and GeometryData documents.
//
// Line-oriented `key = value` format: rationals as `p/q`, vectors as comma
// lists, matrices as semicolon-separated rows, `#` starts a comment.  A
// document declares `type = boundary` or `type = geometry` and `n = <dim>`
// before the payload keys.
#pragma once

#include "wrescalc/boundary.hpp"
#include "wrescalc/lichnerowicz.hpp"

#include <optional>
#include <string>

namespace wrescalc {

std::string write_boundary_data(const BoundaryData& bd);
std::string write_geometry_data(const GeometryData& g);

struct DataDocument {
    std::optional<BoundaryData> boundary;
    std::optional<GeometryData> geometry;
};

// Parses and validates; throws InvalidDataError on malformed input or
// constraint violations.
DataDocument parse_data_document(const std::string& text);

}  // namespace wrescalc
