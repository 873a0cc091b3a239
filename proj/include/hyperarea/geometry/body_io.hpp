#pragma once

// Plain-text body files.
//
//   # comment
//   body polytope          one of: sphere, cylinder, polygon, polytope
//   id cube
//   subdivision 8          polytope only (Steiner points per edge)
//   vertex 0 0 0           polytope and polygon, one point per line
//   ...
//   end
//
//   body sphere            keys: id, dimension, radius, center c1 .. cd
//   body cylinder          keys: id, n, radius, height
//
// Several bodies may follow each other. Numbers are written with 17
// significant digits, so a write/read cycle is lossless.

#include "hyperarea/geometry/body.hpp"

#include <filesystem>
#include <iosfwd>
#include <memory>

namespace hyperarea::geometry {

using BodyPtr = std::shared_ptr<const ConvexBody>;

/// Throws ConfigurationError (with the line number) on malformed input.
std::vector<BodyPtr> parse_bodies(std::istream& in);
std::vector<BodyPtr> read_body_file(const std::filesystem::path& path);
std::string format_body(const ConvexBody& body);

/// Built-in bodies: unit_sphere, sphere4 (unit sphere in R^4), cube,
/// tetrahedron, triangle, hexagon, cylinder_rho20, and random:<seed> /
/// cigar:<seed> / pancake:<seed> (24-point random polytopes).
BodyPtr named_body(std::string_view name, int subdivision = 8);

}  // namespace hyperarea::geometry
