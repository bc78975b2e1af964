#pragma once

#include "polyfacet/geometry.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace polyfacet {

/// cdd-style V-representation (.ext):
///
///     * optional comments
///     V-representation
///     begin
///     n d+1 real
///     1 c_1 ... c_d      (n lines)
///     end
///
/// Throws ParseError (with line number), RaysUnsupported, IoError.
VertexMatrix read_ext(const std::filesystem::path& path);
VertexMatrix parse_ext(std::istream& in);
void write_ext(const std::filesystem::path& path, const VertexMatrix& V);
void format_ext(std::ostream& out, const VertexMatrix& V);

/// cdd-style H-representation (.ine); each data row is "b_j -H_j1 ... -H_jd",
/// i.e. b - H x >= 0.
struct HalfSpaces {
    Matrix H;
    Vector b;
};

HalfSpaces read_ine(const std::filesystem::path& path);
HalfSpaces parse_ine(std::istream& in);
void write_ine(const std::filesystem::path& path, const HRepresentation& hrep);
void format_ine(std::ostream& out, const Matrix& H, const Vector& b);

/// Shortest representation that reads back to the same double (at most 17
/// significant digits); integral values print without exponent or point.
std::string format_number(double value);

}  // namespace polyfacet
