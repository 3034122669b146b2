#pragma once

#include <filesystem>
#include <iosfwd>

#include "rsur/grid.hpp"

namespace rsur::io {

// .rsf layout: one UTF-8 JSON header line terminated by '\n', then the raw
// little-endian float64 payload (Re Fx, Im Fx, Re Fy, Im Fy, Re Fz, Im Fz)
// per node, x index fastest. Header keys: format, version, space, counts,
// spacings, origins, layout, byte_order, dtype.

void write_field(std::ostream& out, const FieldGrid& field);
void write_field(const std::filesystem::path& path, const FieldGrid& field);

/// Throws FormatError on any malformed header or truncated payload.
FieldGrid read_field(std::istream& in);
FieldGrid read_field(const std::filesystem::path& path);

}  // namespace rsur::io
