#pragma once

// Binary P5 masks: set pixels are 0 (black) on 255.

#include <iosfwd>
#include <string>

#include "cantor/dimension.hpp"

namespace cantor {

void write_pgm(std::ostream& out, const Mask& mask);
void write_pgm(const std::string& path, const Mask& mask);

/// Any pixel below 128 counts as set. Throws Error{BadImageDims} on a
/// malformed file and Error{InvalidArgument} if it cannot be opened.
Mask read_pgm(std::istream& in);
Mask read_pgm(const std::string& path);

}  // namespace cantor
