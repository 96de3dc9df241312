#pragma once

// Plain-text serialization for PE2Complex.
//
// The format is line oriented and whitespace delimited:
//
//   pe2complex 1
//   vertex <id>
//   edge <id> <tail-vertex-id> <head-vertex-id> <label> <length>
//   face <id> <shape> <m> <side_0> ... <side_{m-1}> <angle_0> ... <angle_{m-1}>
//
// A side token is an edge id suffixed with '+' or '-' for the traversal
// direction; angles are rationals in units of pi. Ids must not contain
// whitespace. Writing is canonical (cells in stored order), so
// write(parse(write(c))) == write(c) byte for byte.

#include <filesystem>
#include <iosfwd>
#include <string>

#include "npcx/complex.hpp"

namespace npcx {

std::string write_complex(const PE2Complex& c);
PE2Complex parse_complex(const std::string& text);

void save_complex(const PE2Complex& c, const std::filesystem::path& path);
PE2Complex load_complex(const std::filesystem::path& path);

}  // namespace npcx
