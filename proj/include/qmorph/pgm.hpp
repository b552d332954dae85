#pragma once

#include "qmorph/image.hpp"

#include <string>

namespace qmorph {

/// Parses a P2 (ASCII) or P5 (binary) PGM. Requires a square power-of-two
/// side and maxval = 2^q - 1 with q <= 8; n and q are inferred. Throws
/// MalformedPgm, NonPowerOfTwoSide or UnsupportedMaxval.
GrayImage parse_pgm(const std::string& data);
GrayImage read_pgm(const std::string& path); // adds IoError on file trouble

/// P2 text with maxval 2^q - 1, one row per line.
std::string pgm_string(const GrayImage& img);
void write_pgm(const GrayImage& img, const std::string& path);

/// P1 text, one row per line.
std::string pbm_string(const BinaryImage& img);
void write_pbm(const BinaryImage& img, const std::string& path);

} // namespace qmorph
