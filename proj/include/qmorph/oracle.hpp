#pragma once

#include "qmorph/image.hpp"

#include <cstdint>

namespace qmorph {

enum class HatMode : uint8_t { BottomHat, TopHat };

/// Segmentation threshold in [0, 2^q - 1].
struct Threshold {
    uint32_t value = 0;
};

/// Classical reference implementation of flat-structuring-element grayscale
/// morphology on a torus. The structuring element is the 4-neighbor cross
/// plus center; all indexing wraps mod 2^n. Deliberately naive loop-per-pixel
/// evaluation so it stands on its own as a brute-force oracle.
namespace oracle {

GrayImage dilate(const GrayImage& img);  // pointwise max over the cross
GrayImage erode(const GrayImage& img);   // pointwise min over the cross
GrayImage close(const GrayImage& img);   // erode(dilate(img))
GrayImage open(const GrayImage& img);    // dilate(erode(img))

/// BottomHat: close - img. TopHat: img - open. Values never go negative.
GrayImage hat(const GrayImage& img, HatMode mode);

/// Pixel = 1 iff hat(img, mode) >= t.
BinaryImage segment(const GrayImage& img, HatMode mode, Threshold t);

/// Toroidal translation: result(y, x) = img((y + dy) mod side, (x + dx) mod side).
GrayImage translate(const GrayImage& img, int dy, int dx);

/// Gray-level complement: pixel -> (2^q - 1) - pixel.
GrayImage invert(const GrayImage& img);

} // namespace oracle

} // namespace qmorph
