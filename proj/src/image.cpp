#include "qmorph/image.hpp"

#include <stdexcept>
#include <string>

namespace qmorph {

GrayImage::GrayImage(uint32_t n, uint32_t q) : n_(n), q_(q) {
    if (n < 1 || n > 16) throw std::invalid_argument("image n out of range");
    if (q < 1 || q > 16) throw std::invalid_argument("image q out of range");
    pixels_.assign(std::size_t{1} << (2 * n), 0);
}

GrayImage::GrayImage(uint32_t n, uint32_t q, std::vector<uint32_t> pixels) : GrayImage(n, q) {
    if (pixels.size() != pixels_.size())
        throw std::invalid_argument("pixel count does not match 2^n x 2^n grid");
    for (uint32_t v : pixels)
        if (v > max_gray())
            throw std::invalid_argument("pixel value " + std::to_string(v) + " exceeds 2^q-1");
    pixels_ = std::move(pixels);
}

void GrayImage::set(uint32_t y, uint32_t x, uint32_t value) {
    if (value > max_gray()) throw std::invalid_argument("pixel value exceeds 2^q-1");
    pixels_[y * side() + x] = value;
}

BinaryImage::BinaryImage(uint32_t n) : n_(n) {
    if (n < 1 || n > 16) throw std::invalid_argument("image n out of range");
    pixels_.assign(std::size_t{1} << (2 * n), 0);
}

BinaryImage::BinaryImage(uint32_t n, std::vector<uint8_t> pixels) : BinaryImage(n) {
    if (pixels.size() != pixels_.size())
        throw std::invalid_argument("pixel count does not match 2^n x 2^n grid");
    for (uint8_t v : pixels)
        if (v > 1) throw std::invalid_argument("binary pixel must be 0 or 1");
    pixels_ = std::move(pixels);
}

void BinaryImage::set(uint32_t y, uint32_t x, uint8_t value) {
    if (value > 1) throw std::invalid_argument("binary pixel must be 0 or 1");
    pixels_[y * side() + x] = value;
}

} // namespace qmorph
