#pragma once

#include <cstdint>
#include <vector>

namespace qmorph {

/// 2^n x 2^n grayscale image, pixel values in [0, 2^q - 1], row-major.
class GrayImage {
public:
    GrayImage(uint32_t n, uint32_t q); // all-zero image
    GrayImage(uint32_t n, uint32_t q, std::vector<uint32_t> pixels);

    uint32_t n() const { return n_; }
    uint32_t q() const { return q_; }
    uint32_t side() const { return 1u << n_; }
    uint32_t max_gray() const { return (1u << q_) - 1; }

    uint32_t at(uint32_t y, uint32_t x) const { return pixels_[y * side() + x]; }
    void set(uint32_t y, uint32_t x, uint32_t value);

    const std::vector<uint32_t>& pixels() const { return pixels_; }

    bool operator==(const GrayImage&) const = default;

private:
    uint32_t n_;
    uint32_t q_;
    std::vector<uint32_t> pixels_;
};

/// 2^n x 2^n image over {0,1}.
class BinaryImage {
public:
    explicit BinaryImage(uint32_t n);
    BinaryImage(uint32_t n, std::vector<uint8_t> pixels);

    uint32_t n() const { return n_; }
    uint32_t side() const { return 1u << n_; }

    uint8_t at(uint32_t y, uint32_t x) const { return pixels_[y * side() + x]; }
    void set(uint32_t y, uint32_t x, uint8_t value);

    const std::vector<uint8_t>& pixels() const { return pixels_; }

    bool operator==(const BinaryImage&) const = default;

private:
    uint32_t n_;
    std::vector<uint8_t> pixels_;
};

} // namespace qmorph
