#include "qmorph/oracle.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace qmorph::oracle {

namespace {

// Cross structuring element: center plus the four axis neighbors.
constexpr std::array<std::pair<int, int>, 5> kCross = {{{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}}};

uint32_t wrap(int i, uint32_t side) {
    const int m = static_cast<int>(side);
    return static_cast<uint32_t>(((i % m) + m) % m);
}

} // namespace

GrayImage dilate(const GrayImage& img) {
    const uint32_t side = img.side();
    GrayImage out(img.n(), img.q());
    for (uint32_t y = 0; y < side; ++y)
        for (uint32_t x = 0; x < side; ++x) {
            uint32_t best = 0;
            for (auto [dy, dx] : kCross)
                best = std::max(best, img.at(wrap(static_cast<int>(y) - dy, side),
                                             wrap(static_cast<int>(x) - dx, side)));
            out.set(y, x, best);
        }
    return out;
}

GrayImage erode(const GrayImage& img) {
    const uint32_t side = img.side();
    GrayImage out(img.n(), img.q());
    for (uint32_t y = 0; y < side; ++y)
        for (uint32_t x = 0; x < side; ++x) {
            uint32_t best = img.max_gray();
            for (auto [dy, dx] : kCross)
                best = std::min(best, img.at(wrap(static_cast<int>(y) + dy, side),
                                             wrap(static_cast<int>(x) + dx, side)));
            out.set(y, x, best);
        }
    return out;
}

GrayImage close(const GrayImage& img) { return erode(dilate(img)); }

GrayImage open(const GrayImage& img) { return dilate(erode(img)); }

GrayImage hat(const GrayImage& img, HatMode mode) {
    const GrayImage filtered = (mode == HatMode::BottomHat) ? close(img) : open(img);
    GrayImage out(img.n(), img.q());
    const uint32_t side = img.side();
    for (uint32_t y = 0; y < side; ++y)
        for (uint32_t x = 0; x < side; ++x) {
            // Closing is extensive and opening anti-extensive, so neither
            // difference can underflow.
            const uint32_t v = (mode == HatMode::BottomHat) ? filtered.at(y, x) - img.at(y, x)
                                                            : img.at(y, x) - filtered.at(y, x);
            out.set(y, x, v);
        }
    return out;
}

BinaryImage segment(const GrayImage& img, HatMode mode, Threshold t) {
    if (t.value > img.max_gray()) throw std::invalid_argument("threshold exceeds 2^q-1");
    const GrayImage h = hat(img, mode);
    BinaryImage out(img.n());
    const uint32_t side = img.side();
    for (uint32_t y = 0; y < side; ++y)
        for (uint32_t x = 0; x < side; ++x) out.set(y, x, h.at(y, x) >= t.value ? 1 : 0);
    return out;
}

GrayImage translate(const GrayImage& img, int dy, int dx) {
    const uint32_t side = img.side();
    GrayImage out(img.n(), img.q());
    for (uint32_t y = 0; y < side; ++y)
        for (uint32_t x = 0; x < side; ++x)
            out.set(y, x, img.at(wrap(static_cast<int>(y) + dy, side),
                                 wrap(static_cast<int>(x) + dx, side)));
    return out;
}

GrayImage invert(const GrayImage& img) {
    GrayImage out(img.n(), img.q());
    const uint32_t side = img.side();
    for (uint32_t y = 0; y < side; ++y)
        for (uint32_t x = 0; x < side; ++x) out.set(y, x, img.max_gray() - img.at(y, x));
    return out;
}

} // namespace qmorph::oracle
