#include "qmorph/pgm.hpp"

#include "qmorph/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace qmorph {

namespace {

// Tokenizer over the PGM header: whitespace-separated tokens, '#' comments
// to end of line.
struct HeaderScanner {
    const std::string& data;
    std::size_t pos = 0;

    void skip_filler() {
        while (pos < data.size()) {
            if (std::isspace(static_cast<unsigned char>(data[pos]))) {
                ++pos;
            } else if (data[pos] == '#') {
                while (pos < data.size() && data[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    std::string next_token() {
        skip_filler();
        std::size_t start = pos;
        while (pos < data.size() && !std::isspace(static_cast<unsigned char>(data[pos])) &&
               data[pos] != '#')
            ++pos;
        if (start == pos) throw MalformedPgm("unexpected end of header");
        return data.substr(start, pos - start);
    }

    uint32_t next_number() {
        const std::string tok = next_token();
        for (char ch : tok)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw MalformedPgm("expected number, got '" + tok + "'");
        return static_cast<uint32_t>(std::stoul(tok));
    }
};

bool infer_log2(uint32_t value, uint32_t& log) {
    for (uint32_t k = 0; k < 31; ++k)
        if (value == (1u << k)) {
            log = k;
            return true;
        }
    return false;
}

} // namespace

GrayImage parse_pgm(const std::string& data) {
    HeaderScanner sc{data};
    const std::string magic = sc.next_token();
    if (magic != "P2" && magic != "P5") throw MalformedPgm("not a P2/P5 PGM (magic '" + magic + "')");
    const uint32_t width = sc.next_number();
    const uint32_t height = sc.next_number();
    const uint32_t maxval = sc.next_number();

    if (width != height)
        throw NonPowerOfTwoSide("image must be square, got " + std::to_string(width) + "x" +
                                std::to_string(height));
    uint32_t n = 0;
    if (width == 0 || !infer_log2(width, n) || n < 1)
        throw NonPowerOfTwoSide("side " + std::to_string(width) +
                                " is not a power of two (>= 2)");
    uint32_t q = 0;
    if (maxval == 0 || !infer_log2(maxval + 1, q) || q < 1 || q > 8)
        throw UnsupportedMaxval("maxval " + std::to_string(maxval) +
                                " is not 2^q - 1 with q in [1, 8]");

    const std::size_t pixel_count = std::size_t{width} * height;
    std::vector<uint32_t> pixels;
    pixels.reserve(pixel_count);
    if (magic == "P2") {
        for (std::size_t i = 0; i < pixel_count; ++i) pixels.push_back(sc.next_number());
    } else {
        // P5 with maxval <= 255: one byte per pixel after a single
        // whitespace byte.
        std::size_t pos = sc.pos;
        if (pos >= data.size() || !std::isspace(static_cast<unsigned char>(data[pos])))
            throw MalformedPgm("missing whitespace before P5 raster");
        ++pos;
        if (data.size() - pos < pixel_count) throw MalformedPgm("truncated P5 raster");
        for (std::size_t i = 0; i < pixel_count; ++i)
            pixels.push_back(static_cast<unsigned char>(data[pos + i]));
    }
    for (uint32_t v : pixels)
        if (v > maxval) throw MalformedPgm("pixel value " + std::to_string(v) + " exceeds maxval");
    return GrayImage(n, q, std::move(pixels));
}

GrayImage read_pgm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pgm(buf.str());
}

std::string pgm_string(const GrayImage& img) {
    std::ostringstream out;
    out << "P2\n" << img.side() << ' ' << img.side() << '\n' << img.max_gray() << '\n';
    for (uint32_t y = 0; y < img.side(); ++y) {
        for (uint32_t x = 0; x < img.side(); ++x) {
            if (x) out << ' ';
            out << img.at(y, x);
        }
        out << '\n';
    }
    return out.str();
}

void write_pgm(const GrayImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << pgm_string(img);
    if (!out) throw IoError("write failed: " + path);
}

std::string pbm_string(const BinaryImage& img) {
    std::ostringstream out;
    out << "P1\n" << img.side() << ' ' << img.side() << '\n';
    for (uint32_t y = 0; y < img.side(); ++y) {
        for (uint32_t x = 0; x < img.side(); ++x) {
            if (x) out << ' ';
            out << static_cast<int>(img.at(y, x));
        }
        out << '\n';
    }
    return out.str();
}

void write_pbm(const BinaryImage& img, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << pbm_string(img);
    if (!out) throw IoError("write failed: " + path);
}

} // namespace qmorph
