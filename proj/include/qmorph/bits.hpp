#pragma once

#include <cstdint>
#include <string>

namespace qmorph {

// Basis states are packed bit words, one bit per qubit (bit k = qubit k).
// 128 bits covers every layout this project constructs (2n + 7q + 6 <= 128).
using word_t = unsigned __int128;

inline constexpr word_t bit_mask(uint32_t qubit) { return word_t{1} << qubit; }

inline constexpr bool test_bit(word_t w, uint32_t qubit) {
    return ((w >> qubit) & 1) != 0;
}

inline constexpr word_t with_bit(word_t w, uint32_t qubit, bool value) {
    return value ? (w | bit_mask(qubit)) : (w & ~bit_mask(qubit));
}

// Qubit 0 printed leftmost.
inline std::string to_bit_string(word_t w, uint32_t width) {
    std::string s(width, '0');
    for (uint32_t i = 0; i < width; ++i)
        if (test_bit(w, i)) s[i] = '1';
    return s;
}

} // namespace qmorph
