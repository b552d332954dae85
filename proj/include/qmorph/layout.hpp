#pragma once

#include "qmorph/bits.hpp"

#include <array>
#include <cstdint>
#include <string_view>

namespace qmorph {

/// Named registers of the segmentation layout, in qubit order.
enum class Reg : uint8_t {
    PosY,   // n bits, row index
    PosX,   // n bits, column index
    CMain,  // q bits, working gray value
    DUp,    // q bits, neighbor at (Y+1, X)
    DDown,  // q bits, neighbor at (Y-1, X)
    DLeft,  // q bits, neighbor at (Y, X+1)
    DRight, // q bits, neighbor at (Y, X-1)
    CCopy,  // q bits, preserved original gray value
    Thr,    // q bits, threshold
    AncCmp, // 3 bits, comparator work space
    YCmp,   // 1 bit, comparator output
    AncSub, // 2 bits, subtractor borrow chain
};

inline constexpr std::array<Reg, 12> kAllRegs = {
    Reg::PosY, Reg::PosX,  Reg::CMain, Reg::DUp,    Reg::DDown, Reg::DLeft,
    Reg::DRight, Reg::CCopy, Reg::Thr,   Reg::AncCmp, Reg::YCmp,  Reg::AncSub,
};

std::string_view reg_name(Reg r);
Reg reg_from_name(std::string_view name); // throws std::invalid_argument

struct QubitRange {
    uint32_t offset = 0;
    uint32_t size = 0;

    bool operator==(const QubitRange&) const = default;
};

/// Fixed qubit map for a 2^n x 2^n image with q gray bits. Registers tile
/// [0, 2n + 7q + 6) in declaration order. Within a register, bit k is the
/// coefficient of 2^k.
class RegisterLayout {
public:
    RegisterLayout(uint32_t n, uint32_t q); // throws std::invalid_argument

    uint32_t n() const { return n_; }
    uint32_t q() const { return q_; }
    uint32_t side() const { return 1u << n_; }
    uint32_t max_gray() const { return (1u << q_) - 1; }
    uint32_t total_qubits() const { return 2 * n_ + 7 * q_ + 6; }

    QubitRange range(Reg r) const;
    uint32_t bit(Reg r, uint32_t k) const; // throws std::out_of_range

    uint32_t read(word_t w, Reg r) const;
    word_t write(word_t w, Reg r, uint32_t value) const;

    bool operator==(const RegisterLayout& other) const {
        return n_ == other.n_ && q_ == other.q_;
    }

private:
    uint32_t n_;
    uint32_t q_;
};

} // namespace qmorph
