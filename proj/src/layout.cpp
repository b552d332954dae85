#include "qmorph/layout.hpp"

#include <stdexcept>
#include <string>

namespace qmorph {

std::string_view reg_name(Reg r) {
    switch (r) {
    case Reg::PosY: return "pos_y";
    case Reg::PosX: return "pos_x";
    case Reg::CMain: return "c_main";
    case Reg::DUp: return "d_up";
    case Reg::DDown: return "d_down";
    case Reg::DLeft: return "d_left";
    case Reg::DRight: return "d_right";
    case Reg::CCopy: return "c_copy";
    case Reg::Thr: return "thr";
    case Reg::AncCmp: return "anc_cmp";
    case Reg::YCmp: return "y_cmp";
    case Reg::AncSub: return "anc_sub";
    }
    return "?";
}

Reg reg_from_name(std::string_view name) {
    for (Reg r : kAllRegs)
        if (reg_name(r) == name) return r;
    throw std::invalid_argument("unknown register name: " + std::string(name));
}

RegisterLayout::RegisterLayout(uint32_t n, uint32_t q) : n_(n), q_(q) {
    if (n < 1) throw std::invalid_argument("layout requires n >= 1");
    if (q < 1) throw std::invalid_argument("layout requires q >= 1");
    if (2 * n + 7 * q + 6 > 128)
        throw std::invalid_argument("layout exceeds 128 qubits");
}

QubitRange RegisterLayout::range(Reg r) const {
    uint32_t off = 0;
    auto sz = [&](Reg target) -> uint32_t {
        switch (target) {
        case Reg::PosY:
        case Reg::PosX: return n_;
        case Reg::AncCmp: return 3;
        case Reg::YCmp: return 1;
        case Reg::AncSub: return 2;
        default: return q_;
        }
    };
    for (Reg cur : kAllRegs) {
        if (cur == r) return {off, sz(cur)};
        off += sz(cur);
    }
    return {off, 0};
}

uint32_t RegisterLayout::bit(Reg r, uint32_t k) const {
    QubitRange rg = range(r);
    if (k >= rg.size)
        throw std::out_of_range("bit index " + std::to_string(k) + " out of range for " +
                                std::string(reg_name(r)));
    return rg.offset + k;
}

uint32_t RegisterLayout::read(word_t w, Reg r) const {
    QubitRange rg = range(r);
    return static_cast<uint32_t>((w >> rg.offset) & ((word_t{1} << rg.size) - 1));
}

word_t RegisterLayout::write(word_t w, Reg r, uint32_t value) const {
    QubitRange rg = range(r);
    word_t mask = ((word_t{1} << rg.size) - 1) << rg.offset;
    return (w & ~mask) | ((word_t{value} << rg.offset) & mask);
}

} // namespace qmorph
