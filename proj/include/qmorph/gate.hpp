#pragma once

#include "qmorph/bits.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace qmorph {

enum class GateKind : uint8_t {
    Not,
    ControlledNot,
    Toffoli,
    MultiControlledNot,
    ControlledSwap,
    Reset,
};

struct ControlBit {
    uint32_t qubit = 0;
    bool negated = false;

    bool operator==(const ControlBit&) const = default;
};

/// One reversible gate. Operand slots a/b/c are read per kind:
///   Not, Reset:          a = target
///   ControlledNot:       a = control, b = target
///   Toffoli:             a, b = controls, c = target
///   MultiControlledNot:  controls[], a = target
///   ControlledSwap:      a = control, b/c = swapped pair
struct Gate {
    GateKind kind = GateKind::Not;
    uint32_t a = 0;
    uint32_t b = 0;
    uint32_t c = 0;
    std::vector<ControlBit> controls;

    static Gate x(uint32_t target) { return {GateKind::Not, target, 0, 0, {}}; }
    static Gate cx(uint32_t control, uint32_t target) {
        return {GateKind::ControlledNot, control, target, 0, {}};
    }
    static Gate ccx(uint32_t control1, uint32_t control2, uint32_t target) {
        return {GateKind::Toffoli, control1, control2, target, {}};
    }
    static Gate mcx(std::vector<ControlBit> controls, uint32_t target) {
        return {GateKind::MultiControlledNot, target, 0, 0, std::move(controls)};
    }
    static Gate cswap(uint32_t control, uint32_t first, uint32_t second) {
        return {GateKind::ControlledSwap, control, first, second, {}};
    }
    static Gate reset(uint32_t target) { return {GateKind::Reset, target, 0, 0, {}}; }

    template <typename Fn> void for_each_qubit(Fn&& fn) const {
        switch (kind) {
        case GateKind::Not:
        case GateKind::Reset:
            fn(a);
            break;
        case GateKind::ControlledNot:
            fn(a);
            fn(b);
            break;
        case GateKind::Toffoli:
        case GateKind::ControlledSwap:
            fn(a);
            fn(b);
            fn(c);
            break;
        case GateKind::MultiControlledNot:
            for (const auto& cb : controls) fn(cb.qubit);
            fn(a);
            break;
        }
    }

    bool operator==(const Gate&) const = default;
};

/// Basis-state action. Every gate in the alphabet maps computational basis
/// states to basis states; Reset is the only non-bijective one.
word_t apply_gate_classical(const Gate& g, word_t bits);

} // namespace qmorph
