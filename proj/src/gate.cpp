#include "qmorph/gate.hpp"

namespace qmorph {

word_t apply_gate_classical(const Gate& g, word_t bits) {
    switch (g.kind) {
    case GateKind::Not:
        return bits ^ bit_mask(g.a);
    case GateKind::ControlledNot:
        return test_bit(bits, g.a) ? bits ^ bit_mask(g.b) : bits;
    case GateKind::Toffoli:
        return (test_bit(bits, g.a) && test_bit(bits, g.b)) ? bits ^ bit_mask(g.c) : bits;
    case GateKind::MultiControlledNot: {
        for (const auto& cb : g.controls)
            if (test_bit(bits, cb.qubit) == cb.negated) return bits;
        return bits ^ bit_mask(g.a);
    }
    case GateKind::ControlledSwap: {
        if (!test_bit(bits, g.a)) return bits;
        if (test_bit(bits, g.b) == test_bit(bits, g.c)) return bits;
        return bits ^ (bit_mask(g.b) | bit_mask(g.c));
    }
    case GateKind::Reset:
        return bits & ~bit_mask(g.a);
    }
    return bits;
}

} // namespace qmorph
