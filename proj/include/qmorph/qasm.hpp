#pragma once

#include "qmorph/circuit.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qmorph {

/// OpenQASM 2.0 text for the circuit: x/cx/ccx/cswap/reset over one qubit
/// per layout qubit. MultiControlledNot gates are decomposed into ccx
/// ladders over an explicitly declared work register (cleaned up after every
/// ladder); negated controls become x-conjugation. When `measured` is
/// non-empty a classical register and measure statements are appended.
/// Output is deterministic.
std::string export_qasm(const Circuit& circuit, const std::vector<uint32_t>& measured = {});

/// Result of the minimal reader: a flat gate list over `qubits` wires.
struct ParsedQasm {
    uint32_t qubits = 0;
    std::vector<Gate> gates;
    std::vector<uint32_t> measured;
};

/// Reads back the subset of OpenQASM 2.0 that export_qasm emits (plus
/// whitespace/comments). Throws QasmParseError on anything else.
ParsedQasm parse_qasm(const std::string& text);

} // namespace qmorph
