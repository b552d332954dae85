#pragma once

#include "qmorph/circuit.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace qmorph {

/// Uniform superposition represented as a set of distinct classical
/// bitstrings, each carrying implied amplitude 1/sqrt(|states|). Exact for
/// this gate alphabet: every gate permutes basis states (Reset merges them,
/// which is checked). States are kept sorted so results are canonical.
struct BasisEnsemble {
    uint32_t width = 0;
    std::vector<word_t> states;

    BasisEnsemble() = default;
    BasisEnsemble(uint32_t w, std::vector<word_t> s);

    std::size_t size() const { return states.size(); }

    bool operator==(const BasisEnsemble&) const = default;
};

/// Maps every state through every gate in order. Throws BranchCollision if
/// two distinct states merge (possible only through Reset). Validates the
/// circuit first; throws std::invalid_argument on structural issues.
BasisEnsemble run_ensemble(const Circuit& circuit, const BasisEnsemble& in);

/// Same, for a raw gate list over `width` qubits (no layout validation).
BasisEnsemble run_ensemble(uint32_t width, std::span<const Gate> gates,
                           const BasisEnsemble& in);

/// Sorted list of qubits referenced by the gates.
std::vector<uint32_t> touched_qubits(std::span<const Gate> gates);

/// Remaps the touched qubits onto [0, k). Returns the remapped gates and the
/// original index of each compact qubit. Used to run unit circuits
/// exhaustively on both backends without the full layout width.
std::pair<std::vector<Gate>, std::vector<uint32_t>> compact_gates(std::span<const Gate> gates);

} // namespace qmorph
