#pragma once

#include "qmorph/gate.hpp"
#include "qmorph/layout.hpp"

#include <cstddef>
#include <vector>

namespace qmorph {

/// An ordered gate sequence over a fixed register layout. Immutable once
/// built by the circuit builders; safe to share across threads.
struct Circuit {
    RegisterLayout layout;
    std::vector<Gate> gates;

    explicit Circuit(RegisterLayout l) : layout(l) {}

    void append(Gate g) { gates.push_back(std::move(g)); }
    void append(const Circuit& other); // throws LayoutMismatch

    bool operator==(const Circuit&) const = default;
};

enum class IssueKind : uint8_t { IndexOutOfRange, DuplicateQubit };

struct ValidationIssue {
    IssueKind kind;
    std::size_t gate_index;

    bool operator==(const ValidationIssue&) const = default;
};

/// Structural check: every gate's qubits in range and pairwise distinct.
/// Total on arbitrary gate sequences; reports, never throws.
std::vector<ValidationIssue> validate(const Circuit& circuit);

/// Gate sequence of a followed by b. Throws LayoutMismatch.
Circuit concat(const Circuit& a, const Circuit& b);

} // namespace qmorph
