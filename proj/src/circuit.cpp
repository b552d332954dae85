#include "qmorph/circuit.hpp"

#include "qmorph/errors.hpp"

#include <algorithm>

namespace qmorph {

void Circuit::append(const Circuit& other) {
    if (!(layout == other.layout)) throw LayoutMismatch("append: layouts differ");
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
}

std::vector<ValidationIssue> validate(const Circuit& circuit) {
    std::vector<ValidationIssue> issues;
    const uint32_t width = circuit.layout.total_qubits();
    std::vector<uint32_t> refs;
    for (std::size_t i = 0; i < circuit.gates.size(); ++i) {
        refs.clear();
        circuit.gates[i].for_each_qubit([&](uint32_t qb) { refs.push_back(qb); });
        bool out_of_range = false;
        for (uint32_t qb : refs)
            if (qb >= width) out_of_range = true;
        if (out_of_range) issues.push_back({IssueKind::IndexOutOfRange, i});
        std::sort(refs.begin(), refs.end());
        if (std::adjacent_find(refs.begin(), refs.end()) != refs.end())
            issues.push_back({IssueKind::DuplicateQubit, i});
    }
    return issues;
}

Circuit concat(const Circuit& a, const Circuit& b) {
    if (!(a.layout == b.layout)) throw LayoutMismatch("concat: layouts differ");
    Circuit out = a;
    out.append(b);
    return out;
}

} // namespace qmorph
