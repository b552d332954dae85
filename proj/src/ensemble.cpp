#include "qmorph/ensemble.hpp"

#include "qmorph/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace qmorph {

BasisEnsemble::BasisEnsemble(uint32_t w, std::vector<word_t> s) : width(w), states(std::move(s)) {
    std::sort(states.begin(), states.end());
    if (std::adjacent_find(states.begin(), states.end()) != states.end())
        throw std::invalid_argument("ensemble states must be distinct");
    if (w > 128) throw std::invalid_argument("ensemble width exceeds 128 qubits");
    for (word_t st : states)
        if (w < 128 && (st >> w) != 0)
            throw std::invalid_argument("ensemble state exceeds width");
}

namespace {

// Duplicates can appear only after Reset gates, so the merge check runs once
// per reset layer instead of once per gate.
void check_collisions(std::vector<word_t>& states) {
    std::sort(states.begin(), states.end());
    if (std::adjacent_find(states.begin(), states.end()) != states.end())
        throw BranchCollision("two ensemble branches merged after a reset layer");
}

} // namespace

BasisEnsemble run_ensemble(uint32_t width, std::span<const Gate> gates, const BasisEnsemble& in) {
    if (width != in.width) throw std::invalid_argument("run_ensemble: width mismatch");
    std::vector<word_t> states = in.states;
    bool pending_reset_check = false;
    for (const Gate& g : gates) {
        if (pending_reset_check && g.kind != GateKind::Reset) {
            check_collisions(states);
            pending_reset_check = false;
        }
        for (word_t& st : states) st = apply_gate_classical(g, st);
        if (g.kind == GateKind::Reset) pending_reset_check = true;
    }
    check_collisions(states); // also canonicalizes
    BasisEnsemble out;
    out.width = width;
    out.states = std::move(states);
    return out;
}

BasisEnsemble run_ensemble(const Circuit& circuit, const BasisEnsemble& in) {
    auto issues = validate(circuit);
    if (!issues.empty())
        throw std::invalid_argument("run_ensemble: circuit failed validation (" +
                                    std::to_string(issues.size()) + " issues)");
    return run_ensemble(circuit.layout.total_qubits(), circuit.gates, in);
}

std::vector<uint32_t> touched_qubits(std::span<const Gate> gates) {
    std::vector<uint32_t> qs;
    for (const Gate& g : gates)
        g.for_each_qubit([&](uint32_t qb) { qs.push_back(qb); });
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    return qs;
}

std::pair<std::vector<Gate>, std::vector<uint32_t>> compact_gates(std::span<const Gate> gates) {
    std::vector<uint32_t> order = touched_qubits(gates);
    std::unordered_map<uint32_t, uint32_t> to_compact;
    for (uint32_t i = 0; i < order.size(); ++i) to_compact[order[i]] = i;
    std::vector<Gate> out(gates.begin(), gates.end());
    for (Gate& g : out) {
        g.a = to_compact[g.a];
        if (g.kind == GateKind::ControlledNot || g.kind == GateKind::Toffoli ||
            g.kind == GateKind::ControlledSwap)
            g.b = to_compact[g.b];
        if (g.kind == GateKind::Toffoli || g.kind == GateKind::ControlledSwap)
            g.c = to_compact[g.c];
        for (ControlBit& cb : g.controls) cb.qubit = to_compact[cb.qubit];
    }
    return {std::move(out), std::move(order)};
}

} // namespace qmorph
