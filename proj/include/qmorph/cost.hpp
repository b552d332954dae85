#pragma once

#include "qmorph/circuit.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qmorph {

/// Per-kind gate counts plus the weighted quantum cost. Weights: NOT, CNOT
/// and Reset are 1; a Toffoli decomposes into 5 two-qubit gates; a
/// controlled swap into two CNOTs and a Toffoli (7); a MultiControlledNot
/// with k >= 3 controls into a ladder of 2k-3 Toffolis with reusable work
/// qubits (5(2k-3)); each negated control adds a NOT pair (+2).
struct CostReport {
    uint64_t not_gates = 0;
    uint64_t cnot_gates = 0;
    uint64_t toffoli_gates = 0;
    uint64_t mcnot_gates = 0;
    uint64_t cswap_gates = 0;
    uint64_t reset_gates = 0;
    uint64_t weighted_total = 0;

    uint64_t gate_total() const {
        return not_gates + cnot_gates + toffoli_gates + mcnot_gates + cswap_gates + reset_gates;
    }
};

uint64_t weighted_cost(const Gate& g);
CostReport count(const Circuit& circuit);
CostReport count(std::span<const Gate> gates);

/// Reference cost formulas for the same circuit families, evaluated at
/// (n, q). Reported side by side with measured costs; our constructions are
/// not gate-for-gate identical, so only the asymptotic class is expected to
/// match.
struct ReferenceCosts {
    uint64_t comparator;        // 18q - 13
    uint64_t subtractor;        // 27q - 43
    uint64_t cycle_shift;       // n^2
    uint64_t copy_op;           // q
    uint64_t sort_pair;         // 21q - 13 (qcs/qcl)
    uint64_t dilation_erosion;  // n^2 + 7q
    uint64_t binarization;      // 2q + 13
    uint64_t comparator_alt;    // 18n - 3 (comparator comparison row)
    std::string segmentation_complexity;      // O(n^2 + q)
    std::string histogram_rival_complexity;   // O(sqrt(2^(2n) t))
    std::string multilevel_rival_complexity;  // O(2^(2n) log 2^(2n))
};

ReferenceCosts reference_costs(uint32_t n, uint32_t q);

struct ScalingPoint {
    double x = 0.0;
    double cost = 0.0;
};

/// Least-squares fit cost = slope * x + intercept with the largest absolute
/// residual. A construction that is exactly affine in the swept parameter
/// fits with zero residual.
struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_abs_residual = 0.0;
};

LinearFit fit_linear(std::span<const ScalingPoint> points);

} // namespace qmorph
