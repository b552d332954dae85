#include "qmorph/cost.hpp"

#include <cmath>
#include <stdexcept>

namespace qmorph {

uint64_t weighted_cost(const Gate& g) {
    switch (g.kind) {
    case GateKind::Not:
    case GateKind::ControlledNot:
    case GateKind::Reset:
        return 1;
    case GateKind::Toffoli:
        return 5;
    case GateKind::ControlledSwap:
        return 7;
    case GateKind::MultiControlledNot: {
        const uint64_t k = g.controls.size();
        uint64_t base = (k <= 1) ? 1 : 5 * (2 * k - 3);
        for (const ControlBit& cb : g.controls)
            if (cb.negated) base += 2;
        return base;
    }
    }
    return 0;
}

CostReport count(std::span<const Gate> gates) {
    CostReport r;
    for (const Gate& g : gates) {
        switch (g.kind) {
        case GateKind::Not: ++r.not_gates; break;
        case GateKind::ControlledNot: ++r.cnot_gates; break;
        case GateKind::Toffoli: ++r.toffoli_gates; break;
        case GateKind::MultiControlledNot: ++r.mcnot_gates; break;
        case GateKind::ControlledSwap: ++r.cswap_gates; break;
        case GateKind::Reset: ++r.reset_gates; break;
        }
        r.weighted_total += weighted_cost(g);
    }
    return r;
}

CostReport count(const Circuit& circuit) {
    return count(std::span<const Gate>(circuit.gates));
}

ReferenceCosts reference_costs(uint32_t n, uint32_t q) {
    if (n < 1 || q < 1) throw std::invalid_argument("reference_costs: n, q must be >= 1");
    ReferenceCosts rc;
    auto at_least_zero = [](int64_t v) { return v < 0 ? uint64_t{0} : static_cast<uint64_t>(v); };
    rc.comparator = at_least_zero(18 * int64_t{q} - 13);
    rc.subtractor = at_least_zero(27 * int64_t{q} - 43);
    rc.cycle_shift = uint64_t{n} * n;
    rc.copy_op = q;
    rc.sort_pair = at_least_zero(21 * int64_t{q} - 13);
    rc.dilation_erosion = uint64_t{n} * n + 7 * uint64_t{q};
    rc.binarization = 2 * uint64_t{q} + 13;
    rc.comparator_alt = at_least_zero(18 * int64_t{n} - 3);
    rc.segmentation_complexity = "O(n^2 + q)";
    rc.histogram_rival_complexity = "O(sqrt(2^(2n) t))";
    rc.multilevel_rival_complexity = "O(2^(2n) log 2^(2n))";
    return rc;
}

LinearFit fit_linear(std::span<const ScalingPoint> points) {
    if (points.size() < 2) throw std::invalid_argument("fit_linear: need at least 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(points.size());
    for (const auto& p : points) {
        sx += p.x;
        sy += p.cost;
        sxx += p.x * p.x;
        sxy += p.x * p.cost;
    }
    const double denom = m * sxx - sx * sx;
    if (std::abs(denom) < 1e-12) throw std::invalid_argument("fit_linear: degenerate sweep");
    LinearFit fit;
    fit.slope = (m * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / m;
    for (const auto& p : points) {
        const double r = std::abs(p.cost - (fit.slope * p.x + fit.intercept));
        fit.max_abs_residual = std::max(fit.max_abs_residual, r);
    }
    return fit;
}

} // namespace qmorph
