#include "qmorph/dense.hpp"

#include "qmorph/errors.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qmorph {

namespace {

constexpr double kResetTol = 1e-12;

void check_cap(uint32_t width, uint32_t cap) {
    if (width > cap)
        throw WidthCapExceeded("dense backend: " + std::to_string(width) +
                               " qubits exceeds cap of " + std::to_string(cap));
}

} // namespace

DenseState DenseState::basis_state(uint32_t width, word_t bits, uint32_t cap) {
    check_cap(width, cap);
    DenseState st;
    st.width = width;
    st.amps.assign(std::size_t{1} << width, {0.0, 0.0});
    st.amps[static_cast<std::size_t>(bits)] = {1.0, 0.0};
    return st;
}

DenseState DenseState::from_ensemble(const BasisEnsemble& in, uint32_t cap) {
    check_cap(in.width, cap);
    DenseState st;
    st.width = in.width;
    st.amps.assign(std::size_t{1} << in.width, {0.0, 0.0});
    const double amp = 1.0 / std::sqrt(static_cast<double>(in.states.size()));
    for (word_t s : in.states) st.amps[static_cast<std::size_t>(s)] = {amp, 0.0};
    return st;
}

double DenseState::norm_squared() const {
    double total = 0.0;
    for (const auto& a : amps) total += std::norm(a);
    return total;
}

DenseState run_dense(uint32_t width, std::span<const Gate> gates, const DenseState& in) {
    if (width != in.width) throw std::invalid_argument("run_dense: width mismatch");
    check_cap(width, kDenseWidthCap);
    DenseState st = in;
    const std::size_t dim = st.amps.size();
    for (const Gate& g : gates) {
        if (g.kind == GateKind::Reset) {
            const word_t mask = bit_mask(g.a);
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & static_cast<std::size_t>(mask)) continue;
                const std::size_t j = i | static_cast<std::size_t>(mask);
                const bool lo = std::abs(st.amps[i]) > kResetTol;
                const bool hi = std::abs(st.amps[j]) > kResetTol;
                if (lo && hi)
                    throw ResetCollision("reset on qubit " + std::to_string(g.a) +
                                         " hit a superposed branch");
                st.amps[i] += st.amps[j];
                st.amps[j] = {0.0, 0.0};
            }
            continue;
        }
        // Permutation gate: all alphabet gates are involutions, so applying
        // pairwise swaps over i < pi(i) is exact.
        for (std::size_t i = 0; i < dim; ++i) {
            const word_t mapped = apply_gate_classical(g, static_cast<word_t>(i));
            const std::size_t j = static_cast<std::size_t>(mapped);
            if (j > i) std::swap(st.amps[i], st.amps[j]);
        }
    }
    return st;
}

DenseState run_dense(const Circuit& circuit, const DenseState& in) {
    auto issues = validate(circuit);
    if (!issues.empty())
        throw std::invalid_argument("run_dense: circuit failed validation (" +
                                    std::to_string(issues.size()) + " issues)");
    return run_dense(circuit.layout.total_qubits(), circuit.gates, in);
}

BasisEnsemble ensemble_from_dense(const DenseState& state, double tol) {
    std::vector<word_t> states;
    for (std::size_t i = 0; i < state.amps.size(); ++i)
        if (std::abs(state.amps[i]) > tol) states.push_back(static_cast<word_t>(i));
    return BasisEnsemble(state.width, std::move(states));
}

} // namespace qmorph
