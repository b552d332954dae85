#pragma once

#include "qmorph/circuit.hpp"
#include "qmorph/ensemble.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qmorph {

/// Default width cap for the dense verifier: 2^24 amplitudes (256 MiB),
/// enough for the 22-qubit 2x2/q=2 full pipeline with headroom.
inline constexpr uint32_t kDenseWidthCap = 24;

/// Dense state-vector over all 2^width basis states. Verification backend;
/// everything this project runs keeps amplitudes real and equal, but the
/// type is general.
struct DenseState {
    uint32_t width = 0;
    std::vector<std::complex<double>> amps;

    static DenseState basis_state(uint32_t width, word_t bits,
                                  uint32_t cap = kDenseWidthCap);
    static DenseState from_ensemble(const BasisEnsemble& in,
                                    uint32_t cap = kDenseWidthCap);

    double norm_squared() const;
};

/// Applies the gates to the state. Permutation gates permute amplitudes.
/// Reset asserts the target is classically determined per amplitude pair
/// (within 1e-12) and throws ResetCollision otherwise.
DenseState run_dense(const Circuit& circuit, const DenseState& in);
DenseState run_dense(uint32_t width, std::span<const Gate> gates, const DenseState& in);

/// Nonzero-amplitude basis states of a dense state. Used to decode images
/// after a dense-backend run; amplitudes below tol are treated as zero.
BasisEnsemble ensemble_from_dense(const DenseState& state, double tol = 1e-9);

} // namespace qmorph
