#pragma once

#include "qmorph/builders.hpp"
#include "qmorph/histogram.hpp"
#include "qmorph/neqr.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qmorph {

enum class Backend : uint8_t { Ensemble, Dense };

/// Measurement order for segmentation outputs: result bit first, then Y most
/// significant bit first, then X.
std::vector<uint32_t> segmentation_measured_qubits(const RegisterLayout& layout, Reg result_reg);

struct SegmentationRun {
    RegisterLayout layout;
    Circuit circuit;                // hat transform + binarization
    Reg result_register;            // where the binary answer bit lives
    std::vector<uint32_t> measured; // label order of histogram outcomes
    BinaryImage image;
    Histogram histogram;
};

/// Encodes the image, builds the pipeline, runs it on the selected backend,
/// decodes the binary image and produces exact + sampled histograms.
/// Deterministic given (img, mode, t, backend, shots, seed).
SegmentationRun run_segmentation(const GrayImage& img, HatMode mode, Threshold t,
                                 Backend backend, uint64_t shots, uint64_t seed);

HatMode hat_mode_from_name(const std::string& name); // "bottomhat" | "tophat"
std::string hat_mode_name(HatMode mode);

} // namespace qmorph
