#include "qmorph/run.hpp"

#include "qmorph/dense.hpp"

#include <stdexcept>

namespace qmorph {

std::vector<uint32_t> segmentation_measured_qubits(const RegisterLayout& layout,
                                                   Reg result_reg) {
    std::vector<uint32_t> measured;
    measured.push_back(layout.bit(result_reg, 0));
    for (uint32_t k = layout.n(); k-- > 0;) measured.push_back(layout.bit(Reg::PosY, k));
    for (uint32_t k = layout.n(); k-- > 0;) measured.push_back(layout.bit(Reg::PosX, k));
    return measured;
}

SegmentationRun run_segmentation(const GrayImage& img, HatMode mode, Threshold t,
                                 Backend backend, uint64_t shots, uint64_t seed) {
    if (t.value > img.max_gray())
        throw std::invalid_argument("threshold " + std::to_string(t.value) +
                                    " exceeds image range");
    EncodedImage encoded = encode_image(img);
    const Reg result_reg = hat_result_register(mode);
    Circuit pipeline = build_pipeline(encoded.layout, img, mode, t);

    BasisEnsemble final_state;
    if (backend == Backend::Ensemble) {
        final_state = run_ensemble(pipeline, encoded.state);
    } else {
        DenseState dense = DenseState::from_ensemble(encoded.state);
        final_state = ensemble_from_dense(run_dense(pipeline, dense));
    }

    SegmentationRun run{encoded.layout,
                        pipeline,
                        result_reg,
                        segmentation_measured_qubits(encoded.layout, result_reg),
                        decode_segmentation(final_state, encoded.layout, result_reg),
                        {}};
    auto exact = exact_distribution(final_state, run.measured);
    run.histogram = sample(exact, shots, seed);
    return run;
}

HatMode hat_mode_from_name(const std::string& name) {
    if (name == "bottomhat") return HatMode::BottomHat;
    if (name == "tophat") return HatMode::TopHat;
    throw std::invalid_argument("unknown mode '" + name + "' (expected bottomhat or tophat)");
}

std::string hat_mode_name(HatMode mode) {
    return mode == HatMode::BottomHat ? "bottomhat" : "tophat";
}

} // namespace qmorph
