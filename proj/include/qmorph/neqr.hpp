#pragma once

#include "qmorph/circuit.hpp"
#include "qmorph/ensemble.hpp"
#include "qmorph/image.hpp"

namespace qmorph {

struct EncodedImage {
    RegisterLayout layout;
    BasisEnsemble state;
};

/// Layout sized for the image: 2n + 7q + 6 qubits.
RegisterLayout layout_for(const GrayImage& img);

/// Uniform superposition over all positions with every gray register zero.
BasisEnsemble blank_ensemble(const RegisterLayout& layout);

/// One basis state per pixel: c_main = pixel value, (pos_y, pos_x) = (Y, X),
/// all other registers zero. |states| = 2^(2n).
EncodedImage encode_image(const GrayImage& img);

/// Reads a register back as an image. Requires the register value to be a
/// function of position across the ensemble; throws AmbiguousRegister when
/// two states share a position with different values.
GrayImage decode_register(const BasisEnsemble& state, const RegisterLayout& layout, Reg reg);

/// Bit 0 of the register, as a binary image. The segmentation pipelines
/// leave their answer in that bit.
BinaryImage decode_segmentation(const BasisEnsemble& state, const RegisterLayout& layout,
                                Reg reg);

/// Position-controlled writes that load `img` into `reg` in the current
/// position frame: one MultiControlledNot per set pixel bit, controls = the
/// full position pattern with matching polarities.
Circuit prep_register_writes(const RegisterLayout& layout, const GrayImage& img, Reg reg);

/// Gate-based preparation of the encoded image from the blank ensemble
/// (writes c_main). Equivalent to encode_image; uncosted in the complexity
/// accounting, like any state preparation.
Circuit prep_circuit(const GrayImage& img);

/// Captures the 4-neighborhood of `src_image` into the d_* registers:
/// after execution, at each position (Y, X)
///   d_up    = src(Y+1, X)    d_down  = src(Y-1, X)
///   d_left  = src(Y, X+1)    d_right = src(Y, X-1)
/// with toroidal indexing, while positions and every other register are left
/// unchanged (the cyclic-shift tour returns to net zero displacement).
///
/// `src_image` must be the classical contents of the gray register being
/// windowed. Neighbor values are written by position-controlled preparation
/// at shifted frames along the tour; a plain register-to-register copy
/// cannot capture a displaced pixel, because no permutation circuit can
/// place two independent pixels in one basis state.
/// Precondition: all four d_* registers are zero (DirtyAncilla otherwise,
/// observable as a corrupted decode).
Circuit build_image_set(const RegisterLayout& layout, const GrayImage& src_image);

} // namespace qmorph
