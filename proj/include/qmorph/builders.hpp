#pragma once

#include "qmorph/circuit.hpp"
#include "qmorph/image.hpp"
#include "qmorph/oracle.hpp"

namespace qmorph {

enum class Axis : uint8_t { Y, X };
enum class ShiftDir : uint8_t { Plus, Minus };

/// Pair ordering produced by the compare-and-swap units.
///   Descending (qcs): a' >= b', minimum ends in b.
///   Ascending  (qcl): a' <= b', maximum ends in b.
enum class SortOrder : uint8_t { Descending, Ascending };

/// y_cmp <- [a < b]; a, b and anc_cmp are restored. Bitwise comparison from
/// the most significant bit down, using the three anc_cmp work qubits
/// (xor scratch plus an alternating undecided flag recycled via Reset).
Circuit build_comparator(const RegisterLayout& layout, Reg a, Reg b);

/// Orders the pair (a, b) per `order`; the multiset {a, b} is preserved and
/// y_cmp/anc_cmp end at zero.
Circuit build_sort_pair(const RegisterLayout& layout, Reg a, Reg b, SortOrder order);

/// a <- (a - b) mod 2^q; b restored; anc_sub restored to 00. Ripple borrow
/// from the least significant bit, borrow flags recycled via Reset. The
/// final borrow is discarded, so underflow wraps.
Circuit build_subtractor(const RegisterLayout& layout, Reg a, Reg b);

/// Increments/decrements the selected position register mod 2^n: a cascade
/// of MultiControlledNot gates from the widest control set down to a single
/// NOT.
Circuit build_cyclic_shift(const RegisterLayout& layout, Axis axis, ShiftDir dir);

/// dst <- src via exactly q ControlledNot gates. Requires dst = 0.
Circuit build_copy(const RegisterLayout& layout, Reg src, Reg dst);

/// Forces the register to zero with one Reset per bit. Valid only when the
/// register is classically determined per branch (the simulator checks).
Circuit build_reset_register(const RegisterLayout& layout, Reg reg);

/// c_main <- max(c_main, d_up, d_down, d_left, d_right) at every position;
/// all d_* registers and comparator ancillas end at zero. Requires the image
/// set to be captured first (see build_image_set).
Circuit build_dilation(const RegisterLayout& layout);

/// Same with min.
Circuit build_erosion(const RegisterLayout& layout);

/// Register holding the hat result: c_main for BottomHat (closing - image),
/// c_copy for TopHat (image - opening).
Reg hat_result_register(HatMode mode);

/// Full hat transform on a freshly encoded image: preserve the original in
/// c_copy, capture the image set, run the two morphology stages, and
/// subtract. `img` must be the image currently encoded in c_main; the
/// second-stage image set is prepared for the classically advanced image,
/// which the first stage also computes in-circuit (a mismatch shows up as a
/// wrong final answer).
Circuit build_hat(const RegisterLayout& layout, const GrayImage& img, HatMode mode);

/// Loads the threshold register, compares it against result_reg, and leaves
/// bit 0 of result_reg equal to [result >= T]. Higher result bits are left
/// as-is (deterministic, unmeasured).
Circuit build_binarization(const RegisterLayout& layout, Threshold t, Reg result_reg);

/// Hat transform followed by binarization. Measuring (bit 0 of the result
/// register, pos_y, pos_x) yields the binary segmentation.
Circuit build_pipeline(const RegisterLayout& layout, const GrayImage& img, HatMode mode,
                       Threshold t);

} // namespace qmorph
