#include "qmorph/builders.hpp"

#include "qmorph/neqr.hpp"

#include <stdexcept>

namespace qmorph {

namespace {

void require_gray_pair(const RegisterLayout& layout, Reg a, Reg b) {
    if (a == b) throw std::invalid_argument("builder: registers must differ");
    if (layout.range(a).size != layout.range(b).size)
        throw std::invalid_argument("builder: register widths differ");
}

// The arithmetic units own these scratch registers; operands may not alias them.
void require_clear_of_scratch(Reg a, Reg b, std::initializer_list<Reg> scratch) {
    for (Reg s : scratch)
        if (a == s || b == s)
            throw std::invalid_argument("builder: operand register aliases scratch space");
}

} // namespace

Circuit build_comparator(const RegisterLayout& layout, Reg a, Reg b) {
    require_gray_pair(layout, a, b);
    require_clear_of_scratch(a, b, {Reg::AncCmp, Reg::YCmp});
    const uint32_t q = layout.range(a).size;
    const uint32_t t = layout.bit(Reg::AncCmp, 0);
    const uint32_t flag[2] = {layout.bit(Reg::AncCmp, 1), layout.bit(Reg::AncCmp, 2)};
    const uint32_t y = layout.bit(Reg::YCmp, 0);

    Circuit c(layout);
    c.append(Gate::x(flag[0])); // undecided
    for (uint32_t j = 0; j < q; ++j) {
        const uint32_t k = q - 1 - j;
        const uint32_t ak = layout.bit(a, k);
        const uint32_t bk = layout.bit(b, k);
        const uint32_t u = flag[j % 2];
        const uint32_t s = flag[(j + 1) % 2];
        c.append(Gate::cx(ak, t));
        c.append(Gate::cx(bk, t)); // t = a_k xor b_k
        // Undecided and bits differ and b_k = 1  <=>  this bit decides a < b.
        c.append(Gate::mcx({{u, false}, {t, false}, {bk, false}}, y));
        // Still undecided afterwards iff the bits matched.
        c.append(Gate::mcx({{u, false}, {t, true}}, s));
        c.append(Gate::reset(u));
        c.append(Gate::cx(bk, t));
        c.append(Gate::cx(ak, t));
    }
    c.append(Gate::reset(flag[q % 2]));
    return c;
}

Circuit build_sort_pair(const RegisterLayout& layout, Reg a, Reg b, SortOrder order) {
    require_gray_pair(layout, a, b);
    const uint32_t q = layout.range(a).size;
    const uint32_t y = layout.bit(Reg::YCmp, 0);

    Circuit c = build_comparator(layout, a, b);
    // Descending swaps on y = [a < b]; ascending swaps on the complement
    // (swapping an equal pair is a no-op, so no strictness care is needed).
    if (order == SortOrder::Ascending) c.append(Gate::x(y));
    for (uint32_t k = 0; k < q; ++k)
        c.append(Gate::cswap(y, layout.bit(a, k), layout.bit(b, k)));
    c.append(Gate::reset(y));
    return c;
}

Circuit build_subtractor(const RegisterLayout& layout, Reg a, Reg b) {
    require_gray_pair(layout, a, b);
    require_clear_of_scratch(a, b, {Reg::AncSub});
    const uint32_t q = layout.range(a).size;
    const uint32_t borrow[2] = {layout.bit(Reg::AncSub, 0), layout.bit(Reg::AncSub, 1)};

    Circuit c(layout);
    for (uint32_t k = 0; k < q; ++k) {
        const uint32_t ak = layout.bit(a, k);
        const uint32_t bk = layout.bit(b, k);
        const uint32_t r = borrow[k % 2];       // borrow in
        const uint32_t s = borrow[(k + 1) % 2]; // borrow out
        // Borrow out = majority(not a_k, b_k, r), built before a_k changes.
        c.append(Gate::mcx({{ak, true}, {bk, false}}, s));
        c.append(Gate::mcx({{ak, true}, {r, false}}, s));
        c.append(Gate::ccx(bk, r, s));
        // Difference bit.
        c.append(Gate::cx(bk, ak));
        c.append(Gate::cx(r, ak));
        c.append(Gate::reset(r));
    }
    c.append(Gate::reset(borrow[q % 2])); // final borrow discarded: wraps mod 2^q
    return c;
}

Circuit build_cyclic_shift(const RegisterLayout& layout, Axis axis, ShiftDir dir) {
    const Reg reg = (axis == Axis::Y) ? Reg::PosY : Reg::PosX;
    const uint32_t n = layout.range(reg).size;

    auto carry_gate = [&](uint32_t j) {
        // Bit j flips iff all lower bits are set.
        if (j == 1) return Gate::cx(layout.bit(reg, 0), layout.bit(reg, 1));
        if (j == 2)
            return Gate::ccx(layout.bit(reg, 0), layout.bit(reg, 1), layout.bit(reg, 2));
        std::vector<ControlBit> controls;
        for (uint32_t i = 0; i < j; ++i) controls.push_back({layout.bit(reg, i), false});
        return Gate::mcx(std::move(controls), layout.bit(reg, j));
    };

    Circuit c(layout);
    if (dir == ShiftDir::Plus) {
        for (uint32_t j = n; j-- > 1;) c.append(carry_gate(j));
        c.append(Gate::x(layout.bit(reg, 0)));
    } else {
        c.append(Gate::x(layout.bit(reg, 0)));
        for (uint32_t j = 1; j < n; ++j) c.append(carry_gate(j));
    }
    return c;
}

Circuit build_copy(const RegisterLayout& layout, Reg src, Reg dst) {
    require_gray_pair(layout, src, dst);
    Circuit c(layout);
    for (uint32_t k = 0; k < layout.range(src).size; ++k)
        c.append(Gate::cx(layout.bit(src, k), layout.bit(dst, k)));
    return c;
}

Circuit build_reset_register(const RegisterLayout& layout, Reg reg) {
    Circuit c(layout);
    for (uint32_t k = 0; k < layout.range(reg).size; ++k)
        c.append(Gate::reset(layout.bit(reg, k)));
    return c;
}

namespace {

// Chains compare-and-swap units so the running extremum is pushed through
// d_up, d_down, d_left, d_right, then moved back to the window center.
Circuit build_extremum(const RegisterLayout& layout, SortOrder order) {
    Circuit c(layout);
    c.append(build_sort_pair(layout, Reg::CMain, Reg::DUp, order));
    c.append(build_sort_pair(layout, Reg::DUp, Reg::DDown, order));
    c.append(build_sort_pair(layout, Reg::DDown, Reg::DLeft, order));
    c.append(build_sort_pair(layout, Reg::DLeft, Reg::DRight, order));
    c.append(build_reset_register(layout, Reg::CMain));
    c.append(build_reset_register(layout, Reg::DUp));
    c.append(build_reset_register(layout, Reg::DDown));
    c.append(build_reset_register(layout, Reg::DLeft));
    c.append(build_copy(layout, Reg::DRight, Reg::CMain));
    c.append(build_reset_register(layout, Reg::DRight));
    return c;
}

} // namespace

Circuit build_dilation(const RegisterLayout& layout) {
    return build_extremum(layout, SortOrder::Ascending);
}

Circuit build_erosion(const RegisterLayout& layout) {
    return build_extremum(layout, SortOrder::Descending);
}

Reg hat_result_register(HatMode mode) {
    return mode == HatMode::BottomHat ? Reg::CMain : Reg::CCopy;
}

Circuit build_hat(const RegisterLayout& layout, const GrayImage& img, HatMode mode) {
    Circuit c(layout);
    c.append(build_copy(layout, Reg::CMain, Reg::CCopy));
    c.append(build_image_set(layout, img));
    if (mode == HatMode::BottomHat) {
        c.append(build_dilation(layout));
        c.append(build_image_set(layout, oracle::dilate(img)));
        c.append(build_erosion(layout));
        // c_main = closing, c_copy = original: closing - original.
        c.append(build_subtractor(layout, Reg::CMain, Reg::CCopy));
    } else {
        c.append(build_erosion(layout));
        c.append(build_image_set(layout, oracle::erode(img)));
        c.append(build_dilation(layout));
        // c_copy = original, c_main = opening: original - opening.
        c.append(build_subtractor(layout, Reg::CCopy, Reg::CMain));
    }
    return c;
}

Circuit build_binarization(const RegisterLayout& layout, Threshold t, Reg result_reg) {
    if (t.value > layout.max_gray())
        throw std::invalid_argument("binarization: threshold exceeds 2^q-1");
    Circuit c(layout);
    for (uint32_t k = 0; k < layout.q(); ++k)
        if ((t.value >> k) & 1) c.append(Gate::x(layout.bit(Reg::Thr, k)));
    c.append(build_comparator(layout, result_reg, Reg::Thr)); // y = [result < T]
    const uint32_t y = layout.bit(Reg::YCmp, 0);
    const uint32_t c0 = layout.bit(result_reg, 0);
    c.append(Gate::reset(c0));
    c.append(Gate::cx(y, c0));
    c.append(Gate::x(c0)); // c0 = not y = [result >= T]
    c.append(Gate::reset(y));
    return c;
}

Circuit build_pipeline(const RegisterLayout& layout, const GrayImage& img, HatMode mode,
                       Threshold t) {
    Circuit c = build_hat(layout, img, mode);
    c.append(build_binarization(layout, t, hat_result_register(mode)));
    return c;
}

} // namespace qmorph
