#include "qmorph/neqr.hpp"

#include "qmorph/builders.hpp"
#include "qmorph/errors.hpp"

#include <optional>
#include <stdexcept>

namespace qmorph {

RegisterLayout layout_for(const GrayImage& img) { return {img.n(), img.q()}; }

BasisEnsemble blank_ensemble(const RegisterLayout& layout) {
    std::vector<word_t> states;
    states.reserve(std::size_t{1} << (2 * layout.n()));
    for (uint32_t y = 0; y < layout.side(); ++y)
        for (uint32_t x = 0; x < layout.side(); ++x) {
            word_t st = 0;
            st = layout.write(st, Reg::PosY, y);
            st = layout.write(st, Reg::PosX, x);
            states.push_back(st);
        }
    return BasisEnsemble(layout.total_qubits(), std::move(states));
}

EncodedImage encode_image(const GrayImage& img) {
    RegisterLayout layout = layout_for(img);
    std::vector<word_t> states;
    states.reserve(img.pixels().size());
    for (uint32_t y = 0; y < img.side(); ++y)
        for (uint32_t x = 0; x < img.side(); ++x) {
            word_t st = 0;
            st = layout.write(st, Reg::PosY, y);
            st = layout.write(st, Reg::PosX, x);
            st = layout.write(st, Reg::CMain, img.at(y, x));
            states.push_back(st);
        }
    return {layout, BasisEnsemble(layout.total_qubits(), std::move(states))};
}

GrayImage decode_register(const BasisEnsemble& state, const RegisterLayout& layout, Reg reg) {
    const uint32_t side = layout.side();
    std::vector<std::optional<uint32_t>> seen(std::size_t{side} * side);
    for (word_t st : state.states) {
        const uint32_t y = layout.read(st, Reg::PosY);
        const uint32_t x = layout.read(st, Reg::PosX);
        const uint32_t value = layout.read(st, reg);
        auto& slot = seen[std::size_t{y} * side + x];
        if (slot && *slot != value)
            throw AmbiguousRegister("register " + std::string(reg_name(reg)) +
                                    " is not a function of position at (" + std::to_string(y) +
                                    "," + std::to_string(x) + ")");
        slot = value;
    }
    GrayImage out(layout.n(), layout.range(reg).size);
    for (uint32_t y = 0; y < side; ++y)
        for (uint32_t x = 0; x < side; ++x) {
            const auto& slot = seen[std::size_t{y} * side + x];
            if (!slot)
                throw AmbiguousRegister("no ensemble state covers position (" +
                                        std::to_string(y) + "," + std::to_string(x) + ")");
            out.set(y, x, *slot);
        }
    return out;
}

BinaryImage decode_segmentation(const BasisEnsemble& state, const RegisterLayout& layout,
                                Reg reg) {
    const GrayImage full = decode_register(state, layout, reg);
    BinaryImage out(layout.n());
    for (uint32_t y = 0; y < layout.side(); ++y)
        for (uint32_t x = 0; x < layout.side(); ++x) out.set(y, x, full.at(y, x) & 1u);
    return out;
}

Circuit prep_register_writes(const RegisterLayout& layout, const GrayImage& img, Reg reg) {
    if (img.n() != layout.n() || img.q() > layout.range(reg).size)
        throw std::invalid_argument("prep_register_writes: image does not fit register");
    Circuit c(layout);
    for (uint32_t y = 0; y < img.side(); ++y)
        for (uint32_t x = 0; x < img.side(); ++x) {
            const uint32_t value = img.at(y, x);
            if (value == 0) continue;
            std::vector<ControlBit> controls;
            controls.reserve(2 * layout.n());
            for (uint32_t k = 0; k < layout.n(); ++k)
                controls.push_back({layout.bit(Reg::PosY, k), ((y >> k) & 1) == 0});
            for (uint32_t k = 0; k < layout.n(); ++k)
                controls.push_back({layout.bit(Reg::PosX, k), ((x >> k) & 1) == 0});
            for (uint32_t k = 0; k < img.q(); ++k)
                if ((value >> k) & 1) c.append(Gate::mcx(controls, layout.bit(reg, k)));
        }
    return c;
}

Circuit prep_circuit(const GrayImage& img) {
    return prep_register_writes(layout_for(img), img, Reg::CMain);
}

Circuit build_image_set(const RegisterLayout& layout, const GrayImage& src_image) {
    if (src_image.n() != layout.n() || src_image.q() != layout.q())
        throw std::invalid_argument("build_image_set: image does not match layout");
    Circuit c(layout);

    // Closed tour of net offsets. At offset (dy, dx) the frame writes
    // src(Y+dy, X+dx) into the station's register, so the stations are
    //   (+1, 0) -> d_up   (-1, 0) -> d_down   (0, +1) -> d_left
    //   (0, -1) -> d_right
    // and the final shift returns the net displacement to zero.
    auto shift = [&](Axis axis, ShiftDir dir) { c.append(build_cyclic_shift(layout, axis, dir)); };
    auto station = [&](Reg reg) { c.append(prep_register_writes(layout, src_image, reg)); };

    shift(Axis::Y, ShiftDir::Plus);
    station(Reg::DUp);
    shift(Axis::Y, ShiftDir::Minus);
    shift(Axis::Y, ShiftDir::Minus);
    station(Reg::DDown);
    shift(Axis::Y, ShiftDir::Plus);
    shift(Axis::X, ShiftDir::Plus);
    station(Reg::DLeft);
    shift(Axis::X, ShiftDir::Minus);
    shift(Axis::X, ShiftDir::Minus);
    station(Reg::DRight);
    shift(Axis::X, ShiftDir::Plus);
    return c;
}

} // namespace qmorph
