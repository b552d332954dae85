#include "qmorph/builders.hpp"
#include "qmorph/errors.hpp"
#include "qmorph/histogram.hpp"
#include "qmorph/neqr.hpp"
#include "qmorph/oracle.hpp"

#include "test_util.hpp"

#include <doctest.h>

using namespace qmorph;

TEST_SUITE_BEGIN("neqr");

TEST_CASE("encoding the 2x2 q=8 example yields the four expected states") {
    GrayImage img(1, 8, {0, 100, 200, 255});
    EncodedImage enc = encode_image(img);
    REQUIRE(enc.state.size() == 4);
    for (word_t st : enc.state.states) {
        const uint32_t y = enc.layout.read(st, Reg::PosY);
        const uint32_t x = enc.layout.read(st, Reg::PosX);
        CHECK(enc.layout.read(st, Reg::CMain) == img.at(y, x));
        for (Reg r : {Reg::DUp, Reg::DDown, Reg::DLeft, Reg::DRight, Reg::CCopy, Reg::Thr,
                      Reg::AncCmp, Reg::YCmp, Reg::AncSub})
            CHECK(enc.layout.read(st, r) == 0);
    }
    // Spot-check the known bit patterns.
    CHECK(img.at(0, 1) == 0b01100100);
    CHECK(img.at(1, 0) == 0b11001000);
}

TEST_CASE("all-zero image encodes to distinct positions with zero gray") {
    GrayImage img(1, 3);
    EncodedImage enc = encode_image(img);
    CHECK(enc.state.size() == 4);
    for (word_t st : enc.state.states) CHECK(enc.layout.read(st, Reg::CMain) == 0);
}

TEST_CASE("encode then decode is the identity") {
    auto rng = testutil::make_rng(41);
    for (int i = 0; i < 100; ++i) {
        const uint32_t n = testutil::uniform(rng, 1, 3);
        const uint32_t q = testutil::uniform(rng, 1, 8);
        GrayImage img = testutil::random_image(rng, n, q);
        EncodedImage enc = encode_image(img);
        CHECK(decode_register(enc.state, enc.layout, Reg::CMain) == img);
        // Ancilla registers decode to zero right after encoding.
        CHECK(decode_register(enc.state, enc.layout, Reg::DUp) == GrayImage(n, q));
    }
}

TEST_CASE("decode rejects a register that is not a function of position") {
    RegisterLayout layout(1, 2);
    word_t a = 0, b = 0;
    b = layout.write(b, Reg::CMain, 3); // same position (0,0), different value
    b = layout.write(b, Reg::Thr, 1);   // keep the states distinct
    BasisEnsemble state(layout.total_qubits(), {a, b});
    CHECK_THROWS_AS(decode_register(state, layout, Reg::CMain), AmbiguousRegister);
}

TEST_CASE("prep circuit: zero image needs no gates") {
    GrayImage img(2, 3);
    CHECK(prep_circuit(img).gates.empty());
}

TEST_CASE("prep circuit: one set bit becomes one fully negative-controlled write") {
    GrayImage img(1, 2);
    img.set(0, 0, 1);
    Circuit c = prep_circuit(img);
    REQUIRE(c.gates.size() == 1);
    const Gate& g = c.gates[0];
    CHECK(g.kind == GateKind::MultiControlledNot);
    CHECK(g.a == c.layout.bit(Reg::CMain, 0));
    REQUIRE(g.controls.size() == 2);
    for (const ControlBit& cb : g.controls) CHECK(cb.negated);
}

TEST_CASE("prep circuit reproduces encode_image from the blank ensemble") {
    auto rng = testutil::make_rng(42);
    for (int i = 0; i < 50; ++i) {
        const uint32_t n = testutil::uniform(rng, 1, 2);
        const uint32_t q = testutil::uniform(rng, 1, 4);
        GrayImage img = testutil::random_image(rng, n, q);
        EncodedImage enc = encode_image(img);
        BasisEnsemble prepared = run_ensemble(prep_circuit(img), blank_ensemble(enc.layout));
        CHECK(prepared == enc.state);
    }
}

TEST_CASE("image set of a constant image fills all neighbours with the constant") {
    GrayImage img(2, 3);
    for (uint32_t y = 0; y < 4; ++y)
        for (uint32_t x = 0; x < 4; ++x) img.set(y, x, 6);
    EncodedImage enc = encode_image(img);
    BasisEnsemble out = run_ensemble(build_image_set(enc.layout, img), enc.state);
    for (Reg r : {Reg::DUp, Reg::DDown, Reg::DLeft, Reg::DRight})
        CHECK(decode_register(out, enc.layout, r) == img);
    CHECK(decode_register(out, enc.layout, Reg::CMain) == img);
}

TEST_CASE("image set of a one-pixel image places the wrapped neighbour") {
    GrayImage img(2, 3);
    img.set(0, 0, 7);
    EncodedImage enc = encode_image(img);
    BasisEnsemble out = run_ensemble(build_image_set(enc.layout, img), enc.state);
    const GrayImage up = decode_register(out, enc.layout, Reg::DUp);
    for (uint32_t y = 0; y < 4; ++y)
        for (uint32_t x = 0; x < 4; ++x)
            CHECK(up.at(y, x) == ((y == 3 && x == 0) ? 7u : 0u));
}

TEST_CASE("image set realizes the four toroidal translations") {
    auto rng = testutil::make_rng(43);
    for (int i = 0; i < 30; ++i) {
        const uint32_t n = testutil::uniform(rng, 1, 2);
        const uint32_t q = testutil::uniform(rng, 1, 4);
        GrayImage img = testutil::random_image(rng, n, q);
        EncodedImage enc = encode_image(img);
        BasisEnsemble out = run_ensemble(build_image_set(enc.layout, img), enc.state);
        CHECK(decode_register(out, enc.layout, Reg::DUp) == oracle::translate(img, 1, 0));
        CHECK(decode_register(out, enc.layout, Reg::DDown) == oracle::translate(img, -1, 0));
        CHECK(decode_register(out, enc.layout, Reg::DLeft) == oracle::translate(img, 0, 1));
        CHECK(decode_register(out, enc.layout, Reg::DRight) == oracle::translate(img, 0, -1));
        CHECK(decode_register(out, enc.layout, Reg::CMain) == img);
        CHECK(out.size() == enc.state.size());
    }
}

TEST_CASE("image set leaves the position distribution and quiet registers alone") {
    auto rng = testutil::make_rng(44);
    GrayImage img = testutil::random_image(rng, 2, 3);
    EncodedImage enc = encode_image(img);
    Circuit set = build_image_set(enc.layout, img);
    // No gate may touch copy/threshold/ancilla registers.
    for (const Gate& g : set.gates)
        g.for_each_qubit([&](uint32_t qb) {
            for (Reg r : {Reg::CCopy, Reg::Thr, Reg::AncCmp, Reg::YCmp, Reg::AncSub}) {
                const QubitRange rg = enc.layout.range(r);
                CHECK((qb < rg.offset || qb >= rg.offset + rg.size));
            }
        });
    std::vector<uint32_t> pos;
    for (uint32_t k = 0; k < 2; ++k) pos.push_back(enc.layout.bit(Reg::PosY, k));
    for (uint32_t k = 0; k < 2; ++k) pos.push_back(enc.layout.bit(Reg::PosX, k));
    auto before = exact_distribution(enc.state, pos);
    auto after = exact_distribution(run_ensemble(set, enc.state), pos);
    CHECK(before == after);
}

TEST_SUITE_END();
