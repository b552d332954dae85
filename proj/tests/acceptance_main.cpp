// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include "qmorph/cli.hpp"
#include "qmorph/cost.hpp"
#include "qmorph/dense.hpp"
#include "qmorph/histogram.hpp"
#include "qmorph/neqr.hpp"
#include "qmorph/oracle.hpp"
#include "qmorph/pgm.hpp"
#include "qmorph/run.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace qmorph;
namespace fs = std::filesystem;

namespace {

struct Check {
    int failures = 0;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            if (detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

uint32_t uniform(std::mt19937_64& rng, uint32_t lo, uint32_t hi) {
    return lo + static_cast<uint32_t>(rng() % (hi - lo + 1));
}

GrayImage random_image(std::mt19937_64& rng, uint32_t n, uint32_t q) {
    GrayImage img(n, q);
    for (uint32_t y = 0; y < img.side(); ++y)
        for (uint32_t x = 0; x < img.side(); ++x) img.set(y, x, uniform(rng, 0, img.max_gray()));
    return img;
}

bool pointwise_leq(const GrayImage& a, const GrayImage& b) {
    for (std::size_t i = 0; i < a.pixels().size(); ++i)
        if (a.pixels()[i] > b.pixels()[i]) return false;
    return true;
}

// --- criterion 1: oracle equivalence on 4x4, q=3 ---------------------------
void criterion_oracle_equivalence(Check& c) {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 200; ++i) {
        const GrayImage img = random_image(rng, 2, 3);
        const Threshold t{uniform(rng, 0, img.max_gray())};
        for (HatMode mode : {HatMode::BottomHat, HatMode::TopHat}) {
            const SegmentationRun run =
                run_segmentation(img, mode, t, Backend::Ensemble, 1, 1);
            c.require(run.image == oracle::segment(img, mode, t),
                      "mismatch on image " + std::to_string(i));
        }
    }
}

// --- criterion 2: scale-up to 8x8, q=4 --------------------------------------
void criterion_scale_up(Check& c) {
    std::mt19937_64 rng(202);
    for (int i = 0; i < 20; ++i) {
        const GrayImage img = random_image(rng, 3, 4);
        const Threshold t{uniform(rng, 0, img.max_gray())};
        for (HatMode mode : {HatMode::BottomHat, HatMode::TopHat}) {
            const SegmentationRun run =
                run_segmentation(img, mode, t, Backend::Ensemble, 1, 1);
            c.require(run.image == oracle::segment(img, mode, t),
                      "mismatch on image " + std::to_string(i));
        }
    }
}

// --- criterion 3: dense and ensemble backends agree -------------------------
void criterion_backend_agreement(Check& c) {
    // Full pipeline on a 2x2, q=2 image: 22-qubit layout fits the dense cap.
    std::mt19937_64 rng(303);
    const GrayImage img = random_image(rng, 1, 2);
    const Threshold t{uniform(rng, 0, img.max_gray())};
    for (HatMode mode : {HatMode::BottomHat, HatMode::TopHat}) {
        const EncodedImage enc = encode_image(img);
        const Circuit pipe = build_pipeline(enc.layout, img, mode, t);
        const auto measured =
            segmentation_measured_qubits(enc.layout, hat_result_register(mode));
        const auto from_ensemble =
            exact_distribution(run_ensemble(pipe, enc.state), measured);
        const auto from_dense =
            exact_distribution(run_dense(pipe, DenseState::from_ensemble(enc.state)), measured);
        c.require(from_ensemble.size() == from_dense.size(), "outcome sets differ");
        for (const auto& [label, p] : from_ensemble) {
            const auto it = from_dense.find(label);
            c.require(it != from_dense.end() && std::abs(it->second - p) <= 1e-12,
                      "probability differs at " + label);
        }
    }
    // Exhaustive basis agreement for the comparator and subtractor, q <= 3.
    for (uint32_t q = 1; q <= 3; ++q) {
        const RegisterLayout layout(1, q);
        for (int which = 0; which < 2; ++which) {
            const Circuit unit = which == 0
                                     ? build_comparator(layout, Reg::CMain, Reg::DUp)
                                     : build_subtractor(layout, Reg::CMain, Reg::DUp);
            const auto [gates, map] = compact_gates(unit.gates);
            const uint32_t width = static_cast<uint32_t>(map.size());
            for (word_t input = 0; input < (word_t{1} << width); ++input) {
                const BasisEnsemble in(width, {input});
                const word_t expected = run_ensemble(width, gates, in).states[0];
                const DenseState out =
                    run_dense(width, gates, DenseState::basis_state(width, input));
                const auto amp = out.amps[static_cast<std::size_t>(expected)];
                c.require(std::abs(amp - std::complex<double>{1.0, 0.0}) <= 1e-12,
                          "basis input diverged (q=" + std::to_string(q) + ")");
            }
        }
    }
}

// --- criterion 4: arithmetic truth tables -----------------------------------
void criterion_truth_tables(Check& c) {
    {
        const RegisterLayout layout(1, 3);
        const Circuit cmp = build_comparator(layout, Reg::CMain, Reg::DUp);
        const Circuit sub = build_subtractor(layout, Reg::CMain, Reg::DUp);
        for (uint32_t a = 0; a < 8; ++a)
            for (uint32_t b = 0; b < 8; ++b) {
                word_t w = layout.write(layout.write(0, Reg::CMain, a), Reg::DUp, b);
                const BasisEnsemble in(layout.total_qubits(), {w});
                const word_t cw = run_ensemble(cmp, in).states[0];
                c.require(layout.read(cw, Reg::YCmp) == (a < b ? 1u : 0u), "cmp truth");
                c.require(layout.read(cw, Reg::CMain) == a && layout.read(cw, Reg::DUp) == b,
                          "cmp restore");
                const word_t sw = run_ensemble(sub, in).states[0];
                c.require(layout.read(sw, Reg::CMain) == ((a - b) & 7u), "sub truth");
                c.require(layout.read(sw, Reg::DUp) == b, "sub restore");
            }
    }
    {
        const RegisterLayout layout(1, 8);
        const Circuit cmp = build_comparator(layout, Reg::CMain, Reg::DUp);
        const Circuit sub = build_subtractor(layout, Reg::CMain, Reg::DUp);
        std::mt19937_64 rng(404);
        for (int i = 0; i < 1000; ++i) {
            const uint32_t a = uniform(rng, 0, 255);
            const uint32_t b = uniform(rng, 0, 255);
            word_t w = layout.write(layout.write(0, Reg::CMain, a), Reg::DUp, b);
            const BasisEnsemble in(layout.total_qubits(), {w});
            const word_t cw = run_ensemble(cmp, in).states[0];
            c.require(layout.read(cw, Reg::YCmp) == (a < b ? 1u : 0u), "cmp truth q8");
            const word_t sw = run_ensemble(sub, in).states[0];
            c.require(layout.read(sw, Reg::CMain) == ((a - b) & 255u), "sub truth q8");
        }
    }
}

// --- criterion 5: morphology property suite ---------------------------------
void criterion_morphology_properties(Check& c) {
    std::mt19937_64 rng(505);
    auto pick = [&](int i) {
        if (i % 5 == 0) return random_image(rng, 1, 2);
        if (i % 5 == 1) return random_image(rng, 3, 4);
        return random_image(rng, 2, 3);
    };
    for (int i = 0; i < 1000; ++i) {
        const GrayImage img = pick(i);
        const GrayImage closed = oracle::close(img);
        const GrayImage opened = oracle::open(img);
        c.require(pointwise_leq(img, closed), "closing not extensive");
        c.require(pointwise_leq(opened, img), "opening not anti-extensive");
        c.require(oracle::close(closed) == closed, "closing not idempotent");
        c.require(oracle::open(opened) == opened, "opening not idempotent");
        c.require(oracle::dilate(img) == oracle::invert(oracle::erode(oracle::invert(img))),
                  "duality failed");
        const int dy = static_cast<int>(rng() % 5) - 2;
        const int dx = static_cast<int>(rng() % 5) - 2;
        c.require(oracle::translate(oracle::dilate(img), dy, dx) ==
                      oracle::dilate(oracle::translate(img, dy, dx)),
                  "translation equivariance failed");
        // Monotonicity against a pointwise-dominating image.
        GrayImage bigger = img;
        for (uint32_t y = 0; y < img.side(); ++y)
            for (uint32_t x = 0; x < img.side(); ++x)
                bigger.set(y, x, std::max(img.at(y, x), uniform(rng, 0, img.max_gray())));
        c.require(pointwise_leq(oracle::dilate(img), oracle::dilate(bigger)),
                  "dilation monotonicity failed");
        c.require(pointwise_leq(oracle::erode(img), oracle::erode(bigger)),
                  "erosion monotonicity failed");
    }
}

// --- criterion 6: cost accounting -------------------------------------------
void criterion_cost_accounting(Check& c) {
    for (uint32_t q = 1; q <= 8; ++q) {
        const RegisterLayout layout(1, q);
        c.require(count(build_copy(layout, Reg::CMain, Reg::CCopy)).weighted_total == q,
                  "copy cost != q at q=" + std::to_string(q));
    }
    struct Sweep {
        const char* name;
        std::function<Circuit(const RegisterLayout&)> build;
        const char* formula;
    };
    const std::vector<Sweep> sweeps = {
        {"comparator",
         [](const RegisterLayout& l) { return build_comparator(l, Reg::CMain, Reg::DUp); },
         "18q-13"},
        {"subtractor",
         [](const RegisterLayout& l) { return build_subtractor(l, Reg::CMain, Reg::DUp); },
         "27q-43"},
        {"qcs",
         [](const RegisterLayout& l) {
             return build_sort_pair(l, Reg::CMain, Reg::DUp, SortOrder::Descending);
         },
         "21q-13"},
        {"qcl",
         [](const RegisterLayout& l) {
             return build_sort_pair(l, Reg::CMain, Reg::DUp, SortOrder::Ascending);
         },
         "21q-13"},
        {"binarization",
         [](const RegisterLayout& l) {
             return build_binarization(l, Threshold{l.max_gray()}, Reg::CMain);
         },
         "2q+13"},
    };
    std::ostringstream table;
    for (const auto& sweep : sweeps) {
        std::vector<ScalingPoint> pts;
        for (uint32_t q = 2; q <= 8; ++q) {
            const RegisterLayout layout(1, q);
            pts.push_back({double(q),
                           double(count(sweep.build(layout)).weighted_total)});
        }
        const LinearFit fit = fit_linear(pts);
        c.require(fit.max_abs_residual <= 1e-9,
                  std::string(sweep.name) + " not exactly linear in q");
        table << "    " << sweep.name << ": measured " << fit.slope << "q+" << fit.intercept
              << " | reference " << sweep.formula << "\n";
    }
    for (uint32_t n = 1; n <= 6; ++n) {
        const RegisterLayout layout(n, 1);
        const uint64_t shift =
            count(build_cyclic_shift(layout, Axis::X, ShiftDir::Plus)).weighted_total;
        c.require(shift <= 5 * uint64_t{n} * n,
                  "cycle shift exceeds 5n^2 at n=" + std::to_string(n));
        if (n == 2 || n == 6) table << "    cycle shift n=" << n << ": measured " << shift
                                    << " | reference n^2 = " << n * n << "\n";
    }
    const ReferenceCosts ref = reference_costs(2, 3);
    table << "    reference at n=2,q=3: comparator " << ref.comparator << ", subtractor "
          << ref.subtractor << ", qcs/qcl " << ref.sort_pair << ", dilation/erosion "
          << ref.dilation_erosion << ", binarization " << ref.binarization
          << ", comparator-alt " << ref.comparator_alt << "\n";
    std::cout << table.str();
}

// --- criterion 7: histogram sanity -------------------------------------------
void criterion_histogram_sanity(Check& c) {
    std::mt19937_64 rng(707);
    const GrayImage img = random_image(rng, 2, 3);
    const SegmentationRun run = run_segmentation(img, HatMode::BottomHat, Threshold{2},
                                                 Backend::Ensemble, 8192, 1);
    c.require(run.histogram.exact.size() == 16, "expected 16 outcomes");
    for (const auto& [label, p] : run.histogram.exact)
        c.require(std::abs(p - 1.0 / 16) <= 1e-12, "outcome " + label + " not uniform");
    const double sigma = std::sqrt(8192.0 * (1.0 / 16) * (15.0 / 16));
    uint64_t total = 0;
    for (const auto& [label, n] : run.histogram.counts) {
        total += n;
        c.require(std::abs(double(n) - 512.0) <= 5.0 * sigma,
                  "count " + std::to_string(n) + " beyond 5 sigma at " + label);
    }
    c.require(total == 8192, "counts do not sum to shots");
}

// --- criterion 8: CLI determinism ---------------------------------------------
void criterion_determinism(Check& c) {
    const fs::path tmp = fs::temp_directory_path() / "qmorph_acceptance";
    fs::create_directories(tmp);
    std::mt19937_64 rng(808);
    const GrayImage img = random_image(rng, 2, 3);
    const std::string in_path = (tmp / "in.pgm").string();
    write_pgm(img, in_path);
    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    };
    auto run_once = [&](const std::string& tag) {
        const std::string prefix = (tmp / tag).string();
        const int rc = cli_main({"segment", "--mode", "tophat", "--threshold", "1", "--shots",
                                 "8192", "--seed", "5", in_path, "--out-image", prefix + ".pbm",
                                 "--out-histogram", prefix + ".json", "--out-qasm",
                                 prefix + ".qasm"});
        c.require(rc == 0, "segment exited nonzero");
        return slurp(prefix + ".pbm") + "|" + slurp(prefix + ".json") + "|" +
               slurp(prefix + ".qasm");
    };
    const std::string a = run_once("a");
    const std::string b = run_once("b");
    c.require(!a.empty() && a == b, "outputs differ between identical runs");
    fs::remove_all(tmp);
}

struct Criterion {
    std::string name;
    std::function<void(Check&)> fn;
    double budget_seconds; // 0 = unbounded
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1. oracle equivalence (200 random 4x4 q=3, both modes, exact)",
         criterion_oracle_equivalence, 10.0},
        {"2. scale-up equivalence (20 random 8x8 q=4, both modes, exact)",
         criterion_scale_up, 60.0},
        {"3. backend agreement (dense vs ensemble, exhaustive units q<=3)",
         criterion_backend_agreement, 0.0},
        {"4. arithmetic truth tables (64 pairs q=3, 1000 random q=8)",
         criterion_truth_tables, 0.0},
        {"5. morphology property suite (1000 random images per property)",
         criterion_morphology_properties, 0.0},
        {"6. cost accounting (copy=q, linear fits, quadratic shift bound)",
         criterion_cost_accounting, 0.0},
        {"7. histogram sanity (uniform 1/16 exact, 8192-shot 5-sigma bound)",
         criterion_histogram_sanity, 5.0},
        {"8. determinism (byte-identical segment outputs for fixed seed)",
         criterion_determinism, 0.0},
    };

    int failed = 0;
    for (const auto& criterion : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            criterion.fn(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.budget_seconds > 0 && elapsed > criterion.budget_seconds)
            check.require(false, "runtime " + std::to_string(elapsed) + "s over budget");
        if (check.failures == 0) {
            std::printf("[PASS] %s (%.2fs)\n", criterion.name.c_str(), elapsed);
        } else {
            ++failed;
            std::printf("[FAIL] %s (%.2fs): %s\n", criterion.name.c_str(), elapsed,
                        check.detail.c_str());
        }
    }
    if (failed == 0) std::printf("all %zu acceptance criteria passed\n", criteria.size());
    return failed;
}
