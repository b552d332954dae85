#include "qmorph/cost.hpp"
#include "qmorph/oracle.hpp"
#include "qmorph/qasm.hpp"
#include "qmorph/run.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

namespace py = pybind11;
using namespace qmorph;

namespace {

GrayImage image_from_rows(const std::vector<std::vector<uint32_t>>& rows, int q_hint) {
    const std::size_t side = rows.size();
    uint32_t n = 0;
    while ((std::size_t{1} << n) < side) ++n;
    if (side < 2 || (std::size_t{1} << n) != side)
        throw std::invalid_argument("image side must be a power of two >= 2");
    uint32_t max_value = 0;
    for (const auto& row : rows) {
        if (row.size() != side) throw std::invalid_argument("image must be square");
        for (uint32_t v : row) max_value = std::max(max_value, v);
    }
    uint32_t q = 1;
    while ((1u << q) - 1 < max_value) ++q;
    if (q_hint > 0) {
        if ((1u << q_hint) - 1 < max_value)
            throw std::invalid_argument("pixel values exceed the requested bit depth");
        q = static_cast<uint32_t>(q_hint);
    }
    GrayImage img(n, q);
    for (uint32_t y = 0; y < img.side(); ++y)
        for (uint32_t x = 0; x < img.side(); ++x) img.set(y, x, rows[y][x]);
    return img;
}

std::vector<std::vector<uint8_t>> binary_rows(const BinaryImage& img) {
    std::vector<std::vector<uint8_t>> rows(img.side(), std::vector<uint8_t>(img.side()));
    for (uint32_t y = 0; y < img.side(); ++y)
        for (uint32_t x = 0; x < img.side(); ++x) rows[y][x] = img.at(y, x);
    return rows;
}

std::vector<std::vector<uint32_t>> gray_rows(const GrayImage& img) {
    std::vector<std::vector<uint32_t>> rows(img.side(), std::vector<uint32_t>(img.side()));
    for (uint32_t y = 0; y < img.side(); ++y)
        for (uint32_t x = 0; x < img.side(); ++x) rows[y][x] = img.at(y, x);
    return rows;
}

Backend backend_from_name(const std::string& name) {
    if (name == "ensemble") return Backend::Ensemble;
    if (name == "dense") return Backend::Dense;
    throw std::invalid_argument("backend must be 'ensemble' or 'dense'");
}

} // namespace

PYBIND11_MODULE(_qmorph, m) {
    m.doc() = "Reversible-circuit grayscale-morphology image segmentation";

    m.def(
        "segment",
        [](const std::vector<std::vector<uint32_t>>& rows, const std::string& mode,
           uint32_t threshold, const std::string& backend, int q) {
            const GrayImage img = image_from_rows(rows, q);
            const SegmentationRun run =
                run_segmentation(img, hat_mode_from_name(mode), Threshold{threshold},
                                 backend_from_name(backend), 1, 1);
            return binary_rows(run.image);
        },
        py::arg("pixels"), py::arg("mode"), py::arg("threshold"),
        py::arg("backend") = "ensemble", py::arg("q") = 0,
        "Segment an image on the simulated circuit; returns the binary mask.");

    m.def(
        "oracle_segment",
        [](const std::vector<std::vector<uint32_t>>& rows, const std::string& mode,
           uint32_t threshold, int q) {
            return binary_rows(oracle::segment(image_from_rows(rows, q),
                                               hat_mode_from_name(mode), Threshold{threshold}));
        },
        py::arg("pixels"), py::arg("mode"), py::arg("threshold"), py::arg("q") = 0,
        "Classical reference segmentation.");

    m.def(
        "histogram",
        [](const std::vector<std::vector<uint32_t>>& rows, const std::string& mode,
           uint32_t threshold, uint64_t shots, uint64_t seed, const std::string& backend,
           int q) {
            const GrayImage img = image_from_rows(rows, q);
            const SegmentationRun run =
                run_segmentation(img, hat_mode_from_name(mode), Threshold{threshold},
                                 backend_from_name(backend), shots, seed);
            py::dict out;
            out["result_register"] = std::string(reg_name(run.result_register));
            out["label_order"] = "result bit, then Y (msb first), then X (msb first)";
            py::dict exact, counts;
            for (const auto& [label, p] : run.histogram.exact) exact[label.c_str()] = p;
            for (const auto& [label, n] : run.histogram.counts) counts[label.c_str()] = n;
            out["exact"] = exact;
            out["counts"] = counts;
            out["shots"] = run.histogram.shots;
            return out;
        },
        py::arg("pixels"), py::arg("mode"), py::arg("threshold"), py::arg("shots") = 8192,
        py::arg("seed") = 1, py::arg("backend") = "ensemble", py::arg("q") = 0,
        "Exact and sampled measurement distribution of the segmentation circuit.");

    m.def(
        "export_qasm",
        [](const std::vector<std::vector<uint32_t>>& rows, const std::string& mode,
           uint32_t threshold, bool include_prep, int q) {
            const GrayImage img = image_from_rows(rows, q);
            const RegisterLayout layout = layout_for(img);
            const HatMode hat_mode = hat_mode_from_name(mode);
            Circuit circuit(layout);
            if (include_prep) circuit.append(prep_circuit(img));
            circuit.append(build_pipeline(layout, img, hat_mode, Threshold{threshold}));
            return export_qasm(circuit,
                               segmentation_measured_qubits(layout, hat_result_register(hat_mode)));
        },
        py::arg("pixels"), py::arg("mode"), py::arg("threshold"),
        py::arg("include_prep") = false, py::arg("q") = 0,
        "OpenQASM 2.0 text of the segmentation circuit.");

    m.def("dilate",
          [](const std::vector<std::vector<uint32_t>>& rows, int q) {
              return gray_rows(oracle::dilate(image_from_rows(rows, q)));
          },
          py::arg("pixels"), py::arg("q") = 0);
    m.def("erode",
          [](const std::vector<std::vector<uint32_t>>& rows, int q) {
              return gray_rows(oracle::erode(image_from_rows(rows, q)));
          },
          py::arg("pixels"), py::arg("q") = 0);
    m.def("opening",
          [](const std::vector<std::vector<uint32_t>>& rows, int q) {
              return gray_rows(oracle::open(image_from_rows(rows, q)));
          },
          py::arg("pixels"), py::arg("q") = 0);
    m.def("closing",
          [](const std::vector<std::vector<uint32_t>>& rows, int q) {
              return gray_rows(oracle::close(image_from_rows(rows, q)));
          },
          py::arg("pixels"), py::arg("q") = 0);
    m.def("hat",
          [](const std::vector<std::vector<uint32_t>>& rows, const std::string& mode, int q) {
              return gray_rows(
                  oracle::hat(image_from_rows(rows, q), hat_mode_from_name(mode)));
          },
          py::arg("pixels"), py::arg("mode"), py::arg("q") = 0);

    m.def(
        "cost_report",
        [](uint32_t n, uint32_t q) {
            const RegisterLayout layout(n, q);
            py::dict out;
            auto weighted = [](const Circuit& c) { return count(c).weighted_total; };
            out["comparator"] = weighted(build_comparator(layout, Reg::CMain, Reg::DUp));
            out["subtractor"] = weighted(build_subtractor(layout, Reg::CMain, Reg::DUp));
            out["cycle_shift"] = weighted(build_cyclic_shift(layout, Axis::X, ShiftDir::Plus));
            out["copy"] = weighted(build_copy(layout, Reg::CMain, Reg::CCopy));
            out["sort_pair_qcs"] =
                weighted(build_sort_pair(layout, Reg::CMain, Reg::DUp, SortOrder::Descending));
            out["sort_pair_qcl"] =
                weighted(build_sort_pair(layout, Reg::CMain, Reg::DUp, SortOrder::Ascending));
            out["dilation"] = weighted(build_dilation(layout));
            out["erosion"] = weighted(build_erosion(layout));
            out["binarization"] =
                weighted(build_binarization(layout, Threshold{layout.max_gray()}, Reg::CMain));
            const ReferenceCosts ref = reference_costs(n, q);
            py::dict reference;
            reference["comparator"] = ref.comparator;
            reference["subtractor"] = ref.subtractor;
            reference["cycle_shift"] = ref.cycle_shift;
            reference["copy"] = ref.copy_op;
            reference["sort_pair"] = ref.sort_pair;
            reference["dilation_erosion"] = ref.dilation_erosion;
            reference["binarization"] = ref.binarization;
            reference["comparator_alt"] = ref.comparator_alt;
            out["reference"] = reference;
            return out;
        },
        py::arg("n"), py::arg("q"),
        "Measured weighted gate costs next to the reference formulas.");

    m.attr("__version__") = "0.1.0";
}
