#include "qmorph/cli.hpp"

#include "qmorph/cost.hpp"
#include "qmorph/errors.hpp"
#include "qmorph/pgm.hpp"
#include "qmorph/qasm.hpp"
#include "qmorph/run.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>

namespace qmorph {

namespace {

using nlohmann::json;

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

json histogram_json(const SegmentationRun& run, const std::string& mode, uint32_t threshold,
                    const std::string& backend, uint64_t seed) {
    json j;
    j["format"] = 1;
    j["mode"] = mode;
    j["threshold"] = threshold;
    j["backend"] = backend;
    j["seed"] = seed;
    j["shots"] = run.histogram.shots;
    j["result_register"] = std::string(reg_name(run.result_register));
    j["label_order"] = "result bit, then Y (msb first), then X (msb first)";
    j["exact"] = json::object();
    for (const auto& [label, p] : run.histogram.exact) j["exact"][label] = p;
    j["counts"] = json::object();
    for (const auto& [label, c] : run.histogram.counts) j["counts"][label] = c;
    return j;
}

json cost_section(const Circuit& circuit) {
    const CostReport r = count(circuit);
    json j;
    j["weighted"] = r.weighted_total;
    j["gates"] = {{"not", r.not_gates},     {"cnot", r.cnot_gates},
                  {"toffoli", r.toffoli_gates}, {"mcnot", r.mcnot_gates},
                  {"cswap", r.cswap_gates}, {"reset", r.reset_gates}};
    return j;
}

// A fixed non-trivial image so pipeline cost rows are reproducible when no
// input image is supplied.
GrayImage gradient_image(uint32_t n, uint32_t q) {
    GrayImage img(n, q);
    for (uint32_t y = 0; y < img.side(); ++y)
        for (uint32_t x = 0; x < img.side(); ++x) img.set(y, x, (y * img.side() + x) % (1u << q));
    return img;
}

int run_cost(uint32_t n, uint32_t q, const std::string& image_path, uint32_t threshold,
             const std::string& json_path) {
    GrayImage img = image_path.empty() ? gradient_image(n, q) : read_pgm(image_path);
    n = img.n();
    q = img.q();
    const RegisterLayout layout(n, q);
    const Threshold t{std::min(threshold, layout.max_gray())};

    struct Row {
        std::string name;
        Circuit circuit;
        uint64_t reference;
        std::string formula;
    };
    const ReferenceCosts ref = reference_costs(n, q);
    std::vector<Row> rows;
    rows.push_back({"comparator", build_comparator(layout, Reg::CMain, Reg::DUp),
                    ref.comparator, "18q-13"});
    rows.push_back({"subtractor", build_subtractor(layout, Reg::CMain, Reg::CCopy),
                    ref.subtractor, "27q-43"});
    rows.push_back({"cycle_shift", build_cyclic_shift(layout, Axis::X, ShiftDir::Plus),
                    ref.cycle_shift, "n^2"});
    rows.push_back({"copy", build_copy(layout, Reg::CMain, Reg::CCopy), ref.copy_op, "q"});
    rows.push_back({"sort_pair_qcs",
                    build_sort_pair(layout, Reg::CMain, Reg::DUp, SortOrder::Descending),
                    ref.sort_pair, "21q-13"});
    rows.push_back({"sort_pair_qcl",
                    build_sort_pair(layout, Reg::CMain, Reg::DUp, SortOrder::Ascending),
                    ref.sort_pair, "21q-13"});
    rows.push_back({"dilation", build_dilation(layout), ref.dilation_erosion, "n^2+7q"});
    rows.push_back({"erosion", build_erosion(layout), ref.dilation_erosion, "n^2+7q"});
    rows.push_back({"binarization", build_binarization(layout, Threshold{layout.max_gray()}, Reg::CMain),
                    ref.binarization, "2q+13"});

    const Circuit bottom = build_pipeline(layout, img, HatMode::BottomHat, t);
    const Circuit top = build_pipeline(layout, img, HatMode::TopHat, t);
    // Zero image: the position-controlled neighbor writes vanish, leaving
    // the image-independent processing gates.
    const Circuit processing =
        build_pipeline(layout, GrayImage(n, q), HatMode::BottomHat, t);

    std::cout << "quantum cost at n=" << n << ", q=" << q << "\n";
    std::cout << std::left << std::setw(16) << "unit" << std::right << std::setw(10)
              << "measured" << std::setw(11) << "reference" << "  formula\n";
    for (const auto& row : rows) {
        std::cout << std::left << std::setw(16) << row.name << std::right << std::setw(10)
                  << count(row.circuit).weighted_total << std::setw(11) << row.reference
                  << "  " << row.formula << "\n";
    }
    std::cout << std::left << std::setw(16) << "comparator_alt" << std::right << std::setw(10)
              << "-" << std::setw(11) << ref.comparator_alt << "  18n-3\n";
    std::cout << "pipeline bottomhat: " << count(bottom).weighted_total
              << "  tophat: " << count(top).weighted_total
              << "  processing-only: " << count(processing).weighted_total << "\n";
    std::cout << "complexity: segmentation " << ref.segmentation_complexity
              << ", histogram-threshold rival " << ref.histogram_rival_complexity
              << ", multilevel rival " << ref.multilevel_rival_complexity << "\n";

    if (!json_path.empty()) {
        json j;
        j["format"] = 1;
        j["n"] = n;
        j["q"] = q;
        for (const auto& row : rows) {
            j["units"][row.name] = cost_section(row.circuit);
            j["units"][row.name]["reference"] = row.reference;
            j["units"][row.name]["reference_formula"] = row.formula;
        }
        j["units"]["comparator_alt"] = {{"reference", ref.comparator_alt},
                                        {"reference_formula", "18n-3"}};
        j["pipeline"]["bottomhat"] = cost_section(bottom);
        j["pipeline"]["tophat"] = cost_section(top);
        j["pipeline"]["processing_only"] = cost_section(processing);
        j["complexity"] = {{"segmentation", ref.segmentation_complexity},
                           {"histogram_rival", ref.histogram_rival_complexity},
                           {"multilevel_rival", ref.multilevel_rival_complexity}};
        write_text_file(json_path, j.dump(2) + "\n");
    }
    return 0;
}

} // namespace

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"Reversible-circuit grayscale-morphology image segmentation"};
    app.require_subcommand(1);

    std::string mode_name = "bottomhat";
    uint32_t threshold = 1;
    std::string backend_name = "ensemble";
    uint64_t shots = 8192;
    uint64_t seed = 1;
    std::string input_path;
    std::string out_image = "out.pbm";
    std::string out_histogram;
    std::string out_qasm;
    std::string out_cost;
    bool include_prep = false;
    bool no_measure = false;
    uint32_t cost_n = 2, cost_q = 3;
    std::string cost_image;
    std::string cost_json;

    auto add_mode = [&](CLI::App* cmd) {
        cmd->add_option("--mode", mode_name, "bottomhat or tophat")
            ->check(CLI::IsMember({"bottomhat", "tophat"}))
            ->capture_default_str();
        cmd->add_option("--threshold", threshold, "segmentation threshold in [0, 2^q-1]")
            ->capture_default_str();
    };
    auto add_backend = [&](CLI::App* cmd) {
        cmd->add_option("--backend", backend_name, "ensemble or dense")
            ->check(CLI::IsMember({"ensemble", "dense"}))
            ->capture_default_str();
    };
    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input_path, "input PGM (P2 or P5, square power-of-two side)")
            ->required();
    };

    CLI::App* segment = app.add_subcommand(
        "segment", "segment an image on a simulated circuit; outputs label measured qubits as "
                   "[result bit | Y msb-first | X msb-first]");
    add_mode(segment);
    add_backend(segment);
    segment->add_option("--shots", shots, "samples for the histogram")->capture_default_str();
    segment->add_option("--seed", seed, "sampling seed")->capture_default_str();
    add_input(segment);
    segment->add_option("--out-image", out_image, "output PBM path")->capture_default_str();
    segment->add_option("--out-histogram", out_histogram, "output histogram JSON path");
    segment->add_option("--out-qasm", out_qasm, "output OpenQASM 2.0 path");
    segment->add_option("--out-cost", out_cost, "output cost JSON path");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "classical reference segmentation");
    add_mode(oracle_cmd);
    add_input(oracle_cmd);
    oracle_cmd->add_option("--out-image", out_image, "output PBM path")->capture_default_str();

    CLI::App* compare = app.add_subcommand(
        "compare", "run circuit and oracle; exit 0 iff the binary images match");
    add_mode(compare);
    add_backend(compare);
    add_input(compare);

    CLI::App* hist = app.add_subcommand("histogram", "exact and sampled outcome distribution");
    add_mode(hist);
    add_backend(hist);
    hist->add_option("--shots", shots, "samples")->capture_default_str();
    hist->add_option("--seed", seed, "sampling seed")->capture_default_str();
    add_input(hist);
    hist->add_option("--out", out_histogram, "output JSON path (stdout when omitted)");

    CLI::App* cost_cmd =
        app.add_subcommand("cost", "measured quantum cost next to the reference formulas");
    cost_cmd->add_option("--n", cost_n, "position bits per axis")->capture_default_str();
    cost_cmd->add_option("--q", cost_q, "gray bits")->capture_default_str();
    cost_cmd->add_option("--image", cost_image, "take n, q and pipeline cost from this PGM");
    cost_cmd->add_option("--threshold", threshold, "pipeline threshold")->capture_default_str();
    cost_cmd->add_option("--json", cost_json, "also write a JSON report");

    CLI::App* qasm_cmd = app.add_subcommand("export-qasm", "emit the pipeline as OpenQASM 2.0");
    add_mode(qasm_cmd);
    add_input(qasm_cmd);
    qasm_cmd->add_option("--out", out_qasm, "output path (stdout when omitted)");
    qasm_cmd->add_flag("--include-prep", include_prep,
                       "prepend the gate-based image preparation");
    qasm_cmd->add_flag("--no-measure", no_measure, "omit the measure statements");

    std::vector<const char*> argv;
    argv.push_back("qmorph");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (segment->parsed()) {
            const GrayImage img = read_pgm(input_path);
            const HatMode mode = hat_mode_from_name(mode_name);
            const Backend backend =
                backend_name == "dense" ? Backend::Dense : Backend::Ensemble;
            SegmentationRun run =
                run_segmentation(img, mode, Threshold{threshold}, backend, shots, seed);
            write_pbm(run.image, out_image);
            if (!out_histogram.empty())
                write_text_file(out_histogram,
                                histogram_json(run, mode_name, threshold, backend_name, seed)
                                        .dump(2) +
                                    "\n");
            if (!out_qasm.empty())
                write_text_file(out_qasm, export_qasm(run.circuit, run.measured));
            if (!out_cost.empty()) {
                json j;
                j["format"] = 1;
                j["pipeline"] = cost_section(run.circuit);
                write_text_file(out_cost, j.dump(2) + "\n");
            }
            std::cout << "segmented " << input_path << " (" << img.side() << "x" << img.side()
                      << ", q=" << img.q() << ", " << mode_name << ", T=" << threshold
                      << ") -> " << out_image << " [result register "
                      << reg_name(run.result_register) << "]\n";
            return 0;
        }
        if (oracle_cmd->parsed()) {
            const GrayImage img = read_pgm(input_path);
            const BinaryImage seg =
                oracle::segment(img, hat_mode_from_name(mode_name), Threshold{threshold});
            write_pbm(seg, out_image);
            std::cout << "oracle segmentation -> " << out_image << "\n";
            return 0;
        }
        if (compare->parsed()) {
            const GrayImage img = read_pgm(input_path);
            const HatMode mode = hat_mode_from_name(mode_name);
            const Backend backend =
                backend_name == "dense" ? Backend::Dense : Backend::Ensemble;
            SegmentationRun run =
                run_segmentation(img, mode, Threshold{threshold}, backend, 1, seed);
            const BinaryImage expected = oracle::segment(img, mode, Threshold{threshold});
            if (run.image == expected) {
                std::cout << "match: circuit output equals the classical reference\n";
                return 0;
            }
            std::cout << "MISMATCH (circuit vs oracle):\n";
            for (uint32_t y = 0; y < img.side(); ++y)
                for (uint32_t x = 0; x < img.side(); ++x)
                    if (run.image.at(y, x) != expected.at(y, x))
                        std::cout << "  (" << y << "," << x << "): circuit "
                                  << int(run.image.at(y, x)) << ", oracle "
                                  << int(expected.at(y, x)) << "\n";
            return 2;
        }
        if (hist->parsed()) {
            const GrayImage img = read_pgm(input_path);
            const HatMode mode = hat_mode_from_name(mode_name);
            const Backend backend =
                backend_name == "dense" ? Backend::Dense : Backend::Ensemble;
            SegmentationRun run =
                run_segmentation(img, mode, Threshold{threshold}, backend, shots, seed);
            const std::string text =
                histogram_json(run, mode_name, threshold, backend_name, seed).dump(2) + "\n";
            if (out_histogram.empty()) std::cout << text;
            else write_text_file(out_histogram, text);
            return 0;
        }
        if (cost_cmd->parsed()) return run_cost(cost_n, cost_q, cost_image, threshold, cost_json);
        if (qasm_cmd->parsed()) {
            const GrayImage img = read_pgm(input_path);
            const HatMode mode = hat_mode_from_name(mode_name);
            const RegisterLayout layout = layout_for(img);
            Circuit circuit(layout);
            if (include_prep) circuit.append(prep_circuit(img));
            circuit.append(build_pipeline(layout, img, mode, Threshold{threshold}));
            const std::vector<uint32_t> measured =
                no_measure ? std::vector<uint32_t>{}
                           : segmentation_measured_qubits(layout, hat_result_register(mode));
            const std::string text = export_qasm(circuit, measured);
            if (out_qasm.empty()) std::cout << text;
            else write_text_file(out_qasm, text);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace qmorph
