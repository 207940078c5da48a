#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "phm/cli.hpp"

namespace {

int emit(const phm::cli::Json& report, const std::string& output) {
    const std::string text = phm::cli::render(report);
    if (output.empty() || output == "-") {
        std::cout << text;
        return std::cout ? phm::cli::kExitOk : phm::cli::kExitInputError;
    }
    std::ofstream out(output, std::ios::binary);
    out << text;
    if (!out) {
        std::cerr << "phm: cannot write " << output << "\n";
        return phm::cli::kExitInputError;
    }
    return phm::cli::kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pseudo-Hermiticity and antilinear-symmetry analysis of non-Hermitian matrices"};
    app.require_subcommand(1);

    phm::cli::RunOptions opts;
    std::string output;
    app.add_option("--tol", opts.tol, "Base tolerance")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--seed", opts.seed, "Seed for randomized steps")->capture_default_str();
    app.add_option("--output", output, "Report path (default stdout)");
    app.add_flag("--strict", opts.strict, "Halve every tolerance");

    std::string matrix_file;
    auto* analyze = app.add_subcommand("analyze", "Classify a matrix and certify the result");
    analyze->add_option("matrix", matrix_file, "Matrix JSON file")->required();
    analyze->fallthrough();

    auto* realform = app.add_subcommand("realform", "Similarity transform to a real matrix");
    realform->add_option("matrix", matrix_file, "Matrix JSON file")->required();
    realform->fallthrough();

    phm::cli::MorseOptions m;
    auto* morse = app.add_subcommand("morse", "Complex Morse potential on a periodic grid");
    morse->add_option("--A", m.A)->capture_default_str();
    morse->add_option("--B", m.B)->capture_default_str();
    morse->add_option("--C", m.C)->capture_default_str();
    morse->add_option("--N", m.N, "Grid size, power of two >= 16")->capture_default_str();
    morse->add_option("--x-min", m.x_min)->capture_default_str();
    morse->add_option("--x-max", m.x_max)->capture_default_str();
    morse->fallthrough();

    auto* selftest = app.add_subcommand("selftest", "Run the acceptance suite");
    selftest->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : phm::cli::kExitInputError;
    }

    try {
        if (*analyze) return emit(phm::cli::analyze_report(phm::cli::read_matrix_file(matrix_file), opts), output);
        if (*realform) return emit(phm::cli::realform_report(phm::cli::read_matrix_file(matrix_file), opts), output);
        if (*morse) return emit(phm::cli::morse_report(m, opts), output);
        std::string summary;
        const phm::cli::Json report = phm::cli::selftest_report(opts, &summary);
        std::cerr << summary;
        return emit(report, output);
    } catch (const std::exception& e) {
        std::cerr << "phm: " << e.what() << "\n";
        return phm::cli::exit_code_for(e);
    }
}
