// Command-line front end: JSON in, JSON out. Results go to --output, a
// structured diagnostic goes to stderr, and the exit code classifies the
// failure (0 ok, 2 parse/schema, 3 non-generic, 4 domain error, 1 internal).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ncnewton/cli.hpp"

namespace {

struct IoOptions {
    std::string input = "-";
    std::string output = "-";
};

std::optional<std::string> read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

bool write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return static_cast<bool>(std::cout);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << text;
    return static_cast<bool>(out);
}

void add_sequence_option(CLI::App* cmd, const std::string& name, std::vector<int>& storage,
                         const std::string& help) {
    cmd->add_option(name, storage, help)->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact noncommutative interpolation toolkit"};
    app.require_subcommand(1);

    IoOptions io;
    ncnewton::cli::JobOptions opts;
    int decimal = 0;
    int order = -1;
    std::vector<int> cols;
    std::vector<int> rows;

    app.add_option("--input,-i", io.input, "Input JSON path, or - for stdin");
    app.add_option("--output,-o", io.output, "Output path, or - for stdout");
    app.add_option("--decimal", decimal,
                   "Also print decimal approximations with this many digits");

    auto* invert = app.add_subcommand("invert", "Invert a square matrix exactly");
    invert->add_option("--method", opts.method, "elimination | summation");
    invert->add_option("--order", order, "Operate on the leading (order+1) truncation");

    auto* biortho = app.add_subcommand("biortho", "Biorthogonalize the leading truncation");
    biortho->add_option("--order", order, "Truncation order (default: full)");
    add_sequence_option(biortho, "--cols", cols, "Permuted column sequence i0,i1,...");
    add_sequence_option(biortho, "--rows", rows, "Permuted row sequence k0,k1,...");

    auto* diffderiv = app.add_subcommand("diffderiv", "Left/right difference derivative");
    diffderiv->add_option("--algorithm", opts.algorithm, "recurrence | quasidet | biortho");
    add_sequence_option(diffderiv, "--cols", cols, "Column sequence i0,i1,...");
    add_sequence_option(diffderiv, "--rows", rows, "Row sequence k0,k1,...");

    auto* newton = app.add_subcommand("newton", "Interpolate values at distinct nodes");
    newton->add_option("--order", order, "Interpolation order (default: node count - 1)");

    auto* taylor = app.add_subcommand("taylor", "Interpolate derivative data at one point");
    taylor->add_option("--order", order, "Interpolation order (default: data count - 1)");

    auto* gram = app.add_subcommand("gram", "Orthogonalize a symmetric positive definite Gram matrix");
    gram->add_option("--order", order, "Truncation order (default: full)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    if (decimal > 0) opts.decimal = decimal;
    if (order >= 0) opts.order = order;
    if (!cols.empty()) opts.cols = cols;
    if (!rows.empty()) opts.rows = rows;

    std::string command = app.get_subcommands().front()->get_name();

    auto input = read_input(io.input);
    if (!input) {
        std::cerr << "{\"code\": \"ParseError\", \"location\": \"input\", \"message\": "
                     "\"cannot read input file\"}\n";
        return 2;
    }

    auto outcome = ncnewton::cli::run_job(command, *input, opts);
    if (!outcome.diagnostic.empty()) std::cerr << outcome.diagnostic;
    if (outcome.exit_code == 0 && !write_output(io.output, outcome.output)) {
        std::cerr << "{\"code\": \"ParseError\", \"location\": \"output\", \"message\": "
                     "\"cannot write output file\"}\n";
        return 2;
    }
    return outcome.exit_code;
}
