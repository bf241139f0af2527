#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>

#include "fano/commands.hpp"

namespace {

// Runs a command with stdout redirected to --output when given.
int with_output(const std::string& output_path, const std::function<int(std::ostream&)>& run) {
    if (output_path.empty()) return run(std::cout);
    std::ofstream out(output_path);
    if (!out) {
        std::cerr << "error: cannot write '" << output_path << "'\n";
        return 2;
    }
    return run(out);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fano-plane construction and classification of octonion and split-octonion "
                 "composition algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string output_path;
    app.add_option("--output", output_path, "write the document to a file instead of stdout");

    unsigned workers = 1;
    app.add_option("--workers", workers, "parallel workers for exhaustive scans")->capture_default_str();

    std::string verify_file;
    auto* verify = app.add_subcommand("verify", "check an arrow file and print its multiplication table");
    verify->add_option("file", verify_file, "arrow file")->required();

    std::string selector;
    auto* enumerate = app.add_subcommand("enumerate", "exhaustively classify all 2^21 factors");
    enumerate->add_option("selector", selector, "'trivial', 'all', 'mask:<m>' or a kernel line 'a,b,c'")
        ->required();

    std::string dot_input;
    auto* export_dot = app.add_subcommand("export-dot", "emit the arrow system as a DOT digraph");
    export_dot->add_option("input", dot_input, "arrow file or 'enc:<factor>[,<norm>]'")->required();

    CLI11_PARSE(app, argc, argv);

    if (verify->parsed())
        return with_output(output_path, [&](std::ostream& out) { return fano::cmd_verify(verify_file, out, std::cerr); });
    if (enumerate->parsed())
        return with_output(output_path,
                           [&](std::ostream& out) { return fano::cmd_enumerate(selector, workers, out, std::cerr); });
    return with_output(output_path, [&](std::ostream& out) { return fano::cmd_export_dot(dot_input, out, std::cerr); });
}
