#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "koszul/report.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw koszul::ValidationError("cannot read input file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const koszul::RunReport& rep, const koszul::CliOptions& opt) {
    std::string text = rep.render(opt.format);
    if (opt.out_path) {
        std::ofstream out(*opt.out_path, std::ios::binary);
        if (!out) throw std::runtime_error("io error: cannot open " + *opt.out_path);
        out << text;
    } else {
        std::cout << text;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"A-infinity Koszul duals of A_n path algebras with interval relations"};
    app.require_subcommand(1);

    koszul::CliOptions opt;
    std::string convention = "auto";
    std::string format = "human";
    std::string input, output, corrupt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--convention", convention,
                        "composition sign convention: last-arg|first-arg|auto")
            ->check(CLI::IsMember({"last-arg", "first-arg", "auto"}));
        sub->add_option("--format", format, "report format: human|machine")
            ->check(CLI::IsMember({"human", "machine"}));
        sub->add_option("--out", output, "write the report to a file");
        sub->add_flag("--timings", opt.timings,
                      "include wall-clock timings (report is no longer byte-stable)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "sequences and dual of a pattern");
    analyze->add_option("input", input, "pattern document (JSON)")->required();
    add_common(analyze);
    analyze->add_option("--debug-corrupt-mu", corrupt,
                        "flip the sign of one mu entry; key is the argument "
                        "labels joined by ';'");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("input", input, "pattern document (JSON)")->required();
    add_common(verify);
    verify->add_option("--debug-corrupt-mu", corrupt,
                       "flip the sign of one mu entry; key is the argument "
                       "labels joined by ';'");

    CLI::App* sweep = app.add_subcommand("sweep", "verify every pattern up to n-max");
    sweep->add_option("--n-max", opt.n_max, "largest quiver size to sweep")->required();
    sweep->add_option("--ceiling", opt.sweep_ceiling,
                      "configured sweep ceiling (default 8)");
    sweep->add_option("--jobs", opt.jobs, "worker threads (1 = serial)");
    add_common(sweep);

    CLI::App* diagram = app.add_subcommand("diagram", "write the SVG diagram");
    diagram->add_option("input", input, "pattern document (JSON)")->required();
    diagram->add_option("--out", output, "output SVG path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (convention == "last-arg") opt.convention = koszul::SignConvention::LastArg;
        else if (convention == "first-arg") opt.convention = koszul::SignConvention::FirstArg;
        opt.format = format == "machine" ? koszul::ReportFormat::Machine
                                         : koszul::ReportFormat::Human;
        if (!corrupt.empty()) opt.corrupt_mu_key = corrupt;

        if (app.got_subcommand(analyze)) {
            opt.out_path = output.empty() ? std::nullopt : std::optional(output);
            koszul::RunReport rep = koszul::cmd_analyze(slurp(input), opt);
            emit(rep, opt);
            return rep.exit_code;
        }
        if (app.got_subcommand(verify)) {
            opt.out_path = output.empty() ? std::nullopt : std::optional(output);
            koszul::RunReport rep = koszul::cmd_verify(slurp(input), opt);
            emit(rep, opt);
            return rep.exit_code;
        }
        if (app.got_subcommand(sweep)) {
            opt.out_path = output.empty() ? std::nullopt : std::optional(output);
            koszul::RunReport rep = koszul::cmd_sweep(opt);
            emit(rep, opt);
            return rep.exit_code;
        }
        if (app.got_subcommand(diagram)) {
            koszul::CliOptions dopt = opt;
            dopt.out_path = std::nullopt;
            koszul::RunReport rep = koszul::cmd_diagram(slurp(input), output, dopt);
            std::cout << rep.render(opt.format);
            return rep.exit_code;
        }
    } catch (const koszul::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return koszul::kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return koszul::kExitValidation;
    }
    return koszul::kExitValidation;
}
