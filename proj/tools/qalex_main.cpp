#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "qalex/command.hpp"

namespace {

struct Options {
    qalex::cli::CommandRequest req;
    std::string format = "text";
    std::string var = "t";
    std::string m_range;
    int m = -1;
    bool m_set = false;
};

void add_common(CLI::App* cmd, Options& opt, bool needs_braid) {
    cmd->add_option("--format", opt.format, "output format: json, csv or text");
    cmd->add_option("--var", opt.var, "display variable: t (default) or q");
    if (needs_braid)
        cmd->add_option("--braid", opt.req.braid_text,
                        "braid word as signed generator indices, e.g. \"1 -2 1\"");
}

} // namespace

int main(int argc, char** argv) {
    using qalex::cli::Command;
    Options opt;

    CLI::App app{"Alexander polynomials of braid closures through the quantum gl(1|1) "
                 "R-matrix, with exact full-twist formulas and stabilization series"};
    app.require_subcommand(1);

    auto* alex = app.add_subcommand("alex", "Alexander polynomial of a braid closure");
    alex->add_option("--n", opt.req.n, "strand count")->required();
    add_common(alex, opt, true);

    auto* family = app.add_subcommand("family", "table of twisted closures, computed directly");
    family->add_option("--n", opt.req.n, "strand count")->required();
    family->add_option("--m", opt.m, "single twist count");
    family->add_option("--m-range", opt.m_range, "twist range A..B");
    add_common(family, opt, true);

    auto* formula =
        app.add_subcommand("formula", "same table through the twist formula, with equality flag");
    formula->add_option("--n", opt.req.n, "strand count")->required();
    formula->add_option("--m", opt.m, "single twist count");
    formula->add_option("--m-range", opt.m_range, "twist range A..B");
    add_common(formula, opt, true);

    auto* coeffs = app.add_subcommand("coeffs", "twist coefficients f_{m,j,n}");
    coeffs->add_option("--n", opt.req.n, "strand count")->required();
    coeffs->add_option("--m", opt.m, "twist count")->required();
    add_common(coeffs, opt, false);

    auto* stabilize = app.add_subcommand("stabilize", "stabilization series of a twist family");
    stabilize->add_option("--n", opt.req.n, "strand count")->required();
    stabilize->add_option("--precision", opt.req.precision, "retained series coefficients");
    add_common(stabilize, opt, true);

    auto* torus = app.add_subcommand("torus", "closed form for torus knots/links T(n,l)");
    torus->add_option("--n", opt.req.n, "strand count")->required();
    torus->add_option("--m", opt.m, "the power l: T(n,l) is the closure of (s_{n-1}...s_1)^l")
        ->required();
    add_common(torus, opt, false);

    auto* verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("--depth", opt.req.depth, "maximal strand count (default 4)");
    verify->add_option("--seed", opt.req.seed, "seed for the randomized checks");
    add_common(verify, opt, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (alex->parsed()) opt.req.command = Command::alex;
        if (family->parsed()) opt.req.command = Command::family;
        if (formula->parsed()) opt.req.command = Command::formula;
        if (coeffs->parsed()) opt.req.command = Command::coeffs;
        if (stabilize->parsed()) opt.req.command = Command::stabilize;
        if (torus->parsed()) opt.req.command = Command::torus;
        if (verify->parsed()) opt.req.command = Command::verify;

        opt.req.format = qalex::parse_format(opt.format);
        opt.req.var = qalex::parse_var(opt.var);
        if (opt.m >= 0) opt.req.m = opt.m;
        if (!opt.m_range.empty()) {
            const auto dots = opt.m_range.find("..");
            if (dots == std::string::npos)
                throw qalex::InvalidInput("--m-range expects A..B");
            try {
                opt.req.m_range = {std::stoi(opt.m_range.substr(0, dots)),
                                   std::stoi(opt.m_range.substr(dots + 2))};
            } catch (const std::exception&) {
                throw qalex::InvalidInput("--m-range expects integers A..B");
            }
        }

        const qalex::cli::CommandResult result = qalex::cli::run_command(opt.req);
        const std::string out = qalex::cli::format_output(result, opt.req.format, opt.req.var);
        std::cout << out;
        if (out.empty() || out.back() != '\n') std::cout << "\n";
        if (const auto* v = std::get_if<qalex::cli::VerifyResult>(&result); v && !v->all_ok) {
            std::cerr << "verify: an algebraic identity failed\n";
            return 2;
        }
        return 0;
    } catch (const qalex::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const qalex::ExactnessError& e) {
        std::cerr << "internal assertion failed: " << e.what() << "\n";
        return 2;
    }
}
