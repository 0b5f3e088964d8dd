#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ppl/output.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

struct CommonFlags {
    std::string format = "json";
    std::string out_path;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "latex"}));
    cmd->add_option("--out", flags.out_path, "Write output to FILE instead of stdout");
}

/// Runs fn against stdout or --out FILE; usage errors keep exit code 2.
template <typename Fn>
int with_output(const CommonFlags& flags, Fn&& fn) {
    ppl::cli::OutputFormat fmt = *ppl::cli::parse_format(flags.format);
    if (flags.out_path.empty()) return fn(fmt, std::cout);
    std::ofstream file(flags.out_path);
    if (!file) {
        std::cerr << "error: cannot open '" << flags.out_path << "' for writing\n";
        return ppl::cli::kExitUsage;
    }
    return fn(fmt, file);
}

}

int main(int argc, char** argv) {
    CLI::App app{"Exact tables, evaluations and identity checks for the polypseudologarithms "
                 "Li_{-n}(z) = N(z)/(1-z)^(n+1)"};
    app.require_subcommand(1);

    std::size_t table_range = 0;
    CommonFlags table_flags;
    CLI::App* table = app.add_subcommand("table", "Canonical rational-function table for n = 0..N");
    table->add_option("--range", table_range, "Largest order N")->required();
    add_common(table, table_flags);

    std::size_t eval_n = 0;
    std::string eval_z;
    std::optional<unsigned> eval_approx;
    CommonFlags eval_flags;
    CLI::App* eval = app.add_subcommand("eval", "Evaluate Li_{-n} exactly at a rational point");
    eval->add_option("n", eval_n, "Order n of Li_{-n}")->required();
    eval->add_option("z", eval_z, "Rational argument, e.g. 1/2 or -3")->required();
    eval->add_option("--approx", eval_approx, "Also print a decimal with this many digits");
    add_common(eval, eval_flags);

    std::string numbers_kind;
    std::size_t numbers_range = 0;
    CommonFlags numbers_flags;
    CLI::App* numbers = app.add_subcommand("numbers", "Combinatorial triangles and Bernoulli numbers");
    numbers->add_option("kind", numbers_kind, "stirling2 | eulerian | tangent | bernoulli")
        ->required()
        ->check(CLI::IsMember({"stirling2", "eulerian", "tangent", "bernoulli"}));
    numbers->add_option("--range", numbers_range, "Largest row / index")->required();
    add_common(numbers, numbers_flags);

    std::optional<std::size_t> verify_range;
    std::string verify_checks;
    std::optional<unsigned> verify_seed;
    CommonFlags verify_flags;
    CLI::App* verify = app.add_subcommand("verify", "Run the identity battery");
    verify->add_option("--range", verify_range, "Order range for the selected checks");
    verify->add_option("--checks", verify_checks, "Comma-separated list of check ids (default: all)");
    verify->add_option("--seed", verify_seed, "Randomize sample points with this seed");
    add_common(verify, verify_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : ppl::cli::kExitUsage;
    }

    if (table->parsed())
        return with_output(table_flags, [&](ppl::cli::OutputFormat fmt, std::ostream& out) {
            return ppl::cli::cmd_table(table_range, fmt, out, std::cerr);
        });
    if (eval->parsed())
        return with_output(eval_flags, [&](ppl::cli::OutputFormat fmt, std::ostream& out) {
            return ppl::cli::cmd_eval(eval_n, eval_z, fmt, eval_approx, out, std::cerr);
        });
    if (numbers->parsed())
        return with_output(numbers_flags, [&](ppl::cli::OutputFormat fmt, std::ostream& out) {
            return ppl::cli::cmd_numbers(numbers_kind, numbers_range, fmt, out, std::cerr);
        });
    if (verify->parsed())
        return with_output(verify_flags, [&](ppl::cli::OutputFormat fmt, std::ostream& out) {
            ppl::cli::VerifyParams params;
            params.range = verify_range;
            params.checks = split_csv(verify_checks);
            params.seed = verify_seed;
            params.fmt = fmt;
            return ppl::cli::cmd_verify(params, out, std::cerr);
        });
    return ppl::cli::kExitUsage;
}
