#include <CLI11.hpp>
#include <iostream>

#include "sftlab/cli.hpp"
#include "sftlab/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for two-sided shifts of finite type"};
    app.require_subcommand(1);

    std::string lambda0 = "1/2";
    long long radius = 6, tails = 4, periods = 6;
    std::string format = "text";
    app.add_option("--lambda0", lambda0, "metric contraction rate p/q in (0,1)");
    auto* opt_r = app.add_option("--radius", radius, "pair disagreement radius R");
    auto* opt_q = app.add_option("--tails", tails, "tail period bound Q");
    auto* opt_p = app.add_option("--periods", periods, "periodic point bound P");
    app.add_option("--format", format, "output format: text|structured")
        ->check(CLI::IsMember({"text", "structured"}));

    std::string matrix_path, point_x, point_z, bundle_path;
    auto* info = app.add_subcommand("matrix-info", "matrix facts and periodic point counts");
    info->add_option("matrix", matrix_path, "matrix file")->required();
    auto* equiv = app.add_subcommand("equiv", "stable/unstable/asymptotic levels of a pair");
    equiv->add_option("matrix", matrix_path, "matrix file")->required();
    equiv->add_option("x", point_x, "point literal")->required();
    equiv->add_option("z", point_z, "point literal")->required();
    auto* limits = app.add_subcommand("limits", "limit points and omega/alpha sets");
    limits->add_option("matrix", matrix_path, "matrix file")->required();
    limits->add_option("x", point_x, "point literal")->required();
    auto* verify = app.add_subcommand("verify", "verify an orbit-equivalence bundle");
    verify->add_option("bundle", bundle_path, "bundle file")->required();

    CLI11_PARSE(app, argc, argv);

    sft::SessionConfig cfg;
    try {
        cfg.lambda0 = sft::parse_rational(lambda0);
        if (!(cfg.lambda0 > 0 && cfg.lambda0 < 1)) {
            std::cerr << "error: lambda0 must lie in (0,1)\n";
            return 2;
        }
    } catch (const sft::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (opt_r->count()) cfg.radius = radius;
    if (opt_q->count()) cfg.tails = tails;
    if (opt_p->count()) cfg.periods = periods;
    cfg.structured = (format == "structured");

    sft::CmdResult res;
    if (*info)
        res = sft::cmd_matrix_info(matrix_path, cfg);
    else if (*equiv)
        res = sft::cmd_equiv(matrix_path, point_x, point_z, cfg);
    else if (*limits)
        res = sft::cmd_limits(matrix_path, point_x, cfg);
    else if (*verify)
        res = sft::cmd_verify(bundle_path, cfg);

    std::cout << res.output;
    return res.exit_code;
}
