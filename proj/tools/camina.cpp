#include "camina/pipeline.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv)
{
    camina::RunConfig cfg;
    std::string matrices = "omit";
    std::string closure = "auto";

    CLI::App app{"Terwilliger algebras of Camina p-groups: exact construction and verification"};
    app.add_option("command", cfg.command, "info | camina | scheme | ac-check | terwilliger | idempotents | "
                                           "wedderburn | verify-all | synth-class3")
        ->required()
        ->check(CLI::IsMember(camina::command_names()));
    app.add_option("--input", cfg.input, "builtin:<name>(<params>) or table:<path>");
    app.add_option("--out", cfg.out, "write the JSON report here; the summary goes to stdout");
    app.add_option("--matrices", matrices, "omit | include")->check(CLI::IsMember({"omit", "include"}));
    app.add_option("--seed", cfg.seed, "seed for sampled associativity checks");
    app.add_option("--closure", closure, "closure oracle: auto | always | never")
        ->check(CLI::IsMember({"auto", "always", "never"}));
    app.add_option("--p", cfg.synth_p, "synth-class3: prime");
    app.add_option("--n", cfg.synth_n, "synth-class3: log_p [G':Z]");
    app.add_option("--k", cfg.synth_k, "synth-class3: log_p |Z|");
    app.add_flag("--twisted", cfg.synth_twisted, "synth-class3: model G' of exponent p^2");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : camina::kExitInputError;
    }
    cfg.include_matrices = matrices == "include";
    cfg.closure = closure == "always" ? camina::ClosureMode::Always
                  : closure == "never" ? camina::ClosureMode::Never
                                       : camina::ClosureMode::Auto;

    camina::RunResult res = camina::run(cfg);
    const std::string json = res.report.dump(2) + "\n";
    if (cfg.out) {
        std::ofstream f(*cfg.out, std::ios::binary);
        if (!f) {
            std::cerr << "cannot write " << *cfg.out << "\n";
            return camina::kExitInputError;
        }
        f << json;
        std::cout << res.summary;
    } else {
        std::cout << json;
        std::cerr << res.summary;
    }
    return res.exit_code;
}
