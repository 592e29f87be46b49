#include <iostream>
#include <utility>

#include <CLI11.hpp>

#include "polluxe/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"polluxe: exact plus/minus p-adic L-function toolkit"};
    app.set_version_flag("--version", std::string(polluxe::kVersion));
    app.require_subcommand(1);

    polluxe::cli::Invocation inv;
    std::uint64_t seed = 0;
    std::string out_path;
    const std::pair<const char*, const char*> commands[] = {
        {"analyze", "polygons, stabilizations, NCS set and Pollack checks for spectral data"},
        {"logpm", "half-logarithm expansion, disc valuations and vanishing pattern"},
        {"synth", "seeded synthetic L_alpha/L_beta with planted signed parts, then decompose"},
        {"decompose", "split L_alpha/L_beta into signed parts and bound their order"},
        {"nonvanish", "central twist nonvanishing against the Weierstrass lambda"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--config", inv.config_path, "JSON config file")->required();
        sub->add_option("--out", out_path, "write the JSON report here");
        sub->add_option("--seed", seed, "override the config seed");
        sub->add_flag("--quiet", inv.quiet, "suppress the summary when --out is given");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    CLI::App* sub = app.get_subcommands().front();
    inv.command = sub->get_name();
    if (sub->count("--seed") > 0) inv.seed = seed;
    if (sub->count("--out") > 0) inv.out_path = out_path;
    return polluxe::cli::run(inv, std::cout, std::cerr);
}
