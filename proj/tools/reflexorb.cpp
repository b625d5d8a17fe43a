// reflexorb: twisted sectors and orbifold Hodge numbers of Calabi-Yau
// hypersurfaces in simplicial Fano toric varieties.

#include "reflexorb/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

int main(int argc, char** argv)
{
    CLI::App app{"Twisted sectors and orbifold Hodge numbers from reflexive polytopes"};
    app.set_version_flag("--version", reflexorb::tool_version);
    app.require_subcommand(1);

    reflexorb::RunConfig config;
    std::string input;
    std::vector<std::uint64_t> weights;

    const std::map<std::string, std::string> about{
        {"info", "dimension, f-vector, lattice point counts"},
        {"reflexive", "reflexivity test (exit 2 when not reflexive)"},
        {"dual", "vertices of the polar dual"},
        {"faces", "face lattice with l and l* per face"},
        {"points", "lattice points of the (dilated) polytope"},
        {"sectors-toric", "twisted sectors of the toric variety"},
        {"sectors-cy", "twisted sectors of the anticanonical hypersurface"},
        {"hodge", "h11 and h(n-2)1, untwisted and orbifold"},
        {"mirror", "orbifold Hodge numbers of the swapped pair"},
        {"oracle-jacobian", "Jacobian ring rank cross-check"},
        {"wps", "polytope of a weighted projective space"},
    };

    for (const auto& name : reflexorb::subcommands()) {
        const auto it = about.find(name);
        auto* sub = app.add_subcommand(name, it == about.end() ? "" : it->second);
        sub->add_option("input", input, "vertex matrix file (Δ° unless --dual)");
        sub->add_option("--weights", weights, "weights of P(w0,...,wn) instead of a file")->delimiter(',');
        sub->add_flag("--dual", config.dual, "the input file holds Δ in M instead of Δ° in N");
        sub->add_flag("--interior-only", config.interior_only, "points: only interior lattice points");
        sub->add_option("--seed", config.seed, "seed for oracle-jacobian coefficient draws");
        sub->add_flag("--force", config.force, "evaluate the Hodge formulas even for n < 4");
        sub->add_option("--format", config.format, "output format")->check(CLI::IsMember({"json", "tsv"}));
        sub->add_option("--dilate", config.dilate, "points: dilation factor k")->check(CLI::PositiveNumber);
        sub->callback([&config, name] { config.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return reflexorb::exit_usage;
    }

    if (!input.empty())
        config.input_path = input;
    if (!weights.empty())
        config.weights = weights;

    const auto result = reflexorb::run(config);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
