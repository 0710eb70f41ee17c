#include "cremona/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

int main(int argc, char** argv) {
    using namespace cremona::cli;

    CLI::App app{"cremona-kit: adjoint systems, Cremona maps and hyperelliptic tori over Q"};
    app.require_subcommand(1);

    std::vector<CommandRequest> reqs(subcommands().size());
    std::string format = "json";
    int verbosity = 0;
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("-v,--verbose", verbosity, "increase verbosity");

    const std::map<std::string, std::string> about{
        {"genus", "genus of a curve model"},
        {"validate", "check a curve model, optionally against its polynomial"},
        {"adjoint-chain", "successive adjoint systems of a curve"},
        {"classify", "terminal class of the adjoint chain"},
        {"map-compose", "compose Cremona maps F o G o ..."},
        {"map-fixcheck", "does a map fix a curve pointwise"},
        {"jonq-order", "order in PGL(2, Q(x)) of a torus element or matrix"},
        {"jonq-mul", "product of two torus elements"},
        {"jonq-fix-check", "check that a torus element fixes y^2 = h(x)"},
        {"pencil-check", "test the rational pencil equations for (n; m_1, ...)"},
        {"pencil-enum", "list rational pencil types up to a degree"},
        {"examples", "run the built-in worked examples"},
    };

    for (std::size_t i = 0; i < subcommands().size(); ++i) {
        const auto& name = subcommands()[i];
        auto& r = reqs[i];
        r.subcommand = name;
        auto* sub = app.add_subcommand(name, about.at(name));
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
        sub->add_flag("-v,--verbose", verbosity, "increase verbosity");
        if (name == "pencil-check") {
            sub->add_option("--n", r.n, "pencil degree")->required();
            sub->add_option("--mults", r.mults, "base multiplicities")->delimiter(',')->required();
        } else if (name == "pencil-enum") {
            sub->add_option("--max", r.max, "largest degree")->required();
            sub->add_option("--bound", r.bound, "enumeration bound");
        } else if (name != "examples") {
            auto* path = sub->add_option("input", r.input_path, "input JSON file");
            auto* inl = sub->add_option("--json", r.inline_json, "inline JSON input");
            path->excludes(inl);
            inl->excludes(path);
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitMalformed;
    }

    for (std::size_t i = 0; i < subcommands().size(); ++i) {
        if (!app.got_subcommand(subcommands()[i])) continue;
        auto& r = reqs[i];
        r.format = format == "text" ? Format::Text : Format::Json;
        r.verbosity = verbosity;
        return run(r, std::cout, std::cerr);
    }
    return kExitMalformed;
}
