#include <iostream>

#include <CLI11.hpp>

#include "hopfcy/report.hpp"

using namespace hopfcy;

int main(int argc, char** argv) {
    CLI::App app{"hopfcy: Nakayama automorphisms and Calabi-Yau decisions for pointed Hopf algebras"};
    app.require_subcommand(1);

    std::string config_path, format = "text", object = "hopf", cartan;
    std::size_t max_degree = 0;

    struct Spec {
        const char* name;
        const char* help;
        bool config;  // takes a config file
    };
    const Spec specs[] = {
        {"validate", "load and validate a config", true},
        {"roots", "positive roots of the datum's Cartan matrix (or of --cartan)", true},
        {"deform", "deformed characters, braiding and Xi(sigma)", true},
        {"nakayama", "Nakayama automorphism on generators", true},
        {"is-cy", "decide whether the object is Calabi-Yau", true},
        {"hdet", "homological determinant of the Hopf action", true},
        {"koszul-check", "Koszulity certificate for the algebra block", true},
        {"frobenius-nakayama", "Nakayama automorphism of the algebra block via its Koszul dual", true},
        {"paper-regress", "run the embedded regression suite", false},
    };
    for (const auto& s : specs) {
        auto* sub = app.add_subcommand(s.name, s.help);
        if (s.config) {
            if (std::string(s.name) == "roots")
                sub->add_option("config", config_path, "config file (YAML or JSON)");
            else
                sub->add_option("config", config_path, "config file (YAML or JSON)")->required();
        }
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
        if (std::string(s.name) == "nakayama" || std::string(s.name) == "is-cy")
            sub->add_option("--object", object, "hopf, cleft, smash or crossed")
                ->check(CLI::IsMember({"hopf", "cleft", "smash", "crossed"}));
        if (std::string(s.name) == "koszul-check") sub->add_option("--max-degree", max_degree, "highest internal degree");
        if (std::string(s.name) == "roots") sub->add_option("--cartan", cartan, "Cartan type such as A2 or B3");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    RunOptions opt;
    opt.object = parse_object(object);
    if (max_degree) opt.max_degree = max_degree;
    opt.cartan_type = cartan;

    Outcome out;
    std::optional<SessionConfig> cfg;
    try {
        if (!config_path.empty()) cfg = load_config(config_path);
        if (command == "roots" && !cfg && cartan.empty()) throw ConfigError("roots needs a config file or --cartan");
        out = run_command(command, cfg ? &*cfg : nullptr, opt);
    } catch (const ConfigError& e) {
        out.report.command = command;
        out.report.results = {{"error", e.what()}};
        out.text = {std::string("input error: ") + e.what()};
        out.exit_code = 2;
    }

    if (format == "json") {
        std::cout << render_json(out.report) << "\n";
    } else {
        auto& stream = out.exit_code == 2 ? std::cerr : std::cout;
        for (const auto& l : out.text) stream << l << "\n";
    }
    return out.exit_code;
}
