#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>

#include "filtcat/api.hpp"

int main(int argc, char** argv) {
    CLI::App app{
        "exact computations with functors on finite directed posets and their "
        "filtered reflections"};
    app.name("filtcat");

    filtcat::CommandRequest req;
    bool json = false;
    std::string commands;
    for (const std::string& c : filtcat::command_names()) commands += " " + c;
    app.add_option("command", req.command, "one of:" + commands)->required();
    app.add_option("args", req.args, "positional arguments (object names, degrees)");
    app.add_option("--in", req.in_path, "instance file");
    app.add_option("--name", req.name, "object name (alternative to the first positional)");
    app.add_option("--kind", req.kind,
                   "operation kind (op: ker|coker|im|coim; truncate: le|ge; generate: "
                   "what to generate)");
    app.add_option("--cat", req.cat, "ambient category for truncation, fct or filt");
    app.add_option("--suite", req.suite, "verification suite id");
    app.add_option("--trials", req.trials, "number of verification trials");
    app.add_option("--seed", req.seed, "random seed");
    app.add_option("--out", req.out_path, "output file for generate");
    app.add_flag("--json", json, "emit a machine-readable report");
    CLI11_PARSE(app, argc, argv);

    try {
        filtcat::CommandResult res = filtcat::run_command(req);
        std::cout << (json ? res.json_text : res.text);
        return res.ok ? 0 : 1;
    } catch (const std::exception& e) {
        if (json) {
            nlohmann::ordered_json err{{"command", req.command}, {"ok", false},
                                       {"error", e.what()}};
            std::cout << err.dump(2) << "\n";
        }
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
