#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace filtcat {

// One parsed invocation. The CLI fills this from flags, the python module
// from keyword arguments; both go through run_command.
struct CommandRequest {
    std::string command;
    std::vector<std::string> args;  // positional arguments after the command
    std::string in_path;            // instance file, empty if none given
    std::string name;               // --name, an alternative to the first positional
    std::string kind;
    std::string cat = "filt";
    std::string suite;
    std::size_t trials = 200;
    std::uint64_t seed = 42;
    std::string out_path;  // generate only
};

struct CommandResult {
    bool ok = false;
    std::string text;       // human-readable report, newline terminated
    std::string json_text;  // machine-readable report, newline terminated
};

const std::vector<std::string>& command_names();

// Dispatches req.command. Throws UnknownCommand for commands outside
// command_names, ParseError/ValidationError for bad inputs, and lets
// structural errors from the underlying operations propagate.
CommandResult run_command(const CommandRequest& req);

}  // namespace filtcat
