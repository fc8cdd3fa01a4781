#ifndef KESTEN_CLI_HPP
#define KESTEN_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kesten/identities.hpp"
#include "kesten/moments.hpp"
#include "kesten/sequences.hpp"

namespace kesten::cli {

struct SeqCommand {
    SequenceId name = SequenceId::catalan;
    std::optional<int> count; // linear sequences: first `count` values
    std::optional<int> row;   // triangular sequences: whole row
    std::optional<int> col;   // optional single column within the row
};

struct MomentCommand {
    Rational p;
    Rational r;
    int m = 0;
    Method method = Method::closed;
};

struct VerifyCommand {
    std::string id = "all";
    int mMax = -1; // -1 selects each identity's default sweep
};

struct HankelCommand {
    HankelFamily family = HankelFamily::kestenEven;
    Rational t;
    Rational d;
    int size = 5;
};

using Command = std::variant<SeqCommand, MomentCommand, VerifyCommand, HankelCommand>;

// Thrown instead of returning a Command when --help is requested.
struct HelpRequested {
    std::string text;
};

Command parseArgs(const std::vector<std::string>& args);

// Executes the command, writing JSON to `out`. Returns the process exit
// code: 0 success, 1 identity counterexample, 2 is never returned here
// (usage and domain problems surface as exceptions for the caller).
int run(const Command& cmd, std::ostream& out);

// parse + run + error mapping; `err` receives human-readable diagnostics.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kesten::cli

#endif
