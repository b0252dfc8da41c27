#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "zg/jsonio.hpp"

namespace zg::cli {

struct Options {
    bool json = false;
    unsigned seed = 0;
    unsigned max_k = 0;
    std::string fixtures = "fixtures";
};

/// Machine-readable record of one command run; replaying the same command
/// with the same options reproduces it byte for byte.
struct Transcript {
    std::string command;
    std::vector<std::string> args;
    Options opts;
    ojson steps = ojson::array();
    ojson result;
    std::string status = "ok";

    ojson to_json() const;
};

/// Batch verbs exposed by the tool, in dispatch order.
std::vector<std::string> verb_table();
/// Extra call-style operations available inside the REPL.
std::vector<std::string> repl_builtins();

/// Runs one verb; throws ParseError / DomainError.
Transcript run_verb(const std::string& verb, const std::vector<std::string>& args,
                    const Options& opts, std::string& human);

/// Full command line (without argv[0]); prints output, returns the exit code:
/// 0 ok, 1 domain error, 2 parse error or unknown verb.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Line-oriented session with let-bindings and :replay.
int repl(std::istream& in, std::ostream& out, std::ostream& err, Options opts);

} // namespace zg::cli
