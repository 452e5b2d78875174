// SPDX-License-Identifier: Apache-2.0
//
// frobtool: command-line front end for the frob library.
//
//   frobtool [flags] <command> [command args...]
//
// Flags:
//   --session FILE   read session statements from FILE ('-' for stdin)
//   -p N, -n N       declare the ring directly (for ring-less utilities)
//   --json           JSON output
//   --cap N          Buchberger degree cap (default 50)
//   --terms N        series terms to print (default 10)
//   --allow-truncated  report truncated analyses instead of failing
//
// Exit codes: 0 success, 2 parse/usage error, 3 truncated result,
//             4 internal invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "frob/session.hpp"

namespace {

constexpr const char* kUsage = R"(usage: frobtool [flags] <command> [args...]

commands:
  analyze <name> [cap N]    initial module, Hilbert series, delta, multiplicity
  gb <name> [cap N]         Groebner basis and initial module
  hilbert <name> [terms N]  Hilbert function coefficients
  ring-hs [terms N]         Hilbert series of the graded operator ring itself
  count <degree>            monomial count of the ring in one degree
  verify-de [degree D]      enumerated counts vs. the closed-form series

flags:
  --session FILE    session script declaring ring/ideal/fmodule ('-' = stdin)
  -p N -n N         declare the ring without a script
  --json            emit JSON
  --cap N           Buchberger degree cap (default 50)
  --terms N         series terms (default 10)
  --allow-truncated accept truncated Groebner runs
)";

std::string read_stream(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Invocation {
    std::string session_source;
    bool have_session = false;
    std::string command;
    std::uint64_t p = 0, n = 0;
    bool json = false, allow_truncated = false;
    std::uint64_t cap = 0, terms = 0; // 0 = unset
};

std::uint64_t flag_value(const std::vector<std::string>& args, std::size_t& i,
                         const std::string& flag) {
    if (i + 1 >= args.size()) throw frob::parse_error(flag + " needs a value");
    ++i;
    try {
        return std::stoull(args[i]);
    } catch (const std::exception&) {
        throw frob::parse_error(flag + " needs an integer, got '" + args[i] + "'");
    }
}

Invocation parse_argv(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    Invocation inv;
    std::vector<std::string> positionals;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a == "--json") inv.json = true;
        else if (a == "--allow-truncated") inv.allow_truncated = true;
        else if (a == "--cap") inv.cap = flag_value(args, i, a);
        else if (a == "--terms") inv.terms = flag_value(args, i, a);
        else if (a == "-p") inv.p = flag_value(args, i, a);
        else if (a == "-n") inv.n = flag_value(args, i, a);
        else if (a == "--session") {
            if (i + 1 >= args.size()) throw frob::parse_error("--session needs a file");
            ++i;
            if (args[i] == "-") {
                inv.session_source = read_stream(std::cin);
            } else {
                std::ifstream f(args[i]);
                if (!f) throw frob::parse_error("cannot open session file '" + args[i] + "'");
                inv.session_source = read_stream(f);
            }
            inv.have_session = true;
        } else if (!a.empty() && a[0] == '-') {
            throw frob::parse_error("unknown flag '" + a + "'");
        } else {
            positionals.push_back(a);
        }
    }
    if (positionals.empty()) throw frob::parse_error("no command given");
    std::string cmd;
    for (std::size_t i = 0; i < positionals.size(); ++i) {
        if (i) cmd += ' ';
        cmd += positionals[i];
    }
    inv.command = std::move(cmd);
    return inv;
}

} // namespace

int main(int argc, char** argv) {
    try {
        Invocation inv = parse_argv(argc, argv);
        frob::Session session =
            inv.have_session ? frob::parse_session(inv.session_source) : frob::Session{};
        if (inv.p || inv.n) {
            if (!inv.p || !inv.n) throw frob::parse_error("-p and -n must be given together");
            session.ctx = frob::RingContext(static_cast<std::uint32_t>(inv.p),
                                            static_cast<std::uint32_t>(inv.n));
        }
        if (inv.json) session.options.json = true;
        if (inv.allow_truncated) session.options.allow_truncated = true;
        if (inv.cap) session.options.cap = inv.cap;
        if (inv.terms) session.options.terms = inv.terms;
        std::cout << frob::run(inv.command, session) << "\n";
        return 0;
    } catch (const frob::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n\n" << kUsage;
        return 2;
    } catch (const frob::truncated_result& e) {
        std::cerr << "truncated: " << e.what() << "\n";
        return 3;
    } catch (const frob::invariant_violation& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
