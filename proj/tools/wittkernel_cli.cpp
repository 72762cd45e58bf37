// wittkernel command line front end.  Links the C API only.

#include <wittkernel.h>

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

const char kUsage[] =
    "usage: wittkernel [--json] <command> ...\n"
    "\n"
    "commands:\n"
    "  hilbert <a> <b> [--place p|inf]\n"
    "      Hilbert symbol of two nonzero rationals, at one place or over\n"
    "      the whole relevant place set (with a reciprocity check).\n"
    "  conic classify <a> <b>\n"
    "      Splitting, ramification, index and Brauer kernel of the conic\n"
    "      aX^2 + bY^2 - abZ^2 = 0.\n"
    "  conic compare <a> <b> <a'> <b'>\n"
    "      Isomorphism / isogeny verdict for two conic function fields.\n"
    "  quadric classify <c1,c2,c3,c4>\n"
    "      Invariants, rationality, index and Brauer kernel of a quadric\n"
    "      surface given by a diagonal quaternary form.\n"
    "  quadric compare <form> <form'>\n"
    "      Full classification of two quadric surfaces: isomorphism,\n"
    "      isogeny, and Brauer kernels over Q and Q(sqrt(d)), Q(sqrt(d')).\n"
    "  quadric kernel <form> [--ext e]\n"
    "      Brauer kernel of the quadric function field over Q(sqrt(e)).\n"
    "  sb compare <class> <class'> --dim n\n"
    "      Do two Severi-Brauer varieties have isomorphic function fields?\n"
    "      Classes are local invariant lists like 7:1/3,13:2/3 (0 = trivial).\n"
    "  sb vs-quadric <class> <form>\n"
    "      Compare a Severi-Brauer surface with a quadric surface.\n"
    "  genus1 orbit <m> <a>\n"
    "      Period, isogeny orbit and orbit size of a torsor class a in a\n"
    "      cyclic subgroup of order m of a Weil-Chatelet group.\n"
    "  genus1 gate <period> --non-cm <bool> --isolated-or-finite <bool>\n"
    "      Does the genus-one uniqueness theorem apply?\n"
    "\n"
    "Rationals are exact: 3, -2, 3/5.  Forms are comma-separated rationals.\n"
    "The global --json flag switches the report to JSON.\n";

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> options;
};

int parse_error(const std::string& message) {
    std::fprintf(stderr, "error: %s\n", message.c_str());
    return 2;
}

int status_exit(wk_status st) {
    const char* msg = wk_last_error();
    switch (st) {
    case WK_OK:
        return 0;
    case WK_EPARSE:
        std::fprintf(stderr, "error: %s\n", msg);
        return 2;
    case WK_EDOMAIN:
        std::fprintf(stderr, "error: %s\n", msg);
        return 3;
    case WK_ETHEOREM:
        std::fprintf(stderr, "theorem-consistency failure: %s\n", msg);
        return 4;
    default:
        std::fprintf(stderr, "error: %s\n", msg);
        return 2;
    }
}

int emit(wk_report* rep, bool json) {
    char* text = nullptr;
    wk_status st = json ? wk_report_json(rep, &text) : wk_report_text(rep, &text);
    if (st != WK_OK) {
        wk_report_free(rep);
        return status_exit(st);
    }
    std::fputs(text, stdout);
    wk_string_free(text);
    wk_report_free(rep);
    return 0;
}

// Collect positionals and --name value options; only names in `allowed`
// are recognized, so negative numbers stay positional.
bool gather(const std::vector<std::string>& tokens, const std::vector<std::string>& allowed,
            Args& out, std::string& err) {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string& tok = tokens[i];
        if (tok.size() > 2 && tok.rfind("--", 0) == 0) {
            std::string name = tok.substr(2);
            bool known = false;
            for (const std::string& a : allowed) known = known || a == name;
            if (!known) {
                err = "unknown option '" + tok + "'";
                return false;
            }
            if (i + 1 == tokens.size()) {
                err = "option '" + tok + "' needs a value";
                return false;
            }
            out.options[name] = tokens[++i];
        } else {
            out.positional.push_back(tok);
        }
    }
    return true;
}

bool expect_count(const Args& args, std::size_t n, const std::string& what, std::string& err) {
    if (args.positional.size() < n) {
        err = "missing argument for " + what;
        return false;
    }
    if (args.positional.size() > n) {
        err = "unexpected token '" + args.positional[n] + "'";
        return false;
    }
    return true;
}

bool to_int64(const std::string& tok, int64_t& out, std::string& err) {
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(tok.c_str(), &end, 10);
    if (tok.empty() || errno != 0 || end != tok.c_str() + tok.size()) {
        err = "invalid integer '" + tok + "'";
        return false;
    }
    out = v;
    return true;
}

bool to_bool(const std::string& tok, bool& out, std::string& err) {
    if (tok == "true") {
        out = true;
        return true;
    }
    if (tok == "false") {
        out = false;
        return true;
    }
    err = "invalid boolean '" + tok + "': expected true or false";
    return false;
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> tokens;
    bool json = false;
    for (int i = 1; i < argc; ++i) {
        std::string tok = argv[i];
        if (tok == "--json")
            json = true;
        else if (tok == "--help" || tok == "-h") {
            std::fputs(kUsage, stdout);
            return 0;
        } else {
            tokens.push_back(tok);
        }
    }
    if (tokens.empty()) {
        std::fputs(kUsage, stderr);
        return 2;
    }

    std::string cmd = tokens[0];
    std::vector<std::string> rest(tokens.begin() + 1, tokens.end());
    std::string err;
    wk_report* rep = nullptr;

    if (cmd == "hilbert") {
        Args args;
        if (!gather(rest, {"place"}, args, err) || !expect_count(args, 2, "hilbert <a> <b>", err))
            return parse_error(err);
        const char* place = nullptr;
        auto it = args.options.find("place");
        if (it != args.options.end()) place = it->second.c_str();
        wk_status st = wk_cmd_hilbert(args.positional[0].c_str(), args.positional[1].c_str(),
                                      place, &rep);
        return st == WK_OK ? emit(rep, json) : status_exit(st);
    }

    if (cmd == "conic") {
        if (rest.empty()) return parse_error("conic needs a subcommand: classify, compare");
        std::string sub = rest[0];
        std::vector<std::string> sub_rest(rest.begin() + 1, rest.end());
        Args args;
        if (sub == "classify") {
            if (!gather(sub_rest, {}, args, err) ||
                !expect_count(args, 2, "conic classify <a> <b>", err))
                return parse_error(err);
            wk_status st = wk_cmd_conic_classify(args.positional[0].c_str(),
                                                 args.positional[1].c_str(), &rep);
            return st == WK_OK ? emit(rep, json) : status_exit(st);
        }
        if (sub == "compare") {
            if (!gather(sub_rest, {}, args, err) ||
                !expect_count(args, 4, "conic compare <a> <b> <a'> <b'>", err))
                return parse_error(err);
            wk_status st = wk_cmd_conic_compare(args.positional[0].c_str(),
                                                args.positional[1].c_str(),
                                                args.positional[2].c_str(),
                                                args.positional[3].c_str(), &rep);
            return st == WK_OK ? emit(rep, json) : status_exit(st);
        }
        return parse_error("unknown conic subcommand '" + sub + "'");
    }

    if (cmd == "quadric") {
        if (rest.empty())
            return parse_error("quadric needs a subcommand: classify, compare, kernel");
        std::string sub = rest[0];
        std::vector<std::string> sub_rest(rest.begin() + 1, rest.end());
        Args args;
        if (sub == "classify") {
            if (!gather(sub_rest, {}, args, err) ||
                !expect_count(args, 1, "quadric classify <form>", err))
                return parse_error(err);
            wk_status st = wk_cmd_quadric_classify(args.positional[0].c_str(), &rep);
            return st == WK_OK ? emit(rep, json) : status_exit(st);
        }
        if (sub == "compare") {
            if (!gather(sub_rest, {}, args, err) ||
                !expect_count(args, 2, "quadric compare <form> <form'>", err))
                return parse_error(err);
            wk_status st = wk_cmd_quadric_compare(args.positional[0].c_str(),
                                                  args.positional[1].c_str(), &rep);
            return st == WK_OK ? emit(rep, json) : status_exit(st);
        }
        if (sub == "kernel") {
            if (!gather(sub_rest, {"ext"}, args, err) ||
                !expect_count(args, 1, "quadric kernel <form>", err))
                return parse_error(err);
            const char* ext = nullptr;
            auto it = args.options.find("ext");
            if (it != args.options.end()) ext = it->second.c_str();
            wk_status st = wk_cmd_quadric_kernel(args.positional[0].c_str(), ext, &rep);
            return st == WK_OK ? emit(rep, json) : status_exit(st);
        }
        return parse_error("unknown quadric subcommand '" + sub + "'");
    }

    if (cmd == "sb") {
        if (rest.empty()) return parse_error("sb needs a subcommand: compare, vs-quadric");
        std::string sub = rest[0];
        std::vector<std::string> sub_rest(rest.begin() + 1, rest.end());
        Args args;
        if (sub == "compare") {
            if (!gather(sub_rest, {"dim"}, args, err) ||
                !expect_count(args, 2, "sb compare <class> <class'>", err))
                return parse_error(err);
            auto it = args.options.find("dim");
            if (it == args.options.end()) return parse_error("sb compare needs --dim n");
            int64_t dim = 0;
            if (!to_int64(it->second, dim, err)) return parse_error(err);
            wk_status st = wk_cmd_sb_compare(args.positional[0].c_str(),
                                             args.positional[1].c_str(), dim, &rep);
            return st == WK_OK ? emit(rep, json) : status_exit(st);
        }
        if (sub == "vs-quadric") {
            if (!gather(sub_rest, {}, args, err) ||
                !expect_count(args, 2, "sb vs-quadric <class> <form>", err))
                return parse_error(err);
            wk_status st = wk_cmd_sb_vs_quadric(args.positional[0].c_str(),
                                                args.positional[1].c_str(), &rep);
            return st == WK_OK ? emit(rep, json) : status_exit(st);
        }
        return parse_error("unknown sb subcommand '" + sub + "'");
    }

    if (cmd == "genus1") {
        if (rest.empty()) return parse_error("genus1 needs a subcommand: orbit, gate");
        std::string sub = rest[0];
        std::vector<std::string> sub_rest(rest.begin() + 1, rest.end());
        Args args;
        if (sub == "orbit") {
            if (!gather(sub_rest, {}, args, err) ||
                !expect_count(args, 2, "genus1 orbit <m> <a>", err))
                return parse_error(err);
            int64_t m = 0, a = 0;
            if (!to_int64(args.positional[0], m, err) || !to_int64(args.positional[1], a, err))
                return parse_error(err);
            wk_status st = wk_cmd_genus1_orbit(m, a, &rep);
            return st == WK_OK ? emit(rep, json) : status_exit(st);
        }
        if (sub == "gate") {
            if (!gather(sub_rest, {"non-cm", "isolated-or-finite"}, args, err) ||
                !expect_count(args, 1, "genus1 gate <period>", err))
                return parse_error(err);
            int64_t period = 0;
            if (!to_int64(args.positional[0], period, err)) return parse_error(err);
            auto cm = args.options.find("non-cm");
            auto iso = args.options.find("isolated-or-finite");
            if (cm == args.options.end() || iso == args.options.end())
                return parse_error("genus1 gate needs --non-cm and --isolated-or-finite");
            bool non_cm = false, isolated = false;
            if (!to_bool(cm->second, non_cm, err) || !to_bool(iso->second, isolated, err))
                return parse_error(err);
            wk_status st = wk_cmd_genus1_gate(period, non_cm ? 1 : 0, isolated ? 1 : 0, &rep);
            return st == WK_OK ? emit(rep, json) : status_exit(st);
        }
        return parse_error("unknown genus1 subcommand '" + sub + "'");
    }

    return parse_error("unknown command '" + cmd + "'");
}
