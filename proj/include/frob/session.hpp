// SPDX-License-Identifier: Apache-2.0
//
// Session scripting layer: a small statement language declaring the ring,
// named ideals of A (truncating semantics, written with 'f') and named
// finitely presented F-modules (carrying semantics, written with 'F'),
// plus a command interpreter producing text or JSON reports.

#ifndef FROB_SESSION_HPP
#define FROB_SESSION_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "frob/errors.hpp"
#include "frob/fmodule.hpp"
#include "frob/oracle.hpp"
#include "frob/poly.hpp"

namespace frob {

struct SessionOptions {
    std::uint64_t cap = 50;        // Buchberger degree cap
    std::uint64_t terms = 10;      // series terms printed by default
    bool json = false;
    bool allow_truncated = false;  // report truncated analyses instead of failing
};

struct Session {
    std::optional<RingContext> ctx;
    std::map<std::string, std::vector<OperatorPoly>> ideals;  // truncating, in A
    std::map<std::string, FPresentation> presentations;       // carrying, in F^t
    SessionOptions options;
};

namespace cli_detail {

struct Token {
    enum class Kind { ident, integer, punct, end };
    Kind kind = Kind::end;
    std::string text;          // ident text or single punct char
    std::uint64_t value = 0;   // integer value
    std::size_t line = 1, col = 1;
};

inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](char c) {
        if (c == '\n') { ++line; col = 1; } else ++col;
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '#') { // comment to end of line
            while (i < src.size() && src[i] != '\n') { advance(src[i]); ++i; }
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) { advance(c); ++i; continue; }
        Token t;
        t.line = line;
        t.col = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Kind::ident;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
                t.text += src[i];
                advance(src[i]);
                ++i;
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Kind::integer;
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
                t.text += src[i];
                advance(src[i]);
                ++i;
            }
            try {
                t.value = std::stoull(t.text);
            } catch (const std::exception&) {
                throw parse_error("integer literal out of range: " + t.text, t.line, t.col);
            }
        } else if (std::string(";=()[],+-*^").find(c) != std::string::npos) {
            t.kind = Token::Kind::punct;
            t.text = std::string(1, c);
            advance(c);
            ++i;
        } else {
            throw parse_error(std::string("unexpected character '") + c + "'", line, col);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.kind = Token::Kind::end;
    end.line = line;
    end.col = col;
    out.push_back(end);
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(tokenize(src)) {}

    Session parse() {
        Session s;
        while (peek().kind != Token::Kind::end) statement(s);
        return s;
    }

    // Parses a single polynomial expression (for round-trip tests and ad-hoc use).
    OperatorPoly parse_polynomial(const RingContext& ctx, Semantics sem) {
        OperatorPoly g = poly(ctx, sem);
        expect_end();
        return g;
    }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;

    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg, const Token& at) const {
        throw parse_error(msg, at.line, at.col);
    }

    bool at_punct(char c) const {
        return peek().kind == Token::Kind::punct && peek().text[0] == c;
    }

    void expect_punct(char c) {
        if (!at_punct(c)) fail(std::string("expected '") + c + "'", peek());
        next();
    }

    bool at_keyword(const std::string& kw) const {
        return peek().kind == Token::Kind::ident && peek().text == kw;
    }

    void expect_keyword(const std::string& kw) {
        if (!at_keyword(kw)) fail("expected '" + kw + "'", peek());
        next();
    }

    std::uint64_t expect_integer() {
        if (peek().kind != Token::Kind::integer) fail("expected an integer", peek());
        return next().value;
    }

    std::string expect_name() {
        if (peek().kind != Token::Kind::ident) fail("expected a name", peek());
        return next().text;
    }

    void expect_end() {
        if (peek().kind != Token::Kind::end) fail("unexpected trailing input", peek());
    }

    const RingContext& ring_of(const Session& s, const Token& at) const {
        if (!s.ctx) fail("no ring declared; write 'ring p=<prime> n=<count>;' first", at);
        return *s.ctx;
    }

    void statement(Session& s) {
        const Token& t = peek();
        if (at_keyword("ring")) ring_stmt(s);
        else if (at_keyword("ideal")) ideal_stmt(s);
        else if (at_keyword("fmodule")) fmodule_stmt(s);
        else if (at_keyword("option")) option_stmt(s);
        else fail("expected a statement (ring, ideal, fmodule, or option)", t);
    }

    void ring_stmt(Session& s) {
        const Token& at = peek();
        next(); // ring
        expect_keyword("p");
        expect_punct('=');
        std::uint64_t p = expect_integer();
        expect_keyword("n");
        expect_punct('=');
        std::uint64_t n = expect_integer();
        expect_punct(';');
        if (p > 1000000) fail("p is unreasonably large", at);
        if (n > 64) fail("n is unreasonably large", at);
        try {
            s.ctx = RingContext(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(n));
        } catch (const std::invalid_argument& e) {
            fail(e.what(), at);
        }
    }

    void ideal_stmt(Session& s) {
        next(); // ideal
        std::string name = expect_name();
        expect_punct('=');
        expect_punct('(');
        const RingContext& ctx = ring_of(s, peek());
        std::vector<OperatorPoly> gens;
        if (!at_punct(')')) {
            gens.push_back(poly(ctx, Semantics::truncating));
            while (at_punct(',')) {
                next();
                gens.push_back(poly(ctx, Semantics::truncating));
            }
        }
        expect_punct(')');
        expect_punct(';');
        s.ideals.insert_or_assign(std::move(name), std::move(gens));
    }

    void fmodule_stmt(Session& s) {
        next(); // fmodule
        std::string name = expect_name();
        expect_keyword("gens");
        const Token& gens_at = peek();
        std::uint64_t rank = expect_integer();
        if (rank == 0 || rank > 1024) fail("gens count must be between 1 and 1024", gens_at);
        std::vector<std::int64_t> shifts(rank, 0);
        if (at_keyword("shifts")) {
            next();
            expect_punct('(');
            shifts.clear();
            shifts.push_back(static_cast<std::int64_t>(expect_integer()));
            while (at_punct(',')) {
                next();
                shifts.push_back(static_cast<std::int64_t>(expect_integer()));
            }
            expect_punct(')');
            if (shifts.size() != rank) fail("shift count must equal the gens count", gens_at);
        }
        FreeModuleShape shape(static_cast<std::uint32_t>(rank), std::move(shifts));
        expect_keyword("relations");
        expect_punct('(');
        const RingContext& ctx = ring_of(s, peek());
        std::vector<ModuleVector> relations;
        if (!at_punct(')')) {
            relations.push_back(vec(ctx, shape));
            while (at_punct(',')) {
                next();
                relations.push_back(vec(ctx, shape));
            }
        }
        expect_punct(')');
        expect_punct(';');
        try {
            s.presentations.insert_or_assign(std::move(name),
                                             FPresentation(ctx, shape, std::move(relations)));
        } catch (const std::invalid_argument& e) {
            fail(e.what(), peek());
        }
    }

    void option_stmt(Session& s) {
        next(); // option
        const Token& key_at = peek();
        std::string key = expect_name();
        expect_punct('=');
        if (key == "cap" || key == "terms") {
            std::uint64_t v = expect_integer();
            if (v == 0) fail("option " + key + " must be positive", key_at);
            (key == "cap" ? s.options.cap : s.options.terms) = v;
        } else if (key == "format") {
            std::string v = expect_name();
            if (v == "json") s.options.json = true;
            else if (v == "text") s.options.json = false;
            else fail("option format must be 'json' or 'text'", key_at);
        } else if (key == "allow_truncated") {
            std::string v = expect_name();
            if (v == "true") s.options.allow_truncated = true;
            else if (v == "false") s.options.allow_truncated = false;
            else fail("option allow_truncated must be 'true' or 'false'", key_at);
        } else {
            fail("unknown option '" + key + "'", key_at);
        }
        expect_punct(';');
    }

    ModuleVector vec(const RingContext& ctx, const FreeModuleShape& shape) {
        const Token& at = peek();
        expect_punct('[');
        std::vector<OperatorPoly> entries;
        entries.push_back(poly(ctx, Semantics::carrying));
        while (at_punct(',')) {
            next();
            entries.push_back(poly(ctx, Semantics::carrying));
        }
        expect_punct(']');
        if (entries.size() != shape.rank)
            fail("relation vector has " + std::to_string(entries.size()) +
                     " entries; the module has " + std::to_string(shape.rank) + " generators",
                 at);
        ModuleVector v = ModuleVector::zero(ctx, Semantics::carrying, shape);
        for (std::uint32_t k = 0; k < shape.rank; ++k)
            v = add(v, ModuleVector::embed(entries[k], k, shape));
        return v;
    }

    // poly := ['-'] term (('+'|'-') term)*
    OperatorPoly poly(const RingContext& ctx, Semantics sem) {
        bool negate = false;
        if (at_punct('-')) { next(); negate = true; }
        OperatorPoly g = term(ctx, sem);
        if (negate) g = scale(detail::mod_p(-1, ctx.p), g);
        while (at_punct('+') || at_punct('-')) {
            bool minus = next().text[0] == '-';
            OperatorPoly h = term(ctx, sem);
            g = minus ? sub(g, h) : add(g, h);
        }
        return g;
    }

    bool at_factor_start() const {
        return peek().kind == Token::Kind::ident || peek().kind == Token::Kind::integer ||
               at_punct('(');
    }

    // term := factor (['*'] factor)*   -- juxtaposition is accepted
    OperatorPoly term(const RingContext& ctx, Semantics sem) {
        OperatorPoly g = factor(ctx, sem);
        for (;;) {
            if (at_punct('*')) {
                next();
                g = mul(g, factor(ctx, sem));
            } else if (at_factor_start()) {
                g = mul(g, factor(ctx, sem));
            } else {
                break;
            }
        }
        return g;
    }

    // factor := INT | '(' poly ')' | word-run with optional '^' INT on its last symbol
    OperatorPoly factor(const RingContext& ctx, Semantics sem) {
        if (peek().kind == Token::Kind::integer) {
            const Token& t = next();
            std::uint32_t c = static_cast<std::uint32_t>(t.value % ctx.p);
            return OperatorPoly::term(c, FrobMonomial::identity(ctx), sem);
        }
        if (at_punct('(')) {
            next();
            OperatorPoly g = poly(ctx, sem);
            expect_punct(')');
            return g;
        }
        if (peek().kind != Token::Kind::ident) fail("expected a factor", peek());
        return word_run(ctx, sem);
    }

    // A run of variable / Frobenius symbols written as one identifier, e.g.
    // "xfx" or "x2" or "yF".  A following '^' INT applies to the last symbol.
    OperatorPoly word_run(const RingContext& ctx, Semantics sem) {
        const Token tok = next();
        const std::string& w = tok.text;
        struct Symbol { bool frob; std::uint32_t var; std::size_t col; };
        std::vector<Symbol> symbols;
        std::size_t i = 0;
        while (i < w.size()) {
            std::size_t col = tok.col + i;
            char c = w[i];
            if (c == 'f') {
                if (sem == Semantics::carrying)
                    throw parse_error("'f' denotes the graded symbol and is only valid inside "
                                      "'ideal' generators; write 'F' in module relations",
                                      tok.line, col);
                symbols.push_back({true, 0, col});
                ++i;
            } else if (c == 'F') {
                if (sem == Semantics::truncating)
                    throw parse_error("'F' denotes the Frobenius operator and is only valid inside "
                                      "'fmodule' relations; write 'f' in ideal generators",
                                      tok.line, col);
                symbols.push_back({true, 0, col});
                ++i;
            } else if (c == 'x' || c == 'y' || c == 'z') {
                std::uint64_t index;
                ++i;
                if (c == 'x' && i < w.size() && std::isdigit(static_cast<unsigned char>(w[i]))) {
                    index = 0;
                    while (i < w.size() && std::isdigit(static_cast<unsigned char>(w[i]))) {
                        index = index * 10 + (w[i] - '0');
                        if (index > 1u << 20) throw parse_error("variable index out of range", tok.line, col);
                        ++i;
                    }
                } else {
                    index = static_cast<std::uint64_t>(c - 'x') + 1;
                }
                if (index < 1 || index > ctx.n)
                    throw parse_error("variable index " + std::to_string(index) + " exceeds n = " +
                                          std::to_string(ctx.n),
                                      tok.line, col);
                symbols.push_back({false, static_cast<std::uint32_t>(index - 1), col});
            } else {
                throw parse_error(std::string("unknown symbol '") + c + "' in word", tok.line, col);
            }
        }
        std::uint64_t last_exp = 1;
        if (at_punct('^')) {
            next();
            const Token& e = peek();
            last_exp = expect_integer();
            if (last_exp > 1u << 20) fail("exponent out of range", e);
        }
        // multiply the symbols out left to right; truncating products may vanish
        std::optional<FrobMonomial> acc = FrobMonomial::identity(ctx);
        auto mul_symbol = [&](const Symbol& sym, std::uint64_t count) {
            for (std::uint64_t k = 0; acc && k < count; ++k) {
                FrobMonomial m = sym.frob ? FrobMonomial::f_power(1, ctx)
                                          : FrobMonomial::variable(sym.var, 1, ctx);
                if (sem == Semantics::truncating) acc = mul_trunc(*acc, m);
                else acc = mul_carry(*acc, m);
            }
        };
        for (std::size_t k = 0; k < symbols.size(); ++k)
            mul_symbol(symbols[k], k + 1 == symbols.size() ? last_exp : 1);
        if (!acc) return OperatorPoly::zero(ctx, sem); // vanished in A
        return OperatorPoly::term(1, *acc, sem);
    }
};

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

inline std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

template <typename T>
std::string to_string_via_stream(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

inline std::vector<std::string> initial_strings(const InitialModule& init) {
    std::vector<std::string> out;
    for (std::uint32_t pos = 0; pos < init.shape.rank; ++pos)
        for (const auto& m : init.gens[pos]) {
            std::string s = render(m);
            if (init.shape.rank > 1) s += "*e" + std::to_string(pos);
            out.push_back(std::move(s));
        }
    return out;
}

inline std::string json_int_array(const std::vector<IntPolynomial::Big>& v) {
    std::vector<std::string> parts;
    for (const auto& x : v) parts.push_back(to_string_via_stream(x));
    return "[" + join(parts, ",") + "]";
}

inline std::string json_string_array(const std::vector<std::string>& v) {
    std::vector<std::string> parts;
    for (const auto& s : v) parts.push_back(json_string(s));
    return "[" + join(parts, ",") + "]";
}

inline std::string series_line(const std::vector<IntPolynomial::Big>& v) {
    std::vector<std::string> parts;
    for (const auto& x : v) parts.push_back(to_string_via_stream(x));
    return join(parts, ", ");
}

inline std::string hs_json(const HilbertRational& hs) {
    std::ostringstream os;
    os << "{\"numerator\":" << json_int_array(hs.numerator.coefficients())
       << ",\"pole_power\":" << hs.pole_power << ",\"p\":" << hs.ctx.p << ",\"n\":" << hs.ctx.n
       << "}";
    return os.str();
}

inline std::string verdict_json(Verdict v) {
    switch (v) {
        case Verdict::yes: return "true";
        case Verdict::no: return "false";
        default: return "\"unknown\"";
    }
}

inline std::string verdict_text(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "unknown";
    }
}

} // namespace cli_detail

inline Session parse_session(const std::string& source) {
    return cli_detail::Parser(source).parse();
}

// Parses a single polynomial expression in the given semantics; used by the
// round-trip tests and handy for embedding.
inline OperatorPoly parse_expression(const std::string& source, const RingContext& ctx,
                                     Semantics sem) {
    return cli_detail::Parser(source).parse_polynomial(ctx, sem);
}

namespace cli_detail {

struct CommandArgs {
    std::string name;                 // object name, if any
    std::optional<std::uint64_t> cap;
    std::optional<std::uint64_t> terms;
    std::optional<std::uint64_t> degree;
};

inline CommandArgs parse_command_args(const std::vector<std::string>& words, std::size_t from,
                                      bool wants_name) {
    CommandArgs out;
    std::size_t i = from;
    if (wants_name) {
        if (i >= words.size()) throw parse_error("command needs an object name");
        out.name = words[i++];
    }
    auto read_value = [&](const std::string& key) {
        if (i >= words.size()) throw parse_error("'" + key + "' needs a value");
        std::uint64_t v;
        try {
            v = std::stoull(words[i]);
        } catch (const std::exception&) {
            throw parse_error("'" + key + "' needs an integer, got '" + words[i] + "'");
        }
        ++i;
        return v;
    };
    while (i < words.size()) {
        const std::string key = words[i++];
        if (key == "cap") out.cap = read_value(key);
        else if (key == "terms") out.terms = read_value(key);
        else if (key == "degree") out.degree = read_value(key);
        else throw parse_error("unexpected command argument '" + key + "'");
    }
    return out;
}

inline AnalysisReport report_for(const Session& s, const std::string& name, std::uint64_t cap) {
    if (auto it = s.presentations.find(name); it != s.presentations.end())
        return analyze(it->second, cap);
    if (auto it = s.ideals.find(name); it != s.ideals.end()) {
        const RingContext& ctx = *s.ctx;
        FreeModuleShape shape(1);
        std::vector<ModuleVector> gens;
        for (const auto& g : it->second)
            if (!g.is_zero()) gens.push_back(ModuleVector::embed(g, 0, shape));
        return analyze_generators(gens, ctx, Semantics::truncating, shape, cap);
    }
    throw parse_error("unknown ideal or fmodule '" + name + "'");
}

inline void require_complete_or_allowed(const AnalysisReport& report, const Session& s) {
    if (report.groebner.status != BasisStatus::complete && !s.options.allow_truncated)
        throw truncated_result(
            "Buchberger hit the degree cap " + std::to_string(report.groebner.cap) +
            "; raise 'cap' or pass allow_truncated to accept partial results");
}

inline std::string format_analysis(const AnalysisReport& report, const Session& s) {
    const bool complete = report.groebner.status == BasisStatus::complete;
    const auto initial = initial_strings(report.initial);
    std::ostringstream os;
    if (s.options.json) {
        os << "{\"initial\":" << json_string_array(initial);
        if (complete) {
            os << ",\"hs\":" << hs_json(*report.hs) << ",\"delta\":" << *report.delta_value
               << ",\"multiplicity\":"
               << json_string(to_string_via_stream(*report.multiplicity_value));
        } else {
            os << ",\"truncated_hilbert\":" << json_int_array(report.truncated_hilbert);
        }
        os << ",\"holonomic\":" << verdict_json(report.holonomic)
           << ",\"great\":" << verdict_json(report.great) << ",\"status\":"
           << (complete ? "\"complete\"" : "\"truncated\"") << "}";
        return os.str();
    }
    os << "status: " << (complete ? "complete" : "truncated") << "\n";
    os << "initial" << (complete ? "" : " (partial)") << ": "
       << (initial.empty() ? "(0)" : join(initial, ", ")) << "\n";
    if (complete) {
        os << "hilbert numerator: " << json_int_array(report.hs->numerator.coefficients()) << "\n";
        os << "pole power: " << report.hs->pole_power << "\n";
        os << "delta: " << *report.delta_value << "\n";
        os << "multiplicity: " << *report.multiplicity_value << "\n";
    } else {
        os << "hilbert function (degrees 0.." << report.truncated_hilbert.size() - 1
           << "): " << series_line(report.truncated_hilbert) << "\n";
    }
    os << "holonomic: " << verdict_text(report.holonomic) << "\n";
    os << "great: " << verdict_text(report.great);
    return os.str();
}

inline std::string format_gb(const AnalysisReport& report, const Session& s) {
    const bool complete = report.groebner.status == BasisStatus::complete;
    std::vector<std::string> basis;
    for (const auto& g : report.groebner.elements) basis.push_back(render(g));
    const auto initial = initial_strings(report.initial);
    if (s.options.json) {
        std::ostringstream os;
        os << "{\"basis\":" << json_string_array(basis)
           << ",\"initial\":" << json_string_array(initial) << ",\"status\":"
           << (complete ? "\"complete\"" : "\"truncated\"")
           << ",\"robustness_bound\":" << report.groebner.trace.robustness_bound
           << ",\"pairs_processed\":" << report.groebner.trace.pairs_processed << "}";
        return os.str();
    }
    std::ostringstream os;
    os << "status: " << (complete ? "complete" : "truncated") << "\n";
    os << "basis:" << (basis.empty() ? " (empty)" : "") << "\n";
    for (const auto& b : basis) os << "  " << b << "\n";
    os << "initial: " << (initial.empty() ? "(0)" : join(initial, ", ")) << "\n";
    os << "robustness bound: " << report.groebner.trace.robustness_bound << "\n";
    os << "pairs processed: " << report.groebner.trace.pairs_processed;
    return os.str();
}

inline std::string format_hilbert(const AnalysisReport& report, const Session& s,
                                  std::uint64_t terms) {
    const bool complete = report.groebner.status == BasisStatus::complete;
    std::vector<IntPolynomial::Big> series;
    if (complete) {
        series = expand(*report.hs, terms == 0 ? 0 : terms - 1);
    } else {
        if (terms > report.truncated_hilbert.size())
            throw truncated_result("only " + std::to_string(report.truncated_hilbert.size()) +
                                   " truncated coefficients are available; raise 'cap'");
        series.assign(report.truncated_hilbert.begin(),
                      report.truncated_hilbert.begin() + static_cast<std::ptrdiff_t>(terms));
    }
    if (s.options.json) {
        std::ostringstream os;
        os << "{\"series\":" << json_int_array(series) << ",\"status\":"
           << (complete ? "\"complete\"" : "\"truncated\"");
        if (complete) os << ",\"hs\":" << hs_json(*report.hs);
        os << "}";
        return os.str();
    }
    return series_line(series);
}

} // namespace cli_detail

// Executes one command against the session.  Commands:
//   analyze <name> [cap N]      full report (initial module, series, delta, e)
//   gb <name> [cap N]           Groebner basis and initial module
//   hilbert <name> [terms N]    series coefficients
//   ring-hs [terms N]           Hilbert series of A itself
//   count <degree>              standard monomials of A in one degree
//   verify-de [degree D]        enumerated counts vs. the closed form
inline std::string run(const std::string& command, Session& session) {
    using namespace cli_detail;
    std::vector<std::string> words;
    {
        std::istringstream is(command);
        std::string w;
        while (is >> w) words.push_back(w);
    }
    if (words.empty()) throw parse_error("empty command");
    const std::string& cmd = words[0];

    auto need_ring = [&]() -> const RingContext& {
        if (!session.ctx) throw parse_error("no ring declared for command '" + cmd + "'");
        return *session.ctx;
    };

    if (cmd == "analyze" || cmd == "gb") {
        auto args = parse_command_args(words, 1, true);
        need_ring();
        auto report = report_for(session, args.name, args.cap.value_or(session.options.cap));
        require_complete_or_allowed(report, session);
        return cmd == "analyze" ? format_analysis(report, session) : format_gb(report, session);
    }
    if (cmd == "hilbert") {
        auto args = parse_command_args(words, 1, true);
        need_ring();
        auto report = report_for(session, args.name, args.cap.value_or(session.options.cap));
        require_complete_or_allowed(report, session);
        return format_hilbert(report, session, args.terms.value_or(session.options.terms));
    }
    if (cmd == "ring-hs") {
        auto args = parse_command_args(words, 1, false);
        const RingContext& ctx = need_ring();
        std::uint64_t terms = args.terms.value_or(session.options.terms);
        HilbertRational hs(IntPolynomial::constant(1), ctx.n, ctx);
        auto series = expand(hs, terms == 0 ? 0 : terms - 1);
        if (session.options.json) {
            std::ostringstream os;
            os << "{\"series\":" << json_int_array(series) << ",\"p\":" << ctx.p
               << ",\"n\":" << ctx.n << "}";
            return os.str();
        }
        return series_line(series);
    }
    if (cmd == "count") {
        if (words.size() != 2) throw parse_error("usage: count <degree>");
        std::uint64_t degree;
        try {
            degree = std::stoull(words[1]);
        } catch (const std::exception&) {
            throw parse_error("count needs an integer degree, got '" + words[1] + "'");
        }
        const RingContext& ctx = need_ring();
        InitialModule zero(ctx, FreeModuleShape(1));
        auto c = count_standard_monomials(zero, static_cast<std::int64_t>(degree));
        if (session.options.json) {
            std::ostringstream os;
            os << "{\"degree\":" << degree << ",\"count\":" << c << "}";
            return os.str();
        }
        return to_string_via_stream(c);
    }
    if (cmd == "verify-de") {
        auto args = parse_command_args(words, 1, false);
        const RingContext& ctx = need_ring();
        std::uint64_t D = args.degree.value_or(9);
        HilbertRational hs(IntPolynomial::constant(1), ctx.n, ctx);
        auto series = expand(hs, D);
        bool ok = true;
        std::uint64_t bad = 0;
        for (std::uint64_t d = 0; d <= D; ++d) {
            auto enumerated = oracle::monomials_of_degree(ctx, d).size();
            if (IntPolynomial::Big(enumerated) != series[d]) {
                ok = false;
                bad = d;
                break;
            }
        }
        if (session.options.json) {
            std::ostringstream os;
            os << "{\"ok\":" << (ok ? "true" : "false") << ",\"degree\":" << D
               << ",\"series\":" << json_int_array(series);
            if (!ok) os << ",\"first_mismatch\":" << bad;
            os << "}";
            return os.str();
        }
        if (ok)
            return "ok: enumerated monomial counts match the closed form through degree " +
                   std::to_string(D);
        return "MISMATCH at degree " + std::to_string(bad);
    }
    throw parse_error("unknown command '" + cmd + "'");
}

} // namespace frob

#endif // FROB_SESSION_HPP
