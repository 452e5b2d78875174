// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails.  Each criterion is independent and exceptions are turned
// into failures, so the binary always reports all eleven lines.

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "frob/fmodule.hpp"
#include "frob/oracle.hpp"
#include "frob/session.hpp"
#include "frob/syzygy.hpp"
#include "test_support.hpp"

using namespace frob;

namespace {

using BigVec = std::vector<IntPolynomial::Big>;

IntPolynomial ip(std::vector<long long> v) {
    std::vector<IntPolynomial::Big> c(v.begin(), v.end());
    return IntPolynomial(std::move(c));
}

FrobMonomial word(const std::string& w, const RingContext& ctx) {
    auto m = parse_word(w, ctx);
    if (!m) throw std::invalid_argument("word is zero: " + w);
    return *m;
}

InitialModule make_initial(const RingContext& ctx, const std::vector<std::string>& words) {
    InitialModule I(ctx, FreeModuleShape(1));
    for (const auto& w : words) I.gens[0].push_back(word(w, ctx));
    return I;
}

std::string series_str(const BigVec& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    return os.str();
}

BigVec counted(const InitialModule& I, std::size_t D) {
    BigVec out;
    for (std::size_t d = 0; d <= D; ++d)
        out.push_back(count_standard_monomials(I, static_cast<std::int64_t>(d)));
    return out;
}

// Keeps only generators not left-divisible by a smaller one.
InitialModule minimalize(const RingContext& ctx, const FreeModuleShape& shape,
                         std::vector<std::vector<FrobMonomial>> gens) {
    InitialModule I(ctx, shape);
    for (std::uint32_t pos = 0; pos < shape.rank; ++pos) {
        std::sort(gens[pos].begin(), gens[pos].end(),
                  [](const FrobMonomial& a, const FrobMonomial& b) { return compare(a, b) < 0; });
        for (const auto& m : gens[pos])
            if (!I.contains({m, pos})) I.gens[pos].push_back(m);
    }
    return I;
}

ModuleVector syzygy_vector(const MonomialSyzygy& s, const RingContext& ctx, std::uint32_t rank) {
    ModuleVector v(ctx, Semantics::truncating, FreeModuleShape(rank));
    for (const auto& t : s.terms)
        v.add_term({t.cofactor, static_cast<std::uint32_t>(t.index)}, t.coeff);
    return v;
}

// Completed Groebner bases collected by criteria 3-5 and re-examined by the
// robustness-certificate criterion.
std::vector<GroebnerBasis> g_completed_bases;

// ---------------------------------------------------------------------------

struct Outcome {
    bool pass;
    std::string message;
};

Outcome criterion1() {
    struct Case {
        std::uint32_t p, n;
        BigVec published;
        const char* note;
    };
    const std::vector<Case> cases = {
        {2, 1, {1, 2, 4, 7, 12, 20, 33, 54, 88, 143}, ""},
        {3, 1, {1, 2, 4, 8, 15, 28, 52, 96, 177, 326}, ""},
        {5, 1, {1, 2, 4, 8, 16, 32, 63, 124}, ""},
        // The printed (p, n) = (2, 2) series skips the t^5 term, so its
        // exponent labels are off by one from t^5 on; the value list below is
        // the closed form 1/((1-t)^2 (1-t(1+t)^2)), which matches enumeration.
        {2, 2, {1, 3, 8, 19, 43, 95, 207, 448, 966}, " [printed (2,2) display skips t^5; values matched against the closed form]"},
        {2, 3, {1, 4, 13, 38, 105, 283, 753, 1991}, ""},
        {3, 3, {1, 4, 13, 41, 126, 382, 1152}, ""},
    };
    std::string notes;
    for (const auto& c : cases) {
        RingContext ctx(c.p, c.n);
        const std::size_t D = c.published.size() - 1;
        BigVec closed = expand(HilbertRational(ip({1}), ctx.n, ctx), D);
        BigVec dp = counted(make_initial(ctx, {}), D);
        BigVec enumerated;
        for (std::size_t d = 0; d <= D; ++d)
            enumerated.push_back(oracle::monomials_of_degree(ctx, d).size());
        if (closed != c.published || dp != c.published || enumerated != c.published)
            return {false, "series mismatch at (p,n)=(" + std::to_string(c.p) + "," +
                               std::to_string(c.n) + "): closed form " + series_str(closed) +
                               ", counted " + series_str(dp) + ", enumerated " +
                               series_str(enumerated)};
        notes += c.note;
    }
    return {true, "closed form, counting and enumeration agree with the published series for "
                  "(p,n) in {(2,1),(3,1),(5,1),(2,2),(2,3),(3,3)}" + notes};
}

Outcome criterion2() {
    RingContext ctx(2, 1);
    BigVec series = expand(HilbertRational(ip({1}), 1, ctx), 30);
    // (1-t)(1-t-t^2) = 1 - 2t + t^3
    if (!verify_recurrence(series, ip({1, -2, 0, 1}), 1))
        return {false, "(1 - 2t + t^3) * HS_A does not vanish in degrees 1..30"};
    return {true, "(1 - 2t + t^3) * HS_A vanishes in degrees 1..30 at (p,n)=(2,1)"};
}

Outcome criterion3() {
    RingContext ctx(2, 1);
    FreeModuleShape shape(1);
    OperatorPoly g = parse_expression("xfxf + f + x", ctx, Semantics::truncating);
    ModuleVector gv = ModuleVector::embed(g, 0, shape);
    GroebnerBasis basis = buchberger({gv}, 50);
    if (basis.status != BasisStatus::complete) return {false, "Buchberger run did not complete"};
    g_completed_bases.push_back(basis);

    std::set<std::string> got;
    for (const auto& b : basis.elements) got.insert(render(b));
    const std::set<std::string> expect = {"xf + x^2", "x^3", "xfx^2 + f + x"};
    if (got != expect) {
        std::string s;
        for (const auto& w : got) s += w + "; ";
        return {false, "unexpected reduced basis: " + s};
    }

    // both-ways ideal check against the principal ideal A*g
    for (const auto& b : basis.elements)
        if (!oracle::brute_membership(b, {gv}, 10))
            return {false, "basis element " + render(b) + " is not in A*g by brute force"};
    if (!normal_form(gv, basis.elements).is_zero())
        return {false, "generator does not reduce to zero against its own basis"};

    // the published initial ideal (xfxf, xf, x^3) is refuted by the oracle:
    // xf is not a member of A*g, and g is not in A(xfxf, xf, x^3)
    std::vector<ModuleVector> published;
    for (const char* w : {"xfxf", "xf", "x^3"})
        published.push_back(ModuleVector::embed(
            OperatorPoly::term(1, word(w, ctx), Semantics::truncating), 0, shape));
    ModuleVector xf_vec = ModuleVector::embed(
        OperatorPoly::term(1, word("xf", ctx), Semantics::truncating), 0, shape);
    if (oracle::brute_membership(xf_vec, {gv}, 10))
        return {false, "oracle unexpectedly places xf inside A*g"};
    if (oracle::brute_membership(gv, published, 10))
        return {false, "oracle unexpectedly places the generator inside A(xfxf, xf, x^3)"};

    return {true, "A*(xfxf + f + x) has reduced basis {xf + x^2, x^3, xfx^2 + f + x} with "
                  "initial ideal (xf, x^3, xfx^2), confirmed by brute membership both ways "
                  "[FLAG: the published basis (g, xg, x^2g) with initial ideal (xfxf, xf, x^3) "
                  "is refuted: xf is not in A*g and g is not in A(xfxf, xf, x^3)]"};
}

Outcome criterion4() {
    RingContext ctx(2, 1);
    struct Case {
        std::vector<std::vector<std::string>> rels;
        std::vector<std::string> initial;
        IntPolynomial numerator;
    };
    const std::vector<Case> cases = {
        {{{"f", "1"}}, {"f", "fx", "x^4"}, ip({1, 0, -1})},           // R = F/F(F-1)
        {{{"x"}, {"xf", "1"}}, {"x", "xf"}, ip({1, 0, -1})},          // H^1_x
        {{{"xf", "1"}}, {"xf", "fx", "fx^2", "x^5"}, ip({1, 1, -1, -1})}, // R_x
    };
    std::vector<HilbertRational> series;
    for (const auto& c : cases) {
        std::vector<ModuleVector> rels;
        for (const auto& ws : c.rels) rels.push_back(detail::carrying_relation(ws, ctx));
        auto report = analyze(FPresentation(ctx, FreeModuleShape(1), rels));
        if (report.groebner.status != BasisStatus::complete)
            return {false, "localization run did not complete"};
        g_completed_bases.push_back(report.groebner);
        std::vector<std::string> init;
        for (const auto& m : report.initial.gens[0]) init.push_back(render(m));
        std::sort(init.begin(), init.end());
        auto expect = c.initial;
        std::sort(expect.begin(), expect.end());
        if (init != expect) return {false, "unexpected initial module for a localization module"};
        if (!same_series(*report.hs, HilbertRational(c.numerator, 0, ctx)))
            return {false, "unexpected Hilbert series for a localization module"};
        if (*report.delta_value != 0 || *report.multiplicity_value != 0)
            return {false, "localization module has delta != 0 or e != 0"};
        series.push_back(*report.hs);
    }
    // HS_{gr R_x} - t HS_{gr R} = HS_{gr H^1_x}
    if (!(series[2].numerator - series[0].numerator.shifted(1) == series[1].numerator) ||
        !check_unit_identity())
        return {false, "HS_{R_x} - t HS_R != HS_{H^1_x}"};
    return {true, "gr of F/F(F-1), F/F(x, xF-1), F/F(xF-1): initial modules (f,fx,x^4), "
                  "(x,xf), (xf,fx,fx^2,x^5); series (1-t^2)/(1-t-t^2) twice and "
                  "(1+t-t^2-t^3)/(1-t-t^2); delta = e = 0; HS_{R_x} - t HS_R = HS_{H^1_x}"};
}

Outcome criterion5() {
    std::mt19937 rng(8675309);
    std::size_t complete_runs = 0, attempts = 0;
    for (auto p : {2u, 3u})
        for (auto n : {1u, 2u}) {
            RingContext ctx(p, n);
            FreeModuleShape shape(1);
            std::size_t here = 0, local_attempts = 0;
            while (here < 13 && local_attempts < 100) {
                ++attempts;
                ++local_attempts;
                std::vector<ModuleVector> gens;
                int t = std::uniform_int_distribution<int>(1, 3)(rng);
                for (int k = 0; k < t; ++k) {
                    std::uint64_t deg = std::uniform_int_distribution<std::uint64_t>(1, 4)(rng);
                    auto pool = testing::enumerate_monomials(ctx, deg);
                    OperatorPoly g(ctx, Semantics::truncating);
                    int terms = std::uniform_int_distribution<int>(1, 3)(rng);
                    for (int j = 0; j < terms; ++j)
                        g.add_term(pool[std::uniform_int_distribution<std::size_t>(
                                       0, pool.size() - 1)(rng)],
                                   std::uniform_int_distribution<std::uint32_t>(1, p - 1)(rng));
                    if (!g.is_zero()) gens.push_back(ModuleVector::embed(g, 0, shape));
                }
                if (gens.empty()) continue;
                GroebnerBasis basis = buchberger(gens, 50);
                if (basis.status != BasisStatus::complete) continue;
                g_completed_bases.push_back(basis);
                InitialModule I = initial_module(basis);
                for (std::int64_t d = 0; d <= 8; ++d)
                    if (IntPolynomial::Big(oracle::graded_dim_quotient(ctx, shape, gens, d)) !=
                        count_standard_monomials(I, d))
                        return {false, "graded dimension mismatch at degree " + std::to_string(d) +
                                           " for (p,n)=(" + std::to_string(p) + "," +
                                           std::to_string(n) + ")"};
                ++complete_runs;
                ++here;
            }
        }
    if (complete_runs < 50)
        return {false, "only " + std::to_string(complete_runs) + " complete runs out of " +
                           std::to_string(attempts) + " attempts"};
    return {true, std::to_string(complete_runs) +
                      " random homogeneous ideals completed; graded dimensions of the quotient "
                      "match the standard-monomial counts in every degree <= 8"};
}

Outcome criterion6() {
    std::mt19937 rng(424242);
    std::size_t lists = 0, checked = 0;
    for (auto p : {2u, 3u}) {
        RingContext ctx(p, 1);
        for (int it = 0; it < 16; ++it) {
            std::vector<PositionedMonomial> gens;
            int t = std::uniform_int_distribution<int>(2, 4)(rng);
            std::uint32_t rank = std::uniform_int_distribution<std::uint32_t>(1, 2)(rng);
            for (int k = 0; k < t; ++k)
                gens.push_back({testing::random_monomial(rng, ctx, 4),
                                std::uniform_int_distribution<std::uint32_t>(0, rank - 1)(rng)});
            std::vector<ModuleVector> classified;
            for (const auto& s : generating_syzygies(gens))
                classified.push_back(
                    syzygy_vector(s, ctx, static_cast<std::uint32_t>(gens.size())));
            for (const auto& s : oracle::brute_syzygies(gens, ctx, 8)) {
                if (!oracle::brute_membership(s, classified, 8))
                    return {false, "brute-force syzygy " + render(s) +
                                       " is outside the span of the classified generators"};
                ++checked;
            }
            ++lists;
        }
    }
    return {true, std::to_string(checked) + " brute-force syzygies over " +
                      std::to_string(lists) +
                      " random monomial lists all lie in the span of the classified generators "
                      "(degree bound 8)"};
}

Outcome criterion7() {
    RingContext ctx(2, 1);
    std::string exps;
    for (int k = 1; k <= 4; ++k) {
        std::vector<std::string> words{"x"};
        std::string w = "x";
        for (int i = 1; i <= k; ++i) {
            w += "f";
            words.push_back(w);
        }
        auto [hs, diag] = hs_monomial_quotient(make_initial(ctx, words));
        if (delta(hs) != 0)
            return {false, "delta != 0 for k = " + std::to_string(k)};
        if (multiplicity(hs) != BigRational(1 - k))
            return {false, "multiplicity != 1 - k for k = " + std::to_string(k)};
        std::vector<long long> num(static_cast<std::size_t>(k) + 2, -1);
        num[0] = 1;
        num[1] = 0;
        if (!same_series(hs, HilbertRational(ip(num), 0, ctx)))
            return {false, "unexpected numerator for k = " + std::to_string(k)};
        exps += (k > 1 ? "; " : "") + std::to_string(k) + ": 1";
        for (int i = 1; i <= k; ++i) exps += " - t^" + std::to_string(i + 1);
    }
    return {true, "A/(x, xf, ..., xf^k) for k = 1..4 has delta = 0, e = 1 - k, numerators " + exps};
}

// Criteria 8 and 9 share the random monomial-quotient suite.
std::vector<std::pair<InitialModule, HilbertRational>> g_quotient_suite;

Outcome criterion8() {
    std::mt19937 rng(1234321);
    RingContext ctx(2, 1);
    std::size_t pairs = 0;
    auto random_quotient = [&]() {
        std::vector<FrobMonomial> gens;
        int t = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int k = 0; k < t; ++k) gens.push_back(testing::random_monomial(rng, ctx, 5));
        return minimalize(ctx, FreeModuleShape(1), {std::move(gens)});
    };
    while (pairs < 20) {
        InitialModule a = random_quotient(), b = random_quotient();
        if (a.is_zero() || b.is_zero()) continue; // a unit generator kills the quotient
        auto [hs_a, diag_a] = hs_monomial_quotient(a);
        auto [hs_b, diag_b] = hs_monomial_quotient(b);
        if (hs_a.numerator.is_zero() || hs_b.numerator.is_zero()) continue;

        InitialModule sum(ctx, FreeModuleShape(2, {0, 0}));
        sum.gens[0] = a.gens[0];
        sum.gens[1] = b.gens[0];
        auto [hs_s, diag_s] = hs_monomial_quotient(sum);
        g_quotient_suite.emplace_back(a, hs_a);
        g_quotient_suite.emplace_back(sum, hs_s);

        // HS adds
        const std::uint32_t d = std::max(hs_a.pole_power, hs_b.pole_power);
        IntPolynomial lifted = hs_a.numerator * one_minus_t_power(d - hs_a.pole_power) +
                               hs_b.numerator * one_minus_t_power(d - hs_b.pole_power);
        if (!same_series(hs_s, HilbertRational(lifted, d, ctx)))
            return {false, "Hilbert series is not additive over a direct sum"};
        // delta is the max, e adds on ties (unless the tied multiplicities cancel)
        std::uint32_t da = delta(hs_a), db = delta(hs_b), ds = delta(hs_s);
        if (da != db) {
            if (ds != std::max(da, db)) return {false, "delta of a direct sum is not the max"};
            if (multiplicity(hs_s) != multiplicity(da > db ? hs_a : hs_b))
                return {false, "e of a direct sum does not come from the dominant summand"};
        } else {
            BigRational e_sum = multiplicity(hs_a) + multiplicity(hs_b);
            if (e_sum != 0 && (ds != da || multiplicity(hs_s) != e_sum))
                return {false, "e of a direct sum is not additive on tied delta"};
            if (e_sum == 0 && ds >= da && da > 0)
                return {false, "delta did not drop although the tied multiplicities cancel"};
        }
        ++pairs;
    }
    return {true, std::to_string(pairs) + " random pairs of monomial quotients: Hilbert series "
                                          "add, delta is the max, e adds on tied delta"};
}

Outcome criterion9() {
    // the Theta-recurrence kernel must vanish beyond the stabilization bound;
    // hs_monomial_quotient enforces this internally and throws otherwise, so
    // the strongest observable statement is exact agreement between the
    // closed-form expansion and direct counting through the whole window.
    RingContext ctx(2, 1);
    for (const auto& words : std::vector<std::vector<std::string>>{
             {}, {"f", "fx", "x^4"}, {"x", "xf"}, {"xf", "fx", "fx^2", "x^5"},
             {"x", "xf", "xff", "xfff"}}) {
        auto I = make_initial(ctx, words);
        auto [hs, diag] = hs_monomial_quotient(I);
        std::size_t range = static_cast<std::size_t>(diag.stabilization_bound) +
                            ctx.n * (ctx.p - 1) + 5;
        if (expand(hs, range) != counted(I, range))
            return {false, "expansion deviates from direct counts inside the kernel window"};
    }
    std::size_t spot = 0;
    for (const auto& [I, hs] : g_quotient_suite) {
        if (spot++ % 8 != 0) continue; // spot-check the random suite
        auto [hs2, diag] = hs_monomial_quotient(I);
        std::size_t range = static_cast<std::size_t>(diag.stabilization_bound) +
                            ctx.n * (ctx.p - 1) + 5;
        if (expand(hs2, range) != counted(I, range))
            return {false, "expansion deviates from direct counts on the random suite"};
    }
    return {true, "Theta-recurrence kernel vanished beyond the stabilization bound on every run "
                  "(enforced internally); expansions equal direct counts through the full window "
                  "on the published quotients and a random sample"};
}

Outcome criterion10() {
    // The certificate is the A-side termination device: it is enforced on
    // every element retained during a truncating run (breaches throw
    // invariant_violation, which would have failed criteria 3-5 already);
    // carrying runs terminate by the explicit degree cap instead.  Here the
    // final reduced bases are re-examined from the outside.
    std::size_t elements = 0, bases = 0;
    for (const auto& basis : g_completed_bases) {
        if (basis.sem != Semantics::truncating) continue;
        ++bases;
        const std::uint64_t C = basis.trace.robustness_bound;
        for (const auto& g : basis.elements) {
            const std::uint64_t rb = robustness(g);
            if (rb != 0 && rb + static_cast<std::uint64_t>(g.degree()) > C)
                return {false, "certificate violated: element " + render(g) +
                                   " has rb + deg > " + std::to_string(C)};
            ++elements;
        }
    }
    if (bases < 50)
        return {false, "too few completed truncating bases were collected: " +
                           std::to_string(bases)};
    return {true, "robustness certificate rb = 0 or rb + deg <= C holds for all " +
                      std::to_string(elements) + " elements across " + std::to_string(bases) +
                      " completed truncating bases (and was enforced on every retained element "
                      "during the runs)"};
}

Outcome criterion11() {
    RingContext ctx(2, 1);
    FreeModuleShape shape(1);
    for (const auto& rels : std::vector<std::vector<std::vector<std::string>>>{
             {{"f", "1"}}, {{"x"}, {"xf", "1"}}, {{"xf", "1"}}}) {
        std::vector<ModuleVector> relations;
        for (const auto& ws : rels) relations.push_back(detail::carrying_relation(ws, ctx));
        auto report = analyze(FPresentation(ctx, shape, relations));
        BigVec series = expand(*report.hs, 8);
        for (std::int64_t i = 0; i <= 8; ++i)
            if (IntPolynomial::Big(oracle::filtered_graded_dim(ctx, shape, relations, i)) !=
                series[static_cast<std::size_t>(i)])
                return {false, "filtered dimension mismatch at degree " + std::to_string(i)};
    }
    return {true, "filtered graded dimensions of the three localization presentations match "
                  "the Hilbert series expansion in every degree <= 8"};
}

} // namespace

int main() {
    const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
        {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8},
        {9, criterion9}, {10, criterion10}, {11, criterion11},
    };
    bool all_pass = true;
    for (const auto& [id, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all_pass = all_pass && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << o.message
                  << "\n";
    }
    return all_pass ? 0 : 1;
}
