// SPDX-License-Identifier: Apache-2.0
//
// Reduction and the degree-capped Buchberger loop, shared by both ring
// semantics:
//   * TRUNCATING (A): leading monomials are reduced with mul_trunc; the
//     robustness certificate rb(g) = 0 or rb(g) + deg(g) <= C guarantees
//     termination and is enforced on every retained element.
//   * CARRYING (F): the composite monomial filtration is used directly; the
//     leading monomial of an operator is the largest canonical monomial of
//     its support, so the same monomial syzygy tables drive S-elements.
//     Runs may legitimately fail to terminate; a degree cap turns those into
//     an explicit TRUNCATED status.
//
// S-elements are scheduled by ascending Schreyer pullback degree (an element
// of the free monoid over the module positions), FIFO within equal degrees.

#ifndef FROB_GROEBNER_HPP
#define FROB_GROEBNER_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "frob/errors.hpp"
#include "frob/monomial.hpp"
#include "frob/poly.hpp"
#include "frob/syzygy.hpp"

namespace frob {

enum class BasisStatus { complete, truncated };

struct GroebnerTrace {
    std::uint64_t robustness_bound = 0; // the constant C of the termination certificate
    std::uint64_t pairs_processed = 0;
    std::uint64_t max_degree_reached = 0;
};

struct GroebnerBasis {
    RingContext ctx;
    Semantics sem = Semantics::truncating;
    FreeModuleShape shape;
    std::vector<ModuleVector> elements; // monic, interreduced
    BasisStatus status = BasisStatus::complete;
    std::uint64_t cap = 0;
    GroebnerTrace trace;
};

struct InitialModule {
    RingContext ctx;
    FreeModuleShape shape;
    std::vector<std::vector<FrobMonomial>> gens; // per position, minimal, ascending
    bool complete = true;  // false: lower bound valid to degree `cap`
    std::uint64_t cap = 0;

    InitialModule() = default;
    InitialModule(const RingContext& c, const FreeModuleShape& s)
        : ctx(c), shape(s), gens(s.rank) {}

    bool is_zero() const {
        for (const auto& g : gens)
            if (!g.empty()) return false;
        return true;
    }

    // Is the positioned monomial a left multiple of a listed generator?
    bool contains(const PositionedMonomial& pm) const {
        for (const auto& a : gens[pm.pos])
            if (left_divide(pm.mono, a)) return true;
        return false;
    }
};

// ---------------------------------------------------------------------------
// Reduction
// ---------------------------------------------------------------------------

// Full reduction: repeatedly rewrites the largest reducible support term by
// the first basis element (in index order) whose leading monomial left-divides
// it.  In carrying semantics the cofactor is still found on leading monomials
// with truncating division, so the head cancels exactly and only smaller
// terms appear.
inline ModuleVector normal_form(ModuleVector g, const std::vector<ModuleVector>& basis) {
    const RingContext ctx = g.context();
    bool progress = true;
    while (progress && !g.is_zero()) {
        progress = false;
        for (const auto& [pm, coeff] : g.terms()) { // descending term order
            for (const auto& b : basis) {
                if (b.is_zero()) continue;
                auto [lc, lm] = b.leading_term();
                if (lm.pos != pm.pos) continue;
                auto c = left_divide(pm.mono, lm.mono);
                if (!c) continue;
                const std::uint32_t factor = coeff * detail::inverse_mod_p(lc, ctx.p) % ctx.p;
                g = sub(g, mul_term(factor, *c, b));
                progress = true;
                break;
            }
            if (progress) break; // restart at the (new) largest term
        }
    }
    return g;
}

namespace detail {

inline bool divides_lm(const PositionedMonomial& divisor, const PositionedMonomial& m) {
    return divisor.pos == m.pos && left_divide(m.mono, divisor.mono).has_value();
}

} // namespace detail

// Fully reduces every element against the others until a fixpoint: redundant
// elements vanish, divisible leading terms are rewritten away, and the result
// is the unique reduced basis of the same module, sorted ascending by leading
// term; idempotent.
inline std::vector<ModuleVector> interreduce(std::vector<ModuleVector> basis) {
    std::vector<ModuleVector> work;
    for (auto& g : basis)
        if (!g.is_zero()) work.push_back(g.monic());

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < work.size(); ++i) {
            std::vector<ModuleVector> others;
            for (std::size_t j = 0; j < work.size(); ++j)
                if (j != i) others.push_back(work[j]);
            ModuleVector r = normal_form(work[i], others);
            if (r.is_zero()) {
                work.erase(work.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
            if (!(r.terms() == work[i].terms())) {
                work[i] = r.monic();
                changed = true;
            }
        }
    }
    std::sort(work.begin(), work.end(), [](const ModuleVector& a, const ModuleVector& b) {
        return compare(a.leading_term().second, b.leading_term().second) < 0;
    });
    return work;
}

// ---------------------------------------------------------------------------
// Buchberger loop
// ---------------------------------------------------------------------------

inline GroebnerBasis buchberger(const std::vector<ModuleVector>& generators, std::uint64_t cap = 50) {
    if (generators.empty()) throw std::invalid_argument("buchberger: no generators");
    GroebnerBasis result{generators.front().context(), generators.front().semantics(),
                         generators.front().shape(), {}, BasisStatus::complete, cap, {}};
    const RingContext& ctx = result.ctx;
    const bool truncating = result.sem == Semantics::truncating;

    std::vector<ModuleVector> basis;
    for (const auto& g : generators) {
        if (g.is_zero()) continue; // zero generators are silently dropped
        if (g.leading_term().second.mono.degree() > cap)
            throw std::invalid_argument("buchberger: cap smaller than a generator degree");
        basis.push_back(g.monic());
    }
    if (basis.empty()) return result;

    // robustness certificate constant from the input generators
    std::uint64_t C = 0;
    for (const auto& g : basis)
        if (std::uint64_t rb = robustness(g); rb != 0)
            C = std::max(C, rb + g.leading_term().second.mono.degree());
    result.trace.robustness_bound = C;

    auto check_certificate = [&](const ModuleVector& g) {
        if (!truncating) return;
        const std::uint64_t rb = robustness(g);
        if (rb == 0) return;
        if (rb + g.leading_term().second.mono.degree() > C)
            throw invariant_violation("robustness certificate breach: rb + deg > C");
    };
    for (const auto& g : basis) check_certificate(g);

    // scheduling queue: ascending Schreyer degree, FIFO within a degree
    struct QueueEntry {
        SchreyerKey key;
        std::uint64_t seq;
        MonomialSyzygy syz;
    };
    struct QueueLess {
        bool operator()(const QueueEntry& a, const QueueEntry& b) const {
            if (int c = compare(a.key, b.key); c != 0) return c < 0;
            return a.seq < b.seq;
        }
    };
    std::set<QueueEntry, QueueLess> queue;
    std::uint64_t seq = 0;

    std::vector<PositionedMonomial> lms;
    for (const auto& g : basis) lms.push_back(g.leading_term().second);

    auto push_for = [&](std::size_t k) {
        std::vector<MonomialSyzygy> fresh;
        annihilator_syzygies(lms, k, fresh);
        for (std::size_t i = 0; i < k; ++i) pair_syzygies_indexed(lms, i, k, fresh);
        for (auto& s : fresh) queue.insert({s.schreyer_degree, seq++, std::move(s)});
    };
    for (std::size_t k = 0; k < basis.size(); ++k) push_for(k);

    while (!queue.empty()) {
        QueueEntry entry = *queue.begin();
        queue.erase(queue.begin());
        if (entry.key.degree() > cap) {
            result.status = BasisStatus::truncated;
            break;
        }
        ++result.trace.pairs_processed;
        result.trace.max_degree_reached = std::max(result.trace.max_degree_reached, entry.key.degree());

        ModuleVector h(ctx, result.sem, result.shape);
        for (const auto& t : entry.syz.terms)
            h = add(h, mul_term(t.coeff, t.cofactor, basis[t.index]));
        ModuleVector r = normal_form(std::move(h), basis);
        if (r.is_zero()) continue;
        r = r.monic();
        check_certificate(r);
        basis.push_back(std::move(r));
        lms.push_back(basis.back().leading_term().second);
        push_for(basis.size() - 1);
    }

    result.elements = interreduce(std::move(basis));
    return result;
}

// Minimal monomial generators of the initial module of a basis.
inline InitialModule initial_module(const GroebnerBasis& basis) {
    InitialModule init(basis.ctx, basis.shape);
    init.complete = basis.status == BasisStatus::complete;
    init.cap = basis.cap;
    std::vector<std::vector<FrobMonomial>> per_pos(basis.shape.rank);
    for (const auto& g : basis.elements) {
        auto lm = g.leading_term().second;
        per_pos[lm.pos].push_back(lm.mono);
    }
    for (std::uint32_t pos = 0; pos < basis.shape.rank; ++pos) {
        auto& cand = per_pos[pos];
        std::sort(cand.begin(), cand.end(), [](const FrobMonomial& a, const FrobMonomial& b) {
            return compare(a, b) < 0;
        });
        for (const auto& m : cand) {
            bool redundant = false;
            for (const auto& kept : init.gens[pos])
                if (left_divide(m, kept)) {
                    redundant = true;
                    break;
                }
            if (!redundant) init.gens[pos].push_back(m);
        }
    }
    return init;
}

} // namespace frob

#endif // FROB_GROEBNER_HPP
