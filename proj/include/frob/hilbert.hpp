// SPDX-License-Identifier: Apache-2.0
//
// Exact Hilbert series of monomial quotients A^t / I.
//
// Per free-module position, the graded count h_i of standard monomials obeys
// the Theta-recurrence
//     h_i = sum_{v in N^n, v < p entrywise} h_{i-|v|-1} + HS_{R/J}(i) - b_i
// where J = I cap R is the commutative contraction (f-order-0 generators) and
// b_i = dim Ker(Theta_i) vanishes for i >> 0.  Summing the recurrence gives
//     HS(t) = (c(t) - (1-t)^dim b(t)) / ((1-t)^dim * g_{p,n}(t)),
// so the series is determined by finitely many counts h_0..h_{K0}, with the
// vanishing of b on a verification window guarding the stabilization bound.

#ifndef FROB_HILBERT_HPP
#define FROB_HILBERT_HPP

#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "frob/errors.hpp"
#include "frob/groebner.hpp"
#include "frob/intpoly.hpp"
#include "frob/monomial.hpp"

namespace frob {

using Big = IntPolynomial::Big;

struct GradedDiagnostics {
    IntPolynomial kernel_hs;                          // b(t), finite
    std::pair<IntPolynomial, std::uint32_t> cokernel_hs; // (c(t), d): HS of Coker(Theta)
    std::uint64_t stabilization_bound = 0;            // K0
};

// g_{p,n}(t) = 1 - t (1 + t + ... + t^{p-1})^n
inline IntPolynomial g_polynomial(const RingContext& ctx) {
    IntPolynomial geom(std::vector<Big>(ctx.p, 1));
    IntPolynomial pw = IntPolynomial::constant(1);
    for (std::uint32_t i = 0; i < ctx.n; ++i) pw = pw * geom;
    return IntPolynomial::constant(1) - pw.shifted(1);
}

// ---------------------------------------------------------------------------
// Counting standard monomials
// ---------------------------------------------------------------------------

namespace detail {

// Coefficients of 1 / g_{p,n}: the number of block words of each total degree.
inline std::vector<Big> free_block_word_counts(const RingContext& ctx, std::size_t upto) {
    const IntPolynomial g = g_polynomial(ctx);
    std::vector<Big> s(upto + 1, 0);
    s[0] = 1;
    for (std::size_t i = 1; i <= upto; ++i) {
        Big acc = 0;
        for (std::size_t j = 1; j <= std::min<std::size_t>(i, g.degree()); ++j)
            acc -= g.coeff(j) * s[i - j];
        s[i] = acc; // g_0 = 1
    }
    return s;
}

inline void weight_vectors(std::uint32_t n, std::uint64_t weight, std::uint64_t entry_cap, Exp& cur,
                           std::uint32_t coord, std::vector<Exp>& out) {
    if (coord + 1 == n) {
        if (weight <= entry_cap) {
            cur[coord] = static_cast<std::uint32_t>(weight);
            out.push_back(cur);
            cur[coord] = 0;
        }
        return;
    }
    for (std::uint64_t v = 0; v <= std::min(weight, entry_cap); ++v) {
        cur[coord] = static_cast<std::uint32_t>(v);
        weight_vectors(n, weight - v, entry_cap, cur, coord + 1, out);
    }
    cur[coord] = 0;
}

inline std::vector<Exp> vectors_of_weight(const RingContext& ctx, std::uint64_t weight,
                                          std::uint64_t entry_cap) {
    std::vector<Exp> out;
    Exp cur(ctx.n, 0);
    weight_vectors(ctx.n, weight, entry_cap, cur, 0, out);
    return out;
}

// Standard-monomial counter for the generators at a single module position.
// Divisibility by a positive-f-order generator anchors at the tail: it pins
// the tail exactly and constrains the rightmost blocks, so the count splits
// into (tails avoiding J) x (free block words), corrected by a small DP for
// the finitely many tails equal to some generator's tail.
class StandardCounter {
public:
    StandardCounter(const RingContext& ctx, const std::vector<FrobMonomial>& gens, std::size_t max_degree)
        : ctx_(ctx), free_counts_(free_block_word_counts(ctx, max_degree)) {
        for (const auto& a : gens) {
            if (a.f_order() == 0) {
                commutative_.push_back(a.tail());
            } else {
                patterns_.push_back({a.blocks(), a.tail()});
            }
        }
        if (patterns_.size() > 62) throw std::invalid_argument("too many positive-f-order generators");
        for (const auto& pat : patterns_) {
            bool seen = false;
            for (const auto& t : special_tails_)
                if (t == pat.tail) seen = true;
            if (!seen && !in_commutative(pat.tail)) special_tails_.push_back(pat.tail);
        }
        // all blocks with entries < p, for the DP transitions
        for (std::uint64_t w = 0; w <= std::uint64_t(ctx.n) * (ctx.p - 1); ++w)
            for (auto& v : vectors_of_weight(ctx, w, ctx.p - 1)) blocks_.push_back(std::move(v));
    }

    Big count(std::uint64_t d) const {
        if (d >= free_counts_.size()) throw std::invalid_argument("degree beyond counter budget");
        Big total = 0;
        // generic tails: weight-w tails avoiding J and distinct from every
        // special tail, times unconstrained block words of degree d - w
        for (std::uint64_t w = 0; w <= d; ++w) {
            Big tails = 0;
            for (const auto& t : vectors_of_weight(ctx_, w, w)) {
                if (in_commutative(t)) continue;
                bool special = false;
                for (const auto& s : special_tails_)
                    if (s == t) special = true;
                if (!special) ++tails;
            }
            total += tails * free_counts_[d - w];
        }
        // special tails: pattern-avoiding block words
        for (const auto& t : special_tails_) {
            const std::uint64_t w = exp_sum(t);
            if (w > d) continue;
            std::uint64_t mask = 0;
            for (std::size_t k = 0; k < patterns_.size(); ++k)
                if (patterns_[k].tail == t) mask |= 1ull << k;
            total += avoiding(mask, 0, d - w);
        }
        return total;
    }

private:
    struct Pattern {
        std::vector<Exp> blocks; // p_0 .. p_{ord-1}
        Exp tail;
    };

    RingContext ctx_;
    std::vector<Big> free_counts_;
    std::vector<Exp> commutative_; // tails of f-order-0 generators
    std::vector<Pattern> patterns_;
    std::vector<Exp> special_tails_;
    std::vector<Exp> blocks_;
    mutable std::map<std::tuple<std::uint64_t, std::uint32_t, std::uint64_t>, Big> memo_;

    bool in_commutative(const Exp& t) const {
        for (const auto& a : commutative_)
            if (exp_le(a, t)) return true;
        return false;
    }

    // Number of block words of degree exactly `remaining` that avoid matching
    // any alive pattern.  Blocks are decided right to left; `placed` counts
    // how many have been placed (capped, since only the first ord(a) matter).
    Big avoiding(std::uint64_t alive, std::uint32_t placed, std::uint64_t remaining) const {
        if (alive == 0) return free_counts_[remaining];
        if (remaining == 0) return 1;
        auto key = std::make_tuple(alive, placed, remaining);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        Big total = 0;
        for (const auto& v : blocks_) {
            const std::uint64_t cost = 1 + exp_sum(v);
            if (cost > remaining) continue;
            std::uint64_t next = 0;
            bool forbidden = false;
            for (std::size_t k = 0; k < patterns_.size() && !forbidden; ++k) {
                if (!(alive & (1ull << k))) continue;
                const auto& pat = patterns_[k];
                const std::uint32_t ord = static_cast<std::uint32_t>(pat.blocks.size());
                if (placed + 1 == ord) {
                    // this is the block compared with p_0 by >=
                    if (exp_le(pat.blocks[0], v)) forbidden = true;
                    // otherwise the pattern is spent: drop it
                } else if (v == pat.blocks[ord - 1 - placed]) {
                    next |= 1ull << k;
                }
            }
            if (forbidden) continue;
            total += avoiding(next, placed + 1, remaining - cost);
        }
        memo_[key] = total;
        return total;
    }
};

} // namespace detail

// Number of degree-d positioned monomials (shift-adjusted) avoiding I.
inline Big count_standard_monomials(const InitialModule& I, std::int64_t d) {
    Big total = 0;
    for (std::uint32_t pos = 0; pos < I.shape.rank; ++pos) {
        const std::int64_t local = d - I.shape.shifts[pos];
        if (local < 0) continue;
        detail::StandardCounter counter(I.ctx, I.gens[pos], static_cast<std::size_t>(local));
        total += counter.count(static_cast<std::uint64_t>(local));
    }
    return total;
}

// ---------------------------------------------------------------------------
// Commutative monomial quotients
// ---------------------------------------------------------------------------

// HS_{R/J} = c(t) / (1-t)^d by inclusion-exclusion over generator LCMs;
// d is the Krull dimension of R/J.
inline std::pair<IntPolynomial, std::uint32_t> hs_commutative(std::vector<Exp> gens,
                                                              const RingContext& ctx) {
    // minimize
    std::vector<Exp> min_gens;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (j != i && (detail::exp_le(gens[j], gens[i]) && !(gens[i] == gens[j] && j > i)))
                redundant = true;
        if (!redundant) min_gens.push_back(gens[i]);
    }
    if (min_gens.size() > 24) throw std::invalid_argument("hs_commutative: too many generators");

    IntPolynomial numer;
    const std::size_t k = min_gens.size();
    for (std::uint64_t subset = 0; subset < (1ull << k); ++subset) {
        Exp l(ctx.n, 0);
        int bits = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (subset & (1ull << i)) {
                ++bits;
                l = detail::exp_lcm(l, min_gens[i]);
            }
        numer = numer + IntPolynomial::monomial(bits % 2 ? -1 : 1, detail::exp_sum(l));
    }
    std::uint32_t d = ctx.n;
    while (d > 0 && !numer.is_zero() && numer.eval_at_one() == 0) {
        numer = numer.divided_by_one_minus_t();
        --d;
    }
    if (numer.is_zero()) d = 0;
    return {numer, d};
}

// ---------------------------------------------------------------------------
// Series expansion and invariants
// ---------------------------------------------------------------------------

namespace detail {

// Series coefficients of numer/denom with denom(0) = 1.
inline std::vector<Big> series(const IntPolynomial& numer, const IntPolynomial& denom, std::size_t D) {
    if (denom.coeff(0) != 1) throw std::invalid_argument("series: denominator must start at 1");
    std::vector<Big> s(D + 1, 0);
    for (std::size_t i = 0; i <= D; ++i) {
        Big acc = numer.coeff(i);
        for (std::size_t j = 1; j <= std::min<std::size_t>(i, denom.degree()); ++j)
            acc -= denom.coeff(j) * s[i - j];
        s[i] = acc;
    }
    return s;
}

} // namespace detail

inline std::vector<Big> expand(const HilbertRational& hs, std::size_t D) {
    return detail::series(hs.numerator, one_minus_t_power(hs.pole_power) * g_polynomial(hs.ctx), D);
}

inline bool verify_recurrence(const std::vector<Big>& prefix, const IntPolynomial& denom,
                              std::size_t from) {
    for (std::size_t i = from; i < prefix.size(); ++i) {
        Big acc = 0;
        for (std::size_t j = 0; j <= std::min(i, denom.degree()); ++j)
            acc += denom.coeff(j) * prefix[i - j];
        if (acc != 0) return false;
    }
    return true;
}

inline std::uint32_t delta(const HilbertRational& hs) {
    if (hs.numerator.is_zero()) return 0;
    const std::size_t ord = hs.numerator.order_at_one();
    return ord >= hs.pole_power ? 0 : hs.pole_power - static_cast<std::uint32_t>(ord);
}

// e = a*(1) / delta! with a*(t) = (1-t)^delta * g * hs = a(t) / (1-t)^(d - delta).
inline BigRational multiplicity(const HilbertRational& hs) {
    if (hs.numerator.is_zero()) return 0;
    const std::uint32_t del = delta(hs);
    IntPolynomial a_star = hs.numerator;
    for (std::uint32_t k = del; k < hs.pole_power; ++k) a_star = a_star.divided_by_one_minus_t();
    Big fact = 1;
    for (std::uint32_t k = 2; k <= del; ++k) fact *= k;
    return BigRational(a_star.eval_at_one(), fact);
}

// ---------------------------------------------------------------------------
// The Theta-recurrence pipeline
// ---------------------------------------------------------------------------

inline std::pair<HilbertRational, GradedDiagnostics> hs_monomial_quotient(const InitialModule& I) {
    if (!I.complete) throw truncated_result("hs_monomial_quotient requires a complete initial module");
    const RingContext& ctx = I.ctx;
    const std::uint64_t pn1 = std::uint64_t(ctx.n) * (ctx.p - 1);

    std::uint64_t maxdeg = 0;
    for (const auto& per_pos : I.gens)
        for (const auto& m : per_pos) maxdeg = std::max(maxdeg, m.degree());
    const std::uint64_t K0 = 2 * (ctx.p - 1) * ctx.n + 2 + maxdeg + pn1 + 1;
    const std::uint64_t W = pn1 + 5;

    // per-position commutative contractions and their dimensions
    std::vector<IntPolynomial> c_j(I.shape.rank);
    std::vector<std::uint32_t> dim_j(I.shape.rank);
    std::uint32_t d = 0;
    for (std::uint32_t pos = 0; pos < I.shape.rank; ++pos) {
        if (I.shape.shifts[pos] < 0)
            throw std::invalid_argument("hs_monomial_quotient: negative shift");
        std::vector<Exp> J;
        for (const auto& m : I.gens[pos])
            if (m.f_order() == 0) J.push_back(m.tail());
        std::tie(c_j[pos], dim_j[pos]) = hs_commutative(std::move(J), ctx);
        d = std::max(d, dim_j[pos]);
    }

    IntPolynomial a, b_total, c_total;
    for (std::uint32_t pos = 0; pos < I.shape.rank; ++pos) {
        detail::StandardCounter counter(ctx, I.gens[pos], K0 + W);
        std::vector<Big> h(K0 + W + 1);
        for (std::uint64_t i = 0; i <= K0 + W; ++i) h[i] = counter.count(i);

        auto hs_rj = detail::series(c_j[pos], one_minus_t_power(dim_j[pos]), K0 + W);

        std::vector<Big> nblocks(pn1 + 1);
        for (std::uint64_t w = 0; w <= pn1; ++w)
            nblocks[w] = detail::vectors_of_weight(ctx, w, ctx.p - 1).size();

        std::vector<Big> b(K0 + 1, 0);
        for (std::uint64_t i = 0; i <= K0 + W; ++i) {
            Big acc = hs_rj[i] - h[i];
            for (std::uint64_t w = 0; w <= pn1 && w + 1 <= i; ++w)
                acc += nblocks[w] * h[i - w - 1];
            if (acc < 0) throw invariant_violation("Theta-recurrence: negative kernel dimension");
            if (i > K0) {
                if (acc != 0)
                    throw invariant_violation("Theta-recurrence: kernel persists past the bound");
            } else {
                b[i] = acc;
            }
        }
        IntPolynomial b_pos{std::vector<Big>(b.begin(), b.end())};

        const auto shift = static_cast<std::size_t>(I.shape.shifts[pos]);
        const IntPolynomial lift = one_minus_t_power(d - dim_j[pos]);
        a = a + (c_j[pos] * lift - one_minus_t_power(d) * b_pos).shifted(shift);
        b_total = b_total + b_pos.shifted(shift);
        c_total = c_total + (c_j[pos] * lift).shifted(shift);
    }

    HilbertRational hs(std::move(a), d, ctx);
    GradedDiagnostics diag{std::move(b_total), {std::move(c_total), d}, K0};
    return {std::move(hs), std::move(diag)};
}

} // namespace frob

#endif // FROB_HILBERT_HPP
