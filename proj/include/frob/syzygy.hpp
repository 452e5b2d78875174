// SPDX-License-Identifier: Apache-2.0
//
// Finite generating sets for the left syzygies on monomial sequences in A^t.
//
// For a pair of monomials (a, b) in the same free-module position the
// generators are (writing a = x^v f m_a when ord_f(a) > 0):
//   (i)   ord_f(a) = ord_f(b) = 0: the single LCM syzygy
//         (x^l/a) e_a - (x^l/b) e_b with x^l = LCM(a, b);
//   (ii)  annihilators x_i^{p-v_i} e_a (and likewise for b) whenever the
//         f-order is positive;
//   (iii) ord_f(a) = ord_f(b) > 0 with a = x^v f m and b = x^u f m sharing m:
//         the LCM syzygy (x^{l-v}) e_a - (x^{l-u}) e_b;
//   (iv)  ord_f(a) != ord_f(b) with b = c a (or a = c b) for a cofactor c of
//         positive f-order: the syzygy c e_a - e_b (resp. e_a - c e_b).
// Across distinct positions only the annihilator type survives.
//
// Every emitted syzygy is homogeneous for the Schreyer pullback grading; its
// common degree (the unreduced word c * a_i in the free monoid) is recorded
// for scheduling in the Buchberger loop.

#ifndef FROB_SYZYGY_HPP
#define FROB_SYZYGY_HPP

#include <cstdint>
#include <vector>

#include "frob/errors.hpp"
#include "frob/monomial.hpp"
#include "frob/poly.hpp"

namespace frob {

struct SyzygyTerm {
    std::uint32_t coeff;    // in F_p, nonzero
    FrobMonomial cofactor;  // left cofactor
    std::size_t index;      // generator index
};

struct MonomialSyzygy {
    std::vector<SyzygyTerm> terms; // one (annihilator) or two entries
    SchreyerKey schreyer_degree;
};

namespace detail {

inline MonomialSyzygy make_syzygy(std::vector<SyzygyTerm> terms,
                                  const std::vector<PositionedMonomial>& gens) {
    MonomialSyzygy s{std::move(terms), {}};
    const auto& lead = s.terms.front();
    s.schreyer_degree.word = WordMonomial::concat(lead.cofactor, gens[lead.index].mono);
    s.schreyer_degree.pos = gens[lead.index].pos;
    return s;
}

// The monomial x^w as a FrobMonomial.
inline FrobMonomial x_power(const Exp& w, const RingContext& ctx) {
    return FrobMonomial({}, w, ctx);
}

} // namespace detail

// Applies a syzygy to its generator sequence inside A^t; used as a
// constructive soundness check.
inline bool syzygy_is_sound(const MonomialSyzygy& s, const std::vector<PositionedMonomial>& gens,
                            const RingContext& ctx, const FreeModuleShape& shape) {
    ModuleVector acc(ctx, Semantics::truncating, shape);
    for (const auto& t : s.terms)
        if (auto prod = mul_trunc(t.cofactor, gens[t.index].mono))
            acc.add_term({*prod, gens[t.index].pos}, t.coeff);
    return acc.is_zero();
}

// The annihilator syzygies x_i^{p - v_i} e_j of a single generator.
inline void annihilator_syzygies(const std::vector<PositionedMonomial>& gens, std::size_t j,
                                 std::vector<MonomialSyzygy>& out) {
    const FrobMonomial& a = gens[j].mono;
    if (a.f_order() == 0) return;
    const RingContext& ctx = a.context();
    const Exp& v0 = a.blocks()[0];
    for (std::uint32_t i = 0; i < ctx.n; ++i) {
        Exp w(ctx.n, 0);
        w[i] = ctx.p - v0[i];
        out.push_back(detail::make_syzygy({{1, detail::x_power(w, ctx), j}}, gens));
    }
}

// The two-term syzygies of the pair (a_i, a_j); empty across distinct positions.
inline void pair_syzygies_indexed(const std::vector<PositionedMonomial>& gens, std::size_t i, std::size_t j,
                                  std::vector<MonomialSyzygy>& out) {
    if (gens[i].pos != gens[j].pos) return;
    const FrobMonomial& a = gens[i].mono;
    const FrobMonomial& b = gens[j].mono;
    const RingContext& ctx = a.context();
    const std::uint32_t minus_one = ctx.p - 1;
    const std::uint32_t da = a.f_order(), db = b.f_order();
    if (da == 0 && db == 0) {
        Exp l = detail::exp_lcm(a.tail(), b.tail());
        out.push_back(detail::make_syzygy(
            {{1, detail::x_power(detail::exp_sub(l, a.tail()), ctx), i},
             {minus_one, detail::x_power(detail::exp_sub(l, b.tail()), ctx), j}},
            gens));
    } else if (da == db) {
        // shared "f m" part: equal trailing blocks and tail
        bool shared = a.tail() == b.tail() &&
                      std::equal(a.blocks().begin() + 1, a.blocks().end(), b.blocks().begin() + 1);
        if (shared) {
            Exp l = detail::exp_lcm(a.blocks()[0], b.blocks()[0]);
            out.push_back(detail::make_syzygy(
                {{1, detail::x_power(detail::exp_sub(l, a.blocks()[0]), ctx), i},
                 {minus_one, detail::x_power(detail::exp_sub(l, b.blocks()[0]), ctx), j}},
                gens));
        }
    } else {
        // divisibility with a positive-f-order cofactor
        if (auto c = left_divide(b, a); c && c->f_order() > 0)
            out.push_back(detail::make_syzygy(
                {{1, *c, i}, {minus_one, FrobMonomial::identity(ctx), j}}, gens));
        if (auto c = left_divide(a, b); c && c->f_order() > 0)
            out.push_back(detail::make_syzygy(
                {{1, FrobMonomial::identity(ctx), i}, {minus_one, *c, j}}, gens));
    }
}

// Generators of Syz(a_1, ..., a_t) per the classification above, deduplicated
// and tagged with Schreyer degrees.
inline std::vector<MonomialSyzygy> generating_syzygies(const std::vector<PositionedMonomial>& gens) {
    std::vector<MonomialSyzygy> out;
    for (std::size_t j = 0; j < gens.size(); ++j) annihilator_syzygies(gens, j, out);
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) pair_syzygies_indexed(gens, i, j, out);
    return out;
}

// Convenience wrapper for a bare pair in a rank-1 module.
inline std::vector<MonomialSyzygy> pair_syzygies(const FrobMonomial& a, const FrobMonomial& b) {
    return generating_syzygies({{a, 0}, {b, 0}});
}

} // namespace frob

#endif // FROB_SYZYGY_HPP
