// SPDX-License-Identifier: Apache-2.0
//
// F_p-linear combinations of monomials: elements of A or F (OperatorPoly)
// and vectors in shifted free modules A^t / F^t (ModuleVector).
//
// Terms are kept in a map sorted descending by the term order, so the
// leading term is the first entry and reduction scans are linear.  All
// values are immutable in spirit: operations return new objects.

#ifndef FROB_POLY_HPP
#define FROB_POLY_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "frob/monomial.hpp"

namespace frob {

namespace detail {

template <class Key>
struct KeyGreater {
    bool operator()(const Key& a, const Key& b) const { return compare(a, b) > 0; }
};

inline std::uint32_t mod_p(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

inline std::uint32_t inverse_mod_p(std::uint32_t a, std::uint32_t p) {
    // p is prime and tiny; brute force is clearest.
    a %= p;
    for (std::uint32_t x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw std::invalid_argument("inverse of zero mod p");
}

} // namespace detail

struct FreeModuleShape {
    std::uint32_t rank = 1;
    std::vector<std::int64_t> shifts; // Serre shifts d_i; deg(1*e_i) = d_i

    FreeModuleShape() : shifts(1, 0) {}
    explicit FreeModuleShape(std::uint32_t t) : rank(t), shifts(t, 0) {}
    FreeModuleShape(std::uint32_t t, std::vector<std::int64_t> d) : rank(t), shifts(std::move(d)) {
        if (shifts.size() != rank) throw std::invalid_argument("FreeModuleShape: shift count != rank");
    }

    friend bool operator==(const FreeModuleShape& a, const FreeModuleShape& b) {
        return a.rank == b.rank && a.shifts == b.shifts;
    }
};

// ---------------------------------------------------------------------------
// OperatorPoly
// ---------------------------------------------------------------------------

class OperatorPoly {
public:
    using TermMap = std::map<FrobMonomial, std::uint32_t, detail::KeyGreater<FrobMonomial>>;

    OperatorPoly(const RingContext& ctx, Semantics sem) : ctx_(ctx), sem_(sem) {}

    static OperatorPoly zero(const RingContext& ctx, Semantics sem) { return OperatorPoly(ctx, sem); }

    static OperatorPoly term(std::uint32_t coeff, const FrobMonomial& m, Semantics sem) {
        OperatorPoly g(m.context(), sem);
        g.add_term(m, coeff);
        return g;
    }

    const RingContext& context() const { return ctx_; }
    Semantics semantics() const { return sem_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const FrobMonomial& m, std::uint32_t coeff) {
        coeff %= ctx_.p;
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(m, coeff);
        if (!inserted) {
            it->second = (it->second + coeff) % ctx_.p;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::pair<std::uint32_t, FrobMonomial> leading_term() const {
        if (is_zero()) throw std::invalid_argument("leading_term of zero");
        return {terms_.begin()->second, terms_.begin()->first};
    }

    std::uint64_t degree() const { // the order is degree-graded, so lm carries the max degree
        if (is_zero()) throw std::invalid_argument("degree of zero");
        return terms_.begin()->first.degree();
    }

    friend OperatorPoly add(const OperatorPoly& g, const OperatorPoly& h) {
        require_same_context(g.ctx_, h.ctx_);
        if (g.sem_ != h.sem_) throw std::invalid_argument("semantics mismatch");
        OperatorPoly r = g;
        for (const auto& [m, c] : h.terms_) r.add_term(m, c);
        return r;
    }

    friend OperatorPoly scale(std::uint32_t c, const OperatorPoly& g) {
        OperatorPoly r(g.ctx_, g.sem_);
        c %= g.ctx_.p;
        for (const auto& [m, a] : g.terms_) r.add_term(m, a * c);
        return r;
    }

    friend OperatorPoly sub(const OperatorPoly& g, const OperatorPoly& h) {
        return add(g, scale(g.ctx_.p - 1, h));
    }

    friend OperatorPoly mul(const OperatorPoly& g, const OperatorPoly& h) {
        require_same_context(g.ctx_, h.ctx_);
        if (g.sem_ != h.sem_) throw std::invalid_argument("semantics mismatch");
        OperatorPoly r(g.ctx_, g.sem_);
        for (const auto& [m1, c1] : g.terms_)
            for (const auto& [m2, c2] : h.terms_) {
                if (g.sem_ == Semantics::carrying) {
                    r.add_term(mul_carry(m1, m2), c1 * c2);
                } else if (auto p = mul_trunc(m1, m2)) {
                    r.add_term(*p, c1 * c2);
                }
            }
        return r;
    }

    OperatorPoly monic() const {
        if (is_zero()) return *this;
        return scale(detail::inverse_mod_p(leading_term().first, ctx_.p), *this);
    }

private:
    RingContext ctx_;
    Semantics sem_;
    TermMap terms_;
};

// Keeps exactly the terms of maximal degree (= complexity) and reinterprets
// them in A: the Bernstein-filtration symbol of a Frobenius operator.
inline OperatorPoly bernstein_symbol(const OperatorPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("bernstein_symbol of zero");
    const std::uint64_t top = g.degree();
    OperatorPoly r(g.context(), Semantics::truncating);
    for (const auto& [m, c] : g.terms())
        if (m.degree() == top) r.add_term(m, c);
    return r;
}

inline std::string render(const OperatorPoly& g, char f_symbol = 'f') {
    if (g.is_zero()) return "0";
    std::string out;
    for (const auto& [m, c] : g.terms()) {
        if (!out.empty()) out += " + ";
        if (c != 1) {
            out += std::to_string(c);
            out += '*';
        }
        out += render(m, f_symbol);
    }
    return out;
}

// ---------------------------------------------------------------------------
// ModuleVector
// ---------------------------------------------------------------------------

class ModuleVector {
public:
    using TermMap = std::map<PositionedMonomial, std::uint32_t, detail::KeyGreater<PositionedMonomial>>;

    ModuleVector(const RingContext& ctx, Semantics sem, FreeModuleShape shape)
        : ctx_(ctx), sem_(sem), shape_(std::move(shape)) {}

    static ModuleVector zero(const RingContext& ctx, Semantics sem, const FreeModuleShape& shape) {
        return ModuleVector(ctx, sem, shape);
    }

    // Embeds an OperatorPoly at a position of the free module.
    static ModuleVector embed(const OperatorPoly& g, std::uint32_t pos, const FreeModuleShape& shape) {
        ModuleVector v(g.context(), g.semantics(), shape);
        for (const auto& [m, c] : g.terms()) v.add_term({m, pos}, c);
        return v;
    }

    const RingContext& context() const { return ctx_; }
    Semantics semantics() const { return sem_; }
    const FreeModuleShape& shape() const { return shape_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const PositionedMonomial& pm, std::uint32_t coeff) {
        if (pm.pos >= shape_.rank) throw std::invalid_argument("position out of range");
        coeff %= ctx_.p;
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(pm, coeff);
        if (!inserted) {
            it->second = (it->second + coeff) % ctx_.p;
            if (it->second == 0) terms_.erase(it);
        }
    }

    std::pair<std::uint32_t, PositionedMonomial> leading_term() const {
        if (is_zero()) throw std::invalid_argument("leading_term of zero");
        return {terms_.begin()->second, terms_.begin()->first};
    }

    std::int64_t shifted_degree(const PositionedMonomial& pm) const {
        return static_cast<std::int64_t>(pm.mono.degree()) + shape_.shifts[pm.pos];
    }

    // Max shifted degree over the support.
    std::int64_t degree() const {
        if (is_zero()) throw std::invalid_argument("degree of zero");
        std::int64_t d = shifted_degree(terms_.begin()->first);
        for (const auto& [pm, c] : terms_) d = std::max(d, shifted_degree(pm));
        return d;
    }

    bool is_homogeneous() const {
        if (is_zero()) return true;
        std::int64_t d = shifted_degree(terms_.begin()->first);
        for (const auto& [pm, c] : terms_)
            if (shifted_degree(pm) != d) return false;
        return true;
    }

    friend ModuleVector add(const ModuleVector& g, const ModuleVector& h) {
        require_same_context(g.ctx_, h.ctx_);
        if (g.sem_ != h.sem_ || !(g.shape_ == h.shape_)) throw std::invalid_argument("module shape mismatch");
        ModuleVector r = g;
        for (const auto& [pm, c] : h.terms_) r.add_term(pm, c);
        return r;
    }

    friend ModuleVector scale(std::uint32_t c, const ModuleVector& g) {
        ModuleVector r(g.ctx_, g.sem_, g.shape_);
        c %= g.ctx_.p;
        for (const auto& [pm, a] : g.terms_) r.add_term(pm, a * c);
        return r;
    }

    friend ModuleVector sub(const ModuleVector& g, const ModuleVector& h) {
        return add(g, scale(g.ctx_.p - 1, h));
    }

    // Left action of a scalar term c * m on the vector.
    friend ModuleVector mul_term(std::uint32_t c, const FrobMonomial& m, const ModuleVector& g) {
        ModuleVector r(g.ctx_, g.sem_, g.shape_);
        for (const auto& [pm, a] : g.terms_) {
            if (g.sem_ == Semantics::carrying) {
                r.add_term({mul_carry(m, pm.mono), pm.pos}, c * a);
            } else if (auto p = mul_trunc(m, pm.mono)) {
                r.add_term({*p, pm.pos}, c * a);
            }
        }
        return r;
    }

    // Left action of a scalar polynomial.
    friend ModuleVector mul(const OperatorPoly& s, const ModuleVector& g) {
        if (s.semantics() != g.sem_) throw std::invalid_argument("semantics mismatch");
        ModuleVector r(g.ctx_, g.sem_, g.shape_);
        for (const auto& [m, c] : s.terms()) r = add(r, mul_term(c, m, g));
        return r;
    }

    ModuleVector monic() const {
        if (is_zero()) return *this;
        return scale(detail::inverse_mod_p(leading_term().first, ctx_.p), *this);
    }

private:
    RingContext ctx_;
    Semantics sem_;
    FreeModuleShape shape_;
    TermMap terms_;
};

// rb of a vector: max over the support (0 for commutative supports).
inline std::uint64_t robustness(const ModuleVector& g) {
    std::uint64_t r = 0;
    for (const auto& [pm, c] : g.terms()) r = std::max(r, robustness(pm.mono));
    return r;
}

inline std::string render(const ModuleVector& g, char f_symbol = 'f') {
    if (g.is_zero()) return "0";
    std::string out;
    const bool tag_positions = g.shape().rank > 1;
    for (const auto& [pm, c] : g.terms()) {
        if (!out.empty()) out += " + ";
        if (c != 1) {
            out += std::to_string(c);
            out += '*';
        }
        out += render(pm.mono, f_symbol);
        if (tag_positions) out += "*e" + std::to_string(pm.pos);
    }
    return out;
}

} // namespace frob

#endif // FROB_POLY_HPP
