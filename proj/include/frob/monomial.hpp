// SPDX-License-Identifier: Apache-2.0
//
// Canonical monomials of the graded ring A = F_p[x]{f}/(x_i^p f) and of the
// Frobenius operator ring F = F_p[x]<F>/(x_i^p F - F x_i).
//
// Every nonzero monomial has a unique block form
//
//     m = (prod_{i=0}^{e-1} x^{v_i} f) x^{v_e},
//
// where each block v_0..v_{e-1} lies in N^n with all entries < p and the
// tail v_e in N^n is unbounded.  Its degree (the paper's "complexity") is
// e + sum_i |v_i| and its f-order is e.  Under the closed form x^a F^e the
// blocks are the base-p digits of a taken least-significant first and the
// tail is the remaining quotient.
//
// Two multiplications share the same concatenation skeleton:
//   * mul_trunc (A-semantics): a merged block entry reaching p kills the
//     product (relation x_i^p f = 0);
//   * mul_carry (F-semantics): base-p carries flow across the f's toward
//     the tail (relation x_i^p F = F x_i).
//
// The term order is the graded order of the paper: degree, then f-order,
// then the first differing block under the block order "prec" where
// v prec u iff |v| > |u|, or |v| = |u| and v, u differ last at a coordinate
// where v is smaller.

#ifndef FROB_MONOMIAL_HPP
#define FROB_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "frob/context.hpp"
#include "frob/errors.hpp"

namespace frob {

using Exp = std::vector<std::uint32_t>;
using BigInt = boost::multiprecision::cpp_int;

enum class Semantics {
    truncating, // A = R{f}/(x_i^p f)
    carrying    // F = R<F>/(x_i^p F - F x_i)
};

namespace detail {

inline std::uint64_t exp_sum(const Exp& v) {
    std::uint64_t s = 0;
    for (auto e : v) s += e;
    return s;
}

inline std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
    std::uint64_t s = std::uint64_t(a) + b;
    if (s > 0xFFFFFFFFull) throw std::overflow_error("exponent overflow");
    return static_cast<std::uint32_t>(s);
}

inline Exp exp_add(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

inline bool exp_le(const Exp& a, const Exp& b) { // a <= b entrywise
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exp exp_sub(const Exp& a, const Exp& b) { // requires b <= a
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Exp exp_lcm(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

// Block order: returns <0 if v prec u, 0 if equal, >0 if u prec v.
inline int block_prec(const Exp& v, const Exp& u) {
    std::uint64_t sv = exp_sum(v), su = exp_sum(u);
    if (sv != su) return sv > su ? -1 : 1;
    for (std::size_t k = v.size(); k-- > 0;)
        if (v[k] != u[k]) return v[k] < u[k] ? -1 : 1;
    return 0;
}

// Shared comparison of word forms (blocks; tail), valid for arbitrary
// (not necessarily canonical) block entries: this is the order on the free
// monoid M_n, which restricts to the order on A-monomials.
inline int compare_word(const std::vector<Exp>& vb, const Exp& vt, std::uint64_t vdeg,
                        const std::vector<Exp>& ub, const Exp& ut, std::uint64_t udeg) {
    if (vdeg != udeg) return vdeg < udeg ? -1 : 1;
    if (vb.size() != ub.size()) return vb.size() < ub.size() ? -1 : 1;
    for (std::size_t j = 0; j < vb.size(); ++j)
        if (int c = block_prec(vb[j], ub[j]); c != 0) return c;
    return block_prec(vt, ut);
}

} // namespace detail

class FrobMonomial {
public:
    FrobMonomial() = default; // requires later assignment; degenerate n=0

    FrobMonomial(std::vector<Exp> blocks, Exp tail, const RingContext& ctx)
        : blocks_(std::move(blocks)), tail_(std::move(tail)), ctx_(ctx) {
        validate();
    }

    static FrobMonomial identity(const RingContext& ctx) {
        return FrobMonomial(std::vector<Exp>{}, Exp(ctx.n, 0), ctx);
    }

    // x_i^k  (0-based variable index)
    static FrobMonomial variable(std::uint32_t i, std::uint32_t k, const RingContext& ctx) {
        Exp t(ctx.n, 0);
        if (i >= ctx.n) throw std::invalid_argument("variable index out of range");
        t[i] = k;
        return FrobMonomial({}, std::move(t), ctx);
    }

    // f^k
    static FrobMonomial f_power(std::uint32_t k, const RingContext& ctx) {
        std::vector<Exp> b(k, Exp(ctx.n, 0));
        return FrobMonomial(std::move(b), Exp(ctx.n, 0), ctx);
    }

    const std::vector<Exp>& blocks() const { return blocks_; }
    const Exp& tail() const { return tail_; }
    const RingContext& context() const { return ctx_; }

    std::uint32_t f_order() const { return static_cast<std::uint32_t>(blocks_.size()); }

    std::uint64_t degree() const {
        std::uint64_t d = blocks_.size();
        for (const auto& b : blocks_) d += detail::exp_sum(b);
        return d + detail::exp_sum(tail_);
    }

    bool is_identity() const {
        return blocks_.empty() && detail::exp_sum(tail_) == 0;
    }

private:
    std::vector<Exp> blocks_; // each entrywise < p
    Exp tail_;                // unbounded
    RingContext ctx_;

    void validate() const {
        if (tail_.size() != ctx_.n) throw std::invalid_argument("FrobMonomial: tail has wrong arity");
        for (const auto& b : blocks_) {
            if (b.size() != ctx_.n) throw std::invalid_argument("FrobMonomial: block has wrong arity");
            for (auto e : b)
                if (e >= ctx_.p) throw std::invalid_argument("FrobMonomial: block entry >= p");
        }
    }
};

// Total term order; returns <0, 0, >0.
inline int compare(const FrobMonomial& a, const FrobMonomial& b) {
    require_same_context(a.context(), b.context());
    return detail::compare_word(a.blocks(), a.tail(), a.degree(), b.blocks(), b.tail(), b.degree());
}

inline bool operator==(const FrobMonomial& a, const FrobMonomial& b) { return compare(a, b) == 0; }
inline bool operator!=(const FrobMonomial& a, const FrobMonomial& b) { return compare(a, b) != 0; }
inline bool operator<(const FrobMonomial& a, const FrobMonomial& b) { return compare(a, b) < 0; }
inline bool operator>(const FrobMonomial& a, const FrobMonomial& b) { return compare(a, b) > 0; }

// A-semantics product; absent = zero (a merged block entry reached p).
inline std::optional<FrobMonomial> mul_trunc(const FrobMonomial& m1, const FrobMonomial& m2) {
    require_same_context(m1.context(), m2.context());
    const RingContext& ctx = m1.context();
    if (m2.f_order() == 0) {
        return FrobMonomial(m1.blocks(), detail::exp_add(m1.tail(), m2.tail()), ctx);
    }
    Exp merged = detail::exp_add(m1.tail(), m2.blocks()[0]);
    for (auto e : merged)
        if (e >= ctx.p) return std::nullopt;
    std::vector<Exp> blocks = m1.blocks();
    blocks.push_back(std::move(merged));
    blocks.insert(blocks.end(), m2.blocks().begin() + 1, m2.blocks().end());
    return FrobMonomial(std::move(blocks), m2.tail(), ctx);
}

// F-semantics product: concatenate, then push base-p carries toward the tail.
inline FrobMonomial mul_carry(const FrobMonomial& m1, const FrobMonomial& m2) {
    require_same_context(m1.context(), m2.context());
    const RingContext& ctx = m1.context();
    std::vector<Exp> blocks = m1.blocks();
    Exp tail;
    if (m2.f_order() == 0) {
        tail = detail::exp_add(m1.tail(), m2.tail());
    } else {
        blocks.push_back(detail::exp_add(m1.tail(), m2.blocks()[0]));
        blocks.insert(blocks.end(), m2.blocks().begin() + 1, m2.blocks().end());
        tail = m2.tail();
    }
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        Exp& cur = blocks[i];
        Exp& next = (i + 1 < blocks.size()) ? blocks[i + 1] : tail;
        for (std::uint32_t k = 0; k < ctx.n; ++k) {
            std::uint32_t carry = cur[k] / ctx.p;
            if (carry) {
                cur[k] %= ctx.p;
                next[k] = detail::checked_add(next[k], carry);
            }
        }
    }
    return FrobMonomial(std::move(blocks), std::move(tail), ctx);
}

// Left division in A: the unique c with mul_trunc(c, a) == m, if it exists.
inline std::optional<FrobMonomial> left_divide(const FrobMonomial& m, const FrobMonomial& a) {
    require_same_context(m.context(), a.context());
    const RingContext& ctx = m.context();
    const std::uint32_t d = a.f_order();
    const std::uint32_t e = m.f_order();
    if (d == 0) {
        if (!detail::exp_le(a.tail(), m.tail())) return std::nullopt;
        return FrobMonomial(m.blocks(), detail::exp_sub(m.tail(), a.tail()), ctx);
    }
    if (e < d) return std::nullopt;
    if (m.tail() != a.tail()) return std::nullopt;
    // the last d-1 blocks of m must equal the last d-1 blocks of a ...
    for (std::uint32_t k = 1; k < d; ++k)
        if (m.blocks()[e - d + k] != a.blocks()[k]) return std::nullopt;
    // ... and the merged block must dominate a's first block
    if (!detail::exp_le(a.blocks()[0], m.blocks()[e - d])) return std::nullopt;
    std::vector<Exp> blocks(m.blocks().begin(), m.blocks().begin() + (e - d));
    Exp tail = detail::exp_sub(m.blocks()[e - d], a.blocks()[0]);
    return FrobMonomial(std::move(blocks), std::move(tail), ctx);
}

// rb(m): least degree bound beyond which every x-monomial annihilates m into R.
inline std::uint64_t robustness(const FrobMonomial& m) {
    if (m.f_order() == 0) return 0;
    const RingContext& ctx = m.context();
    return std::uint64_t(ctx.n) * (ctx.p - 1) + 1 - detail::exp_sum(m.blocks()[0]);
}

// x^a F^e in canonical form: blocks are the base-p digits of a (least
// significant first), the tail is the remaining quotient.
inline FrobMonomial from_closed_form(std::vector<std::uint64_t> a, std::uint64_t e, const RingContext& ctx) {
    if (a.size() != ctx.n) throw std::invalid_argument("from_closed_form: exponent arity mismatch");
    std::vector<Exp> blocks;
    blocks.reserve(static_cast<std::size_t>(e));
    for (std::uint64_t i = 0; i < e; ++i) {
        Exp digit(ctx.n);
        for (std::uint32_t k = 0; k < ctx.n; ++k) {
            digit[k] = static_cast<std::uint32_t>(a[k] % ctx.p);
            a[k] /= ctx.p;
        }
        blocks.push_back(std::move(digit));
    }
    Exp tail(ctx.n);
    for (std::uint32_t k = 0; k < ctx.n; ++k) {
        if (a[k] > 0xFFFFFFFFull) throw std::overflow_error("from_closed_form: tail overflow");
        tail[k] = static_cast<std::uint32_t>(a[k]);
    }
    return FrobMonomial(std::move(blocks), std::move(tail), ctx);
}

// Inverse of from_closed_form: m = x^a F^e with a = sum p^i v_i + p^e tail.
inline std::pair<std::vector<BigInt>, std::uint64_t> closed_form_of(const FrobMonomial& m) {
    const RingContext& ctx = m.context();
    std::vector<BigInt> a(ctx.n, 0);
    BigInt power = 1;
    for (const auto& b : m.blocks()) {
        for (std::uint32_t k = 0; k < ctx.n; ++k) a[k] += power * b[k];
        power *= ctx.p;
    }
    for (std::uint32_t k = 0; k < ctx.n; ++k) a[k] += power * m.tail()[k];
    return {std::move(a), m.f_order()};
}

// ---------------------------------------------------------------------------
// Rendering and word parsing
// ---------------------------------------------------------------------------

inline std::string variable_name(std::uint32_t i, const RingContext& ctx) {
    static const char* short_names[3] = {"x", "y", "z"};
    if (ctx.n <= 3) return short_names[i];
    return "x" + std::to_string(i + 1);
}

namespace detail {

inline void render_exp(std::string& out, const Exp& v, const RingContext& ctx) {
    for (std::uint32_t i = 0; i < ctx.n; ++i) {
        if (v[i] == 0) continue;
        out += variable_name(i, ctx);
        if (v[i] > 1) {
            out += '^';
            out += std::to_string(v[i]);
        }
    }
}

} // namespace detail

// Shortest word of the block form, e.g. "xfxf", "fx", "x^4", "1".
inline std::string render(const FrobMonomial& m, char f_symbol = 'f') {
    if (m.is_identity()) return "1";
    std::string out;
    for (const auto& b : m.blocks()) {
        detail::render_exp(out, b, m.context());
        out += f_symbol;
    }
    detail::render_exp(out, m.tail(), m.context());
    return out;
}

// Parses a word over variables, f/F and ^powers and canonicalizes it under
// the chosen semantics.  Returns nullopt when the word is zero in A
// (truncating semantics only).  Throws parse_error on malformed input.
inline std::optional<FrobMonomial> parse_word(const std::string& text, const RingContext& ctx,
                                              Semantics sem = Semantics::truncating) {
    std::size_t pos = 0;
    const std::size_t len = text.size();
    bool zero = false;
    FrobMonomial acc = FrobMonomial::identity(ctx);
    bool seen_factor = false;

    auto skip_ws = [&] {
        while (pos < len && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '*')) ++pos;
    };
    auto parse_uint = [&]() -> std::uint64_t {
        if (pos >= len || !std::isdigit(static_cast<unsigned char>(text[pos])))
            throw parse_error("expected integer in word '" + text + "'");
        std::uint64_t v = 0;
        while (pos < len && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > 0xFFFFFFFFull) throw parse_error("exponent too large in word '" + text + "'");
            ++pos;
        }
        return v;
    };

    skip_ws();
    while (pos < len) {
        char c = text[pos];
        FrobMonomial factor = FrobMonomial::identity(ctx);
        if (c == 'f' || c == 'F') {
            ++pos;
            std::uint64_t k = 1;
            if (pos < len && text[pos] == '^') { ++pos; k = parse_uint(); }
            factor = FrobMonomial::f_power(static_cast<std::uint32_t>(k), ctx);
        } else if (c == '1' && !std::isdigit(static_cast<unsigned char>(pos + 1 < len ? text[pos + 1] : ' '))) {
            ++pos; // the identity word
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            ++pos;
            std::uint32_t var = 0;
            if (c == 'x' && pos < len && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                std::uint64_t idx = parse_uint();
                if (idx < 1 || idx > ctx.n) throw parse_error("unknown variable x" + std::to_string(idx));
                var = static_cast<std::uint32_t>(idx - 1);
            } else {
                if (c == 'x') var = 0;
                else if (c == 'y' && ctx.n >= 2 && ctx.n <= 3) var = 1;
                else if (c == 'z' && ctx.n == 3) var = 2;
                else throw parse_error(std::string("unknown variable '") + c + "' in word '" + text + "'");
                if (var >= ctx.n) throw parse_error(std::string("variable '") + c + "' out of range");
            }
            std::uint64_t k = 1;
            if (pos < len && text[pos] == '^') { ++pos; k = parse_uint(); }
            factor = FrobMonomial::variable(var, static_cast<std::uint32_t>(k), ctx);
        } else {
            throw parse_error(std::string("unexpected character '") + c + "' in word '" + text + "'");
        }
        seen_factor = true;
        if (!zero) {
            if (sem == Semantics::carrying) {
                acc = mul_carry(acc, factor);
            } else if (auto prod = mul_trunc(acc, factor)) {
                acc = std::move(*prod);
            } else {
                zero = true;
            }
        }
        skip_ws();
    }
    if (!seen_factor) throw parse_error("empty word");
    if (zero) return std::nullopt;
    return acc;
}

// ---------------------------------------------------------------------------
// Positioned monomials (free module A^t) and Schreyer keys (free monoid B^t)
// ---------------------------------------------------------------------------

struct PositionedMonomial {
    FrobMonomial mono;
    std::uint32_t pos = 0;

    PositionedMonomial() = default;
    PositionedMonomial(FrobMonomial m, std::uint32_t position) : mono(std::move(m)), pos(position) {}
};

// a e_i < b e_j iff a < b, or a = b and i < j.
inline int compare(const PositionedMonomial& a, const PositionedMonomial& b) {
    if (int c = compare(a.mono, b.mono); c != 0) return c;
    if (a.pos != b.pos) return a.pos < b.pos ? -1 : 1;
    return 0;
}

inline bool operator==(const PositionedMonomial& a, const PositionedMonomial& b) { return compare(a, b) == 0; }
inline bool operator!=(const PositionedMonomial& a, const PositionedMonomial& b) { return compare(a, b) != 0; }
inline bool operator<(const PositionedMonomial& a, const PositionedMonomial& b) { return compare(a, b) < 0; }

// A monomial of the free monoid B (no bound on block entries): used only for
// Schreyer pullback degrees, where products of A-monomials are formed without
// reduction.
struct WordMonomial {
    std::vector<Exp> blocks;
    Exp tail;

    std::uint64_t degree() const {
        std::uint64_t d = blocks.size();
        for (const auto& b : blocks) d += detail::exp_sum(b);
        return d + detail::exp_sum(tail);
    }

    // Unreduced concatenation c * a of two canonical monomials.
    static WordMonomial concat(const FrobMonomial& c, const FrobMonomial& a) {
        WordMonomial w;
        w.blocks = c.blocks();
        if (a.f_order() == 0) {
            w.tail = detail::exp_add(c.tail(), a.tail());
        } else {
            w.blocks.push_back(detail::exp_add(c.tail(), a.blocks()[0]));
            w.blocks.insert(w.blocks.end(), a.blocks().begin() + 1, a.blocks().end());
            w.tail = a.tail();
        }
        return w;
    }
};

inline int compare(const WordMonomial& a, const WordMonomial& b) {
    return detail::compare_word(a.blocks, a.tail, a.degree(), b.blocks, b.tail, b.degree());
}

struct SchreyerKey {
    WordMonomial word;
    std::uint32_t pos = 0;

    std::uint64_t degree() const { return word.degree(); }
};

inline int compare(const SchreyerKey& a, const SchreyerKey& b) {
    if (int c = compare(a.word, b.word); c != 0) return c;
    if (a.pos != b.pos) return a.pos < b.pos ? -1 : 1;
    return 0;
}

} // namespace frob

#endif // FROB_MONOMIAL_HPP
