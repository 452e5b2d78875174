// SPDX-License-Identifier: Apache-2.0
//
// Arbitrary-precision integer polynomials in one variable t (ascending
// coefficients, trailing zeros trimmed) and the rational-function shape
// a(t) / ((1-t)^d * g_{p,n}(t)) shared by every Hilbert series here.

#ifndef FROB_INTPOLY_HPP
#define FROB_INTPOLY_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "frob/context.hpp"

namespace frob {

using BigRational = boost::multiprecision::cpp_rational;

class IntPolynomial {
public:
    using Big = boost::multiprecision::cpp_int;

    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Big> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntPolynomial constant(Big v) { return IntPolynomial({std::move(v)}); }
    static IntPolynomial monomial(Big v, std::size_t k) {
        std::vector<Big> c(k + 1, 0);
        c[k] = std::move(v);
        return IntPolynomial(std::move(c));
    }

    const std::vector<Big>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    std::size_t degree() const { return c_.empty() ? 0 : c_.size() - 1; }
    Big coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Big(0); }

    Big eval_at_one() const {
        Big s = 0;
        for (const auto& v : c_) s += v;
        return s;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<Big> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<Big> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Big> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(c));
    }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

    // Multiplies by t^k.
    IntPolynomial shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<Big> c(c_.size() + k, 0);
        for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
        return IntPolynomial(std::move(c));
    }

    // Exact quotient by (1 - t); throws if t = 1 is not a root.
    IntPolynomial divided_by_one_minus_t() const {
        if (is_zero()) return {};
        if (eval_at_one() != 0) throw std::invalid_argument("not divisible by (1 - t)");
        // a(t) = (1 - t) q(t): q_i = a_0 + a_1 + ... + a_i
        std::vector<Big> q(c_.size() - 1, 0);
        Big acc = 0;
        for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
            acc += c_[i];
            q[i] = acc;
        }
        return IntPolynomial(std::move(q));
    }

    // Multiplicity of the root t = 1.
    std::size_t order_at_one() const {
        if (is_zero()) return 0; // by convention; callers treat zero separately
        IntPolynomial cur = *this;
        std::size_t k = 0;
        while (!cur.is_zero() && cur.eval_at_one() == 0) {
            cur = cur.divided_by_one_minus_t();
            ++k;
        }
        return k;
    }

private:
    std::vector<Big> c_;

    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
};

inline IntPolynomial one_minus_t_power(std::size_t k) {
    IntPolynomial r = IntPolynomial::constant(1);
    const IntPolynomial lin({std::vector<IntPolynomial::Big>{1, -1}});
    for (std::size_t i = 0; i < k; ++i) r = r * lin;
    return r;
}

// a(t) / ((1-t)^d * g_{p,n}(t))
struct HilbertRational {
    IntPolynomial numerator;
    std::uint32_t pole_power = 0; // the d above, 0 <= d <= n
    RingContext ctx;

    HilbertRational(IntPolynomial a, std::uint32_t d, const RingContext& c)
        : numerator(std::move(a)), pole_power(d), ctx(c) {
        if (d > c.n) throw std::invalid_argument("pole_power exceeds n");
    }
};

// Equality as rational functions: cross-multiplied numerators agree (the
// g-factor is common, so only the (1-t) powers differ).
inline bool same_series(const HilbertRational& a, const HilbertRational& b) {
    require_same_context(a.ctx, b.ctx);
    const std::uint32_t d = std::max(a.pole_power, b.pole_power);
    return a.numerator * one_minus_t_power(d - a.pole_power) ==
           b.numerator * one_minus_t_power(d - b.pole_power);
}

} // namespace frob

#endif // FROB_INTPOLY_HPP
