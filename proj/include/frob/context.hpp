// SPDX-License-Identifier: Apache-2.0
//
// RingContext: the pair (p, n) fixing the base ring R = F_p[x_1..x_n] and
// with it the Frobenius operator ring F = R<F>/(x_i^p F - F x_i) and its
// associated graded ring A = R{f}/(x_i^p f).

#ifndef FROB_CONTEXT_HPP
#define FROB_CONTEXT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace frob {

struct RingContext {
    std::uint32_t p = 2; // prime characteristic
    std::uint32_t n = 1; // number of commuting variables

    RingContext() = default;

    RingContext(std::uint32_t prime, std::uint32_t nvars) : p(prime), n(nvars) {
        if (nvars < 1) throw std::invalid_argument("RingContext: n must be >= 1");
        if (!is_prime(prime)) throw std::invalid_argument("RingContext: p = " + std::to_string(prime) + " is not prime");
    }

    friend bool operator==(const RingContext& a, const RingContext& b) {
        return a.p == b.p && a.n == b.n;
    }
    friend bool operator!=(const RingContext& a, const RingContext& b) { return !(a == b); }

    static bool is_prime(std::uint64_t v) {
        if (v < 2) return false;
        for (std::uint64_t d = 2; d * d <= v; ++d)
            if (v % d == 0) return false;
        return true;
    }
};

inline void require_same_context(const RingContext& a, const RingContext& b) {
    if (a != b) throw std::invalid_argument("ring context mismatch");
}

} // namespace frob

#endif // FROB_CONTEXT_HPP
