// SPDX-License-Identifier: Apache-2.0
//
// Independent brute-force verifiers over F_p.  Everything here is dense
// linear algebra on explicit monomial bases: slow, simple, and used as the
// ground truth for the combinatorial engine.
//
//  - graded_dim_quotient: dim [A^t / <gens>]_d by row reduction.
//  - filtered_graded_dim: dim Omega_i / Omega_{i-1} for a finitely presented
//    F-module under the standard filtration, approximating the submodule
//    from below by bounded-degree multiples with slack doubling.
//  - brute_syzygies / brute_membership: kernel and span tests.

#ifndef FROB_ORACLE_HPP
#define FROB_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "frob/errors.hpp"
#include "frob/groebner.hpp"
#include "frob/monomial.hpp"
#include "frob/poly.hpp"

namespace frob::oracle {

// ---------------------------------------------------------------------------
// Monomial bases
// ---------------------------------------------------------------------------

namespace detail2 {

inline void exps_of_weight(std::uint32_t n, std::uint64_t weight, std::uint64_t entry_cap, Exp& cur,
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
        exps_of_weight(n, weight - v, entry_cap, cur, coord + 1, out);
    }
    cur[coord] = 0;
}

inline std::vector<Exp> exponents_of_weight(const RingContext& ctx, std::uint64_t weight,
                                            std::uint64_t entry_cap) {
    std::vector<Exp> out;
    Exp cur(ctx.n, 0);
    exps_of_weight(ctx.n, weight, entry_cap, cur, 0, out);
    return out;
}

inline void monomials_rec(const RingContext& ctx, std::uint64_t remaining, std::vector<Exp>& blocks,
                          std::vector<FrobMonomial>& out) {
    for (auto& t : exponents_of_weight(ctx, remaining, remaining))
        out.emplace_back(blocks, std::move(t), ctx);
    if (remaining == 0) return;
    std::uint64_t budget = std::min<std::uint64_t>(remaining - 1, std::uint64_t(ctx.n) * (ctx.p - 1));
    for (std::uint64_t w = 0; w <= budget; ++w)
        for (auto& b : exponents_of_weight(ctx, w, ctx.p - 1)) {
            blocks.push_back(std::move(b));
            monomials_rec(ctx, remaining - 1 - w, blocks, out);
            blocks.pop_back();
        }
}

} // namespace detail2

inline std::vector<FrobMonomial> monomials_of_degree(const RingContext& ctx, std::uint64_t d) {
    std::vector<FrobMonomial> out;
    std::vector<Exp> blocks;
    detail2::monomials_rec(ctx, d, blocks, out);
    return out;
}

// Positioned monomials of shifted degree exactly d.
inline std::vector<PositionedMonomial> module_monomials_of_degree(const RingContext& ctx,
                                                                  const FreeModuleShape& shape,
                                                                  std::int64_t d) {
    std::vector<PositionedMonomial> out;
    for (std::uint32_t pos = 0; pos < shape.rank; ++pos) {
        std::int64_t local = d - shape.shifts[pos];
        if (local < 0) continue;
        for (auto& m : monomials_of_degree(ctx, static_cast<std::uint64_t>(local)))
            out.push_back({std::move(m), pos});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Incremental echelon-form rank over F_p
// ---------------------------------------------------------------------------

class GFpReducer {
public:
    using SparseRow = std::vector<std::pair<std::size_t, std::uint32_t>>; // (col, coeff)

    GFpReducer(std::uint32_t p, std::size_t ncols)
        : p_(p), ncols_(ncols), packed_(p == 2), pivot_row_(ncols, SIZE_MAX) {
        words_ = (ncols + 63) / 64;
    }

    std::size_t rank() const { return rank_; }

    // Inserts a row; returns true if it increased the rank.
    bool add_row(const SparseRow& row) {
        if (packed_) {
            auto dense = to_bits(row);
            return add_bits(std::move(dense));
        }
        auto dense = to_bytes(row);
        return add_bytes(std::move(dense));
    }

    // True iff the row lies in the current row space (does not insert).
    bool reduces_to_zero(const SparseRow& row) const {
        if (packed_) {
            auto dense = to_bits(row);
            reduce_bits(dense);
            return all_zero(dense);
        }
        auto dense = to_bytes(row);
        reduce_bytes(dense);
        return all_zero_bytes(dense);
    }

private:
    std::uint32_t p_;
    std::size_t ncols_, words_ = 0;
    bool packed_;
    std::size_t rank_ = 0;
    std::vector<std::size_t> pivot_row_;            // col -> index into storage
    std::vector<std::vector<std::uint64_t>> bits_;  // p = 2
    std::vector<std::vector<std::uint8_t>> bytes_;  // p > 2, entries < p

    // ---- p == 2, packed ----

    std::vector<std::uint64_t> to_bits(const SparseRow& row) const {
        std::vector<std::uint64_t> dense(words_, 0);
        for (auto [col, c] : row)
            if (c % 2) dense[col >> 6] ^= 1ull << (col & 63);
        return dense;
    }

    static bool all_zero(const std::vector<std::uint64_t>& v) {
        for (auto w : v)
            if (w) return false;
        return true;
    }

    std::optional<std::size_t> leading_bit(const std::vector<std::uint64_t>& v) const {
        for (std::size_t w = 0; w < words_; ++w)
            if (v[w]) return (w << 6) + static_cast<std::size_t>(__builtin_ctzll(v[w]));
        return std::nullopt;
    }

    void reduce_bits(std::vector<std::uint64_t>& dense) const {
        while (auto lead = leading_bit(dense)) {
            std::size_t r = pivot_row_[*lead];
            if (r == SIZE_MAX) return;
            const auto& pivot = bits_[r];
            for (std::size_t w = (*lead) >> 6; w < words_; ++w) dense[w] ^= pivot[w];
        }
    }

    bool add_bits(std::vector<std::uint64_t> dense) {
        reduce_bits(dense);
        auto lead = leading_bit(dense);
        if (!lead) return false;
        pivot_row_[*lead] = bits_.size();
        bits_.push_back(std::move(dense));
        ++rank_;
        return true;
    }

    // ---- general p, lazy byte rows (stored rows always reduced < p) ----

    std::vector<std::uint8_t> to_bytes(const SparseRow& row) const {
        std::vector<std::uint8_t> dense(ncols_, 0);
        for (auto [col, c] : row) dense[col] = static_cast<std::uint8_t>((dense[col] + c) % p_);
        return dense;
    }

    bool all_zero_bytes(const std::vector<std::uint8_t>& v) const {
        for (auto b : v)
            if (b) return false;
        return true;
    }

    void mod_sweep(std::vector<std::uint8_t>& v, std::size_t from) const {
        for (std::size_t i = from; i < ncols_; ++i) v[i] = static_cast<std::uint8_t>(v[i] % p_);
    }

    void reduce_bytes(std::vector<std::uint8_t>& dense) const {
        // lazy accumulation: entries stay below 255 for up to `budget` axpys
        const std::uint32_t per_axpy = (p_ - 1) * (p_ - 1);
        const std::uint32_t budget = (255 - (p_ - 1)) / per_axpy;
        std::uint32_t pending = 0;
        std::size_t col = 0;
        while (col < ncols_) {
            std::uint8_t val = static_cast<std::uint8_t>(dense[col] % p_);
            dense[col] = val;
            if (val == 0) {
                ++col;
                continue;
            }
            std::size_t r = pivot_row_[col];
            if (r == SIZE_MAX) {
                if (pending) mod_sweep(dense, col);
                return; // new pivot position (caller decides)
            }
            const auto& pivot = bytes_[r]; // pivot entry at col is 1
            const std::uint32_t c = p_ - val; // add c * pivot == subtract val * pivot
            for (std::size_t i = col; i < ncols_; ++i)
                dense[i] = static_cast<std::uint8_t>(dense[i] + c * pivot[i]);
            if (++pending >= budget) {
                mod_sweep(dense, col);
                pending = 0;
            }
        }
        mod_sweep(dense, 0);
    }

    bool add_bytes(std::vector<std::uint8_t> dense) {
        reduce_bytes(dense);
        std::size_t lead = 0;
        while (lead < ncols_ && dense[lead] % p_ == 0) ++lead;
        if (lead == ncols_) return false;
        mod_sweep(dense, lead);
        // normalize pivot to 1
        std::uint32_t inv = frob::detail::inverse_mod_p(dense[lead], p_);
        if (inv != 1)
            for (std::size_t i = lead; i < ncols_; ++i)
                dense[i] = static_cast<std::uint8_t>(dense[i] * inv % p_);
        pivot_row_[lead] = bytes_.size();
        bytes_.push_back(std::move(dense));
        ++rank_;
        return true;
    }
};

// ---------------------------------------------------------------------------
// Column indexing helpers
// ---------------------------------------------------------------------------

namespace detail2 {

struct PmLess {
    bool operator()(const PositionedMonomial& a, const PositionedMonomial& b) const {
        return compare(a, b) < 0;
    }
};

using ColumnIndex = std::map<PositionedMonomial, std::size_t, PmLess>;

inline GFpReducer::SparseRow sparse_row(const ModuleVector& v, const ColumnIndex& cols) {
    GFpReducer::SparseRow row;
    for (const auto& [pm, c] : v.terms()) {
        auto it = cols.find(pm);
        if (it == cols.end()) throw invariant_violation("oracle: term outside the column space");
        row.emplace_back(it->second, c);
    }
    return row;
}

} // namespace detail2

// ---------------------------------------------------------------------------
// graded_dim_quotient
// ---------------------------------------------------------------------------

// dim [A^t / <gens>]_d for homogeneous generators (A-semantics).
inline std::uint64_t graded_dim_quotient(const RingContext& ctx, const FreeModuleShape& shape,
                                         const std::vector<ModuleVector>& gens, std::int64_t d) {
    auto basis = module_monomials_of_degree(ctx, shape, d);
    detail2::ColumnIndex cols;
    for (std::size_t i = 0; i < basis.size(); ++i) cols.emplace(basis[i], i);

    GFpReducer reducer(ctx.p, basis.size());
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw std::invalid_argument("graded_dim_quotient: inhomogeneous generator");
        const std::int64_t dg = g.degree();
        if (dg > d) continue;
        for (const auto& c : monomials_of_degree(ctx, static_cast<std::uint64_t>(d - dg))) {
            ModuleVector row = mul_term(1, c, g);
            if (!row.is_zero()) reducer.add_row(detail2::sparse_row(row, cols));
        }
    }
    return basis.size() - reducer.rank();
}

// ---------------------------------------------------------------------------
// filtered_graded_dim
// ---------------------------------------------------------------------------

// dim Omega_i / Omega_{i-1} for M = F^t / <relations> under the standard
// filtration Omega_i = B_i * generators.  The submodule is approximated from
// below by multiples of bounded degree; the slack doubles until two
// consecutive values agree.  Throws truncated_result when the budget is
// exhausted without stabilization.
inline std::uint64_t filtered_graded_dim(const RingContext& ctx, const FreeModuleShape& shape,
                                         const std::vector<ModuleVector>& relations, std::int64_t i,
                                         std::uint64_t* slack_used = nullptr,
                                         std::uint64_t max_slack = 32) {
    auto value_at = [&](std::uint64_t slack) -> std::uint64_t {
        const std::int64_t ambient = i + static_cast<std::int64_t>(slack);
        std::vector<PositionedMonomial> basis;
        for (std::int64_t d = 0; d <= ambient; ++d)
            for (auto& pm : module_monomials_of_degree(ctx, shape, d)) basis.push_back(std::move(pm));
        detail2::ColumnIndex cols;
        for (std::size_t k = 0; k < basis.size(); ++k) cols.emplace(basis[k], k);

        GFpReducer reducer(ctx.p, basis.size());
        for (const auto& h : relations) {
            if (h.is_zero()) continue;
            const std::int64_t dh = h.degree();
            for (std::int64_t dc = 0; dc + dh <= ambient; ++dc)
                for (const auto& c : monomials_of_degree(ctx, static_cast<std::uint64_t>(dc))) {
                    ModuleVector row = mul_term(1, c, h);
                    if (!row.is_zero()) reducer.add_row(detail2::sparse_row(row, cols));
                }
        }
        std::size_t r1 = 0;
        for (const auto& pm : basis) {
            std::int64_t dd = static_cast<std::int64_t>(pm.mono.degree()) + shape.shifts[pm.pos];
            if (dd <= i - 1) reducer.add_row({{cols.at(pm), 1}});
        }
        r1 = reducer.rank();
        for (const auto& pm : basis) {
            std::int64_t dd = static_cast<std::int64_t>(pm.mono.degree()) + shape.shifts[pm.pos];
            if (dd == i) reducer.add_row({{cols.at(pm), 1}});
        }
        return reducer.rank() - r1;
    };

    std::uint64_t prev = value_at(2);
    for (std::uint64_t slack = 4; slack <= max_slack; slack *= 2) {
        std::uint64_t cur = value_at(slack);
        if (cur == prev) {
            if (slack_used) *slack_used = slack;
            return cur;
        }
        prev = cur;
    }
    throw truncated_result("filtered_graded_dim: no stabilization within slack budget");
}

// ---------------------------------------------------------------------------
// brute syzygies and membership
// ---------------------------------------------------------------------------

// Spanning set of Syz(a_1..a_t) up to Schreyer degree D, as vectors in the
// rank-t free module over A (position k = cofactor of a_k).
inline std::vector<ModuleVector> brute_syzygies(const std::vector<PositionedMonomial>& gens,
                                                const RingContext& ctx, std::uint64_t D) {
    std::uint32_t ambient_rank = 1;
    for (const auto& g : gens) ambient_rank = std::max(ambient_rank, g.pos + 1);
    FreeModuleShape ambient(ambient_rank);
    FreeModuleShape tagspace(static_cast<std::uint32_t>(gens.size()));

    // image columns: ambient monomials of degree <= D
    detail2::ColumnIndex img_cols;
    std::size_t nimg = 0;
    for (std::uint64_t d = 0; d <= D; ++d)
        for (auto& pm : module_monomials_of_degree(ctx, ambient, static_cast<std::int64_t>(d)))
            img_cols.emplace(std::move(pm), nimg++);

    // tag columns: one per pair (generator index, cofactor monomial)
    struct Tagged {
        std::size_t gen;
        FrobMonomial cofactor;
    };
    std::vector<Tagged> tags;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        const std::uint64_t da = gens[k].mono.degree();
        for (std::uint64_t dc = 0; dc + da <= D; ++dc)
            for (auto& c : monomials_of_degree(ctx, dc)) tags.push_back({k, std::move(c)});
    }

    const std::size_t ncols = nimg + tags.size();
    std::vector<ModuleVector> syzygies;
    {
        // augmented dense elimination: image columns first, so a row whose
        // pivot lands in the tag region has vanishing image part, i.e. its
        // tag part is a syzygy
        std::vector<std::vector<std::uint32_t>> rows; // dense over ncols
        rows.reserve(tags.size());
        for (std::size_t t = 0; t < tags.size(); ++t) {
            std::vector<std::uint32_t> dense(ncols, 0);
            if (auto prod = mul_trunc(tags[t].cofactor, gens[tags[t].gen].mono))
                dense[img_cols.at({*prod, gens[tags[t].gen].pos})] = 1;
            dense[nimg + t] = 1;
            rows.push_back(std::move(dense));
        }
        std::vector<std::size_t> pivot_of_col(ncols, SIZE_MAX);
        for (auto& r : rows) {
            for (std::size_t col = 0; col < ncols; ++col) {
                if (r[col] % ctx.p == 0) continue;
                std::size_t pr = pivot_of_col[col];
                if (pr == SIZE_MAX) {
                    // normalize and install
                    std::uint32_t inv = frob::detail::inverse_mod_p(r[col] % ctx.p, ctx.p);
                    for (auto& v : r) v = v * inv % ctx.p;
                    pivot_of_col[col] = &r - rows.data();
                    if (col >= nimg) {
                        // image part vanished: r is a syzygy
                        ModuleVector s(ctx, Semantics::truncating, tagspace);
                        for (std::size_t t2 = 0; t2 < tags.size(); ++t2)
                            if (r[nimg + t2] % ctx.p)
                                s.add_term({tags[t2].cofactor, static_cast<std::uint32_t>(tags[t2].gen)},
                                           r[nimg + t2] % ctx.p);
                        syzygies.push_back(std::move(s));
                    }
                    break;
                }
                const auto& pivot = rows[pr];
                std::uint32_t c = ctx.p - r[col] % ctx.p;
                for (std::size_t k2 = col; k2 < ncols; ++k2) r[k2] = (r[k2] + c * pivot[k2]) % ctx.p;
            }
        }
    }
    return syzygies;
}

// h in span{ c * g_i : deg(c) + deg(g_i) <= cap }?
inline bool brute_membership(const ModuleVector& h, const std::vector<ModuleVector>& gens,
                             std::int64_t cap) {
    const RingContext& ctx = h.context();
    const FreeModuleShape& shape = h.shape();

    detail2::ColumnIndex cols;
    std::size_t ncols = 0;
    for (std::int64_t d = 0; d <= cap; ++d)
        for (auto& pm : module_monomials_of_degree(ctx, shape, d)) cols.emplace(std::move(pm), ncols++);

    GFpReducer reducer(ctx.p, ncols);
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        const std::int64_t dg = g.degree();
        for (std::int64_t dc = 0; dc + dg <= cap; ++dc)
            for (const auto& c : monomials_of_degree(ctx, static_cast<std::uint64_t>(dc))) {
                ModuleVector row = mul_term(1, c, g);
                if (!row.is_zero()) reducer.add_row(detail2::sparse_row(row, cols));
            }
    }
    if (h.is_zero()) return true;
    return reducer.reduces_to_zero(detail2::sparse_row(h, cols));
}

} // namespace frob::oracle

#endif // FROB_ORACLE_HPP
