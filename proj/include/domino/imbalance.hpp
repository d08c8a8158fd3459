#pragma once

#include <map>
#include <stdexcept>

#include "domino/laurent.hpp"
#include "domino/shapes.hpp"
#include "domino/tableau.hpp"

namespace domino {

namespace detail {

// Memoised tableau-sign sums, keyed by the inner shape and then by the
// outer shape so queries with a shared inner shape reuse one table.

inline std::map<Partition, std::map<Partition, BigInt>>& corner_sign_cache() {
    static std::map<Partition, std::map<Partition, BigInt>> cache;
    return cache;
}

inline std::map<Partition, std::map<Partition, BigInt>>& even_column_sign_cache() {
    static std::map<Partition, std::map<Partition, BigInt>> cache;
    return cache;
}

inline std::map<Partition, std::map<Partition, GaussInt>>& spin_at_minus_one_cache() {
    static std::map<Partition, std::map<Partition, GaussInt>> cache;
    return cache;
}

/// Sum of (-1)^{inversions of the book reading word} over standard
/// tableaux of big/small.  The largest entry occupies a removable corner
/// of big outside small; being maximal, it is inverted against exactly
/// the later cells, which all lie in lower rows.
inline BigInt corner_sign_sum(const Partition& small, const Partition& big,
                              std::map<Partition, BigInt>& memo) {
    if (auto it = memo.find(big); it != memo.end()) return it->second;
    BigInt total = 0;
    if (big == small) {
        total = 1;
    } else {
        for (Cell c : big.removable_cells()) {
            if (c.col <= small.part(c.row)) continue;
            long long below = 0;
            for (int r = c.row + 1; r <= big.length(); ++r) below += big.part(r) - small.part(r);
            const BigInt sub = corner_sign_sum(small, big.without_cell(c), memo);
            total += below % 2 == 0 ? sub : -sub;
        }
    }
    memo.emplace(big, total);
    return total;
}

/// Sum of (-1)^{vertical dominoes in even columns} over the standard
/// domino tableaux of big/small.
inline BigInt even_column_sign_sum(const Partition& small, const Partition& big) {
    return sdt_chain_sum<BigInt>(
        big, small,
        [](const Partition&, const Domino& d) -> BigInt {
            return d.vertical() && d.anchor.col % 2 == 0 ? -1 : 1;
        },
        even_column_sign_cache()[small]);
}

}  // namespace detail

/// The spin generating function evaluated at q = -1, i.e. the sum of
/// i^{vertical dominoes} over the standard domino tableaux of the shape
/// (the same for a reversed shape and its flip).
inline GaussInt spin_at_minus_one(const SkewShape& s) {
    return detail::sdt_chain_sum<GaussInt>(
        s.big(), s.small(),
        [](const Partition&, const Domino& d) -> GaussInt {
            return d.vertical() ? GaussInt{0, 1} : GaussInt{1, 0};
        },
        detail::spin_at_minus_one_cache()[s.small()]);
}

/// Sum of tableau signs over all standard tableaux of the shape.
///
/// Ordinary shapes of even size are summed over domino tableaux (the
/// switch of a non-domino pair 2k-1, 2k is a sign-reversing involution
/// on the rest), odd sizes over standard tableaux by the corner
/// recursion.  For a reversed shape the sum is the Gaussian expression
/// i^{h - size/2} * spin_at_minus_one in the negated statistics when the
/// size is even, and the flip rule (-1)^{v(flip)} * imbalance(flip)
/// otherwise; both are plain integers.
inline BigInt sign_imbalance(const SkewShape& s, SignConvention conv = SignConvention::relative) {
    if (s.reversed()) {
        if (conv == SignConvention::book)
            throw std::invalid_argument("book sign convention does not apply to reversed shapes");
        const ShapeStats st = s.stats();
        if (st.size % 2 != 0) {
            const SkewShape flip = s.flipped();
            const BigInt base = sign_imbalance(flip, SignConvention::relative);
            return flip.stats().v % 2 == 0 ? base : -base;
        }
        const GaussInt value = GaussInt::i_pow(st.h - st.size / 2) * spin_at_minus_one(s);
        if (value.im != 0) throw std::logic_error("sign imbalance of " + s.str() + " is not real");
        return value.re;
    }
    BigInt relative;
    if (s.size() % 2 == 0) {
        relative = detail::even_column_sign_sum(s.small(), s.big());
    } else {
        const BigInt corner = detail::corner_sign_sum(s.small(), s.big(),
                                                      detail::corner_sign_cache()[s.small()]);
        relative = sign_shift_exponent(s.big(), s.small()) % 2 == 0 ? corner : -corner;
    }
    if (conv == SignConvention::book)
        return sign_shift_exponent(s.big(), s.small()) % 2 == 0 ? relative : -relative;
    return relative;
}

/// The weighted domino-tableau sum
///   W_n = sum over shapes lambda/alpha of size 2n of
///         x^{n - v} y^{n - h} * (spin generating function in q),
/// where negative n sums over the reversed shapes lambda/alpha of size
/// 2n instead (lambda inside alpha, statistics negated).  Zero when
/// 2n drops below the distance from alpha to its 2-core.
inline LaurentPoly weighted_sum_W(const Partition& alpha, int n) {
    const int target = alpha.size() + 2 * n;
    if (target < 0) return LaurentPoly();
    const auto vertical_spin = [](const Partition&, const Domino& d) {
        return d.vertical() ? LaurentPoly::q(1, 2) : LaurentPoly(1);
    };
    std::map<Partition, LaurentPoly> memo;  // n >= 0: every summand shares the inner shape
    LaurentPoly total;
    const std::vector<Partition> outers =
        n >= 0 ? partitions_containing(alpha, target) : partitions_inside(alpha, target);
    for (const Partition& la : outers) {
        const SkewShape s(la, alpha);
        const ShapeStats st = s.stats();
        LaurentPoly term = n >= 0 ? detail::sdt_chain_sum<LaurentPoly>(la, alpha, vertical_spin, memo)
                                  : spin_polynomial(s);
        term *= LaurentPoly::x(st.size / 2 - st.v);
        term *= LaurentPoly::y(st.size / 2 - st.h);
        total += term;
    }
    return total;
}

/// The sign-imbalance polynomial
///   F_n = sum over shapes lambda/alpha of size n of
///         x^v y^h z^d * sign_imbalance(lambda/alpha),
/// where negative n sums over reversed shapes (lambda inside alpha, with
/// negated statistics and the reversed-shape imbalance).
inline LaurentPoly F_poly(const Partition& alpha, int n) {
    const int target = alpha.size() + n;
    if (target < 0) return LaurentPoly();
    LaurentPoly total;
    const std::vector<Partition> outers =
        n >= 0 ? partitions_containing(alpha, target) : partitions_inside(alpha, target);
    for (const Partition& la : outers) {
        const SkewShape s(la, alpha);
        const ShapeStats st = s.stats();
        LaurentPoly term(GaussInt(sign_imbalance(s)));
        term *= LaurentPoly::x(st.v);
        term *= LaurentPoly::y(st.h);
        term *= LaurentPoly::z(st.d);
        total += term;
    }
    return total;
}

}  // namespace domino
