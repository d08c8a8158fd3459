#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domino/laurent.hpp"
#include "domino/shapes.hpp"

namespace domino {

enum class TableauKind { syt, sdt };

inline const char* kind_name(TableauKind k) { return k == TableauKind::syt ? "syt" : "sdt"; }

/// A standard (domino) tableau stored as its defining chain of
/// partitions: chain[0] is the inner shape, every step adds exactly one
/// cell (SYT) or one domino (SDT), and entry k lives on the cells of
/// step k.
class ChainTableau {
public:
    ChainTableau(TableauKind kind, std::vector<Partition> chain)
        : kind_(kind), chain_(std::move(chain)) {
        if (chain_.empty()) throw std::invalid_argument("tableau chain must contain its base shape");
        for (std::size_t i = 0; i + 1 < chain_.size(); ++i) {
            StepInfo s = classify_step(chain_[i], chain_[i + 1]);
            bool ok = (kind_ == TableauKind::syt) ? s.kind == StepKind::cell : s.kind == StepKind::domino;
            if (!ok)
                throw std::invalid_argument("tableau chain step " + std::to_string(i + 1) + " (" +
                                            chain_[i].str() + " -> " + chain_[i + 1].str() + ") is not a single " +
                                            (kind_ == TableauKind::syt ? "cell" : "domino"));
        }
    }

    static ChainTableau empty(TableauKind kind, Partition base) {
        return ChainTableau(kind, std::vector<Partition>{std::move(base)});
    }

    /// Accepts colon-separated partitions, e.g. "1:2,1:2,2,1,1".
    static ChainTableau parse(TableauKind kind, std::string_view text) {
        return ChainTableau(kind, parse_partition_chain(text));
    }

    TableauKind kind() const { return kind_; }
    const std::vector<Partition>& chain() const { return chain_; }
    const Partition& base() const { return chain_.front(); }
    const Partition& outer() const { return chain_.back(); }
    /// Number of entries (chain steps).
    int size() const { return static_cast<int>(chain_.size()) - 1; }
    SkewShape shape() const { return SkewShape(outer(), base()); }

    /// Cells added by entry k (1-based).
    std::vector<Cell> cells_of(int k) const {
        return diff_cells(chain_.at(static_cast<std::size_t>(k)), chain_.at(static_cast<std::size_t>(k) - 1));
    }
    /// The domino added by entry k (SDT only).
    Domino domino_of(int k) const {
        StepInfo s = classify_step(chain_.at(static_cast<std::size_t>(k) - 1), chain_.at(static_cast<std::size_t>(k)));
        if (s.kind != StepKind::domino) throw std::invalid_argument("domino_of: not a domino step");
        return s.domino;
    }

    /// Entry at every cell of the skew shape.
    std::map<Cell, int> entries() const {
        std::map<Cell, int> out;
        for (int k = 1; k <= size(); ++k)
            for (Cell c : cells_of(k)) out[c] = k;
        return out;
    }

    /// Row listing "[1,2,9][3,4,7,10][5,6,8]"; rows of the outer shape
    /// with no tableau cells print as "[]".
    std::string rows_str() const {
        std::map<Cell, int> e = entries();
        std::string out;
        for (int r = 1; r <= outer().length(); ++r) {
            out += "[";
            bool first = true;
            for (int c = base().part(r) + 1; c <= outer().part(r); ++c) {
                if (!first) out += ",";
                out += std::to_string(e.at({r, c}));
                first = false;
            }
            out += "]";
        }
        return out.empty() ? "[]" : out;
    }

    std::string chain_str() const { return partition_chain_str(chain_); }

    friend bool operator==(const ChainTableau& a, const ChainTableau& b) {
        return a.kind_ == b.kind_ && a.chain_ == b.chain_;
    }
    friend bool operator<(const ChainTableau& a, const ChainTableau& b) {
        return std::tie(a.kind_, a.chain_) < std::tie(b.kind_, b.chain_);
    }

private:
    TableauKind kind_;
    std::vector<Partition> chain_;
};

/// All standard (domino) tableaux of the shape, ordered lexicographically
/// by the sequence of added cells/dominoes (anchor in book order,
/// horizontal before vertical).  Reversed shapes enumerate the flipped
/// shape's tableaux.
inline std::vector<ChainTableau> enumerate_tableaux(const SkewShape& s, TableauKind kind) {
    const Partition &big = s.big(), &small = s.small();
    std::vector<ChainTableau> out;
    int n = big.size() - small.size();
    if (kind == TableauKind::sdt && n % 2 != 0) return out;
    std::vector<Partition> chain{small};
    auto rec = [&](auto&& self) -> void {
        const Partition cur = chain.back();  // copy: push_back below reallocates
        if (cur == big) {
            out.emplace_back(ChainTableau(kind, chain));
            return;
        }
        if (kind == TableauKind::syt) {
            for (Cell c : cur.addable_cells()) {
                if (!big.contains_cell(c)) continue;
                chain.push_back(cur.with_cell(c));
                self(self);
                chain.pop_back();
            }
        } else {
            for (const Domino& d : cur.addable_dominoes()) {
                if (!big.contains_cell(d.anchor) || !big.contains_cell(d.second())) continue;
                chain.push_back(cur.with_domino(d));
                self(self);
                chain.pop_back();
            }
        }
    };
    rec(rec);
    return out;
}

/// Domino counts of an SDT by orientation and parity: oh/eh horizontal
/// dominoes in odd/even rows, ov/ev vertical dominoes in odd/even
/// columns.  The doubled spin sp2 = 2*sp counts all vertical dominoes.
struct SdtStats {
    int oh = 0, eh = 0, ov = 0, ev = 0;
    int sp2() const { return ov + ev; }
    friend auto operator<=>(const SdtStats&, const SdtStats&) = default;
};

inline SdtStats sdt_stats(const ChainTableau& t) {
    if (t.kind() != TableauKind::sdt) throw std::invalid_argument("sdt_stats: tableau is not an SDT");
    SdtStats s;
    for (int k = 1; k <= t.size(); ++k) {
        Domino d = t.domino_of(k);
        if (d.vertical()) ++(d.anchor.col % 2 ? s.ov : s.ev);
        else ++(d.anchor.row % 2 ? s.oh : s.eh);
    }
    return s;
}

/// The shift exponent relating the two sign conventions on a skew shape:
/// m = sum_i (outer_i - inner_i) * sum_{j>i} inner_j.
inline long long sign_shift_exponent(const Partition& outer, const Partition& inner) {
    long long m = 0;
    for (int i = 1; i <= outer.length(); ++i) {
        long long suffix = 0;
        for (int j = i + 1; j <= inner.length(); ++j) suffix += inner.part(j);
        m += static_cast<long long>(outer.part(i) - inner.part(i)) * suffix;
    }
    return m;
}

enum class SignConvention {
    book,      // (-1)^inv of the reading word (rows left to right, top to bottom)
    relative,  // book sign times (-1)^m; equals sign(T0)*sign(T0 . T) for any straight T0 on the inner shape
};

inline int tableau_sign(const ChainTableau& t, SignConvention conv = SignConvention::relative) {
    std::map<Cell, int> e = t.entries();  // book order
    std::vector<int> word;
    word.reserve(e.size());
    for (const auto& [c, k] : e) word.push_back(k);
    long long inv = 0;
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t j = i + 1; j < word.size(); ++j)
            if (word[i] > word[j]) ++inv;
    if (conv == SignConvention::relative) inv += sign_shift_exponent(t.outer(), t.base());
    return inv % 2 == 0 ? 1 : -1;
}

/// T1 . T2: entries of T1 kept, entries of T2 shifted up by |T1|.
/// Requires outer(T1) == base(T2).
inline ChainTableau concat(const ChainTableau& t1, const ChainTableau& t2) {
    if (t1.kind() != t2.kind()) throw std::invalid_argument("concat: mixed tableau kinds");
    if (t1.outer() != t2.base())
        throw std::invalid_argument("concat: shapes do not meet (" + t1.outer().str() + " vs " + t2.base().str() + ")");
    std::vector<Partition> chain = t1.chain();
    chain.insert(chain.end(), t2.chain().begin() + 1, t2.chain().end());
    return ChainTableau(t1.kind(), std::move(chain));
}

namespace detail {

/// Sum over all maximal cell chains small -> big of the product of step
/// weights, organised as a memoised recursion on the last (largest)
/// entry.  Visits every SYT of big/small exactly once.
template <class V, class W>
V syt_chain_sum(const Partition& big, const Partition& small, const W& weight, std::map<Partition, V>& memo) {
    if (big == small) return V(1);
    auto it = memo.find(big);
    if (it != memo.end()) return it->second;
    V acc(0);
    for (Cell c : big.removable_cells()) {
        if (small.contains_cell(c)) continue;
        Partition prev = big.without_cell(c);
        if (!prev.contains(small)) continue;
        acc += weight(big, c) * syt_chain_sum(big.without_cell(c), small, weight, memo);
    }
    memo.emplace(big, acc);
    return acc;
}

/// Same for domino chains; visits every SDT exactly once.
template <class V, class W>
V sdt_chain_sum(const Partition& big, const Partition& small, const W& weight, std::map<Partition, V>& memo) {
    if (big == small) return V(1);
    auto it = memo.find(big);
    if (it != memo.end()) return it->second;
    V acc(0);
    if ((big.size() - small.size()) % 2 == 0) {
        for (const Domino& d : big.removable_dominoes()) {
            Partition prev = big.without_domino(d);
            if (!prev.contains(small)) continue;
            acc += weight(big, d) * sdt_chain_sum(prev, small, weight, memo);
        }
    }
    memo.emplace(big, acc);
    return acc;
}

}  // namespace detail

/// Number of standard Young tableaux of the shape.
inline long long syt_count(const SkewShape& s) {
    std::map<Partition, long long> memo;
    return detail::syt_chain_sum<long long>(
        s.big(), s.small(), [](const Partition&, Cell) -> long long { return 1; }, memo);
}

/// Number of standard domino tableaux of the shape.
inline long long sdt_count(const SkewShape& s) {
    std::map<Partition, long long> memo;
    return detail::sdt_chain_sum<long long>(
        s.big(), s.small(), [](const Partition&, const Domino&) -> long long { return 1; }, memo);
}

/// The spin generating function sum_D q^{sp(D)} over the SDTs of the
/// shape, with half-integer exponents; identical for a reversed shape
/// and its flip.
inline LaurentPoly spin_polynomial(const SkewShape& s) {
    std::map<Partition, LaurentPoly> memo;
    const Partition small = s.small();
    return detail::sdt_chain_sum<LaurentPoly>(
        s.big(), small,
        [](const Partition&, const Domino& d) { return d.vertical() ? LaurentPoly::q(1, 2) : LaurentPoly(1); },
        memo);
}

}  // namespace domino
