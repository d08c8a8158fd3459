#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domino/growth.hpp"
#include "domino/laurent.hpp"
#include "domino/shapes.hpp"
#include "domino/tableau.hpp"

namespace domino {

/// A colored (partial) permutation in one-line notation: entry(i) = j
/// means position i maps to value j, barred or not; 0 means undefined.
struct ColoredPermutation {
    /// word[i-1] = +j (plain), -j (barred) or 0 (undefined)
    std::vector<int> word;

    int positions() const { return static_cast<int>(word.size()); }
    int entry(int i) const { return word.at(static_cast<std::size_t>(i) - 1); }

    /// "3~ 4 1 5~ 2": whitespace-separated values, trailing '~' = barred.
    static ColoredPermutation parse(std::string_view text) {
        ColoredPermutation cp;
        std::size_t pos = 0;
        while (pos < text.size()) {
            while (pos < text.size() && text[pos] == ' ') ++pos;
            if (pos >= text.size()) break;
            std::size_t end = text.find(' ', pos);
            std::string tok(text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
            pos = end == std::string_view::npos ? text.size() : end + 1;
            bool barred = !tok.empty() && tok.back() == '~';
            if (barred) tok.pop_back();
            std::size_t used = 0;
            int v;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad colored permutation token '" + tok + "'");
            }
            if (used != tok.size() || v < 0 || (v == 0 && barred))
                throw std::invalid_argument("bad colored permutation token '" + tok + "'");
            cp.word.push_back(barred ? -v : v);
        }
        cp.validate();
        return cp;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (i) out += " ";
            out += std::to_string(std::abs(word[i]));
            if (word[i] < 0) out += "~";
        }
        return out;
    }

    void validate() const {
        std::vector<int> seen;
        for (int v : word) {
            if (v == 0) continue;
            seen.push_back(std::abs(v));
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw std::invalid_argument("colored permutation repeats a value");
    }

    bool is_full() const {
        for (int v : word)
            if (v == 0) return false;
        // values must be exactly 1..n
        for (int v : word)
            if (std::abs(v) > positions()) return false;
        return true;
    }

    /// Square matrix with entry (i, |word(i)|) = sign of word(i).
    IntMatrix matrix() const {
        int n = positions();
        for (int i = 1; i <= n; ++i)
            if (std::abs(entry(i)) > n)
                throw std::invalid_argument("value " + std::to_string(std::abs(entry(i))) +
                                            " does not fit in a " + std::to_string(n) + "x" + std::to_string(n) +
                                            " matrix");
        IntMatrix m(n, n);
        for (int i = 1; i <= n; ++i)
            if (entry(i) != 0) m.at(i, std::abs(entry(i))) = entry(i) > 0 ? 1 : -1;
        return m;
    }

    static ColoredPermutation from_matrix(const IntMatrix& m) {
        ColoredPermutation cp;
        cp.word.assign(static_cast<std::size_t>(m.rows), 0);
        for (int i = 1; i <= m.rows; ++i)
            for (int j = 1; j <= m.cols; ++j)
                if (m.at(i, j) != 0) {
                    if (cp.word[static_cast<std::size_t>(i) - 1] != 0)
                        throw std::invalid_argument("matrix row " + std::to_string(i) + " has two nonzero entries");
                    cp.word[static_cast<std::size_t>(i) - 1] = m.at(i, j) > 0 ? j : -j;
                }
        cp.validate();
        return cp;
    }

    bool is_involution() const {
        if (!is_full()) return false;
        for (int i = 1; i <= positions(); ++i) {
            int v = entry(i);
            if (entry(std::abs(v)) != (v < 0 ? -i : i)) return false;
        }
        return true;
    }

    friend bool operator==(const ColoredPermutation& a, const ColoredPermutation& b) { return a.word == b.word; }
    friend bool operator<(const ColoredPermutation& a, const ColoredPermutation& b) { return a.word < b.word; }
};

/// Cycle counts of a colored involution: fixed points and 2-cycles,
/// plain and barred.  total_color counts barred positions.
struct CycleStats {
    int fixed_plain = 0, fixed_barred = 0, two_plain = 0, two_barred = 0;
    int total_color() const { return fixed_barred + 2 * two_barred; }
};

inline CycleStats cycle_stats(const ColoredPermutation& cp) {
    if (!cp.is_involution())
        throw std::invalid_argument("cycle statistics need a colored involution, got '" + cp.str() + "'");
    CycleStats s;
    for (int i = 1; i <= cp.positions(); ++i) {
        int v = cp.entry(i);
        if (std::abs(v) == i) ++(v > 0 ? s.fixed_plain : s.fixed_barred);
        else if (std::abs(v) > i) ++(v > 0 ? s.two_plain : s.two_barred);
    }
    return s;
}

/// x^{plain fixed} * y^{barred fixed} * q^{color/2}.
inline LaurentPoly involution_weight(const ColoredPermutation& cp) {
    CycleStats s = cycle_stats(cp);
    return LaurentPoly::var_pow(kVarX, s.fixed_plain) * LaurentPoly::var_pow(kVarY, s.fixed_barred) *
           LaurentPoly::var_pow(kVarQ, s.total_color(), 2);
}

// ---------------------------------------------------------------------------
// Enumeration helpers

/// All n x m matrices over {0,1} (or {0,-1,1} when colored) with at most
/// one nonzero entry per row and per column.
inline std::vector<IntMatrix> enumerate_ppms(int n, int m, bool colored) {
    std::vector<IntMatrix> out;
    IntMatrix cur(n, m);
    std::vector<bool> col_used(static_cast<std::size_t>(m) + 1, false);
    auto rec = [&](auto&& self, int i) -> void {
        if (i > n) {
            out.push_back(cur);
            return;
        }
        self(self, i + 1);  // row i all zero
        for (int j = 1; j <= m; ++j) {
            if (col_used[static_cast<std::size_t>(j)]) continue;
            col_used[static_cast<std::size_t>(j)] = true;
            for (int v = colored ? -1 : 1; v <= 1; v += 2) {
                cur.at(i, j) = v;
                self(self, i + 1);
            }
            cur.at(i, j) = 0;
            col_used[static_cast<std::size_t>(j)] = false;
        }
    };
    rec(rec, 1);
    return out;
}

inline std::vector<IntMatrix> enumerate_symmetric_ppms(int n, bool colored) {
    std::vector<IntMatrix> out;
    for (IntMatrix& m : enumerate_ppms(n, n, colored)) {
        bool sym = true;
        for (int i = 1; i <= n && sym; ++i)
            for (int j = i + 1; j <= n && sym; ++j) sym = m.at(i, j) == m.at(j, i);
        if (sym) out.push_back(std::move(m));
    }
    return out;
}

/// All full permutation matrices of size n (entries 0/1).
inline std::vector<IntMatrix> enumerate_permutation_matrices(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    std::vector<IntMatrix> out;
    do {
        IntMatrix m(n, n);
        for (int i = 1; i <= n; ++i) m.at(i, perm[static_cast<std::size_t>(i) - 1]) = 1;
        out.push_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// All colored involutions of [n], built cycle by cycle.
inline std::vector<ColoredPermutation> enumerate_colored_involutions(int n) {
    std::vector<ColoredPermutation> out;
    ColoredPermutation cp;
    cp.word.assign(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self) -> void {
        int i = 0;
        while (i < n && cp.word[static_cast<std::size_t>(i)] != 0) ++i;
        if (i == n) {
            out.push_back(cp);
            return;
        }
        for (int sign = 1; sign >= -1; sign -= 2) {
            cp.word[static_cast<std::size_t>(i)] = sign * (i + 1);  // fixed point
            self(self);
            for (int j = i + 1; j < n; ++j) {
                if (cp.word[static_cast<std::size_t>(j)] != 0) continue;
                cp.word[static_cast<std::size_t>(i)] = sign * (j + 1);
                cp.word[static_cast<std::size_t>(j)] = sign * (i + 1);
                self(self);
                cp.word[static_cast<std::size_t>(j)] = 0;
            }
            cp.word[static_cast<std::size_t>(i)] = 0;
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

/// The matrix with all-zero rows and columns deleted.  For a matrix with
/// at most one nonzero per line this is a full square colored
/// permutation matrix.
inline IntMatrix compress_matrix(const IntMatrix& m) {
    std::vector<int> live_rows, live_cols;
    for (int i = 1; i <= m.rows; ++i) {
        bool nz = false;
        for (int j = 1; j <= m.cols; ++j) nz = nz || m.at(i, j) != 0;
        if (nz) live_rows.push_back(i);
    }
    for (int j = 1; j <= m.cols; ++j) {
        bool nz = false;
        for (int i = 1; i <= m.rows; ++i) nz = nz || m.at(i, j) != 0;
        if (nz) live_cols.push_back(j);
    }
    IntMatrix out(static_cast<int>(live_rows.size()), static_cast<int>(live_cols.size()));
    for (int i = 1; i <= out.rows; ++i)
        for (int j = 1; j <= out.cols; ++j)
            out.at(i, j) = m.at(live_rows[static_cast<std::size_t>(i) - 1], live_cols[static_cast<std::size_t>(j) - 1]);
    return out;
}

/// The colored permutation carried by the nonzero entries, read after
/// deleting the all-zero rows and columns.
inline ColoredPermutation compressed_permutation(const IntMatrix& m) {
    return ColoredPermutation::from_matrix(compress_matrix(m));
}

// ---------------------------------------------------------------------------
// Inversions of partial permutation matrices

/// Square extension of an n x m matrix with at most one nonzero per row
/// and column: a full (n+m-j) x (n+m-j) permutation-style matrix
/// ( 0 B ; C M ) where B marks the zero columns of M and C its zero
/// rows, both in ascending order.
inline IntMatrix matrix_extension(const IntMatrix& m) {
    std::vector<int> zero_rows, zero_cols;
    for (int i = 1; i <= m.rows; ++i) {
        bool nz = false;
        for (int j = 1; j <= m.cols; ++j) nz |= m.at(i, j) != 0;
        if (!nz) zero_rows.push_back(i);
    }
    for (int j = 1; j <= m.cols; ++j) {
        bool nz = false;
        for (int i = 1; i <= m.rows; ++i) nz |= m.at(i, j) != 0;
        if (!nz) zero_cols.push_back(j);
    }
    int top = static_cast<int>(zero_cols.size());   // m - j rows above M
    int side = static_cast<int>(zero_rows.size());  // n - j columns left of M
    IntMatrix ext(top + m.rows, side + m.cols);
    for (int r = 1; r <= top; ++r) ext.at(r, side + zero_cols[static_cast<std::size_t>(r) - 1]) = 1;
    for (int k = 1; k <= side; ++k) ext.at(top + zero_rows[static_cast<std::size_t>(k) - 1], k) = 1;
    for (int i = 1; i <= m.rows; ++i)
        for (int j = 1; j <= m.cols; ++j) ext.at(top + i, side + j) = m.at(i, j);
    return ext;
}

/// Inversions of the permutation underlying the square extension
/// (colors ignored).
inline long long matrix_inv(const IntMatrix& m) {
    IntMatrix ext = matrix_extension(m);
    std::vector<int> perm;
    for (int i = 1; i <= ext.rows; ++i)
        for (int j = 1; j <= ext.cols; ++j)
            if (ext.at(i, j) != 0) perm.push_back(j);
    if (static_cast<int>(perm.size()) != ext.rows)
        throw std::logic_error("matrix extension is not a full permutation matrix");
    long long inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv;
}

inline int matrix_sign(const IntMatrix& m) { return matrix_inv(m) % 2 == 0 ? 1 : -1; }

// ---------------------------------------------------------------------------
// Growth-diagram correspondences

/// Insert equal steps into a tableau's chain: step k of the result is an
/// equal step when equal_at[k-1] holds, otherwise the next strict step
/// of the tableau.  The number of false entries must match the tableau
/// size.
inline std::vector<Partition> tableau_to_multichain(const ChainTableau& t, const std::vector<bool>& equal_at) {
    long long strict = std::count(equal_at.begin(), equal_at.end(), false);
    if (strict != t.size())
        throw std::invalid_argument("tableau has " + std::to_string(t.size()) + " entries but the multichain needs " +
                                    std::to_string(strict) + " strict steps");
    std::vector<Partition> chain{t.base()};
    std::size_t next = 1;
    for (bool eq : equal_at) {
        if (eq) chain.push_back(chain.back());
        else chain.push_back(t.chain()[next++]);
    }
    return chain;
}

/// Drop equal steps, keeping the strict skeleton as a tableau.
inline ChainTableau chain_to_tableau(TableauKind kind, const std::vector<Partition>& multichain) {
    if (multichain.empty()) throw std::invalid_argument("empty multichain");
    std::vector<Partition> strict{multichain.front()};
    for (const Partition& p : multichain)
        if (p != strict.back()) strict.push_back(p);
    return ChainTableau(kind, std::move(strict));
}

struct CorrespondenceResult {
    ChainTableau p, q;
    GrowthDiagram diagram;
};

struct CorrespondenceInverse {
    ChainTableau u, v;
    IntMatrix matrix;
    GrowthDiagram diagram;
};

namespace detail {

inline CorrespondenceResult correspondence(Ruleset rules, const ChainTableau& u, const ChainTableau& v,
                                           const IntMatrix& m) {
    TableauKind kind = rules == Ruleset::domino ? TableauKind::sdt : TableauKind::syt;
    if (u.kind() != kind || v.kind() != kind)
        throw std::invalid_argument(std::string("this correspondence needs ") + kind_name(kind) + " chains");
    if (u.base() != v.base())
        throw std::invalid_argument("the two tableaux must share their inner shape (" + u.base().str() + " vs " +
                                    v.base().str() + ")");
    std::vector<bool> col_nonzero(static_cast<std::size_t>(m.cols), false);
    std::vector<bool> row_nonzero(static_cast<std::size_t>(m.rows), false);
    for (int i = 1; i <= m.rows; ++i)
        for (int j = 1; j <= m.cols; ++j)
            if (m.at(i, j) != 0) {
                row_nonzero[static_cast<std::size_t>(i) - 1] = true;
                col_nonzero[static_cast<std::size_t>(j) - 1] = true;
            }
    GrowthDiagram g = GrowthDiagram::from_boundary(rules, tableau_to_multichain(u, col_nonzero),
                                                   tableau_to_multichain(v, row_nonzero), m);
    return {chain_to_tableau(kind, g.bottom_chain()), chain_to_tableau(kind, g.right_chain()), std::move(g)};
}

inline CorrespondenceInverse correspondence_inverse(Ruleset rules, const ChainTableau& p, const ChainTableau& q) {
    TableauKind kind = rules == Ruleset::domino ? TableauKind::sdt : TableauKind::syt;
    if (p.kind() != kind || q.kind() != kind)
        throw std::invalid_argument(std::string("this correspondence needs ") + kind_name(kind) + " chains");
    if (p.outer() != q.outer())
        throw std::invalid_argument("the two tableaux must share their outer shape (" + p.outer().str() + " vs " +
                                    q.outer().str() + ")");
    GrowthDiagram g = GrowthDiagram::from_corner(rules, p.chain(), q.chain());
    return {chain_to_tableau(kind, g.top_chain()), chain_to_tableau(kind, g.left_chain()), g.matrix(), std::move(g)};
}

}  // namespace detail

/// The domino correspondence: tableaux u (top, m - j entries) and
/// v (left, n - j entries) with a common inner shape plus an n x m
/// matrix over {0,-1,1} with j nonzeros and at most one per row and
/// column map to the pair (p, q) = (bottom, right) with a common outer
/// shape; p gains one domino per matrix column, q one per row.
inline CorrespondenceResult phi(const ChainTableau& u, const ChainTableau& v, const IntMatrix& m) {
    return detail::correspondence(Ruleset::domino, u, v, m);
}

inline CorrespondenceInverse phi_inverse(const ChainTableau& p, const ChainTableau& q) {
    return detail::correspondence_inverse(Ruleset::domino, p, q);
}

/// Row-insertion correspondence on single-cell chains and 0/1 matrices.
inline CorrespondenceResult rs_phi(const ChainTableau& u, const ChainTableau& v, const IntMatrix& m) {
    return detail::correspondence(Ruleset::rs, u, v, m);
}

inline CorrespondenceInverse rs_phi_inverse(const ChainTableau& p, const ChainTableau& q) {
    return detail::correspondence_inverse(Ruleset::rs, p, q);
}

struct SymmetricResult {
    ChainTableau p;
    GrowthDiagram diagram;
};

struct SymmetricInverse {
    ChainTableau u;
    IntMatrix matrix;
    GrowthDiagram diagram;
};

/// Restriction of the correspondence to symmetric matrices: both output
/// tableaux coincide.
inline SymmetricResult phi_sym(const ChainTableau& u, const IntMatrix& m) {
    for (int i = 1; i <= m.rows; ++i)
        for (int j = 1; j <= m.cols; ++j)
            if (m.rows != m.cols || m.at(i, j) != m.at(j, i))
                throw std::invalid_argument("the symmetric correspondence needs a symmetric matrix");
    CorrespondenceResult r = phi(u, u, m);
    if (!(r.p == r.q)) throw std::logic_error("symmetric input produced distinct output tableaux");
    return {std::move(r.p), std::move(r.diagram)};
}

inline SymmetricInverse phi_sym_inverse(const ChainTableau& p) {
    CorrespondenceInverse r = phi_inverse(p, p);
    if (!(r.u == r.v)) throw std::logic_error("symmetric output came from distinct input tableaux");
    return {std::move(r.u), std::move(r.matrix), std::move(r.diagram)};
}

}  // namespace domino
