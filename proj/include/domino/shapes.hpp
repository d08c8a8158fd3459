#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace domino {

/// A cell of a Young diagram, 1-based (row 1 is the top row).
/// The default ordering is the "book order" used throughout: top row
/// first, left to right within a row.
struct Cell {
    int row = 0;
    int col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

enum class Orientation { horizontal, vertical };

/// Two adjacent cells: anchor plus its right neighbour (horizontal) or
/// the cell below (vertical).  The default ordering sorts by anchor in
/// book order with horizontal before vertical, which is the canonical
/// enumeration order everywhere in this library.
struct Domino {
    Cell anchor;
    Orientation orientation = Orientation::horizontal;

    bool vertical() const { return orientation == Orientation::vertical; }
    Cell second() const {
        return vertical() ? Cell{anchor.row + 1, anchor.col}
                          : Cell{anchor.row, anchor.col + 1};
    }
    friend auto operator<=>(const Domino&, const Domino&) = default;
};

/// An integer partition in canonical form: weakly decreasing positive
/// parts, no trailing zeros stored.  part(i) reads as 0 past the end, so
/// code can index rows freely.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Accepts "4,3,1"; the empty partition is "" or "0".
    static Partition parse(std::string_view text) {
        std::string s;
        for (char c : text)
            if (c != ' ' && c != '\t') s.push_back(c);
        if (s.empty() || s == "0") return Partition{};
        std::vector<int> parts;
        std::size_t pos = 0;
        while (pos <= s.size()) {
            std::size_t comma = s.find(',', pos);
            std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty()) throw std::invalid_argument("bad partition text: '" + std::string(text) + "'");
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad partition text: '" + std::string(text) + "'");
            }
            if (used != tok.size()) throw std::invalid_argument("bad partition text: '" + std::string(text) + "'");
            parts.push_back(v);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    /// 1-based part access; rows past the last part read as 0.
    int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }

    /// Number of rows with at least c cells (c-th part of the conjugate).
    int col_height(int c) const {
        int h = 0;
        while (h < length() && parts_[h] >= c) ++h;
        return h;
    }

    bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (int i = 0; i < mu.length(); ++i)
            if (mu.parts_[i] > parts_[i]) return false;
        return true;
    }
    bool contains_cell(Cell c) const { return c.row >= 1 && c.col >= 1 && part(c.row) >= c.col; }

    /// All cells in book order.
    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int r = 1; r <= length(); ++r)
            for (int c = 1; c <= part(r); ++c) out.push_back({r, c});
        return out;
    }

    Partition with_cell(Cell c) const {
        if (c.row < 1 || c.col < 1 || part(c.row) != c.col - 1 || (c.row > 1 && part(c.row - 1) < c.col))
            throw std::invalid_argument("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                        ") is not addable to " + str());
        std::vector<int> p = parts_;
        if (c.row > length()) p.push_back(1);
        else p[c.row - 1] += 1;
        return Partition(std::move(p));
    }
    Partition without_cell(Cell c) const {
        if (part(c.row) != c.col || part(c.row + 1) > c.col - 1)
            throw std::invalid_argument("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                        ") is not removable from " + str());
        std::vector<int> p = parts_;
        p[c.row - 1] -= 1;
        return Partition(std::move(p));
    }
    Partition with_domino(const Domino& d) const { return with_cell(d.anchor).with_cell(d.second()); }
    Partition without_domino(const Domino& d) const { return without_cell(d.second()).without_cell(d.anchor); }

    /// Corner cells whose addition keeps a partition, in book order.
    std::vector<Cell> addable_cells() const {
        std::vector<Cell> out;
        for (int r = 1; r <= length() + 1; ++r)
            if (r == 1 || part(r - 1) > part(r)) out.push_back({r, part(r) + 1});
        return out;
    }
    std::vector<Cell> removable_cells() const {
        std::vector<Cell> out;
        for (int r = 1; r <= length(); ++r)
            if (part(r) > part(r + 1)) out.push_back({r, part(r)});
        return out;
    }

    /// Dominoes whose addition keeps a partition, sorted by (anchor book
    /// order, horizontal before vertical).
    std::vector<Domino> addable_dominoes() const {
        std::vector<Domino> out;
        for (int r = 1; r <= length() + 1; ++r)
            if (r == 1 || part(r - 1) >= part(r) + 2)
                out.push_back({{r, part(r) + 1}, Orientation::horizontal});
        for (int c = 1; c <= part(1) + 1; ++c) {
            int h = col_height(c);
            if (part(h + 1) == c - 1 && part(h + 2) == c - 1)
                out.push_back({{h + 1, c}, Orientation::vertical});
        }
        std::sort(out.begin(), out.end());
        return out;
    }
    std::vector<Domino> removable_dominoes() const {
        std::vector<Domino> out;
        for (int r = 1; r <= length(); ++r)
            if (part(r) >= 2 && part(r) - 2 >= part(r + 1))
                out.push_back({{r, part(r) - 1}, Orientation::horizontal});
        for (int r = 1; r + 1 <= length(); ++r)
            if (part(r) == part(r + 1) && part(r + 1) - 1 >= part(r + 2))
                out.push_back({{r, part(r)}, Orientation::vertical});
        std::sort(out.begin(), out.end());
        return out;
    }

    /// "4,3,1"; the empty partition prints as "0".
    std::string str() const {
        if (parts_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Coordinatewise maximum (the smallest partition containing both).
inline Partition least_upper(const Partition& a, const Partition& b) {
    std::vector<int> p(static_cast<std::size_t>(std::max(a.length(), b.length())));
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
        p[i - 1] = std::max(a.part(i), b.part(i));
    return Partition(std::move(p));
}

/// Coordinatewise minimum (the largest partition contained in both).
inline Partition greatest_lower(const Partition& a, const Partition& b) {
    std::vector<int> p(static_cast<std::size_t>(std::min(a.length(), b.length())));
    for (int i = 1; i <= static_cast<int>(p.size()); ++i)
        p[i - 1] = std::min(a.part(i), b.part(i));
    return Partition(std::move(p));
}

/// Cells of la not in mu, in book order.  Requires mu inside la.
inline std::vector<Cell> diff_cells(const Partition& la, const Partition& mu) {
    if (!la.contains(mu)) throw std::invalid_argument("diff_cells: " + mu.str() + " not inside " + la.str());
    std::vector<Cell> out;
    for (int r = 1; r <= la.length(); ++r)
        for (int c = mu.part(r) + 1; c <= la.part(r); ++c) out.push_back({r, c});
    return out;
}

enum class StepKind { equal, cell, domino, invalid };

/// Classifies a single step of a multichain: equal, one added cell, one
/// added domino, or anything else.
struct StepInfo {
    StepKind kind = StepKind::invalid;
    Cell cell;      // meaningful when kind == cell
    Domino domino;  // meaningful when kind == domino
};

inline StepInfo classify_step(const Partition& from, const Partition& to) {
    if (!to.contains(from)) return {};
    std::vector<Cell> d = diff_cells(to, from);
    if (d.empty()) return {StepKind::equal, {}, {}};
    if (d.size() == 1) return {StepKind::cell, d[0], {}};
    if (d.size() == 2) {
        if (d[0].row == d[1].row && d[0].col + 1 == d[1].col)
            return {StepKind::domino, {}, Domino{d[0], Orientation::horizontal}};
        if (d[0].col == d[1].col && d[0].row + 1 == d[1].row)
            return {StepKind::domino, {}, Domino{d[0], Orientation::vertical}};
    }
    return {};
}

/// The staircase partition delta_k = (k, k-1, ..., 1); delta_0 is empty.
inline Partition staircase(int k) {
    if (k < 0) throw std::invalid_argument("staircase: negative k");
    std::vector<int> p;
    for (int v = k; v >= 1; --v) p.push_back(v);
    return Partition(std::move(p));
}

/// delta_k with the cell (k+1-i, i+1) added, for 0 <= i <= k.  These are
/// exactly the covers of delta_k.
inline Partition staircase_with_cell(int k, int i) {
    if (i < 0 || i > k) throw std::invalid_argument("staircase_with_cell: need 0 <= i <= k");
    return staircase(k).with_cell({k + 1 - i, i + 1});
}

/// The partitions covering a in Young's lattice, each paired with the
/// number u of cells of a strictly after the added cell in book order.
/// Sorted by the added cell's book order.
inline std::vector<std::pair<Partition, int>> covers(const Partition& a) {
    std::vector<std::pair<Partition, int>> out;
    for (Cell c : a.addable_cells()) {
        int u = 0;
        for (int r = c.row + 1; r <= a.length(); ++r) u += a.part(r);
        out.emplace_back(a.with_cell(c), u);
    }
    return out;
}

/// 2-core: greedily strip removable dominoes until none remain.  The
/// terminal shape is independent of removal order (always a staircase).
inline Partition two_core(const Partition& la) {
    static std::map<Partition, Partition> memo;
    static std::mutex memo_mutex;
    {
        std::lock_guard lock(memo_mutex);
        auto it = memo.find(la);
        if (it != memo.end()) return it->second;
    }
    Partition cur = la;
    for (;;) {
        std::vector<Domino> rem = cur.removable_dominoes();
        if (rem.empty()) break;
        cur = cur.without_domino(rem.front());
    }
    std::lock_guard lock(memo_mutex);
    memo.emplace(la, cur);
    return cur;
}

struct ShapeStats {
    int size = 0;  // number of cells, negative for reversed shapes
    int v = 0;     // cells in even rows
    int h = 0;     // cells in even columns
    int d = 0;     // cells in both an even row and an even column
    friend auto operator<=>(const ShapeStats&, const ShapeStats&) = default;
};

/// A skew shape outer/inner.  Exactly one of inner <= outer ("skew") or
/// outer <= inner ("reversed") must hold; equal shapes count as skew.
/// All statistics of a reversed shape are the negatives of the flipped
/// shape's.
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner)
        : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (outer_.contains(inner_)) reversed_ = false;
        else if (inner_.contains(outer_)) reversed_ = true;
        else
            throw std::invalid_argument("incomparable partitions " + outer_.str() + " / " + inner_.str());
    }
    explicit SkewShape(Partition outer) : SkewShape(std::move(outer), Partition{}) {}

    /// Accepts "outer/inner" or a bare partition ("4,3,1/2,1", "2,2").
    static SkewShape parse(std::string_view text) {
        std::size_t slash = text.find('/');
        if (slash == std::string_view::npos) return SkewShape(Partition::parse(text));
        return SkewShape(Partition::parse(text.substr(0, slash)), Partition::parse(text.substr(slash + 1)));
    }

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    bool reversed() const { return reversed_; }

    /// Orientation-normalised pair: big() contains small().
    const Partition& big() const { return reversed_ ? inner_ : outer_; }
    const Partition& small() const { return reversed_ ? outer_ : inner_; }

    /// Signed size |outer| - |inner|.
    int size() const { return outer_.size() - inner_.size(); }

    /// Cells of the orientation-normalised shape, in book order.
    std::vector<Cell> cells() const { return diff_cells(big(), small()); }

    ShapeStats stats() const {
        ShapeStats s;
        for (Cell c : cells()) {
            if (c.row % 2 == 0) ++s.v;
            if (c.col % 2 == 0) ++s.h;
            if (c.row % 2 == 0 && c.col % 2 == 0) ++s.d;
        }
        s.size = big().size() - small().size();
        if (reversed_) {
            s.size = -s.size;
            s.v = -s.v;
            s.h = -s.h;
            s.d = -s.d;
        }
        return s;
    }

    SkewShape flipped() const { return SkewShape(inner_, outer_); }

    std::string str() const {
        if (inner_.empty() && !reversed_) return outer_.str();
        return outer_.str() + "/" + inner_.str();
    }

    friend bool operator==(const SkewShape& a, const SkewShape& b) {
        return a.outer_ == b.outer_ && a.inner_ == b.inner_;
    }

private:
    Partition outer_, inner_;
    bool reversed_ = false;
};

namespace detail {
inline bool tileable_search(const Partition& big, const Partition& small,
                            std::map<Partition, bool>& memo) {
    if (big == small) return true;
    auto it = memo.find(big);
    if (it != memo.end()) return it->second;
    bool ok = false;
    for (const Domino& d : big.removable_dominoes()) {
        Partition nb = big.without_domino(d);
        if (nb.contains(small) && tileable_search(nb, small, memo)) {
            ok = true;
            break;
        }
    }
    memo.emplace(big, ok);
    return ok;
}
}  // namespace detail

/// Whether the shape can be tiled by dominoes, i.e. whether a chain of
/// domino additions leads from small() to big().  Checkerboard balance is
/// necessary but NOT sufficient (e.g. (3,1)/(2) is balanced, untileable),
/// so this runs a memoised existence search.
inline bool is_domino_tileable(const SkewShape& s) {
    int n = s.big().size() - s.small().size();
    if (n % 2 != 0) return false;
    std::map<Partition, bool> memo;
    return detail::tileable_search(s.big(), s.small(), memo);
}

/// All partitions la containing mu with |la| == total, in increasing
/// lexicographic order.
inline std::vector<Partition> partitions_containing(const Partition& mu, int total) {
    std::vector<Partition> out;
    if (total < mu.size()) return out;
    std::vector<int> row;
    auto rec = [&](auto&& self, int i, int prev, int remaining) -> void {
        // need = cells mu still forces on rows i and below
        int need = 0;
        for (int j = i; j <= mu.length(); ++j) need += mu.part(j);
        if (remaining == 0) {
            if (need == 0) out.emplace_back(Partition(row));
            return;
        }
        if (need > remaining) return;
        int lo = std::max(mu.part(i), 1);
        int hi = std::min(prev, mu.part(i) + (remaining - need));
        for (int v = lo; v <= hi; ++v) {
            row.push_back(v);
            self(self, i + 1, v, remaining - v);
            row.pop_back();
        }
    };
    rec(rec, 1, total, total);
    std::sort(out.begin(), out.end());
    return out;
}

/// All partitions of n.
inline std::vector<Partition> partitions_of(int n) { return partitions_containing(Partition{}, n); }

/// All partitions mu inside la with |mu| == total.
inline std::vector<Partition> partitions_inside(const Partition& la, int total) {
    std::vector<Partition> out;
    if (total < 0 || total > la.size()) return out;
    std::vector<int> row;
    auto rec = [&](auto&& self, int i, int prev, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(Partition(row));
            return;
        }
        if (i > la.length()) return;
        // at most sum of remaining rows can still be placed
        int avail = 0;
        for (int j = i; j <= la.length(); ++j) avail += std::min(la.part(j), prev);
        if (avail < remaining) return;
        for (int v = std::min({la.part(i), prev, remaining}); v >= 1; --v) {
            row.push_back(v);
            self(self, i + 1, v, remaining - v);
            row.pop_back();
        }
    };
    rec(rec, 1, total == 0 ? 1 : total, total);
    std::sort(out.begin(), out.end());
    return out;
}

/// Colon-separated chain of partitions, e.g. "0:2:2,2".
inline std::vector<Partition> parse_partition_chain(std::string_view text) {
    std::vector<Partition> chain;
    std::size_t pos = 0;
    for (;;) {
        std::size_t colon = text.find(':', pos);
        chain.push_back(Partition::parse(
            text.substr(pos, colon == std::string_view::npos ? std::string_view::npos : colon - pos)));
        if (colon == std::string_view::npos) break;
        pos = colon + 1;
    }
    return chain;
}

inline std::string partition_chain_str(const std::vector<Partition>& chain) {
    std::string out;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i) out.push_back(':');
        out += chain[i].str();
    }
    return out;
}

}  // namespace domino
