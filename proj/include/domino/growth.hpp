#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "domino/shapes.hpp"

namespace domino {

/// Which family of local rules a growth diagram uses: domino chains with
/// entries in {-1,0,1}, or single-cell chains with entries in {0,1}.
enum class Ruleset { domino, rs };

inline const char* ruleset_name(Ruleset r) { return r == Ruleset::domino ? "domino" : "rs"; }

/// Dense integer matrix with 1-based indexing.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {
        if (r < 0 || c < 0) throw std::invalid_argument("matrix dimensions must be >= 0");
    }

    int& at(int i, int j) { return a[idx(i, j)]; }
    int at(int i, int j) const { return a[idx(i, j)]; }

    /// Rows separated by ';', entries by whitespace: "0 1 0; -1 0 0".
    static IntMatrix parse(std::string_view text) {
        std::vector<std::vector<int>> rows;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t semi = text.find(';', pos);
            std::string row(text.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos));
            std::istringstream in(row);
            std::vector<int> vals;
            int v;
            while (in >> v) vals.push_back(v);
            if (!in.eof()) throw std::invalid_argument("matrix row is not whitespace-separated integers: '" + row + "'");
            if (!vals.empty()) rows.push_back(std::move(vals));
            if (semi == std::string_view::npos) break;
            pos = semi + 1;
        }
        IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
        for (int i = 1; i <= m.rows; ++i) {
            if (static_cast<int>(rows[static_cast<std::size_t>(i) - 1].size()) != m.cols)
                throw std::invalid_argument("matrix rows have unequal lengths");
            for (int j = 1; j <= m.cols; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1];
        }
        return m;
    }

    std::string str() const {
        std::string out;
        for (int i = 1; i <= rows; ++i) {
            if (i > 1) out += "; ";
            for (int j = 1; j <= cols; ++j) {
                if (j > 1) out += " ";
                out += std::to_string(at(i, j));
            }
        }
        return out;
    }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }

private:
    std::size_t idx(int i, int j) const {
        if (i < 1 || i > rows || j < 1 || j > cols) throw std::out_of_range("matrix index out of range");
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(j - 1);
    }
};

namespace detail {

inline void check_local_step(Ruleset rules, const Partition& from, const Partition& to, const char* label) {
    StepInfo s = classify_step(from, to);
    bool ok = s.kind == StepKind::equal ||
              (rules == Ruleset::domino ? s.kind == StepKind::domino : s.kind == StepKind::cell);
    if (!ok)
        throw std::invalid_argument(std::string("local rule: step ") + label + " (" + from.str() + " -> " + to.str() +
                                    ") is not an equal-or-" + (rules == Ruleset::domino ? "domino" : "cell") + " step");
}

}  // namespace detail

/// Bottom-right corner of a growth-diagram square from the other three
/// corners and the matrix entry: nu is top-left, mu and rho the two
/// neighbours (the rule is symmetric in them), entry the square's matrix
/// value.
inline Partition forward_local(Ruleset rules, const Partition& nu, const Partition& mu, const Partition& rho,
                               int entry) {
    detail::check_local_step(rules, nu, mu, "nu -> mu");
    detail::check_local_step(rules, nu, rho, "nu -> rho");
    if (rules == Ruleset::rs) {
        if (entry != 0 && entry != 1) throw std::invalid_argument("matrix entries must be 0 or 1 for this ruleset");
        if (entry == 1) {
            if (!(nu == mu && nu == rho))
                throw std::invalid_argument("a nonzero entry needs equal partitions on its top and left corners");
            return mu.with_cell({1, mu.part(1) + 1});
        }
        if (nu == mu) return rho;
        if (nu == rho) return mu;
        if (mu != rho) return least_upper(mu, rho);
        Cell c = classify_step(nu, mu).cell;  // mu == rho != nu: bump the cell one row down
        return mu.with_cell({c.row + 1, mu.part(c.row + 1) + 1});
    }

    if (entry < -1 || entry > 1) throw std::invalid_argument("matrix entries must be -1, 0 or 1 for this ruleset");
    if (entry != 0) {
        if (!(nu == mu && nu == rho))
            throw std::invalid_argument("a nonzero entry needs equal partitions on its top and left corners");
        if (entry == 1) return mu.with_domino({{1, mu.part(1) + 1}, Orientation::horizontal});
        return mu.with_domino({{mu.length() + 1, 1}, Orientation::vertical});
    }
    if (nu == mu) return rho;
    if (nu == rho) return mu;
    if (mu != rho) {
        std::vector<Cell> dm = diff_cells(mu, nu), dr = diff_cells(rho, nu), shared;
        for (Cell c : dm)
            if (c == dr[0] || c == dr[1]) shared.push_back(c);
        Partition up = least_upper(mu, rho);
        if (shared.empty()) return up;  // disjoint dominoes: the union is the answer
        if (shared.size() != 1) throw std::logic_error("distinct domino steps sharing two cells");
        return up.with_cell({shared[0].row + 1, shared[0].col + 1});
    }
    Domino d = classify_step(nu, mu).domino;  // mu == rho != nu: bump the domino
    if (d.vertical()) {
        int c = d.anchor.col + 1;
        return mu.with_domino({{mu.col_height(c) + 1, c}, Orientation::vertical});
    }
    int r = d.anchor.row + 1;
    return mu.with_domino({{r, mu.part(r) + 1}, Orientation::horizontal});
}

struct LocalPreimage {
    Partition nu;
    int entry = 0;
};

/// Top-left corner and matrix entry of a square from the other three
/// corners; throws std::invalid_argument("no preimage: ...") when the
/// square cannot arise from the forward rule.
inline LocalPreimage inverse_local(Ruleset rules, const Partition& mu, const Partition& rho, const Partition& lam) {
    detail::check_local_step(rules, mu, lam, "mu -> lambda");
    detail::check_local_step(rules, rho, lam, "rho -> lambda");
    LocalPreimage out;
    bool found = false;
    auto propose = [&](Partition nu, int entry) {
        if (found) return;
        out = {std::move(nu), entry};
        found = true;
    };
    try {
        if (mu == lam) propose(rho, 0);
        else if (rho == lam) propose(mu, 0);
        else if (mu != rho) {
            Partition up = least_upper(mu, rho);
            Partition glb = greatest_lower(mu, rho);
            if (lam == up) propose(std::move(glb), 0);
            else if (rules == Ruleset::domino) {
                std::vector<Cell> extra = diff_cells(lam, up);
                if (extra.size() == 1 && extra[0].row >= 2 && extra[0].col >= 2)
                    propose(glb.without_cell({extra[0].row - 1, extra[0].col - 1}), 0);
            }
        } else {  // mu == rho != lam
            if (rules == Ruleset::rs) {
                Cell c = classify_step(mu, lam).cell;
                if (c.row == 1) propose(mu, 1);
                else propose(mu.without_cell({c.row - 1, mu.part(c.row - 1)}), 0);
            } else {
                Domino d = classify_step(mu, lam).domino;
                if (!d.vertical() && d.anchor.row == 1) propose(mu, 1);
                else if (d.vertical() && d.anchor.col == 1) propose(mu, -1);
                else if (d.vertical()) {
                    int c = d.anchor.col - 1;
                    int h = mu.col_height(c);
                    propose(mu.without_domino({{h - 1, c}, Orientation::vertical}), 0);
                } else {
                    int r = d.anchor.row - 1;
                    propose(mu.without_domino({{r, mu.part(r) - 1}, Orientation::horizontal}), 0);
                }
            }
        }
        if (found && forward_local(rules, out.nu, mu, rho, out.entry) != lam) found = false;
    } catch (const std::invalid_argument&) {
        found = false;  // a removal mid-candidate failed: no preimage
    }
    if (!found)
        throw std::invalid_argument("no preimage: square with corners mu=" + mu.str() + ", rho=" + rho.str() +
                                    ", lambda=" + lam.str() + " cannot arise from the local rule");
#ifndef NDEBUG
    {
        // The forward rule must reach lambda from exactly one (nu, entry).
        Partition glb = greatest_lower(mu, rho);
        int matches = 0;
        int max_drop = rules == Ruleset::domino ? 2 : 1;
        for (int drop = 0; drop <= max_drop; ++drop)
            for (const Partition& nu : partitions_inside(glb, glb.size() - drop))
                for (int e = rules == Ruleset::domino ? -1 : 0; e <= 1; ++e) {
                    try {
                        if (forward_local(rules, nu, mu, rho, e) == lam) ++matches;
                    } catch (const std::invalid_argument&) {
                    }
                }
        if (matches != 1) throw std::logic_error("local rule inverse is not unique at this square");
    }
#endif
    return out;
}

/// A filled Fomin growth diagram on an n x m grid of squares.  Vertex
/// (i,j) has i in 0..n counting down from the top boundary and j in 0..m
/// from the left; square (i,j) (1-based) has corners (i-1,j-1), (i,j-1),
/// (i-1,j), (i,j) and holds matrix entry (i,j).
class GrowthDiagram {
public:
    /// Fill from the top and left boundary chains and the matrix.
    /// Requires top.front() == left.front() and full compatibility: a row
    /// (column) holds a nonzero entry exactly when the matching left
    /// (top) chain step is an equal step.
    static GrowthDiagram from_boundary(Ruleset rules, const std::vector<Partition>& top,
                                       const std::vector<Partition>& left, const IntMatrix& m) {
        if (top.empty() || left.empty()) throw std::invalid_argument("boundary chains must be nonempty");
        if (top.front() != left.front())
            throw std::invalid_argument("top and left chains must start at the same partition");
        validate_multichain(rules, top, "top");
        validate_multichain(rules, left, "left");
        GrowthDiagram g(rules, static_cast<int>(left.size()) - 1, static_cast<int>(top.size()) - 1);
        if (m.rows != g.n_ || m.cols != g.m_)
            throw std::invalid_argument("matrix is " + std::to_string(m.rows) + "x" + std::to_string(m.cols) +
                                        " but the chains need " + std::to_string(g.n_) + "x" + std::to_string(g.m_));
        validate_matrix(rules, m);
        for (int i = 1; i <= g.n_; ++i) {
            bool nonzero = false;
            for (int j = 1; j <= g.m_; ++j) nonzero |= m.at(i, j) != 0;
            bool equal = left[static_cast<std::size_t>(i) - 1] == left[static_cast<std::size_t>(i)];
            if (nonzero && !equal)
                throw std::invalid_argument("matrix row " + std::to_string(i) +
                                            " has a nonzero entry but step " + std::to_string(i) +
                                            " of the left chain is strict");
            if (!nonzero && equal)
                throw std::invalid_argument("step " + std::to_string(i) +
                                            " of the left chain is an equal step but matrix row " +
                                            std::to_string(i) + " has no nonzero entry");
        }
        for (int j = 1; j <= g.m_; ++j) {
            bool nonzero = false;
            for (int i = 1; i <= g.n_; ++i) nonzero |= m.at(i, j) != 0;
            bool equal = top[static_cast<std::size_t>(j) - 1] == top[static_cast<std::size_t>(j)];
            if (nonzero && !equal)
                throw std::invalid_argument("matrix column " + std::to_string(j) +
                                            " has a nonzero entry but step " + std::to_string(j) +
                                            " of the top chain is strict");
            if (!nonzero && equal)
                throw std::invalid_argument("step " + std::to_string(j) +
                                            " of the top chain is an equal step but matrix column " +
                                            std::to_string(j) + " has no nonzero entry");
        }
        g.matrix_ = m;
        for (int j = 0; j <= g.m_; ++j) g.vtx(0, j) = top[static_cast<std::size_t>(j)];
        for (int i = 0; i <= g.n_; ++i) g.vtx(i, 0) = left[static_cast<std::size_t>(i)];
        for (int i = 1; i <= g.n_; ++i)
            for (int j = 1; j <= g.m_; ++j)
                g.vtx(i, j) = forward_local(rules, g.vtx(i - 1, j - 1), g.vtx(i, j - 1), g.vtx(i - 1, j), m.at(i, j));
        return g;
    }

    /// Reconstruct the whole diagram from the bottom and right boundary
    /// chains.  Requires bottom.back() == right.back().
    static GrowthDiagram from_corner(Ruleset rules, const std::vector<Partition>& bottom,
                                     const std::vector<Partition>& right) {
        if (bottom.empty() || right.empty()) throw std::invalid_argument("boundary chains must be nonempty");
        if (bottom.back() != right.back())
            throw std::invalid_argument("bottom and right chains must end at the same partition");
        validate_multichain(rules, bottom, "bottom");
        validate_multichain(rules, right, "right");
        GrowthDiagram g(rules, static_cast<int>(right.size()) - 1, static_cast<int>(bottom.size()) - 1);
        g.matrix_ = IntMatrix(g.n_, g.m_);
        for (int j = 0; j <= g.m_; ++j) g.vtx(g.n_, j) = bottom[static_cast<std::size_t>(j)];
        for (int i = 0; i <= g.n_; ++i) g.vtx(i, g.m_) = right[static_cast<std::size_t>(i)];
        for (int i = g.n_; i >= 1; --i)
            for (int j = g.m_; j >= 1; --j) {
                try {
                    LocalPreimage p = inverse_local(rules, g.vtx(i, j - 1), g.vtx(i - 1, j), g.vtx(i, j));
                    g.vtx(i - 1, j - 1) = std::move(p.nu);
                    g.matrix_.at(i, j) = p.entry;
                } catch (const std::invalid_argument& e) {
                    throw std::invalid_argument("square (" + std::to_string(i) + "," + std::to_string(j) +
                                                "): " + e.what());
                }
            }
        return g;
    }

    Ruleset rules() const { return rules_; }
    int rows() const { return n_; }
    int cols() const { return m_; }
    const IntMatrix& matrix() const { return matrix_; }

    const Partition& vertex(int i, int j) const {
        if (i < 0 || i > n_ || j < 0 || j > m_) throw std::out_of_range("growth diagram vertex out of range");
        return grid_[static_cast<std::size_t>(i) * static_cast<std::size_t>(m_ + 1) + static_cast<std::size_t>(j)];
    }

    std::vector<Partition> top_chain() const { return row_chain(0); }
    std::vector<Partition> bottom_chain() const { return row_chain(n_); }
    std::vector<Partition> left_chain() const { return col_chain(0); }
    std::vector<Partition> right_chain() const { return col_chain(m_); }

private:
    GrowthDiagram(Ruleset rules, int n, int m)
        : rules_(rules), n_(n), m_(m),
          grid_(static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(m + 1)) {}

    static void validate_multichain(Ruleset rules, const std::vector<Partition>& chain, const char* which) {
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            StepInfo s = classify_step(chain[i], chain[i + 1]);
            bool ok = s.kind == StepKind::equal ||
                      (rules == Ruleset::domino ? s.kind == StepKind::domino : s.kind == StepKind::cell);
            if (!ok)
                throw std::invalid_argument("step " + std::to_string(i + 1) + " of the " + which + " chain (" +
                                            chain[i].str() + " -> " + chain[i + 1].str() + ") is not an equal-or-" +
                                            (rules == Ruleset::domino ? "domino" : "cell") + " step");
        }
    }

    static void validate_matrix(Ruleset rules, const IntMatrix& m) {
        for (int i = 1; i <= m.rows; ++i)
            for (int j = 1; j <= m.cols; ++j) {
                int v = m.at(i, j);
                bool ok = rules == Ruleset::domino ? (v >= -1 && v <= 1) : (v == 0 || v == 1);
                if (!ok)
                    throw std::invalid_argument("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                ") is out of range for the ruleset");
            }
        for (int i = 1; i <= m.rows; ++i) {
            int cnt = 0;
            for (int j = 1; j <= m.cols; ++j) cnt += m.at(i, j) != 0;
            if (cnt > 1) throw std::invalid_argument("matrix row " + std::to_string(i) + " has more than one nonzero entry");
        }
        for (int j = 1; j <= m.cols; ++j) {
            int cnt = 0;
            for (int i = 1; i <= m.rows; ++i) cnt += m.at(i, j) != 0;
            if (cnt > 1)
                throw std::invalid_argument("matrix column " + std::to_string(j) + " has more than one nonzero entry");
        }
    }

    std::vector<Partition> row_chain(int i) const {
        std::vector<Partition> out;
        for (int j = 0; j <= m_; ++j) out.push_back(vertex(i, j));
        return out;
    }
    std::vector<Partition> col_chain(int j) const {
        std::vector<Partition> out;
        for (int i = 0; i <= n_; ++i) out.push_back(vertex(i, j));
        return out;
    }

    Partition& vtx(int i, int j) {
        return grid_[static_cast<std::size_t>(i) * static_cast<std::size_t>(m_ + 1) + static_cast<std::size_t>(j)];
    }

    Ruleset rules_;
    int n_, m_;
    std::vector<Partition> grid_;
    IntMatrix matrix_;
};

}  // namespace domino
