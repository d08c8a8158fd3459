// Acceptance gate: one pass/fail line per criterion, nonzero exit on any failure.
// Every check is exact integer/polynomial arithmetic; the only pinned tolerances
// are the two wall-clock budgets below.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <domino/domino.hpp>

#include "support/oracles.hpp"

using namespace domino;

namespace {

constexpr long long kBudgetEq1Ms = 60'000;    // criterion 1
constexpr long long kBudgetFnkMs = 300'000;   // criterion 4

int g_failures = 0;

void criterion(int idx, const std::string& label, long long budget_ms, const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    } catch (...) {
        error = "unknown exception";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                  .count();
    if (error.empty() && budget_ms > 0 && ms > budget_ms)
        error = "exceeded " + std::to_string(budget_ms) + " ms budget";
    if (error.empty()) {
        std::printf("PASS  criterion %2d  %s  (%lld ms)\n", idx, label.c_str(), static_cast<long long>(ms));
    } else {
        ++g_failures;
        std::printf("FAIL  criterion %2d  %s  (%lld ms): %s\n", idx, label.c_str(), static_cast<long long>(ms),
                    error.c_str());
    }
    std::fflush(stdout);
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

void check_identity(const std::string& name, const Params& pr) {
    IdentityReport r = verify_identity(name, pr);
    if (!r.equal)
        throw std::runtime_error(name + " [" + r.params.str() + "] lhs = " + r.lhs.str() +
                                 ", rhs = " + r.rhs.str());
}

void check_sweep(const std::string& name) {
    for (const IdentityReport& r : verify_sweep(name))
        if (!r.equal)
            throw std::runtime_error(name + " [" + r.params.str() + "] lhs = " + r.lhs.str() +
                                     ", rhs = " + r.rhs.str());
}

std::vector<Partition> partitions_up_to(int max_cells) {
    std::vector<Partition> out;
    for (int sz = 0; sz <= max_cells; ++sz)
        for (const Partition& p : partitions_of(sz)) out.push_back(p);
    return out;
}

template <typename F>
void for_each_permutation(int n, F visit) {
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    do visit(word);
    while (std::next_permutation(word.begin(), word.end()));
}

IntMatrix perm_matrix(const std::vector<int>& word) {
    int n = static_cast<int>(word.size());
    IntMatrix m(n, n);
    for (int i = 1; i <= n; ++i) m.at(i, word[static_cast<std::size_t>(i) - 1]) = 1;
    return m;
}

}  // namespace

int main() {
    criterion(1, "eq1 exact for n = 0..12", kBudgetEq1Ms, [] {
        for (int n = 0; n <= 12; ++n) check_identity("eq1", Params{}.set("n", n));
    });

    criterion(2, "eq2 exact for n = 2..10", 0, [] {
        for (int n = 2; n <= 10; ++n) check_identity("eq2", Params{}.set("n", n));
    });

    criterion(3, "sign-imbalance polynomial of (2,2): closed forms and per-shape table", 0, [] {
        Partition alpha = Partition::parse("2,2");
        LaurentPoly xy = LaurentPoly::x() + LaurentPoly::y();
        LaurentPoly power(1);
        for (int n = 0; n <= 5; ++n) {
            LaurentPoly expect = LaurentPoly(n + 1) * power;
            LaurentPoly got = F_poly(alpha, 2 * n);
            require(got == expect, "F(2,2; 2n) for n = " + std::to_string(n) + ": got " + got.str());
            power = power * xy;
        }
        require(F_poly(alpha, -2).str() == "x^-1*y^-2*z^-1 + x^-2*y^-1*z^-1",
                "F(2,2; -2): got " + F_poly(alpha, -2).str());
        require(F_poly(alpha, -4).is_zero(), "F(2,2; -4) should vanish");

        struct Row {
            const char* inner;
            ShapeStats stats;
            int imbalance;
        };
        const Row table[] = {
            {"2,2", {0, 0, 0, 0}, 1},
            {"2", {2, 2, 1, 1}, 1},
            {"1,1", {2, 1, 2, 1}, -1},
            {"0", {4, 2, 2, 1}, 0},
        };
        for (const Row& row : table) {
            SkewShape s(alpha, Partition::parse(row.inner));
            require(s.stats() == row.stats, std::string("stats of (2,2)/") + row.inner);
            GaussInt got = sign_imbalance(s);
            require(got == GaussInt(row.imbalance),
                    std::string("imbalance of (2,2)/") + row.inner + ": got " + got.str());
        }
    });

    criterion(4, "fnk and fnk_odd exact for k = 0..6, n = 0..4", kBudgetFnkMs, [] {
        for (int k = 0; k <= 6; ++k)
            for (int n = 0; n <= 4; ++n) {
                check_identity("fnk", Params{}.set("k", k).set("n", n));
                check_identity("fnk_odd", Params{}.set("k", k).set("n", n));
            }
    });

    std::vector<Partition> small = partitions_up_to(4);

    criterion(5, "gdi over core-compatible pairs <= 4 cells and sgdi, n,m = 0..2", 0, [&] {
        for (const Partition& al : small)
            for (const Partition& be : small) {
                if (two_core(al) != two_core(be)) continue;
                for (int n = 0; n <= 2; ++n)
                    for (int m = 0; m <= 2; ++m)
                        check_identity(
                            "gdi", Params{}.set("alpha", al).set("beta", be).set("n", n).set("m", m));
            }
        for (const Partition& al : small)
            for (int n = 0; n <= 2; ++n) check_identity("sgdi", Params{}.set("alpha", al).set("n", n));
    });

    criterion(6, "colortospin and wt pointwise on the criterion-5 grids", 0, [&] {
        for (const Partition& al : small)
            for (const Partition& be : small) {
                if (two_core(al) != two_core(be)) continue;
                for (int n = 0; n <= 2; ++n)
                    for (int m = 0; m <= 2; ++m)
                        check_identity("colortospin",
                                       Params{}.set("alpha", al).set("beta", be).set("n", n).set("m", m));
            }
        for (const Partition& al : small)
            for (int n = 0; n <= 2; ++n) check_identity("wt", Params{}.set("alpha", al).set("n", n));
    });

    criterion(7, "double identity on three shape pairs, n,m = 0..3", 0, [] {
        const std::pair<const char*, const char*> pairs[] = {{"0", "0"}, {"2,2", "2,2"}, {"2", "1,1"}};
        for (auto [a, b] : pairs)
            for (int n = 0; n <= 3; ++n)
                for (int m = 0; m <= 3; ++m)
                    check_identity("double", Params{}
                                                 .set("alpha", Partition::parse(a))
                                                 .set("beta", Partition::parse(b))
                                                 .set("n", n)
                                                 .set("m", m));
    });

    criterion(8, "weightedsum n = 0..4 and gf to order 6 for three base shapes", 0, [] {
        for (const char* a : {"0", "2,2", "3,2,1"}) {
            Partition alpha = Partition::parse(a);
            for (int n = 0; n <= 4; ++n) check_identity("weightedsum", Params{}.set("alpha", alpha).set("n", n));
            check_identity("gf", Params{}.set("alpha", alpha).set("order", 6));
        }
    });

    criterion(9, "stat, ev, sign, prod, iandf, fi across their full size sweeps", 0, [] {
        for (const char* name : {"stat", "ev", "sign", "prod", "iandf", "fi"}) check_sweep(name);
    });

    criterion(10, "invm and signm for n,m = 0..4", 0, [] {
        for (int n = 0; n <= 4; ++n)
            for (int m = 0; m <= 4; ++m) {
                check_identity("invm", Params{}.set("n", n).set("m", m));
                check_identity("signm", Params{}.set("n", n).set("m", m));
            }
    });

    criterion(11, "rs_phi against row-insertion oracle n <= 5; sjsign and sjss sweeps", 0, [] {
        ChainTableau none = ChainTableau::empty(TableauKind::syt, Partition{});
        for (int n = 0; n <= 5; ++n)
            for_each_permutation(n, [&](const std::vector<int>& word) {
                CorrespondenceResult r = rs_phi(none, none, perm_matrix(word));
                oracles::RsPair expect = oracles::insertion_rs(word);
                std::string tag;
                for (int v : word) tag += std::to_string(v) + " ";
                require(oracles::tableau_rows(r.p) == expect.p, "insertion tableau for word " + tag);
                require(oracles::tableau_rows(r.q) == expect.q, "recording tableau for word " + tag);
                CorrespondenceInverse back = rs_phi_inverse(r.p, r.q);
                require(back.matrix == perm_matrix(word) && back.u == none && back.v == none,
                        "inverse correspondence for word " + tag);
            });
        for (int n = 0; n <= 5; ++n) check_identity("reif", Params{}.set("n", n));
        for (int n = 0; n <= 3; ++n)
            for (int m = 0; m <= 3; ++m) check_identity("sjsign", Params{}.set("n", n).set("m", m));
        std::vector<Partition> bases = partitions_up_to(3);
        for (const Partition& al : bases)
            for (const Partition& be : bases)
                for (int n = 0; n <= 3; ++n)
                    for (int m = 0; m <= 3; ++m)
                        check_identity(
                            "sjss", Params{}.set("alpha", al).set("beta", be).set("n", n).set("m", m));
    });

    criterion(12, "wsi series identity through order 6", 0,
              [] { check_identity("wsi", Params{}.set("order", 6)); });

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 12 criteria passed\n");
    return 0;
}
