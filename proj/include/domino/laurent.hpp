#pragma once

#include <array>
#include <compare>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace domino {

using BigInt = boost::multiprecision::cpp_int;

/// Gaussian integer a + b*i with arbitrary-precision components.
struct GaussInt {
    BigInt re = 0;
    BigInt im = 0;

    GaussInt() = default;
    GaussInt(long long r) : re(r) {}  // NOLINT: implicit by design
    GaussInt(BigInt r) : re(std::move(r)) {}
    GaussInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    /// i^k for any integer k.
    static GaussInt i_pow(long long k) {
        switch (((k % 4) + 4) % 4) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            case 2: return {-1, 0};
            default: return {0, -1};
        }
    }

    /// The exponent u with *this == i^u, if *this is a unit.
    std::optional<int> unit_i_exponent() const {
        if (re == 1 && im == 0) return 0;
        if (re == 0 && im == 1) return 1;
        if (re == -1 && im == 0) return 2;
        if (re == 0 && im == -1) return 3;
        return std::nullopt;
    }

    friend GaussInt operator+(const GaussInt& a, const GaussInt& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussInt& operator+=(const GaussInt& o) { return *this = *this + o; }
    GaussInt& operator-=(const GaussInt& o) { return *this = *this - o; }
    GaussInt& operator*=(const GaussInt& o) { return *this = *this * o; }
    friend bool operator==(const GaussInt&, const GaussInt&) = default;

    /// c^e; negative e only for units.
    static GaussInt pow(const GaussInt& c, long long e) {
        if (e < 0) {
            auto u = c.unit_i_exponent();
            if (!u) throw std::invalid_argument("negative power of a non-unit Gaussian integer");
            return i_pow(static_cast<long long>(*u) * e);
        }
        GaussInt acc{1, 0}, base = c;
        long long k = e;
        while (k > 0) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    std::string str() const {
        if (im == 0) return re.str();
        std::string imag = (im == 1) ? "i" : (im == -1 ? "-i" : im.str() + "*i");
        if (re == 0) return imag;
        std::string out = "(" + re.str();
        out += (im > 0) ? "+" : "-";
        BigInt a = im < 0 ? BigInt(-im) : im;
        if (a != 1) out += a.str() + "*";
        out += "i)";
        return out;
    }
};

/// Exponent vector of a monomial in (x, y, z, q), stored DOUBLED so that
/// half-integer powers (spins, sqrt(q)) stay exact: e2 = {2*ex, 2*ey,
/// 2*ez, 2*eq}.
struct Monomial {
    std::array<int, 4> e2{0, 0, 0, 0};

    int deg2() const { return e2[0] + e2[1] + e2[2] + e2[3]; }
    friend Monomial operator+(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (int i = 0; i < 4; ++i) m.e2[i] = a.e2[i] + b.e2[i];
        return m;
    }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline constexpr int kVarX = 0;
inline constexpr int kVarY = 1;
inline constexpr int kVarZ = 2;
inline constexpr int kVarQ = 3;
inline constexpr const char* kVarNames = "xyzq";

/// Exact Laurent polynomial over the Gaussian integers in x, y, z, q,
/// allowing half-integer exponents.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c) {  // NOLINT: implicit by design
        if (c != 0) terms_[Monomial{}] = GaussInt(c);
    }
    LaurentPoly(const GaussInt& c) {  // NOLINT
        if (!c.is_zero()) terms_[Monomial{}] = c;
    }

    static LaurentPoly term(const GaussInt& c, const Monomial& m) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_[m] = c;
        return p;
    }

    /// The monomial var^(num/den); den must be 1 or 2.
    static LaurentPoly var_pow(int var, int num, int den = 1) {
        if (var < 0 || var > 3) throw std::invalid_argument("var_pow: bad variable index");
        if (den != 1 && den != 2) throw std::invalid_argument("var_pow: denominator must be 1 or 2");
        Monomial m;
        m.e2[var] = (den == 1) ? 2 * num : num;
        return term(GaussInt(1), m);
    }
    static LaurentPoly x(int num = 1, int den = 1) { return var_pow(kVarX, num, den); }
    static LaurentPoly y(int num = 1, int den = 1) { return var_pow(kVarY, num, den); }
    static LaurentPoly z(int num = 1, int den = 1) { return var_pow(kVarZ, num, den); }
    static LaurentPoly q(int num = 1, int den = 1) { return var_pow(kVarQ, num, den); }

    const std::map<Monomial, GaussInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_real() const {
        for (const auto& [m, c] : terms_)
            if (c.im != 0) return false;
        return true;
    }
    GaussInt coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussInt(0) : it->second;
    }
    /// The value of a constant polynomial; error if any variable remains.
    GaussInt constant_value() const {
        for (const auto& [m, c] : terms_)
            if (m != Monomial{}) throw std::invalid_argument("constant_value: polynomial is not constant");
        return coefficient(Monomial{});
    }

    LaurentPoly& add_term(const Monomial& m, const GaussInt& c) {
        if (c.is_zero()) return *this;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return *this;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) { return LaurentPoly(0) - a; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma + mb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    /// Integer scaling (kept off operator* to avoid conversion ambiguity).
    LaurentPoly times(const BigInt& k) const {
        LaurentPoly r;
        if (k == 0) return r;
        for (const auto& [m, c] : terms_) r.terms_[m] = GaussInt(c.re * k, c.im * k);
        return r;
    }

    LaurentPoly pow(int e) const {
        if (e < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
        LaurentPoly acc(1), base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Replacement of one variable: coeff * monomial.
    struct Subst {
        GaussInt coeff{1, 0};
        Monomial mono;
    };

    /// Substitutes variables by monomial expressions.  Fractional powers
    /// are handled exactly where they stay Gaussian: a variable with odd
    /// doubled exponent may only map to a unit coefficient c = i^u with
    /// u * e2 even (e.g. q -> -1 turns q^(1/2) into i).
    LaurentPoly substitute(const std::array<std::optional<Subst>, 4>& repl) const {
        LaurentPoly out;
        for (const auto& [m, c] : terms_) {
            GaussInt coeff = c;
            Monomial mono;
            for (int v = 0; v < 4; ++v) {
                int e2 = m.e2[v];
                if (!repl[v]) {
                    mono.e2[v] += e2;
                    continue;
                }
                if (e2 == 0) continue;
                const Subst& s = *repl[v];
                for (int j = 0; j < 4; ++j) {
                    long long num = static_cast<long long>(e2) * s.mono.e2[j];
                    if (num % 2 != 0)
                        throw std::invalid_argument("substitute: fractional exponent does not stay half-integral");
                    mono.e2[j] += static_cast<int>(num / 2);
                }
                if (e2 % 2 == 0) {
                    coeff *= GaussInt::pow(s.coeff, e2 / 2);
                } else {
                    auto u = s.coeff.unit_i_exponent();
                    if (!u || (static_cast<long long>(*u) * e2) % 2 != 0)
                        throw std::invalid_argument("substitute: fractional power of coefficient is not Gaussian");
                    coeff *= GaussInt::i_pow(static_cast<long long>(*u) * e2 / 2);
                }
            }
            out.add_term(mono, coeff);
        }
        return out;
    }

    /// Evaluates at Gaussian points (every variable substituted).
    GaussInt eval(const GaussInt& vx, const GaussInt& vy, const GaussInt& vz, const GaussInt& vq) const {
        std::array<std::optional<Subst>, 4> repl;
        repl[kVarX] = Subst{vx, {}};
        repl[kVarY] = Subst{vy, {}};
        repl[kVarZ] = Subst{vz, {}};
        repl[kVarQ] = Subst{vq, {}};
        return substitute(repl).constant_value();
    }

    /// Rendering: terms sorted by total degree, then by exponent vector
    /// descending, e.g. "2*x + 2*y", "1 + q", "x^-1*y^-2*z^-1 + ...",
    /// half powers as "q^1/2".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Monomial, GaussInt>> ts(terms_.begin(), terms_.end());
        std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
            if (a.first.deg2() != b.first.deg2()) return a.first.deg2() < b.first.deg2();
            return b.first.e2 < a.first.e2;
        });
        std::string out;
        bool first = true;
        for (const auto& [m, c] : ts) {
            std::string t = term_str(m, c);
            if (first) {
                out = t;
                first = false;
            } else if (t.size() && t[0] == '-') {
                out += " - " + t.substr(1);
            } else {
                out += " + " + t;
            }
        }
        return out;
    }

private:
    static std::string mono_str(const Monomial& m) {
        std::string out;
        for (int v = 0; v < 4; ++v) {
            int e2 = m.e2[v];
            if (e2 == 0) continue;
            if (!out.empty()) out.push_back('*');
            out.push_back(kVarNames[v]);
            if (e2 == 2) continue;  // exponent 1
            out.push_back('^');
            if (e2 % 2 == 0) out += std::to_string(e2 / 2);
            else out += std::to_string(e2) + "/2";
        }
        return out;
    }
    static std::string term_str(const Monomial& m, const GaussInt& c) {
        std::string mono = mono_str(m);
        if (mono.empty()) return c.str();
        if (c == GaussInt(1)) return mono;
        if (c == GaussInt(-1)) return "-" + mono;
        return c.str() + "*" + mono;
    }

    std::map<Monomial, GaussInt> terms_;
};

/// [n]_q = 1 + q + ... + q^(n-1).
inline LaurentPoly q_int(int n) {
    LaurentPoly p;
    for (int i = 0; i < n; ++i) p += LaurentPoly::q(i);
    return p;
}

/// [n]_q! = [1]_q [2]_q ... [n]_q.
inline LaurentPoly q_factorial(int n) {
    LaurentPoly p(1);
    for (int i = 1; i <= n; ++i) p *= q_int(i);
    return p;
}

/// Gaussian binomial coefficient, via the Pascal recurrence
/// [n k] = [n-1 k-1] + q^k [n-1 k].
inline LaurentPoly q_binomial(int n, int k) {
    if (k < 0 || k > n) return LaurentPoly(0);
    std::vector<LaurentPoly> row(static_cast<std::size_t>(k) + 1);
    row[0] = LaurentPoly(1);
    for (int i = 1; i <= n; ++i)
        for (int j = std::min(i, k); j >= 1; --j)
            row[j] = LaurentPoly::q(j) * row[j] + row[j - 1];
    return row[k];
}

}  // namespace domino
