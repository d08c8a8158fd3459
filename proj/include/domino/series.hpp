#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domino/laurent.hpp"

namespace domino {

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (int j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;  // exact: r is C(n-k+j, j) after this step
    }
    return r;
}

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int j = 2; j <= n; ++j) r *= j;
    return r;
}

/// Exponential generating series truncated at t^order.  Coefficient n
/// stores n! * [t^n], so the product is the binomial convolution and
/// exp() of an integer series stays integer.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(static_cast<std::size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("series order must be >= 0");
    }

    static TruncatedSeries from_coefficients(std::vector<LaurentPoly> coeffs) {
        if (coeffs.empty()) throw std::invalid_argument("series needs at least the constant coefficient");
        TruncatedSeries s(static_cast<int>(coeffs.size()) - 1);
        s.c_ = std::move(coeffs);
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const LaurentPoly& coeff(int n) const { return c_.at(static_cast<std::size_t>(n)); }
    void set_coeff(int n, LaurentPoly p) { c_.at(static_cast<std::size_t>(n)) = std::move(p); }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) r.c_[static_cast<std::size_t>(n)] = a.coeff(n) + b.coeff(n);
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) r.c_[static_cast<std::size_t>(n)] = a.coeff(n) - b.coeff(n);
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n) {
            LaurentPoly acc;
            for (int k = 0; k <= n; ++k) {
                LaurentPoly term = a.coeff(k) * b.coeff(n - k);
                acc += term.times(binomial(n, k));
            }
            r.c_[static_cast<std::size_t>(n)] = std::move(acc);
        }
        return r;
    }

    /// exp of a series with zero constant term, via the derivative
    /// recursion E_{n+1} = sum_j C(n,j) * S_{j+1} * E_{n-j}.
    TruncatedSeries exp() const {
        if (!coeff(0).is_zero()) throw std::invalid_argument("series exp needs zero constant term");
        TruncatedSeries e(order());
        e.c_[0] = LaurentPoly(1);
        for (int n = 0; n < order(); ++n) {
            LaurentPoly acc;
            for (int j = 0; j <= n; ++j) {
                LaurentPoly term = coeff(j + 1) * e.coeff(n - j);
                acc += term.times(binomial(n, j));
            }
            e.c_[static_cast<std::size_t>(n) + 1] = std::move(acc);
        }
        return e;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

    /// "t^0: 1; t^1: x + y; ..." with coefficient n shown as n![t^n].
    std::string str() const {
        std::string out;
        for (int n = 0; n <= order(); ++n) {
            if (n) out += "; ";
            out += "t^" + std::to_string(n) + ": " + coeff(n).str();
        }
        return out;
    }

private:
    std::vector<LaurentPoly> c_;
};

}  // namespace domino
