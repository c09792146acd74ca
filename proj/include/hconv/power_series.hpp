#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "hconv/errors.hpp"

namespace hconv {

using cplx = std::complex<double>;

inline constexpr int kDefaultOrder = 128;

/// Truncated complex Taylor series c0 + c1 z + ... + cN z^N.
///
/// All operations are pure and truncate to the smaller order when the
/// operands disagree, so pipelines involving derivative() stay composable.
class PowerSeries {
public:
    PowerSeries() : coeffs_(1, cplx(0.0)) {}

    explicit PowerSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.assign(1, cplx(0.0));
    }

    /// Zero series of the given truncation order.
    static PowerSeries zero(int order) {
        return PowerSeries(std::vector<cplx>(static_cast<std::size_t>(order) + 1, cplx(0.0)));
    }

    static PowerSeries constant(cplx value, int order) {
        PowerSeries s = zero(order);
        s.coeffs_[0] = value;
        return s;
    }

    /// c z^k, truncated to `order` (k > order yields the zero series).
    static PowerSeries monomial(cplx c, int power, int order) {
        PowerSeries s = zero(order);
        if (power <= order) s.coeffs_[static_cast<std::size_t>(power)] = c;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<cplx>& coeffs() const { return coeffs_; }

    cplx coeff(int n) const {
        if (n < 0 || n > order()) return cplx(0.0);
        return coeffs_[static_cast<std::size_t>(n)];
    }

    void set_coeff(int n, cplx value) {
        if (n >= 0 && n <= order()) coeffs_[static_cast<std::size_t>(n)] = value;
    }

    PowerSeries truncated(int new_order) const {
        if (new_order >= order()) return *this;
        std::vector<cplx> c(coeffs_.begin(), coeffs_.begin() + new_order + 1);
        return PowerSeries(std::move(c));
    }

    /// Horner evaluation of the full truncated polynomial.
    cplx evaluate(cplx z) const {
        cplx acc(0.0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
        return acc;
    }

    /// Horner evaluation of the head c0..c_{max_terms-1} only. Grid scans over
    /// many radii use this to skip coefficients that cannot affect the value
    /// at small |z|.
    cplx evaluate_head(cplx z, int max_terms) const {
        std::size_t m = std::min<std::size_t>(coeffs_.size(),
                                              static_cast<std::size_t>(std::max(max_terms, 1)));
        cplx acc(0.0);
        for (std::size_t i = m; i-- > 0;) acc = acc * z + coeffs_[i];
        return acc;
    }

    friend PowerSeries operator+(const PowerSeries& s, const PowerSeries& t) {
        int n = std::min(s.order(), t.order());
        std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = s.coeff(k) + t.coeff(k);
        return PowerSeries(std::move(c));
    }

    friend PowerSeries operator-(const PowerSeries& s, const PowerSeries& t) {
        int n = std::min(s.order(), t.order());
        std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
        for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = s.coeff(k) - t.coeff(k);
        return PowerSeries(std::move(c));
    }

    friend PowerSeries operator-(const PowerSeries& s) { return s * cplx(-1.0); }

    /// Cauchy product truncated to the smaller order.
    friend PowerSeries operator*(const PowerSeries& s, const PowerSeries& t) {
        int n = std::min(s.order(), t.order());
        std::vector<cplx> c(static_cast<std::size_t>(n) + 1, cplx(0.0));
        for (int i = 0; i <= n; ++i) {
            cplx si = s.coeff(i);
            if (si == cplx(0.0)) continue;
            for (int j = 0; j + i <= n; ++j)
                c[static_cast<std::size_t>(i + j)] += si * t.coeff(j);
        }
        return PowerSeries(std::move(c));
    }

    friend PowerSeries operator*(const PowerSeries& s, cplx scale) {
        std::vector<cplx> c = s.coeffs_;
        for (auto& v : c) v *= scale;
        return PowerSeries(std::move(c));
    }

    friend PowerSeries operator*(cplx scale, const PowerSeries& s) { return s * scale; }

private:
    std::vector<cplx> coeffs_;
};

inline PowerSeries add(const PowerSeries& s, const PowerSeries& t) { return s + t; }
inline PowerSeries multiply(const PowerSeries& s, const PowerSeries& t) { return s * t; }

/// Multiplicative inverse via the standard coefficient recurrence:
/// b0 = 1/c0, b_n = -(1/c0) * sum_{k=1..n} c_k b_{n-k}.
inline PowerSeries reciprocal(const PowerSeries& s, double eps0 = 1e-12) {
    const cplx c0 = s.coeff(0);
    if (std::abs(c0) <= eps0)
        throw NearZeroConstantTerm("series reciprocal: constant term has modulus <= eps0");
    int n = s.order();
    std::vector<cplx> b(static_cast<std::size_t>(n) + 1, cplx(0.0));
    const cplx inv0 = cplx(1.0) / c0;
    b[0] = inv0;
    for (int m = 1; m <= n; ++m) {
        cplx acc(0.0);
        for (int k = 1; k <= m; ++k) acc += s.coeff(k) * b[static_cast<std::size_t>(m - k)];
        b[static_cast<std::size_t>(m)] = -inv0 * acc;
    }
    return PowerSeries(std::move(b));
}

/// Termwise derivative; the order drops by one (a constant maps to the zero
/// series of order 0).
inline PowerSeries derivative(const PowerSeries& s) {
    int n = s.order();
    if (n == 0) return PowerSeries::zero(0);
    std::vector<cplx> c(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k)
        c[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * s.coeff(k);
    return PowerSeries(std::move(c));
}

/// Termwise antiderivative with zero constant term; the order grows by one.
inline PowerSeries antiderivative(const PowerSeries& s) {
    int n = s.order();
    std::vector<cplx> c(static_cast<std::size_t>(n) + 2, cplx(0.0));
    for (int k = 0; k <= n; ++k)
        c[static_cast<std::size_t>(k + 1)] = s.coeff(k) / static_cast<double>(k + 1);
    return PowerSeries(std::move(c));
}

/// Coefficientwise (Hadamard) product (s*t)_n = s_n t_n.
inline PowerSeries hadamard(const PowerSeries& s, const PowerSeries& t) {
    int n = std::min(s.order(), t.order());
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = s.coeff(k) * t.coeff(k);
    return PowerSeries(std::move(c));
}

/// Composition with z -> e^{i phi} z, i.e. c_n -> c_n e^{i n phi}.
/// A coefficientwise isometry: |c_n| is unchanged.
inline PowerSeries rotate(const PowerSeries& s, double phi) {
    int n = s.order();
    std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
    const cplx w = std::polar(1.0, phi);
    cplx wn(1.0);
    for (int k = 0; k <= n; ++k) {
        c[static_cast<std::size_t>(k)] = s.coeff(k) * wn;
        wn *= w;
    }
    return PowerSeries(std::move(c));
}

inline cplx evaluate(const PowerSeries& s, cplx z) { return s.evaluate(z); }

/// max_n |s_n - t_n| over the common truncation range.
inline double max_coeff_distance(const PowerSeries& s, const PowerSeries& t) {
    int n = std::min(s.order(), t.order());
    double m = 0.0;
    for (int k = 0; k <= n; ++k) m = std::max(m, std::abs(s.coeff(k) - t.coeff(k)));
    return m;
}

} // namespace hconv
