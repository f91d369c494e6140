#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "types.hpp"

namespace sympchar::series {

/// Formal power series c_0 + c_1 z + ... + c_K z^K known up to order K.
///
/// Binary operations truncate to the smaller of the two orders, so a result
/// never claims more coefficients than both operands determine.
template <typename Scalar>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order = 0) : coeffs_(checked_size(order), Scalar(0)) {}
    explicit TruncatedSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs))
    {
        if (coeffs_.empty())
            throw std::invalid_argument("TruncatedSeries needs at least one coefficient");
    }

    static TruncatedSeries one(int order)
    {
        TruncatedSeries s(order);
        s[0] = 1;
        return s;
    }

    /// 1 / (1 - a z)
    static TruncatedSeries geometric(const Scalar& a, int order)
    {
        TruncatedSeries s(order);
        Scalar term = 1;
        for (int n = 0; n <= order; ++n, term *= a)
            s[n] = term;
        return s;
    }

    /// Polynomial coefficients (lowest degree first), truncated or zero-padded to `order`.
    template <typename T>
    static TruncatedSeries from_poly(const std::vector<T>& poly, int order)
    {
        TruncatedSeries s(order);
        for (int n = 0; n <= order && n < static_cast<int>(poly.size()); ++n)
            s[n] = Scalar(poly[n]);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    Scalar& operator[](int n) { return coeffs_[n]; }
    const Scalar& operator[](int n) const { return coeffs_[n]; }

    TruncatedSeries truncated(int order) const
    {
        if (order > this->order())
            throw std::invalid_argument("cannot extend a truncated series");
        return TruncatedSeries(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    /// Multiplies by z^k; the order grows by k.
    TruncatedSeries shifted_up(int k) const
    {
        std::vector<Scalar> c(k, Scalar(0));
        c.insert(c.end(), coeffs_.begin(), coeffs_.end());
        return TruncatedSeries(std::move(c));
    }

    /// Divides by z^k. The first k coefficients must vanish.
    TruncatedSeries shifted_down(int k) const
    {
        if (k > order())
            throw std::invalid_argument("shift exceeds truncation order");
        for (int n = 0; n < k; ++n)
            if (coeffs_[n] != 0)
                throw ConsistencyError("z^-" + std::to_string(k) + " shift of a series with a nonzero low coefficient");
        return TruncatedSeries(std::vector<Scalar>(coeffs_.begin() + k, coeffs_.end()));
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n)
            r[n] = a[n] + b[n];
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int n = 0; n <= r.order(); ++n)
            r[n] = a[n] - b[n];
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        TruncatedSeries r(std::min(a.order(), b.order()));
        for (int i = 0; i <= r.order(); ++i) {
            if (a[i] == 0)
                continue;
            for (int j = 0; i + j <= r.order(); ++j)
                r[i + j] += a[i] * b[j];
        }
        return r;
    }

    friend TruncatedSeries operator*(const Scalar& c, const TruncatedSeries& a)
    {
        TruncatedSeries r = a;
        for (auto& x : r.coeffs_)
            x *= c;
        return r;
    }

    /// Power-series quotient by long division. The divisor's constant term
    /// must be nonzero; for integer scalars it must be a unit.
    TruncatedSeries divided_by(const TruncatedSeries& den) const
    {
        if (den[0] == 0)
            throw std::domain_error("power-series division by a series with zero constant term");
        if constexpr (!std::is_same_v<Scalar, Rational>) {
            if (den[0] != 1 && den[0] != -1)
                throw std::domain_error("integer power-series division needs a unit constant term");
        }
        TruncatedSeries q(std::min(order(), den.order()));
        for (int n = 0; n <= q.order(); ++n) {
            Scalar acc = coeffs_[n];
            for (int k = 1; k <= n; ++k)
                acc -= den[k] * q[n - k];
            q[n] = acc / den[0];
        }
        return q;
    }

    bool operator==(const TruncatedSeries& other) const { return coeffs_ == other.coeffs_; }

private:
    static std::size_t checked_size(int order)
    {
        if (order < 0)
            throw std::invalid_argument("truncation order must be >= 0");
        return static_cast<std::size_t>(order) + 1;
    }

    std::vector<Scalar> coeffs_;
};

using RationalSeries = TruncatedSeries<Rational>;
using IntegerSeries = TruncatedSeries<BigInt>;

/// Binomial convolution: (A*B)_n = sum_k binom(n,k) a_k b_{n-k}.
template <typename Scalar>
TruncatedSeries<Scalar> binomial_product(const TruncatedSeries<Scalar>& a, const TruncatedSeries<Scalar>& b)
{
    TruncatedSeries<Scalar> r(std::min(a.order(), b.order()));
    for (int n = 0; n <= r.order(); ++n) {
        Scalar acc = 0;
        for (int k = 0; k <= n; ++k)
            acc += Scalar(binomial(n, k)) * a[k] * b[n - k];
        r[n] = acc;
    }
    return r;
}

/// (1/(1-az)) * S(z/(1-az)) truncated to `order`, by Horner composition of
/// S with the series w = z/(1-az).
template <typename Scalar>
TruncatedSeries<Scalar> substitute_scaled(const TruncatedSeries<Scalar>& s, const Scalar& a, int order)
{
    const int top = std::min(order, s.order());
    // w = z + a z^2 + a^2 z^3 + ...
    const auto w = TruncatedSeries<Scalar>::geometric(a, order).shifted_up(1).truncated(order);
    TruncatedSeries<Scalar> acc(order);
    for (int j = top; j >= 0; --j) {
        acc = acc * w;
        acc[0] += s[j];
    }
    // Coefficients of S beyond its own order would contribute at z^j for j > s.order().
    if (s.order() < order)
        acc = acc.truncated(s.order());
    return TruncatedSeries<Scalar>::geometric(a, acc.order()) * acc;
}

using IntPoly = std::vector<BigInt>;

/// Q_k(z) = z^k U_k(1/(2z)): Q_0 = Q_1 = 1, Q_{k+1} = Q_k - z^2 Q_{k-1}.
IntPoly q_poly(int k);

/// R_k(z) = z^k U_k(1/(2z) - 1): R_0 = 1, R_1 = 1 - 2z, R_{k+1} = (1-2z) R_k - z^2 R_{k-1}.
IntPoly r_poly(int k);

enum class ChebyshevKind { FirstKind, SecondKind };

/// Chebyshev polynomial in x with integer coefficients, lowest degree first.
struct ChebyshevPoly {
    ChebyshevKind kind;
    int index;
    IntPoly coeffs;
};

ChebyshevPoly chebyshev_t(int k);
ChebyshevPoly chebyshev_u(int k);

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
/// p(q(x)).
IntPoly poly_compose(const IntPoly& p, const IntPoly& q);
void poly_trim(IntPoly& a);

/// Quotient and remainder over the rationals.
struct PolyDivision {
    std::vector<Rational> quotient;
    std::vector<Rational> remainder; // empty when zero
};
PolyDivision poly_divmod(const IntPoly& num, const IntPoly& den);

/// Tilting multiplicities sum_n [T(rho)^{(x)n} : T(d rho)] z^n for SL(2) up to z^order.
IntegerSeries d_series(std::int64_t d, std::int64_t p, int order);

/// sum_n dim L_{d+n}(omega_n) z^n up to z^order.
IntegerSeries chi_series(std::int64_t d, std::int64_t p, int order);

/// Converts an exact rational series to integers, throwing ConsistencyError
/// on a non-integral coefficient (or a negative one when `nonnegative`).
IntegerSeries to_integer_series(const RationalSeries& s, bool nonnegative, const std::string& what);

} // namespace sympchar::series
