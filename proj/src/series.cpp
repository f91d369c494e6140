#include "sympchar/series.hpp"

#include "sympchar/padic.hpp"

namespace sympchar::series {

namespace {

// P_0 = 1, P_1 = L, P_{k+1} = L P_k - z^2 P_{k-1}, with L = 1 + lin*z,
// keeping degrees <= max_degree.
IntPoly shifted_u_poly(int k, int lin, int max_degree)
{
    if (k < 0)
        throw std::invalid_argument("Chebyshev index must be >= 0");
    auto times_l = [&](const IntPoly& a) {
        IntPoly r(std::min<std::size_t>(a.size() + 1, max_degree + 1), BigInt(0));
        for (std::size_t i = 0; i < a.size() && i < r.size(); ++i) {
            r[i] += a[i];
            if (i + 1 < r.size())
                r[i + 1] += lin * a[i];
        }
        return r;
    };
    IntPoly prev{1};
    if (k == 0)
        return prev;
    IntPoly cur = times_l(prev);
    for (int j = 1; j < k; ++j) {
        IntPoly next = times_l(cur);
        if (next.size() < std::min<std::size_t>(prev.size() + 2, max_degree + 1))
            next.resize(std::min<std::size_t>(prev.size() + 2, max_degree + 1), BigInt(0));
        for (std::size_t i = 0; i + 2 < next.size() && i < prev.size(); ++i)
            next[i + 2] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    poly_trim(cur);
    return cur;
}

struct Factor {
    std::int64_t numerator_index;   // (p - d_i) p^i - 1
    std::int64_t denominator_index; // p^{i+1} - 1
};

std::vector<Factor> erdmann_factors(std::int64_t d, std::int64_t p)
{
    if (d < 0)
        throw std::invalid_argument("d must be >= 0");
    const padic::PadicExpansion e(d + 1, p);
    std::vector<Factor> out;
    for (int i = *e.lowest(); i <= *e.highest(); ++i) {
        const std::int64_t pi = ipow(p, i);
        out.push_back({(p - e[i]) * pi - 1, pi * p - 1});
    }
    return out;
}

// prefactor z^{-prefix} times prod U_a(x)/U_b(x) with U_n(x) = P_n(z)/z^n.
IntegerSeries chebyshev_quotient(const std::vector<Factor>& factors, std::int64_t prefix, int lin, int order,
                                 const std::string& what)
{
    std::int64_t valuation = -prefix;
    for (const auto& f : factors)
        valuation += f.denominator_index - f.numerator_index;
    if (valuation < 0)
        throw ConsistencyError(what + ": negative net z-valuation");
    if (valuation > order)
        return IntegerSeries(order);

    const int work = order - static_cast<int>(valuation);
    auto num = RationalSeries::one(work);
    auto den = RationalSeries::one(work);
    for (const auto& f : factors) {
        num = num * RationalSeries::from_poly(shifted_u_poly(static_cast<int>(f.numerator_index), lin, work), work);
        den = den * RationalSeries::from_poly(shifted_u_poly(static_cast<int>(f.denominator_index), lin, work), work);
    }
    const auto q = num.divided_by(den).shifted_up(static_cast<int>(valuation));
    return to_integer_series(q, true, what);
}

} // namespace

void poly_trim(IntPoly& a)
{
    while (a.size() > 1 && a.back() == 0)
        a.pop_back();
}

IntPoly q_poly(int k)
{
    return shifted_u_poly(k, 0, k + 1);
}

IntPoly r_poly(int k)
{
    return shifted_u_poly(k, -2, k + 1);
}

ChebyshevPoly chebyshev_t(int k)
{
    if (k < 0)
        throw std::invalid_argument("Chebyshev index must be >= 0");
    IntPoly prev{1}, cur{0, 1};
    if (k == 0)
        return {ChebyshevKind::FirstKind, 0, prev};
    for (int j = 1; j < k; ++j) {
        IntPoly next(cur.size() + 1, BigInt(0));
        for (std::size_t i = 0; i < cur.size(); ++i)
            next[i + 1] += 2 * cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i)
            next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {ChebyshevKind::FirstKind, k, cur};
}

ChebyshevPoly chebyshev_u(int k)
{
    if (k < 0)
        throw std::invalid_argument("Chebyshev index must be >= 0");
    IntPoly prev{1}, cur{0, 2};
    if (k == 0)
        return {ChebyshevKind::SecondKind, 0, prev};
    for (int j = 1; j < k; ++j) {
        IntPoly next(cur.size() + 1, BigInt(0));
        for (std::size_t i = 0; i < cur.size(); ++i)
            next[i + 1] += 2 * cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i)
            next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {ChebyshevKind::SecondKind, k, cur};
}

IntPoly poly_mul(const IntPoly& a, const IntPoly& b)
{
    IntPoly r(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

IntPoly poly_compose(const IntPoly& p, const IntPoly& q)
{
    IntPoly acc{0};
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = poly_mul(acc, q);
        acc[0] += *it;
    }
    poly_trim(acc);
    return acc;
}

PolyDivision poly_divmod(const IntPoly& num, const IntPoly& den)
{
    IntPoly d = den;
    poly_trim(d);
    if (d.size() == 1 && d[0] == 0)
        throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(num.begin(), num.end());
    const std::size_t dd = d.size() - 1;
    std::vector<Rational> quot(rem.size() >= d.size() ? rem.size() - dd : 1, Rational(0));
    for (std::size_t i = rem.size(); i-- > dd;) {
        if (rem[i] == 0)
            continue;
        Rational c = rem[i] / Rational(d[dd]);
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j)
            rem[i - dd + j] -= c * Rational(d[j]);
    }
    while (!rem.empty() && rem.back() == 0)
        rem.pop_back();
    return {quot, rem};
}

IntegerSeries to_integer_series(const RationalSeries& s, bool nonnegative, const std::string& what)
{
    IntegerSeries out(s.order());
    for (int n = 0; n <= s.order(); ++n) {
        if (denominator(s[n]) != 1)
            throw ConsistencyError(what + ": non-integer coefficient at z^" + std::to_string(n));
        out[n] = numerator(s[n]);
        if (nonnegative && out[n] < 0)
            throw ConsistencyError(what + ": negative coefficient at z^" + std::to_string(n));
    }
    return out;
}

IntegerSeries d_series(std::int64_t d, std::int64_t p, int order)
{
    return chebyshev_quotient(erdmann_factors(d, p), 1, 0, order, "d_series");
}

IntegerSeries chi_series(std::int64_t d, std::int64_t p, int order)
{
    return chebyshev_quotient(erdmann_factors(d, p), d + 1, -2, order, "chi_series");
}

} // namespace sympchar::series
