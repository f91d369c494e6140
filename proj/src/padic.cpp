#include "sympchar/padic.hpp"

#include <algorithm>
#include <limits>

namespace sympchar {

BigInt binomial(std::int64_t n, std::int64_t k)
{
    BigInt result = 0;
    if (n < 0 || k < 0 || k > n)
        return result;
    mpz_bin_uiui(result.backend().data(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return result;
}

std::int64_t ipow(std::int64_t p, int e)
{
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::int64_t>::max() / p)
            throw std::overflow_error("ipow: result does not fit in 64 bits");
        r *= p;
    }
    return r;
}

bool is_prime(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t d = 2; d <= n / d; ++d)
        if (n % d == 0)
            return false;
    return true;
}

namespace padic {

PadicExpansion::PadicExpansion(std::int64_t n, std::int64_t p) : p_(p), value_(n)
{
    if (p < 2)
        throw std::invalid_argument("p-adic expansion needs p >= 2");
    if (n < 0)
        throw std::invalid_argument("p-adic expansion needs n >= 0");
    for (; n > 0; n /= p)
        digits_.push_back(n % p);
}

std::optional<int> PadicExpansion::lowest() const
{
    for (std::size_t i = 0; i < digits_.size(); ++i)
        if (digits_[i] != 0)
            return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> PadicExpansion::highest() const
{
    if (digits_.empty())
        return std::nullopt;
    return static_cast<int>(digits_.size()) - 1;
}

bool subset_rel(std::int64_t a, std::int64_t b, std::int64_t p)
{
    if (b <= 0)
        throw std::invalid_argument("subset_rel needs b > 0");
    if (a < 0)
        throw std::invalid_argument("subset_rel needs a >= 0");
    for (; a > 0; a /= p, b /= p) {
        std::int64_t ai = a % p;
        if (ai != 0 && ai != b % p)
            return false;
    }
    return true;
}

Prec prec_rel(std::int64_t a, std::int64_t b, std::int64_t p)
{
    if (b <= 0)
        throw std::invalid_argument("prec_rel needs b > 0");
    if (a < 0)
        throw std::invalid_argument("prec_rel needs a >= 0");
    PadicExpansion ea(a, p), eb(b, p);
    const auto s = static_cast<std::size_t>(*eb.lowest());
    for (std::size_t i = 0; i < s; ++i)
        if (ea[i] != 0)
            return Prec::None;
    const std::size_t len = std::max(ea.size(), eb.size());
    for (std::size_t i = s + 1; i < len; ++i)
        if (ea[i] + eb[i] >= p)
            return Prec::None;
    if (ea[s] == 0)
        return Prec::Prec1;
    if (ea[s] + eb[s] == p)
        return Prec::PrecMinus1;
    return Prec::None;
}

bool lucas_divides(std::int64_t n, std::int64_t k, std::int64_t p)
{
    if (k < 0 || n < 0 || k > n)
        return true;
    for (; k > 0 || n > 0; n /= p, k /= p)
        if (k % p > n % p)
            return true;
    return false;
}

int valuation(std::int64_t n, std::int64_t p)
{
    if (n == 0)
        throw std::invalid_argument("valuation of zero");
    int v = 0;
    for (; n % p == 0; n /= p)
        ++v;
    return v;
}

} // namespace padic
} // namespace sympchar
