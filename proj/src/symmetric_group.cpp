#include "sympchar/symmetric_group.hpp"

#include <stdexcept>
#include <string>

#include "sympchar/padic.hpp"
#include "sympchar/sp_characters.hpp"

namespace sympchar::symmetric {

namespace {

void check_two_row(std::int64_t n, std::int64_t r)
{
    if (n < 0 || r < 0 || 2 * r > n)
        throw std::invalid_argument("two-row partition needs 0 <= 2r <= n (n=" + std::to_string(n) +
                                    ", r=" + std::to_string(r) + ")");
}

// The signed Specht expansion, without the p-regularity check on the label.
GrothendieckVector signed_expansion(std::int64_t n, std::int64_t r, std::int64_t p)
{
    const sp::RData rd = sp::r_data(n + 1 - 2 * r, p);
    GrothendieckVector v{n, ModuleKind::Specht, {}};
    for (std::int64_t j : sp::j_members(rd, p, r)) {
        v.add(r - j, 1);
        if (r - j - rd.delta >= 0)
            v.add(r - j - rd.delta, -1);
    }
    return v;
}

} // namespace

void GrothendieckVector::add(std::int64_t i, std::int64_t c)
{
    if (i < 0 || 2 * i > n)
        throw std::out_of_range("second part outside 0..n/2");
    if ((coeffs[i] += c) == 0)
        coeffs.erase(i);
}

bool is_p_regular(std::int64_t n, std::int64_t r, std::int64_t p)
{
    check_two_row(n, r);
    return !(p == 2 && n > 0 && n == 2 * r);
}

std::vector<std::int64_t> james_factors(std::int64_t n, std::int64_t r, std::int64_t p)
{
    check_two_row(n, r);
    std::vector<std::int64_t> out;
    for (std::int64_t i = r; i >= 0; --i)
        if (padic::subset_rel(r - i, n + 1 - 2 * i, p))
            out.push_back(i);
    return out;
}

GrothendieckVector specht_in_simple_basis(std::int64_t n, std::int64_t r, std::int64_t p)
{
    GrothendieckVector v{n, ModuleKind::Simple, {}};
    for (std::int64_t i : james_factors(n, r, p))
        v.add(i, 1);
    return v;
}

GrothendieckVector simple_in_specht_basis(std::int64_t n, std::int64_t r, std::int64_t p)
{
    check_two_row(n, r);
    if (!is_p_regular(n, r, p))
        throw std::invalid_argument("(n-r, r) is not p-regular, so D^(n-r,r) is not a simple label");
    return signed_expansion(n, r, p);
}

BigInt specht_dim(std::int64_t n, std::int64_t r)
{
    check_two_row(n, r);
    return binomial(n, r) - binomial(n, r - 1);
}

BigInt simple_dim_two_row(std::int64_t n, std::int64_t r, std::int64_t p)
{
    BigInt total = 0;
    for (const auto& [i, c] : simple_in_specht_basis(n, r, p).coeffs)
        total += c * specht_dim(n, i);
    return total;
}

decomp::IntMatrix james_matrix(std::int64_t n, std::int64_t p)
{
    const auto size = n / 2 + 1;
    decomp::IntMatrix m = decomp::IntMatrix::Zero(size, size);
    for (std::int64_t r = 0; r < size; ++r)
        for (std::int64_t i : james_factors(n, r, p))
            m(r, i) = 1;
    return m;
}

decomp::IntMatrix specht_expansion_matrix(std::int64_t n, std::int64_t p)
{
    const auto size = n / 2 + 1;
    decomp::IntMatrix m = decomp::IntMatrix::Zero(size, size);
    for (std::int64_t r = 0; r < size; ++r)
        for (const auto& [i, c] : signed_expansion(n, r, p).coeffs)
            m(r, i) = static_cast<int>(c);
    return m;
}

} // namespace sympchar::symmetric
