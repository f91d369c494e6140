#include "sympchar/sl2.hpp"

#include <stdexcept>

#include "sympchar/padic.hpp"
#include "sympchar/types.hpp"

namespace sympchar::sl2 {

std::vector<std::int64_t> sl2_weyl_factors(std::int64_t r, std::int64_t p)
{
    if (r < 0)
        throw std::invalid_argument("SL(2) weight must be >= 0");
    // Smallest p^k - 1 > r, so that p^k - 1 - s > 0; then
    // [Δ(r):L(s)] = 1 iff (r-s)/2 ⊂ p^k - 1 - s.
    std::int64_t top = p - 1;
    while (top <= r)
        top = top * p + (p - 1);
    std::vector<std::int64_t> out;
    for (std::int64_t s = r; s >= 0; s -= 2)
        if (padic::subset_rel((r - s) / 2, top - s, p))
            out.push_back(s);
    return out;
}

std::map<std::int64_t, std::int64_t> sl2_simple_char(std::int64_t r, std::int64_t p)
{
    if (r < 0)
        throw std::invalid_argument("SL(2) weight must be >= 0");
    const padic::PadicExpansion e(r + 1, p);
    const int s = *e.lowest();
    const std::int64_t shift = 2 * e[s] * ipow(p, s);

    // J = { sum_{i>s} c_i p^i : 0 <= c_i <= a_i }
    std::vector<std::int64_t> js{0};
    for (std::size_t i = s + 1; i < e.size(); ++i) {
        const std::int64_t pi = ipow(p, static_cast<int>(i));
        std::vector<std::int64_t> next;
        for (std::int64_t base : js)
            for (std::int64_t c = 0; c <= e[i]; ++c)
                next.push_back(base + c * pi);
        js = std::move(next);
    }

    std::map<std::int64_t, std::int64_t> out;
    auto add = [&](std::int64_t k, std::int64_t c) {
        if ((out[k] += c) == 0)
            out.erase(k);
    };
    for (std::int64_t j : js) {
        if (r - 2 * j >= 0)
            add(r - 2 * j, 1);
        if (r - shift - 2 * j >= 0)
            add(r - shift - 2 * j, -1);
    }
    return out;
}

std::vector<std::int64_t> weight_vector(const std::map<std::int64_t, std::int64_t>& weyl_combination, std::int64_t r)
{
    // weight r - 2k <-> index k; Δ(j) has weights j, j-2, ..., -j
    std::vector<std::int64_t> mult(r + 1, 0);
    for (const auto& [j, c] : weyl_combination) {
        if (j > r || (r - j) % 2 != 0)
            throw std::invalid_argument("Weyl weight incompatible with r");
        for (std::int64_t w = j; w >= -j; w -= 2)
            mult[(r - w) / 2] += c;
    }
    return mult;
}

std::vector<std::int64_t> lucas_weight_vector(std::int64_t r, std::int64_t p)
{
    std::vector<std::int64_t> out(r + 1);
    for (std::int64_t k = 0; k <= r; ++k)
        out[k] = padic::lucas_divides(r, k, p) ? 0 : 1;
    return out;
}

decomp::DecompMatrix sl2_decomp_matrix(int size, std::int64_t p)
{
    std::int64_t q = p;
    while (q - 1 < size)
        q *= p;
    if (size < 1 || q - 1 != size)
        throw std::invalid_argument("SL(2) decomposition matrix size must be p^n - 1 with n >= 1");
    decomp::IntMatrix m = decomp::IntMatrix::Zero(size, size);
    for (int row = 1; row <= size; ++row)
        for (std::int64_t s : sl2_weyl_factors(row - 1, p))
            m(row - 1, static_cast<Eigen::Index>(s)) = 1;
    return {decomp::MatrixKind::B, p, std::move(m)};
}

} // namespace sympchar::sl2
