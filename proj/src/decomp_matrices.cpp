#include "sympchar/decomp_matrices.hpp"

#include <stdexcept>

#include "sympchar/padic.hpp"
#include "sympchar/types.hpp"

namespace sympchar::decomp {

const char* kind_name(MatrixKind kind)
{
    switch (kind) {
    case MatrixKind::A: return "A";
    case MatrixKind::B: return "B";
    case MatrixKind::ATilde: return "ATilde";
    case MatrixKind::BTilde: return "BTilde";
    }
    return "?";
}

namespace {

int a_entry(int n, int k, int l, std::int64_t p)
{
    if (k < l || (k - l) % 2 != 0)
        return 0;
    switch (padic::prec_rel((k - l) / 2, n + 1 - k, p)) {
    case padic::Prec::Prec1: return 1;
    case padic::Prec::PrecMinus1: return -1;
    case padic::Prec::None: return 0;
    }
    return 0;
}

int b_entry(int n, int k, int l, std::int64_t p)
{
    if (k < l || (k - l) % 2 != 0)
        return 0;
    return padic::subset_rel((k - l) / 2, n + 1 - l, p) ? 1 : 0;
}

IntMatrix lower_direct(int n, std::int64_t p, bool is_a)
{
    IntMatrix m = IntMatrix::Zero(n, n);
    for (int k = 1; k <= n; ++k)
        for (int l = k % 2 == 0 ? 2 : 1; l <= k; l += 2)
            m(k - 1, l - 1) = is_a ? a_entry(n, k, l, p) : b_entry(n, k, l, p);
    return m;
}

// One recursion step from size s to size p*s.
IntMatrix grow(const IntMatrix& x, std::int64_t p, MatrixKind kind)
{
    const auto s = x.rows();
    const auto n = s * p;
    IntMatrix out = IntMatrix::Zero(n, n);
    const IntMatrix e = shift_e(static_cast<int>(s));
    const IntMatrix f = shift_f(static_cast<int>(s));
    for (std::int64_t i = 0; i < p; ++i) {
        out.block(i * s, i * s, s, s) = x;
        for (std::int64_t j = 0; j < p; ++j) {
            const std::int64_t gap = kind == MatrixKind::A || kind == MatrixKind::B ? i - j : j - i;
            if (gap <= 0)
                continue;
            auto blk = out.block(i * s, j * s, s, s);
            switch (kind) {
            case MatrixKind::A:
                blk = gap % 2 == 1 ? IntMatrix(-x * e) : IntMatrix(x * e * e);
                break;
            case MatrixKind::B:
                if (gap == 1)
                    blk = e * x;
                break;
            case MatrixKind::ATilde:
                blk = gap % 2 == 1 ? IntMatrix(-x * f) : IntMatrix(x * f * f);
                break;
            case MatrixKind::BTilde:
                if (gap == 1)
                    blk = f * x;
                break;
            }
        }
    }
    return out;
}

} // namespace

DecompMatrix build_direct(int n, std::int64_t p, MatrixKind kind)
{
    if (n < 1)
        throw std::invalid_argument("matrix size must be >= 1");
    if (p < 2)
        throw std::invalid_argument("p must be >= 2");
    const bool is_a = kind == MatrixKind::A || kind == MatrixKind::ATilde;
    IntMatrix m = lower_direct(n, p, is_a);
    if (kind == MatrixKind::ATilde || kind == MatrixKind::BTilde)
        m = reversed(m);
    return {kind, p, std::move(m)};
}

DecompMatrix build_recursive(int n_power, std::int64_t p, MatrixKind kind)
{
    if (n_power < 1)
        throw std::invalid_argument("recursive construction needs exponent >= 1");
    if (p < 2)
        throw std::invalid_argument("p must be >= 2");
    const std::int64_t size = ipow(p, n_power);
    if (size > (1 << 15))
        throw std::invalid_argument("recursive construction size too large");
    IntMatrix m = IntMatrix::Identity(p, p);
    for (int step = 1; step < n_power; ++step)
        m = grow(m, p, kind);
    return {kind, p, std::move(m)};
}

IntMatrix shift_e(int n)
{
    IntMatrix e = IntMatrix::Zero(n, n);
    for (int i = 2; i <= n; ++i)
        e(i - 1, n + 2 - i - 1) = 1;
    return e;
}

IntMatrix shift_f(int n)
{
    IntMatrix f = IntMatrix::Zero(n, n);
    for (int i = 1; i <= n - 1; ++i)
        f(i - 1, n - i - 1) = 1;
    return f;
}

IntMatrix sparse_product(const IntMatrix& a, const IntMatrix& b)
{
    Eigen::SparseMatrix<int> sa = a.sparseView();
    Eigen::SparseMatrix<int> sb = b.sparseView();
    Eigen::SparseMatrix<int> prod = sa * sb;
    return IntMatrix(prod);
}

InverseCheck verify_inverse(int n, std::int64_t p)
{
    const auto a = build_direct(n, p, MatrixKind::A);
    const auto b = build_direct(n, p, MatrixKind::B);
    const IntMatrix prod = sparse_product(a.entries, b.entries);
    InverseCheck check;
    for (int k = 0; k < n && check.ok; ++k)
        for (int l = 0; l < n; ++l)
            if (prod(k, l) != (k == l ? 1 : 0)) {
                check.ok = false;
                check.first_failure = std::make_pair(k + 1, l + 1);
                break;
            }
    return check;
}

IntMatrix even_minor(const IntMatrix& m)
{
    const auto half = m.rows() / 2;
    IntMatrix out(half, half);
    for (Eigen::Index i = 0; i < half; ++i)
        for (Eigen::Index j = 0; j < half; ++j)
            out(i, j) = m(2 * i + 1, 2 * j + 1);
    return out;
}

} // namespace sympchar::decomp
