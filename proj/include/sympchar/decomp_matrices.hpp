#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace sympchar::decomp {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using IntMatrix = Matrix<int>;

enum class MatrixKind { A, B, ATilde, BTilde };

const char* kind_name(MatrixKind kind);

/// One of A(n), B(n) or their index reversals Ã(n), B̃(n) for a prime p.
///
/// Storage is 0-based; `at(k, l)` takes the 1-based indices used in the
/// literature, so `at(k, l) == entries(k - 1, l - 1)`.
struct DecompMatrix {
    MatrixKind kind;
    std::int64_t p;
    IntMatrix entries;

    int size() const { return static_cast<int>(entries.rows()); }
    int at(int k, int l) const { return entries(k - 1, l - 1); }
};

/// Entries straight from the digit relations:
/// A(n)_{k,l} = ±1 when (k-l)/2 ≺±1 n+1-k, B(n)_{k,l} = 1 when (k-l)/2 ⊂ n+1-l.
DecompMatrix build_direct(int n, std::int64_t p, MatrixKind kind);

/// Size p^n_power from the block recursions. A and B use the lower block
/// forms built on E; Ã and B̃ use the upper block forms built on F.
DecompMatrix build_recursive(int n_power, std::int64_t p, MatrixKind kind);

/// E_n: E_{i,j} = 1 iff i + j = n + 2 (1-based), so row 1 and column 1 vanish.
IntMatrix shift_e(int n);
/// F_n: F_{i,j} = 1 iff i + j = n (1-based), so row n and column n vanish.
IntMatrix shift_f(int n);

/// M_{u,v} -> M_{n+1-u,n+1-v}
template <typename Derived>
Matrix<typename Derived::Scalar> reversed(const Eigen::MatrixBase<Derived>& m)
{
    return m.reverse();
}

template <typename Derived>
bool is_identity(const Eigen::MatrixBase<Derived>& m)
{
    return m.rows() == m.cols() && m.isIdentity(0);
}

/// Exact integer product through sparse storage; the matrices are very sparse.
IntMatrix sparse_product(const IntMatrix& a, const IntMatrix& b);

struct InverseCheck {
    bool ok = true;
    /// 1-based coordinates of the first entry of A(n)B(n) that differs from Id.
    std::optional<std::pair<int, int>> first_failure;
};

InverseCheck verify_inverse(int n, std::int64_t p);

/// Keeps the rows and columns with even 1-based index.
IntMatrix even_minor(const IntMatrix& m);

} // namespace sympchar::decomp
