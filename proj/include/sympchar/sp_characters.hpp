#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "types.hpp"

namespace sympchar::sp {

enum class Basis { Weyl, Simple };

/// Integer combination of Δ(ω_j) (Weyl basis) or L(ω_j) (Simple basis),
/// 0 <= j <= m, for Sp(2m). ω_0 is the zero weight. Zero coefficients are
/// never stored.
struct CharacterVector {
    std::int64_t m = 0;
    Basis basis = Basis::Weyl;
    std::map<std::int64_t, std::int64_t> coeffs;

    void add(std::int64_t j, std::int64_t c);
    std::int64_t operator[](std::int64_t j) const;
    bool operator==(const CharacterVector&) const = default;
};

/// Digit data attached to R = m + 1 - r.
struct RData {
    std::int64_t R;
    int f;              ///< lowest nonzero digit position of R
    int k;              ///< highest digit position of R
    std::int64_t R_f;
    std::int64_t delta; ///< (p - R_f) p^f
};

RData r_data(std::int64_t R, std::int64_t p);

/// The members j of the index set J with 2j <= r, together with δ.
struct JSet {
    std::vector<std::int64_t> members;
    std::int64_t delta;
    RData rdata;
};

/// Members j >= 0 with j <= bound whose digits vanish at positions <= f and
/// satisfy j_i + R_i < p above f.
std::vector<std::int64_t> j_members(const RData& rd, std::int64_t p, std::int64_t bound);

JSet j_set(std::int64_t r, std::int64_t m, std::int64_t p);

/// ch L(ω_r) as a signed combination of Weyl characters.
CharacterVector decompose_simple(std::int64_t r, std::int64_t m, std::int64_t p);

/// ch Δ(ω_r) as a 0/1 combination of simple characters.
CharacterVector decompose_weyl(std::int64_t r, std::int64_t m, std::int64_t p);

/// binom(2m, k) - binom(2m, k-2)
BigInt weyl_dim(std::int64_t k, std::int64_t m);

enum class Method { Theorem, Series, Binomial, Trig };
const char* method_name(Method method);
std::optional<Method> parse_method(const std::string& name);
inline constexpr Method all_methods[] = {Method::Theorem, Method::Series, Method::Binomial, Method::Trig};

struct DimensionReport {
    std::int64_t m, p, r;
    std::map<Method, BigInt> values;
    /// Largest |x - round(x)| seen by the trig method, when it ran.
    std::optional<double> trig_residual;
    bool agree() const;
};

BigInt dim_by_theorem(std::int64_t r, std::int64_t m, std::int64_t p);
BigInt dim_by_series(std::int64_t r, std::int64_t m, std::int64_t p);
BigInt dim_by_binomial(std::int64_t r, std::int64_t m, std::int64_t p);

struct TrigValue {
    BigInt value;
    double residual;
};

/// Working precision for the trig evaluation: ceil(4m + log2(p^{k+1}) + 64) bits.
unsigned trig_precision_bits(std::int64_t m, std::int64_t P);

/// Throws ConsistencyError when the rounding residual is >= 0.25.
TrigValue dim_by_trig(std::int64_t r, std::int64_t m, std::int64_t p);

DimensionReport dim_simple(std::int64_t r, std::int64_t m, std::int64_t p, const std::vector<Method>& methods);

/// The finite set A of the binomial and trigonometric formulas.
std::vector<std::int64_t> a_set(const RData& rd, std::int64_t p);

struct PeriodicBinomial {
    BigInt exact;
    /// Rounded value of the cosine-sum form, for cross-checking.
    BigInt trig_rounded;
    double residual;
};

/// sum over n in Z of binom(q, r + n s).
BigInt periodic_binomial_sum(std::int64_t q, std::int64_t r, std::int64_t s);
PeriodicBinomial periodic_binomial_sum_checked(std::int64_t q, std::int64_t r, std::int64_t s);

/// dim of the ω_{r-2i} weight space of L_m(ω_r).
BigInt weight_multiplicity(std::int64_t r, std::int64_t m, std::int64_t p, std::int64_t i);

struct Asymptotic {
    Real constant;       ///< c
    Real growth_base;    ///< 4 cos^2(π / (2 p^{k+1}))
    Real smallest_pole;  ///< 1 / growth_base
    unsigned precision_bits;
};

/// dim L_{d+n}(ω_n) ~ c * base^n as n grows.
Asymptotic asymptotic_constant(std::int64_t d, std::int64_t p, unsigned precision_bits = 256);

struct FixedRRatio {
    std::int64_t m;
    BigInt dim;
    double ratio; ///< dim L_m(ω_r) / ((2^r / r!) m^r)
};

std::vector<FixedRRatio> fixed_r_asymptotic_check(std::int64_t r, std::int64_t p, std::int64_t m_first,
                                                  std::int64_t m_last, std::int64_t m_step = 1);

} // namespace sympchar::sp
