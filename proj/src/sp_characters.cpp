#include "sympchar/sp_characters.hpp"

#include <cmath>

#include "sympchar/padic.hpp"
#include "sympchar/series.hpp"

namespace sympchar::sp {

namespace {

void check_rank(std::int64_t r, std::int64_t m)
{
    if (m < 0)
        throw std::invalid_argument("rank m must be >= 0");
    if (r < 0 || r > m)
        throw std::invalid_argument("r must satisfy 0 <= r <= m (r=" + std::to_string(r) + ", m=" + std::to_string(m) + ")");
}

// Sets the default mpfr precision for the lifetime of the object.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned bits) : saved_(Real::default_precision())
    {
        Real::default_precision(static_cast<unsigned>(std::ceil(bits * 0.30103)) + 2);
    }
    ~PrecisionScope() { Real::default_precision(saved_); }
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

Real mp_pi()
{
    Real pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    return pi;
}

BigInt round_to_int(const Real& x, double& residual)
{
    Real rounded = boost::multiprecision::round(x);
    residual = static_cast<double>(boost::multiprecision::abs(x - rounded));
    BigInt out;
    mpfr_get_z(out.backend().data(), rounded.backend().data(), MPFR_RNDN);
    return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

} // namespace

void CharacterVector::add(std::int64_t j, std::int64_t c)
{
    if (j < 0 || j > m)
        throw std::out_of_range("character index outside 0..m");
    auto& slot = coeffs[j];
    slot += c;
    if (slot == 0)
        coeffs.erase(j);
}

std::int64_t CharacterVector::operator[](std::int64_t j) const
{
    auto it = coeffs.find(j);
    return it == coeffs.end() ? 0 : it->second;
}

RData r_data(std::int64_t R, std::int64_t p)
{
    if (R < 1)
        throw std::invalid_argument("R must be >= 1");
    const padic::PadicExpansion e(R, p);
    const int f = *e.lowest();
    return {R, f, *e.highest(), e[f], (p - e[f]) * ipow(p, f)};
}

std::vector<std::int64_t> j_members(const RData& rd, std::int64_t p, std::int64_t bound)
{
    std::vector<std::int64_t> out;
    const std::int64_t step = ipow(p, rd.f + 1);
    const padic::PadicExpansion re(rd.R, p);
    for (std::int64_t j = 0; j <= bound; j += step) {
        const padic::PadicExpansion je(j, p);
        bool ok = true;
        for (std::size_t i = rd.f + 1; i < je.size() && ok; ++i)
            ok = je[i] + re[i] < p;
        if (ok)
            out.push_back(j);
    }
    return out;
}

JSet j_set(std::int64_t r, std::int64_t m, std::int64_t p)
{
    check_rank(r, m);
    if (r < 1)
        throw std::invalid_argument("j_set needs r >= 1");
    const RData rd = r_data(m + 1 - r, p);
    return {j_members(rd, p, r / 2), rd.delta, rd};
}

CharacterVector decompose_simple(std::int64_t r, std::int64_t m, std::int64_t p)
{
    check_rank(r, m);
    CharacterVector ch{m, Basis::Weyl, {}};
    if (r == 0) {
        ch.add(0, 1);
        return ch;
    }
    const JSet js = j_set(r, m, p);
    for (std::int64_t j : js.members) {
        ch.add(r - 2 * j, 1);
        if (r - 2 * j - 2 * js.delta >= 0)
            ch.add(r - 2 * j - 2 * js.delta, -1);
    }
    return ch;
}

CharacterVector decompose_weyl(std::int64_t r, std::int64_t m, std::int64_t p)
{
    check_rank(r, m);
    CharacterVector ch{m, Basis::Simple, {}};
    for (std::int64_t j = r; j >= 0; j -= 2)
        if (padic::subset_rel((r - j) / 2, m + 1 - j, p))
            ch.add(j, 1);
    return ch;
}

BigInt weyl_dim(std::int64_t k, std::int64_t m)
{
    check_rank(k, m);
    return binomial(2 * m, k) - binomial(2 * m, k - 2);
}

const char* method_name(Method method)
{
    switch (method) {
    case Method::Theorem: return "theorem";
    case Method::Series: return "series";
    case Method::Binomial: return "binomial";
    case Method::Trig: return "trig";
    }
    return "?";
}

std::optional<Method> parse_method(const std::string& name)
{
    for (Method m : all_methods)
        if (name == method_name(m))
            return m;
    return std::nullopt;
}

bool DimensionReport::agree() const
{
    for (const auto& [method, value] : values)
        if (value != values.begin()->second)
            return false;
    return true;
}

BigInt dim_by_theorem(std::int64_t r, std::int64_t m, std::int64_t p)
{
    BigInt total = 0;
    for (const auto& [j, c] : decompose_simple(r, m, p).coeffs)
        total += c * weyl_dim(j, m);
    return total;
}

BigInt dim_by_series(std::int64_t r, std::int64_t m, std::int64_t p)
{
    using series::IntegerSeries;
    check_rank(r, m);
    if (r == 0)
        return 1;
    const int order = static_cast<int>(r);
    const RData rd = r_data(m + 1 - r, p);
    const padic::PadicExpansion re(rd.R, p);

    IntegerSeries s(order);
    for (int n = 0; n <= order; ++n)
        s[n] = binomial(2 * m + 1, n);
    IntegerSeries one_minus_x = IntegerSeries::one(order);
    if (order >= 1)
        one_minus_x[1] = -1;
    s = s * one_minus_x;

    // (X^{2(p-R_i)p^i} - 1) / (X^{2p^{i+1}} - 1) = (1 - X^a) / (1 - X^b)
    for (int i = rd.f; i <= rd.k; ++i) {
        const std::int64_t pi = ipow(p, i);
        const std::int64_t a = 2 * (p - re[i]) * pi;
        const std::int64_t b = 2 * p * pi;
        if (a == b)
            continue;
        IntegerSeries num = IntegerSeries::one(order), den = IntegerSeries::one(order);
        if (a <= order)
            num[static_cast<int>(a)] -= 1;
        if (b <= order)
            den[static_cast<int>(b)] -= 1;
        s = (s * num).divided_by(den);
    }
    return s[order];
}

std::vector<std::int64_t> a_set(const RData& rd, std::int64_t p)
{
    std::vector<std::int64_t> out{0};
    if (rd.f == rd.k)
        return out;
    const padic::PadicExpansion re(rd.R, p);
    for (int i = rd.f + 1; i <= rd.k; ++i) {
        const std::int64_t pi = ipow(p, i);
        std::vector<std::int64_t> next;
        for (std::int64_t base : out)
            for (std::int64_t ai = 0; ai <= p - 1 - re[i]; ++ai)
                next.push_back(base + ai * pi);
        out = std::move(next);
    }
    return out;
}

BigInt dim_by_binomial(std::int64_t r, std::int64_t m, std::int64_t p)
{
    check_rank(r, m);
    if (r == 0)
        return 1;
    const RData rd = r_data(m + 1 - r, p);
    const std::int64_t period = 2 * ipow(p, rd.k + 1);
    BigInt total = 0;
    for (std::int64_t a : a_set(rd, p)) {
        // 0 <= r - 2a + n*period <= 2m (and the same shifted by -2)
        const std::int64_t lo = floor_div(2 * a - r, period);
        const std::int64_t hi = floor_div(2 * m - r + 2 * a + 2, period) + 1;
        for (std::int64_t n = lo; n <= hi; ++n) {
            total += binomial(2 * m, r - 2 * a + n * period);
            total -= binomial(2 * m, r - 2 - 2 * a + n * period);
        }
    }
    return total;
}

unsigned trig_precision_bits(std::int64_t m, std::int64_t P)
{
    return static_cast<unsigned>(std::ceil(2.0 * m * 2.0 + std::log2(static_cast<double>(P)) + 64.0));
}

TrigValue dim_by_trig(std::int64_t r, std::int64_t m, std::int64_t p)
{
    check_rank(r, m);
    if (r == 0)
        return {1, 0.0};
    const RData rd = r_data(m + 1 - r, p);
    const std::int64_t P = ipow(p, rd.k + 1);
    const PrecisionScope scope(trig_precision_bits(m, P));
    const Real pi = mp_pi();

    // sin(π t / P) for t mod 2P, and 2cos(π i / (2P)) for 0 < i < P.
    std::vector<Real> sin_table(2 * P);
    for (std::int64_t t = 0; t < 2 * P; ++t)
        sin_table[t] = sin(pi * t / P);
    // Multiplicity of each residue (R + 2a) mod 2P over a in A.
    std::vector<std::int64_t> residues(2 * P, 0);
    for (std::int64_t a : a_set(rd, p))
        ++residues[(rd.R + 2 * a) % (2 * P)];

    Real sum = 0;
    for (std::int64_t i = 1; i < P; ++i) {
        Real inner = 0;
        for (std::int64_t t = 0; t < 2 * P; ++t)
            if (residues[t] != 0)
                inner += residues[t] * sin_table[(i * t) % (2 * P)];
        const Real twocos = 2 * cos(pi * i / (2 * P));
        sum += inner * sin_table[i] * pow(twocos, static_cast<int>(2 * m));
    }
    sum = 2 * sum / P;

    TrigValue out{0, 0.0};
    out.value = round_to_int(sum, out.residual);
    if (!(out.residual < 0.25))
        throw ConsistencyError("trig dimension formula: rounding residual " + std::to_string(out.residual) +
                               " >= 0.25 at r=" + std::to_string(r) + ", m=" + std::to_string(m));
    return out;
}

DimensionReport dim_simple(std::int64_t r, std::int64_t m, std::int64_t p, const std::vector<Method>& methods)
{
    check_rank(r, m);
    DimensionReport rep{m, p, r, {}, std::nullopt};
    for (Method method : methods) {
        switch (method) {
        case Method::Theorem: rep.values[method] = dim_by_theorem(r, m, p); break;
        case Method::Series: rep.values[method] = dim_by_series(r, m, p); break;
        case Method::Binomial: rep.values[method] = dim_by_binomial(r, m, p); break;
        case Method::Trig: {
            auto t = dim_by_trig(r, m, p);
            rep.values[method] = t.value;
            rep.trig_residual = t.residual;
            break;
        }
        }
    }
    return rep;
}

BigInt periodic_binomial_sum(std::int64_t q, std::int64_t r, std::int64_t s)
{
    if (s <= 0)
        throw std::invalid_argument("period s must be >= 1");
    if (q < 0)
        throw std::invalid_argument("q must be >= 0");
    BigInt total = 0;
    // every l in [0, q] with l ≡ r (mod s)
    const std::int64_t start = ((r % s) + s) % s;
    for (std::int64_t l = start; l <= q; l += s)
        total += binomial(q, l);
    return total;
}

PeriodicBinomial periodic_binomial_sum_checked(std::int64_t q, std::int64_t r, std::int64_t s)
{
    PeriodicBinomial out{periodic_binomial_sum(q, r, s), 0, 0.0};
    const PrecisionScope scope(static_cast<unsigned>(q + std::log2(static_cast<double>(s)) + 64));
    const Real pi = mp_pi();
    Real sum = 0;
    for (std::int64_t j = 1; j <= s; ++j)
        sum += cos(pi * j * (q - 2 * r) / s) * pow(2 * cos(pi * j / s), static_cast<int>(q));
    sum /= s;
    out.trig_rounded = round_to_int(sum, out.residual);
    return out;
}

BigInt weight_multiplicity(std::int64_t r, std::int64_t m, std::int64_t p, std::int64_t i)
{
    check_rank(r, m);
    if (i < 0 || 2 * i > r)
        throw std::invalid_argument("weight index i must satisfy 0 <= 2i <= r");
    const std::int64_t n = m - r + 2 * i;
    return series::d_series(m - r, p, static_cast<int>(n))[static_cast<int>(n)];
}

Asymptotic asymptotic_constant(std::int64_t d, std::int64_t p, unsigned precision_bits)
{
    if (d < 0)
        throw std::invalid_argument("d must be >= 0");
    const RData rd = r_data(d + 1, p);
    const std::int64_t P = ipow(p, rd.k + 1);
    const PrecisionScope scope(precision_bits);
    const Real pi = mp_pi();

    Real sines = 0;
    for (std::int64_t a : a_set(rd, p))
        sines += sin(pi * (rd.R + 2 * a) / P);
    const Real c_half = cos(pi / (2 * P));
    const Real base = 4 * c_half * c_half;
    Asymptotic out;
    out.constant = pow(base, static_cast<int>(d)) * 2 / P * sin(pi / P) * sines;
    out.growth_base = base;
    out.smallest_pole = 1 / base;
    out.precision_bits = precision_bits;
    return out;
}

std::vector<FixedRRatio> fixed_r_asymptotic_check(std::int64_t r, std::int64_t p, std::int64_t m_first,
                                                  std::int64_t m_last, std::int64_t m_step)
{
    if (r < 1)
        throw std::invalid_argument("fixed-r asymptotics need r >= 1");
    if (m_step < 1)
        throw std::invalid_argument("m step must be >= 1");
    BigInt r_fact = 1;
    for (std::int64_t i = 2; i <= r; ++i)
        r_fact *= i;
    std::vector<FixedRRatio> out;
    for (std::int64_t m = std::max(m_first, r); m <= m_last; m += m_step) {
        const BigInt dim = dim_by_theorem(r, m, p);
        BigInt lead = BigInt(1) << static_cast<unsigned>(r);
        lead *= boost::multiprecision::pow(BigInt(m), static_cast<unsigned>(r));
        const Rational ratio(dim * r_fact, lead);
        out.push_back({m, dim, static_cast<double>(ratio)});
    }
    return out;
}

} // namespace sympchar::sp
