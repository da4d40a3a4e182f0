// Euler characteristics of alternating, symmetric and tensor powers of the
// cotangent sheaf of a complete intersection Y in a complete simplicial
// toric variety, by x^0 y^p coefficient extraction against H(s).
#pragma once

#include "toric_hodge/hilbert.hpp"
#include "toric_hodge/series.hpp"

namespace toric {

namespace detail {

inline Exponent to_exponent(const IntVector& v) {
    Exponent e(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] > Int(std::numeric_limits<std::int32_t>::max()) ||
            v[i] < Int(std::numeric_limits<std::int32_t>::min()))
            throw PreconditionError("degree entry out of range");
        e[i] = static_cast<std::int64_t>(v[i]);
    }
    return e;
}

inline Exponent unit_exponent(std::size_t n, std::size_t j) {
    Exponent e(n, 0);
    e[j] = 1;
    return e;
}

inline void require_simplicial(const HilbertContext& ctx) {
    if (!is_simplicial(ctx.fan)) throw PreconditionError("fan is not simplicial");
}

}  // namespace detail

/// Coefficient of x^0 y^p in P(x) times the factorization, where P is the
/// Hilbert series of the fan: sum over s of q_{s,p} H(-s).
inline Int coeff_x0_yp(const HilbertContext& ctx, const SeriesFactorization& fac, std::size_t p) {
    if (fac.nvars != ctx.r()) throw PreconditionError("coeff_x0_yp: factorization has wrong arity");
    auto poly = y_truncated_expand(fac, p);
    Int total = 0;
    for (const auto& [e, c] : poly.by_y[p]) {
        IntVector s(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) s[i] = -e[i];
        total += c * h_of_s(ctx, s);
    }
    return total;
}

/// (1+y x_1)...(1+y x_r) (1+y)^{m-r} prod_i (1 - x^{d_i}) / (1 + y x^{d_i})
inline SeriesFactorization alternating_factors(const HilbertContext& ctx, const DegreeMatrix& degrees) {
    SeriesFactorization fac{ctx.r(), {}};
    for (std::size_t j = 0; j < ctx.r(); ++j)
        fac.factors.push_back(plus_binomial(detail::unit_exponent(ctx.r(), j)));
    fac.factors.push_back(scalar_binomial(std::int64_t(ctx.m()) - std::int64_t(ctx.r()), 1));
    for (const auto& d : degrees) {
        fac.factors.push_back(minus_binomial(detail::to_exponent(d)));
        fac.factors.push_back(geometric_inverse(detail::to_exponent(d), -1));
    }
    return fac;
}

/// prod_i (1 - x^{d_i})(1 - y x^{d_i}) (1-y)^{r-m} / prod_j (1 - y x_j)
inline SeriesFactorization symmetric_factors(const HilbertContext& ctx, const DegreeMatrix& degrees) {
    SeriesFactorization fac{ctx.r(), {}};
    for (const auto& d : degrees) {
        fac.factors.push_back(minus_binomial(detail::to_exponent(d)));
        fac.factors.push_back(minus_y_binomial(detail::to_exponent(d)));
    }
    fac.factors.push_back(scalar_binomial(std::int64_t(ctx.r()) - std::int64_t(ctx.m()), -1));
    for (std::size_t j = 0; j < ctx.r(); ++j)
        fac.factors.push_back(geometric_inverse(detail::unit_exponent(ctx.r(), j), 1));
    return fac;
}

/// prod_i (1 - x^{d_i}) / (1 - y (x_1 + ... + x_r + m - r - sum_i x^{d_i}))
inline SeriesFactorization tensor_factors(const HilbertContext& ctx, const DegreeMatrix& degrees) {
    SeriesFactorization fac{ctx.r(), {}};
    std::vector<std::pair<Exponent, Int>> form;
    for (std::size_t j = 0; j < ctx.r(); ++j) form.emplace_back(detail::unit_exponent(ctx.r(), j), 1);
    if (ctx.m() != ctx.r())
        form.emplace_back(Exponent(ctx.r(), 0), Int(std::int64_t(ctx.m()) - std::int64_t(ctx.r())));
    for (const auto& d : degrees) {
        fac.factors.push_back(minus_binomial(detail::to_exponent(d)));
        form.emplace_back(detail::to_exponent(d), -1);
    }
    fac.factors.push_back(linear_form_power(std::move(form)));
    return fac;
}

/// chi(Y, Omega^p_Y).
inline Int chi_alt(const HilbertContext& ctx, const DegreeMatrix& degrees, std::size_t p) {
    detail::require_simplicial(ctx);
    check_degrees(ctx, degrees);
    return coeff_x0_yp(ctx, alternating_factors(ctx, degrees), p);
}

/// chi(Y, S^p Omega^1_Y).
inline Int chi_sym(const HilbertContext& ctx, const DegreeMatrix& degrees, std::size_t p) {
    detail::require_simplicial(ctx);
    check_degrees(ctx, degrees);
    return coeff_x0_yp(ctx, symmetric_factors(ctx, degrees), p);
}

/// chi(Y, (Omega^1_Y)^{tensor p}).
inline Int chi_tensor(const HilbertContext& ctx, const DegreeMatrix& degrees, std::size_t p) {
    detail::require_simplicial(ctx);
    check_degrees(ctx, degrees);
    return coeff_x0_yp(ctx, tensor_factors(ctx, degrees), p);
}

/// chi(Y, Omega^p_Y) as an explicit finite sum of Hilbert-function values:
///   sum over ray subsets J (|J| = rho), equation subsets T (|T| = tau) and
///   multi-indices i with rho + |i| <= p of
///   (-1)^{p+tau-rho} C(r-m-1+a, a) H(-e_J - d_T - sum_l i_l d_l),
/// with a = p - rho - |i|. The binomial is the y^a coefficient of
/// (1+y)^{m-r} up to sign; it is 1 when r = m+1.
inline Int chi_alt_hilbert(const HilbertContext& ctx, const DegreeMatrix& degrees, std::size_t p) {
    detail::require_simplicial(ctx);
    check_degrees(ctx, degrees);
    const std::size_t r = ctx.r(), m = ctx.m(), k = degrees.size();
    const long excess = static_cast<long>(r) - static_cast<long>(m) - 1;
    Int total = 0;

    std::vector<std::size_t> mult(k, 0);
    // iterate multi-indices i with |i| <= p, then ray subsets with rho <= p - |i|
    std::function<void(std::size_t, std::size_t)> over_multi = [&](std::size_t l, std::size_t used) {
        if (l < k) {
            for (std::size_t v = 0; used + v <= p; ++v) {
                mult[l] = v;
                over_multi(l + 1, used + v);
            }
            mult[l] = 0;
            return;
        }
        IntVector shift(r, Int(0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < r; ++j) shift[j] += Int(mult[i]) * degrees[i][j];
        for (std::size_t jmask = 0; jmask < (std::size_t(1) << r); ++jmask) {
            const std::size_t rho = std::popcount(jmask);
            if (rho + used > p) continue;
            const long a = static_cast<long>(p - rho - used);
            Int weight = binomial_signed(excess + a, a);
            if (weight == 0) continue;
            for (std::size_t tmask = 0; tmask < (std::size_t(1) << k); ++tmask) {
                const std::size_t tau = std::popcount(tmask);
                IntVector s = shift;
                for (std::size_t j = 0; j < r; ++j)
                    if (jmask >> j & 1) s[j] += 1;
                for (std::size_t i = 0; i < k; ++i)
                    if (tmask >> i & 1) s = add(s, degrees[i]);
                Int h = h_of_s(ctx, negate(s));
                const long sign_exp = static_cast<long>(p + tau) - static_cast<long>(rho);
                total += Int(sign_pow(sign_exp)) * weight * h;
            }
        }
    };
    over_multi(0, 0);
    return total;
}

}  // namespace toric
