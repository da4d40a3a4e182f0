// Products of simple rational factors in variables x_1..x_r and y, expanded
// exactly as Laurent polynomials in x modulo y^{p+1}.
#pragma once

#include "toric_hodge/core.hpp"

#include <map>

namespace toric {

using Exponent = std::vector<std::int64_t>;

struct SeriesFactor {
    enum class Kind {
        Binomial,          // 1 + sign * y^y_power * x^d
        GeometricInverse,  // 1 / (1 - sign * y * x^d)
        ScalarBinomial,    // (1 + sign * y)^exponent
        LinearFormPower,   // 1 / (1 - y * L(x))
    };
    Kind kind = Kind::Binomial;
    Exponent d;
    int sign = 1;
    int y_power = 1;
    std::int64_t exponent = 0;
    std::vector<std::pair<Exponent, Int>> linear_form;
};

/// (1 + y x^d)
inline SeriesFactor plus_binomial(Exponent d) {
    return {SeriesFactor::Kind::Binomial, std::move(d), 1, 1, 0, {}};
}
/// (1 - x^d)
inline SeriesFactor minus_binomial(Exponent d) {
    return {SeriesFactor::Kind::Binomial, std::move(d), -1, 0, 0, {}};
}
/// (1 - y x^d)
inline SeriesFactor minus_y_binomial(Exponent d) {
    return {SeriesFactor::Kind::Binomial, std::move(d), -1, 1, 0, {}};
}
/// 1/(1 - y x^d) for sign = +1, 1/(1 + y x^d) for sign = -1
inline SeriesFactor geometric_inverse(Exponent d, int sign) {
    return {SeriesFactor::Kind::GeometricInverse, std::move(d), sign, 1, 0, {}};
}
/// (1 + y)^e for sign = +1, (1 - y)^e for sign = -1
inline SeriesFactor scalar_binomial(std::int64_t e, int sign) {
    return {SeriesFactor::Kind::ScalarBinomial, {}, sign, 1, e, {}};
}
inline SeriesFactor linear_form_power(std::vector<std::pair<Exponent, Int>> form) {
    return {SeriesFactor::Kind::LinearFormPower, {}, 1, 1, 0, std::move(form)};
}

struct SeriesFactorization {
    std::size_t nvars = 0;
    std::vector<SeriesFactor> factors;
};

/// Sum of c * x^e * y^j; zero coefficients are never stored.
struct LaurentPolynomialXY {
    using Slice = std::map<Exponent, Int>;
    std::size_t nvars = 0;
    std::vector<Slice> by_y;  // index j holds the y^j slice

    Int coefficient(const Exponent& e, std::size_t j) const {
        if (j >= by_y.size()) return 0;
        auto it = by_y[j].find(e);
        return it == by_y[j].end() ? Int(0) : it->second;
    }
    std::size_t num_terms() const {
        std::size_t n = 0;
        for (const auto& s : by_y) n += s.size();
        return n;
    }
};

namespace detail {

inline Exponent shifted(const Exponent& e, const Exponent& d, std::int64_t times) {
    Exponent out(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) out[i] = e[i] + times * d[i];
    return out;
}

inline void accumulate(LaurentPolynomialXY::Slice& into, const Exponent& e, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = into.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) into.erase(it);
    }
}

inline void add_scaled_shift(LaurentPolynomialXY::Slice& into, const LaurentPolynomialXY::Slice& from,
                             const Exponent& d, const Int& scale) {
    for (const auto& [e, c] : from) accumulate(into, shifted(e, d, 1), c * scale);
}

inline void check_factor(const SeriesFactor& f, std::size_t nvars) {
    auto bad = [](const char* msg) { throw PreconditionError(std::string("malformed factor: ") + msg); };
    if (f.sign != 1 && f.sign != -1) bad("sign must be +1 or -1");
    switch (f.kind) {
        case SeriesFactor::Kind::Binomial:
            if (f.y_power != 0 && f.y_power != 1) bad("y power must be 0 or 1");
            [[fallthrough]];
        case SeriesFactor::Kind::GeometricInverse:
            if (f.d.size() != nvars) bad("exponent has wrong length");
            break;
        case SeriesFactor::Kind::ScalarBinomial:
            break;
        case SeriesFactor::Kind::LinearFormPower:
            for (const auto& [e, c] : f.linear_form)
                if (e.size() != nvars) bad("linear form exponent has wrong length");
            break;
    }
}

}  // namespace detail

/// Product of all factors modulo y^{p+1}.
inline LaurentPolynomialXY y_truncated_expand(const SeriesFactorization& fac, std::size_t p) {
    using Slice = LaurentPolynomialXY::Slice;
    const std::size_t n = fac.nvars;
    LaurentPolynomialXY poly;
    poly.nvars = n;
    poly.by_y.assign(p + 1, {});
    poly.by_y[0][Exponent(n, 0)] = 1;

    for (const auto& f : fac.factors) {
        detail::check_factor(f, n);
        std::vector<Slice> next(p + 1);
        switch (f.kind) {
            case SeriesFactor::Kind::Binomial:
                for (std::size_t j = 0; j <= p; ++j) {
                    for (const auto& [e, c] : poly.by_y[j]) detail::accumulate(next[j], e, c);
                    std::size_t src = j;
                    if (f.y_power == 1) {
                        if (j == 0) continue;
                        src = j - 1;
                    }
                    detail::add_scaled_shift(next[j], poly.by_y[src], f.d, Int(f.sign));
                }
                break;
            case SeriesFactor::Kind::GeometricInverse:
                // next = old + sign * y x^d * next
                for (std::size_t j = 0; j <= p; ++j) {
                    for (const auto& [e, c] : poly.by_y[j]) detail::accumulate(next[j], e, c);
                    if (j > 0) detail::add_scaled_shift(next[j], next[j - 1], f.d, Int(f.sign));
                }
                break;
            case SeriesFactor::Kind::ScalarBinomial:
                for (std::size_t t = 0; t <= p; ++t) {
                    Int b = binomial_signed(f.exponent, static_cast<long>(t));
                    if (f.sign < 0 && t % 2) b = -b;
                    if (b == 0) continue;
                    for (std::size_t j = 0; j + t <= p; ++j)
                        for (const auto& [e, c] : poly.by_y[j]) detail::accumulate(next[j + t], e, c * b);
                }
                break;
            case SeriesFactor::Kind::LinearFormPower:
                // next = old + y L next
                for (std::size_t j = 0; j <= p; ++j) {
                    for (const auto& [e, c] : poly.by_y[j]) detail::accumulate(next[j], e, c);
                    if (j == 0) continue;
                    Slice prev = next[j - 1];
                    for (const auto& [le, lc] : f.linear_form)
                        detail::add_scaled_shift(next[j], prev, le, lc);
                }
                break;
        }
        poly.by_y = std::move(next);
    }
    return poly;
}

}  // namespace toric
