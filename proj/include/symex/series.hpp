#pragma once

#include <string>
#include <vector>

#include "symex/bigcomb.hpp"

namespace symex {

/// Integer power series a_0 + a_1 x + … + a_T x^T; terms past T are dropped.
class TruncatedSeries {
public:
    /// Zero series of order T.
    explicit TruncatedSeries(unsigned order);
    /// Pads with zeros or truncates `coeffs` to T+1 entries.
    TruncatedSeries(unsigned order, std::vector<ArbInt> coeffs);

    static TruncatedSeries one(unsigned order);
    /// x^k (zero when k > T).
    static TruncatedSeries monomial(unsigned k, unsigned order);

    unsigned order() const noexcept { return order_; }
    const std::vector<ArbInt>& coeffs() const noexcept { return coeffs_; }
    const ArbInt& operator[](unsigned k) const { return coeffs_.at(k); }

    std::string to_string() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    unsigned order_;
    std::vector<ArbInt> coeffs_;
};

/// Throws std::invalid_argument on order mismatch.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const ArbInt& factor);
/// Cauchy product truncated at T. Throws std::invalid_argument on order mismatch.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

enum class Sign { plus, minus };

/// (1 ± x)^e to order T; for e < 0 the negative binomial series
/// Σ_k C(e, k)(±x)^k, which has integer coefficients.
TruncatedSeries series_binomial_power(Sign sign, long long exponent, unsigned order);

/// (x/(1-x))^k = x^k·(1-x)^{-k} to order T.
TruncatedSeries series_x_over_one_minus_x_pow(unsigned k, unsigned order);

struct SeriesCoefficientCheck {
    unsigned k = 0;
    ArbInt lhs;
    ArbInt rhs;
};

struct SeriesReport {
    unsigned n = 0;
    unsigned i = 0;
    unsigned order = 0;
    std::vector<SeriesCoefficientCheck> coefficients;
    /// Indices k where lhs != rhs.
    std::vector<unsigned> mismatches;
    bool ok = false;
    /// Remarks about the displayed (hand-derived) forms this check relates to.
    std::string note;
};

/// x(1-x)^{n-i} against Σ_{k=1}^{T} C_k·(x/(1-x))^k with closed-form C_k.
SeriesReport verify_gf_untransformed(unsigned n, unsigned i, unsigned order);

/// Coefficients of x·(1+x)^{-(n-i+1)} against C_1..C_T.
SeriesReport verify_gf_transformed(unsigned n, unsigned i, unsigned order);

}  // namespace symex
