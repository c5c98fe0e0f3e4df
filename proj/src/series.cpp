#include "symex/series.hpp"

#include <sstream>
#include <stdexcept>

#include "symex/coeffs.hpp"

namespace symex {

TruncatedSeries::TruncatedSeries(unsigned order) : order_(order), coeffs_(order + 1, ArbInt(0)) {}

TruncatedSeries::TruncatedSeries(unsigned order, std::vector<ArbInt> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, ArbInt(0));
}

TruncatedSeries TruncatedSeries::one(unsigned order) { return monomial(0, order); }

TruncatedSeries TruncatedSeries::monomial(unsigned k, unsigned order) {
    TruncatedSeries s(order);
    if (k <= order) s.coeffs_[k] = 1;
    return s;
}

std::string TruncatedSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (unsigned k = 0; k <= order_; ++k) {
        const ArbInt& c = coeffs_[k];
        if (c == 0) continue;
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << '-';
        first = false;
        ArbInt mag = c < 0 ? ArbInt(-c) : c;
        if (k == 0 || mag != 1) out << mag;
        if (k >= 1) out << 'x';
        if (k >= 2) out << '^' << k;
    }
    if (first) out << '0';
    out << " + O(x^" << order_ + 1 << ')';
    return out.str();
}

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("truncation order mismatch: " + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()));
    }
}

}  // namespace

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::vector<ArbInt> out(a.coeffs());
    for (unsigned k = 0; k <= a.order(); ++k) out[k] += b[k];
    return TruncatedSeries(a.order(), std::move(out));
}

TruncatedSeries series_scale(const TruncatedSeries& a, const ArbInt& factor) {
    std::vector<ArbInt> out(a.coeffs());
    for (auto& c : out) c *= factor;
    return TruncatedSeries(a.order(), std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    const unsigned order = a.order();
    std::vector<ArbInt> out(order + 1, ArbInt(0));
    for (unsigned j = 0; j <= order; ++j) {
        if (a[j] == 0) continue;
        for (unsigned k = 0; j + k <= order; ++k) out[j + k] += a[j] * b[k];
    }
    return TruncatedSeries(order, std::move(out));
}

TruncatedSeries series_binomial_power(Sign sign, long long exponent, unsigned order) {
    // C(e, k) is the generalized binomial, so one formula covers e < 0.
    std::vector<ArbInt> out;
    out.reserve(order + 1);
    for (unsigned k = 0; k <= order; ++k) {
        ArbInt c = binomial_first(ArbInt(exponent), k);
        if (sign == Sign::minus && k % 2 == 1) c = -c;
        out.push_back(std::move(c));
    }
    return TruncatedSeries(order, std::move(out));
}

TruncatedSeries series_x_over_one_minus_x_pow(unsigned k, unsigned order) {
    return series_mul(TruncatedSeries::monomial(k, order),
                      series_binomial_power(Sign::minus, -static_cast<long long>(k), order));
}

namespace {

SeriesReport compare(unsigned n, unsigned i, const TruncatedSeries& lhs,
                     const TruncatedSeries& rhs) {
    SeriesReport report;
    report.n = n;
    report.i = i;
    report.order = lhs.order();
    for (unsigned k = 0; k <= lhs.order(); ++k) {
        report.coefficients.push_back({k, lhs[k], rhs[k]});
        if (lhs[k] != rhs[k]) report.mismatches.push_back(k);
    }
    report.ok = report.mismatches.empty();
    return report;
}

}  // namespace

SeriesReport verify_gf_untransformed(unsigned n, unsigned i, unsigned order) {
    const long long gap = static_cast<long long>(n) - i;
    TruncatedSeries lhs =
        series_mul(TruncatedSeries::monomial(1, order), series_binomial_power(Sign::minus, gap, order));

    TruncatedSeries rhs(order);
    for (unsigned k = 1; k <= order; ++k) {
        rhs = series_add(rhs, series_scale(series_x_over_one_minus_x_pow(k, order), coeff_closed(n, i, k)));
    }
    auto report = compare(n, i, lhs, rhs);
    report.note = "sum over k runs to the truncation order, not to a finite h";
    return report;
}

SeriesReport verify_gf_transformed(unsigned n, unsigned i, unsigned order) {
    const long long r = static_cast<long long>(n) - i + 1;
    TruncatedSeries lhs =
        series_mul(TruncatedSeries::monomial(1, order), series_binomial_power(Sign::plus, -r, order));

    std::vector<ArbInt> c(order + 1, ArbInt(0));
    for (unsigned k = 1; k <= order; ++k) c[k] = coeff_closed(n, i, k);
    auto report = compare(n, i, lhs, TruncatedSeries(order, std::move(c)));

    // The hand expansion Σ (-1)^k C(n-i+k+1, k) x^{k+1} is off by one in the
    // upper index; the standard coefficient is C(n-i+k, k).
    unsigned displayed_wrong = 0;
    for (unsigned k = 0; k + 1 <= order; ++k) {
        ArbInt displayed = binomial_first(ArbInt(r + k), k);
        if (k % 2 == 1) displayed = -displayed;
        if (displayed != lhs[k + 1]) ++displayed_wrong;
    }
    report.note = "displayed expansion with C(n-i+k+1,k) differs from the standard C(n-i+k,k) at " +
                  std::to_string(displayed_wrong) + " of " + std::to_string(order) +
                  " coefficients";
    return report;
}

}  // namespace symex
