#include "symex/coeffs.hpp"

namespace symex {

namespace {

ArbInt alternate(ArbInt value, unsigned k) {
    // (-1)^k
    if (k % 2 == 1) value = -value;
    return value;
}

}  // namespace

std::string_view route_name(CoefficientRoute route) {
    return route == CoefficientRoute::recurrence ? "recurrence" : "closed_form";
}

ArbInt coeff_closed(unsigned n, unsigned i, unsigned h) {
    return alternate(binomial_second(ArbInt(n) - i + 1, h - 1), h - 1);
}

CoefficientSequence coeff_closed_sequence(unsigned n, unsigned i, unsigned h_max) {
    CoefficientSequence seq{n, i, {}, CoefficientRoute::closed_form};
    for (unsigned h = 1; h <= h_max; ++h) seq.values.push_back(coeff_closed(n, i, h));
    return seq;
}

CoefficientSequence coeff_recurrence(unsigned n, unsigned i, unsigned h_max) {
    CoefficientSequence seq{n, i, {}, CoefficientRoute::recurrence};
    const ArbInt base = ArbInt(n) - i;
    for (unsigned h = 1; h <= h_max; ++h) {
        ArbInt c = 1;
        for (unsigned k = 1; k < h; ++k) c -= seq.values[k - 1] * binomial_first(base + h, h - k);
        seq.values.push_back(std::move(c));
    }
    return seq;
}

ConvolutionReport verify_convolution(unsigned n, unsigned i, unsigned h_max,
                                     const CoefficientSequence& seq) {
    ConvolutionReport report{n, i, seq.route, {}, true};
    if (seq.values.size() < h_max) {
        report.ok = false;
        return report;
    }
    const ArbInt base = ArbInt(n) - i;
    for (unsigned h = 1; h <= h_max; ++h) {
        ConvolutionRow row{h, 0, false};
        for (unsigned k = 1; k <= h; ++k) row.sum += seq.at(k) * binomial_first(base + h, h - k);
        row.ok = row.sum == 1;
        report.ok = report.ok && row.ok;
        report.rows.push_back(std::move(row));
    }
    return report;
}

VandermondeReport vandermonde_degeneration_check(unsigned n, unsigned i, unsigned h) {
    VandermondeReport report{n, i, h, {}, 0, true};
    const ArbInt lower_index = -ArbInt(n) + i - 1;
    const ArbInt upper_index = ArbInt(n) - i + h + 1;
    for (unsigned k = 0; k <= h; ++k) {
        VandermondeTerm term;
        term.k = k;
        term.lower = binomial_first(lower_index, k);
        term.upper = binomial_first(upper_index, h - k);
        term.closed = coeff_closed(n, i, k + 1);
        term.matches_closed = term.lower == term.closed;
        report.sum += term.lower * term.upper;
        report.ok = report.ok && term.matches_closed;
        report.terms.push_back(std::move(term));
    }
    report.ok = report.ok && report.sum == 1;
    return report;
}

ArbInt coeff_displayed_intermediate(unsigned n, unsigned i, unsigned k) {
    return alternate(binomial_first(ArbInt(n) - i + k, k - 1), k - 1);
}

}  // namespace symex
