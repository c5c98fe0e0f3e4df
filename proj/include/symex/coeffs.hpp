#pragma once

#include <string_view>
#include <vector>

#include "symex/bigcomb.hpp"

namespace symex {

enum class CoefficientRoute { recurrence, closed_form };

std::string_view route_name(CoefficientRoute route);

/// Sieve weights C_1..C_{h_max} for a fixed (n, i).
struct CoefficientSequence {
    unsigned n = 0;
    unsigned i = 0;
    std::vector<ArbInt> values;
    CoefficientRoute route = CoefficientRoute::closed_form;

    /// 1-based, C_h.
    const ArbInt& at(unsigned h) const { return values.at(h - 1); }
};

/// C_h = (-1)^{h-1}·⟨⟨n-i+1, h-1⟩⟩.
ArbInt coeff_closed(unsigned n, unsigned i, unsigned h);

CoefficientSequence coeff_closed_sequence(unsigned n, unsigned i, unsigned h_max);

/// C_h = 1 - Σ_{k<h} C_k·C(n-i+h, h-k); never consults the closed form.
CoefficientSequence coeff_recurrence(unsigned n, unsigned i, unsigned h_max);

struct ConvolutionRow {
    unsigned h = 0;
    /// Σ_{k=1}^{h} C_k·C(n-i+h, h-k); must be 1.
    ArbInt sum;
    bool ok = false;
};

struct ConvolutionReport {
    unsigned n = 0;
    unsigned i = 0;
    CoefficientRoute route = CoefficientRoute::closed_form;
    std::vector<ConvolutionRow> rows;
    bool ok = false;
};

/// Checks 1 = Σ_{k=1}^{h} C_k·C(n-i+h, h-k) for h = 1..h_max. Failures are
/// recorded in the report, never thrown. `seq` must hold >= h_max values.
ConvolutionReport verify_convolution(unsigned n, unsigned i, unsigned h_max,
                                     const CoefficientSequence& seq);

struct VandermondeTerm {
    unsigned k = 0;
    /// C(-n+i-1, k)
    ArbInt lower;
    /// C(n-i+h+1, h-k)
    ArbInt upper;
    /// coeff_closed(n, i, k+1)
    ArbInt closed;
    bool matches_closed = false;
};

struct VandermondeReport {
    unsigned n = 0;
    unsigned i = 0;
    unsigned h = 0;
    std::vector<VandermondeTerm> terms;
    ArbInt sum;
    bool ok = false;
};

/// Evaluates Σ_{k=0}^{h} C(-n+i-1, k)·C(n-i+h+1, h-k), which must be 1, and
/// checks each C(-n+i-1, k) against coeff_closed(n, i, k+1).
VandermondeReport vandermonde_degeneration_check(unsigned n, unsigned i, unsigned h);

/// (-1)^{k-1}·C(n-i+k, k-1): the intermediate closed form shown in the
/// generating-function derivation. It disagrees with the recurrence whenever
/// n-i+1 > 0 and k >= 2; kept so reports can say where.
ArbInt coeff_displayed_intermediate(unsigned n, unsigned i, unsigned k);

}  // namespace symex
