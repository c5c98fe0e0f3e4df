#pragma once

#include <chrono>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symex/bigcomb.hpp"
#include "symex/root_set.hpp"
#include "symex/subsets.hpp"

namespace symex {

/// Σ over i-subsets of the product of the selected roots. 1 for i == 0,
/// 0 for i > n.
ArbInt esp_direct(const RootSet& roots, unsigned i);

/// e_0..e_n in one pass over the coefficients of Π(1 + m_j x).
std::vector<ArbInt> esp_all(const RootSet& roots);

struct ExtractionTerm {
    unsigned h = 0;
    /// Sieve coefficient C_h = (-1)^{h-1}·⟨⟨n-i+1, h-1⟩⟩.
    ArbInt weight;
    /// Signed factor the bracket enters the total with, i.e. -C_h.
    ArbInt multiplier;
    /// (J, C(Σ_{j∈J} m_j, i)) for every (i-h)-subset J; empty unless the
    /// breakdown was materialized.
    std::vector<std::pair<IndexSubset, ArbInt>> bracket;
    std::size_t bracket_size = 0;
    ArbInt bracket_total;
};

/// Term-by-term record of one extraction.
struct ExtractionBreakdown {
    unsigned i = 0;
    /// C(Σm_k, i)
    ArbInt head;
    std::vector<ExtractionTerm> terms;
    ArbInt total;
    bool materialized = false;

    /// head + Σ multiplier·bracket_total, from the stored parts only.
    ArbInt recompute_total() const;
};

struct ExtractionOptions {
    /// Brackets keep per-subset entries only when n <= explain_limit.
    std::size_t explain_limit = 12;
    /// Threads used for each bracket sum; the result does not depend on it.
    unsigned workers = 1;
    /// Optional C_1..C_{i-1} to use instead of the closed form.
    std::span<const ArbInt> weights;
};

struct ExtractionResult {
    ArbInt value;
    ExtractionBreakdown breakdown;
};

/// e_i via the alternating binomial sieve
///
///     e_i = C(Σm_k, i) - Σ_{h=1}^{i-1} C_h · Σ_{|J| = i-h} C(Σ_{j∈J} m_j, i)
///
/// with C_h = (-1)^{h-1}⟨⟨n-i+1, h-1⟩⟩. Valid for 1 <= i <= n; i == 0 returns
/// (1, empty breakdown); i > n throws DomainError.
ExtractionResult esp_extraction(const RootSet& roots, unsigned i,
                                const ExtractionOptions& options = {});

/// Σ_{|J| = s} C(Σ_{j∈J} m_j, i), split across `workers` by first index.
ArbInt bracket_sum(const RootSet& roots, unsigned s, unsigned i, unsigned workers = 1);

enum class Method { direct, dp, extraction };

std::string_view method_name(Method method);
Method parse_method(std::string_view name);

struct MethodRun {
    Method method;
    ArbInt value;
    std::chrono::nanoseconds median{0};
};

struct CompareReport {
    std::vector<MethodRun> runs;
    bool agree = false;
};

/// Runs `methods` (all three by default), `repetitions` times each (at least 3),
/// and reports each value with its median wall time.
CompareReport esp_compare(const RootSet& roots, unsigned i, std::span<const Method> methods = {},
                          unsigned repetitions = 3);

enum class Family { pascal, stirling1 };

std::string_view family_name(Family family);
/// Throws UsageError for unknown names.
Family parse_family(std::string_view name);

/// Rows 1..rows. Row n is e_0..e_n over the all-ones set (pascal) or over
/// {1..n} (stirling1, giving |s(n+1, n+1-i)|).
std::vector<std::vector<ArbInt>> specialize(Family family, unsigned rows);

}  // namespace symex
