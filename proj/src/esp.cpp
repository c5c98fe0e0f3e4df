#include "symex/esp.hpp"

#include <algorithm>
#include <future>

namespace symex {

ArbInt esp_direct(const RootSet& roots, unsigned i) {
    const auto n = static_cast<unsigned>(roots.size());
    ArbInt sum = 0;
    for_each_k_subset(n, i, [&](const std::vector<unsigned>& J) {
        ArbInt product = 1;
        for (unsigned j : J) product *= roots.at(j);
        sum += product;
    });
    return sum;
}

std::vector<ArbInt> esp_all(const RootSet& roots) {
    std::vector<ArbInt> e(roots.size() + 1, ArbInt(0));
    e[0] = 1;
    std::size_t filled = 0;
    for (const auto& m : roots.elements()) {
        ++filled;
        for (std::size_t i = filled; i >= 1; --i) e[i] += m * e[i - 1];
    }
    return e;
}

namespace {

struct BracketPart {
    ArbInt total = 0;
    std::vector<std::pair<IndexSubset, ArbInt>> entries;
};

BracketPart accumulate_stream(const RootSet& roots, KSubsets stream, unsigned i, bool keep) {
    BracketPart part;
    for (; !stream.done(); stream.advance()) {
        ArbInt value = binomial_first(subset_sum(roots, stream.current()), i);
        part.total += value;
        if (keep) part.entries.emplace_back(IndexSubset(stream.current()), std::move(value));
    }
    return part;
}

// Splits the s-subsets by smallest index and merges the pieces back in
// lexicographic order, so the output is the same for any worker count.
BracketPart accumulate_bracket(const RootSet& roots, unsigned s, unsigned i, bool keep,
                               unsigned workers) {
    const auto n = static_cast<unsigned>(roots.size());
    if (workers <= 1 || s == 0 || s > n) {
        return accumulate_stream(roots, KSubsets(n, s), i, keep);
    }
    const unsigned last_first = n - s + 1;
    std::vector<BracketPart> pieces(last_first);
    for (unsigned base = 1; base <= last_first; base += workers) {
        std::vector<std::future<BracketPart>> batch;
        for (unsigned first = base; first < base + workers && first <= last_first; ++first) {
            batch.push_back(std::async(std::launch::async, [&roots, n, s, i, keep, first] {
                return accumulate_stream(roots, KSubsets::starting_with(n, s, first), i, keep);
            }));
        }
        for (std::size_t b = 0; b < batch.size(); ++b) pieces[base - 1 + b] = batch[b].get();
    }
    BracketPart merged;
    for (auto& piece : pieces) {
        merged.total += piece.total;
        std::move(piece.entries.begin(), piece.entries.end(), std::back_inserter(merged.entries));
    }
    return merged;
}

}  // namespace

ArbInt bracket_sum(const RootSet& roots, unsigned s, unsigned i, unsigned workers) {
    return accumulate_bracket(roots, s, i, false, workers).total;
}

ArbInt ExtractionBreakdown::recompute_total() const {
    ArbInt sum = head;
    for (const auto& term : terms) sum += term.multiplier * term.bracket_total;
    return sum;
}

ExtractionResult esp_extraction(const RootSet& roots, unsigned i,
                                const ExtractionOptions& options) {
    const auto n = static_cast<unsigned>(roots.size());
    ExtractionResult result;
    result.breakdown.i = i;
    if (i == 0) {
        result.value = 1;
        result.breakdown.head = 1;
        result.breakdown.total = 1;
        return result;
    }
    if (i > n) {
        throw DomainError("extraction needs 1 <= i <= n (i = " + std::to_string(i) +
                          ", n = " + std::to_string(n) + ")");
    }
    if (!options.weights.empty() && options.weights.size() + 1 < i) {
        throw std::invalid_argument("weight override must supply C_1..C_{i-1}");
    }

    auto& bd = result.breakdown;
    bd.materialized = n <= options.explain_limit;
    bd.head = binomial_first(roots.accumulate(), i);
    bd.total = bd.head;
    for (unsigned h = 1; h < i; ++h) {
        ExtractionTerm term;
        term.h = h;
        if (options.weights.empty()) {
            term.weight = binomial_second(ArbInt(n - i + 1), h - 1);
            if (h % 2 == 0) term.weight = -term.weight;
        } else {
            term.weight = options.weights[h - 1];
        }
        term.multiplier = -term.weight;

        auto part = accumulate_bracket(roots, i - h, i, bd.materialized, options.workers);
        term.bracket_total = std::move(part.total);
        term.bracket = std::move(part.entries);
        term.bracket_size = static_cast<std::size_t>(binomial_first(ArbInt(n), i - h));

        bd.total += term.multiplier * term.bracket_total;
        bd.terms.push_back(std::move(term));
    }
    result.value = bd.total;
    return result;
}

std::string_view method_name(Method method) {
    switch (method) {
        case Method::direct: return "direct";
        case Method::dp: return "dp";
        case Method::extraction: return "extraction";
    }
    return "?";
}

Method parse_method(std::string_view name) {
    if (name == "direct") return Method::direct;
    if (name == "dp") return Method::dp;
    if (name == "extraction") return Method::extraction;
    throw UsageError("unknown method '" + std::string(name) + "'");
}

namespace {

ArbInt run_method(Method method, const RootSet& roots, unsigned i) {
    switch (method) {
        case Method::direct: return esp_direct(roots, i);
        case Method::dp: {
            auto e = esp_all(roots);
            return i < e.size() ? e[i] : ArbInt(0);
        }
        case Method::extraction: return esp_extraction(roots, i, {.explain_limit = 0}).value;
    }
    return 0;
}

}  // namespace

CompareReport esp_compare(const RootSet& roots, unsigned i, std::span<const Method> methods,
                          unsigned repetitions) {
    static constexpr Method kAll[] = {Method::direct, Method::dp, Method::extraction};
    if (methods.empty()) methods = kAll;
    repetitions = std::max(repetitions, 3u);

    CompareReport report;
    for (Method method : methods) {
        MethodRun run{method, 0, {}};
        std::vector<std::chrono::nanoseconds> times;
        for (unsigned r = 0; r < repetitions; ++r) {
            auto start = std::chrono::steady_clock::now();
            run.value = run_method(method, roots, i);
            times.push_back(std::chrono::duration_cast<std::chrono::nanoseconds>(
                std::chrono::steady_clock::now() - start));
        }
        std::nth_element(times.begin(), times.begin() + times.size() / 2, times.end());
        run.median = times[times.size() / 2];
        report.runs.push_back(std::move(run));
    }
    report.agree = std::all_of(report.runs.begin(), report.runs.end(),
                               [&](const MethodRun& r) { return r.value == report.runs[0].value; });
    return report;
}

std::string_view family_name(Family family) {
    return family == Family::pascal ? "pascal" : "stirling1";
}

Family parse_family(std::string_view name) {
    if (name == "pascal") return Family::pascal;
    if (name == "stirling1") return Family::stirling1;
    throw UsageError("unknown family '" + std::string(name) + "'");
}

std::vector<std::vector<ArbInt>> specialize(Family family, unsigned rows) {
    if (rows < 1) throw UsageError("rows must be >= 1");
    std::vector<std::vector<ArbInt>> triangle;
    for (unsigned n = 1; n <= rows; ++n) {
        RootSet roots = family == Family::pascal ? RootSet::ones(n) : RootSet::iota(n);
        std::vector<ArbInt> row;
        for (unsigned i = 0; i <= n; ++i) {
            row.push_back(esp_extraction(roots, i, {.explain_limit = 0}).value);
        }
        triangle.push_back(std::move(row));
    }
    return triangle;
}

}  // namespace symex
