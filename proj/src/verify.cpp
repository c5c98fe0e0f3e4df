#include "symex/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "symex/coeffs.hpp"
#include "symex/esp.hpp"
#include "symex/polyexpand.hpp"
#include "symex/series.hpp"
#include "symex/subsets.hpp"

namespace symex {

RootSet SeededRng::root_set(unsigned n, std::uint64_t max_root) {
    std::vector<ArbInt> values;
    values.reserve(n);
    for (unsigned j = 0; j < n; ++j) values.emplace_back(uniform(1, max_root));
    return RootSet(std::move(values));
}

namespace {

ArbInt C(const ArbInt& x, unsigned k) { return binomial_first(x, k); }
ArbInt MC(long long x, unsigned k) { return binomial_second(ArbInt(x), k); }

}  // namespace

ArbInt display_e2(const RootSet& r) {
    const long long n = static_cast<long long>(r.size());
    ArbInt singles = 0;
    for (unsigned a = 1; a <= n; ++a) singles += C(r.at(a), 2);
    return C(r.accumulate(), 2) - MC(n - 1, 0) * singles;
}

ArbInt display_e3(const RootSet& r) {
    const long long n = static_cast<long long>(r.size());
    ArbInt pairs = 0;
    ArbInt singles = 0;
    for (unsigned a = 1; a <= n; ++a) {
        singles += C(r.at(a), 3);
        for (unsigned b = a + 1; b <= n; ++b) pairs += C(r.at(a) + r.at(b), 3);
    }
    return C(r.accumulate(), 3) - MC(n - 2, 0) * pairs + MC(n - 2, 1) * singles;
}

ArbInt display_e4(const RootSet& r) {
    const long long n = static_cast<long long>(r.size());
    ArbInt triples = 0;
    ArbInt pairs = 0;
    ArbInt singles = 0;
    for (unsigned a = 1; a <= n; ++a) {
        singles += C(r.at(a), 4);
        for (unsigned b = a + 1; b <= n; ++b) {
            pairs += C(r.at(a) + r.at(b), 4);
            for (unsigned c = b + 1; c <= n; ++c) triples += C(r.at(a) + r.at(b) + r.at(c), 4);
        }
    }
    return C(r.accumulate(), 4) - MC(n - 3, 0) * triples + MC(n - 3, 1) * pairs -
           MC(n - 3, 2) * singles;
}

ArbInt display_e5(const RootSet& r) {
    const long long n = static_cast<long long>(r.size());
    ArbInt quads = 0;
    ArbInt triples = 0;
    ArbInt pairs = 0;
    ArbInt singles = 0;
    for (unsigned a = 1; a <= n; ++a) {
        singles += C(r.at(a), 5);
        for (unsigned b = a + 1; b <= n; ++b) {
            pairs += C(r.at(a) + r.at(b), 5);
            for (unsigned c = b + 1; c <= n; ++c) {
                triples += C(r.at(a) + r.at(b) + r.at(c), 5);
                for (unsigned d = c + 1; d <= n; ++d) {
                    quads += C(r.at(a) + r.at(b) + r.at(c) + r.at(d), 5);
                }
            }
        }
    }
    return C(r.accumulate(), 5) - MC(n - 4, 0) * quads + MC(n - 4, 1) * triples -
           MC(n - 4, 2) * pairs + MC(n - 4, 3) * singles;
}

std::vector<std::vector<ArbInt>> unsigned_stirling_first_triangle(unsigned max_n) {
    std::vector<std::vector<ArbInt>> c{{1}};
    for (unsigned n = 0; n < max_n; ++n) {
        std::vector<ArbInt> next(n + 2, ArbInt(0));
        for (unsigned k = 0; k <= n + 1; ++k) {
            if (k <= n) next[k] += c[n][k] * n;
            if (k >= 1) next[k] += c[n][k - 1];
        }
        c.push_back(std::move(next));
    }
    return c;
}

bool SuiteResult::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

namespace {

// Accumulates a pass count and the first failure of a check.
class Tally {
public:
    void record(bool ok, const std::function<std::string()>& describe) {
        ++total_;
        if (ok) return;
        ++failed_;
        if (first_failure_.empty()) first_failure_ = describe();
    }
    CheckResult result(std::string name, const std::string& scope) const {
        std::ostringstream detail;
        detail << total_ - failed_ << '/' << total_ << ' ' << scope;
        if (failed_) detail << "; first failure: " << first_failure_;
        return {std::move(name), failed_ == 0 && total_ > 0, detail.str()};
    }

private:
    std::size_t total_ = 0;
    std::size_t failed_ = 0;
    std::string first_failure_;
};

// Calls fn on every root set of size n with entries in [1, max_root].
void for_each_root_set(unsigned n, unsigned max_root, const std::function<void(const RootSet&)>& fn) {
    std::vector<unsigned> digits(n, 1);
    while (true) {
        fn(RootSet(std::vector<ArbInt>(digits.begin(), digits.end())));
        std::size_t j = 0;
        while (j < n && digits[j] == max_root) digits[j++] = 1;
        if (j == n) return;
        ++digits[j];
    }
}

bool three_way_agree(const RootSet& roots, unsigned i, std::string& why) {
    ArbInt direct = esp_direct(roots, i);
    ArbInt dp = esp_all(roots)[i];
    ArbInt extracted = esp_extraction(roots, i, {.explain_limit = 0}).value;
    if (direct == dp && dp == extracted) return true;
    why = roots.to_string() + " i=" + std::to_string(i) + ": direct " + direct.str() + ", dp " +
          dp.str() + ", extraction " + extracted.str();
    return false;
}

SuiteResult equivalence_suite(const SuiteConfig& config) {
    SuiteResult suite{"equivalence", {}};
    std::string why;

    Tally exhaustive;
    for (unsigned n = 1; n <= 6; ++n) {
        for_each_root_set(n, 4, [&](const RootSet& roots) {
            for (unsigned i = 1; i <= n; ++i) {
                exhaustive.record(three_way_agree(roots, i, why), [&] { return why; });
            }
        });
    }
    suite.checks.push_back(exhaustive.result("exhaustive", "instances with n<=6, m_j in 1..4"));

    SeededRng rng(config.seed);
    Tally random;
    for (unsigned trial = 0; trial < 300; ++trial) {
        auto n = static_cast<unsigned>(rng.uniform(1, 10));
        RootSet roots = rng.root_set(n, 9);
        for (unsigned i = 1; i <= n; ++i) {
            random.record(three_way_agree(roots, i, why), [&] { return why; });
        }
    }
    suite.checks.push_back(random.result("random", "instances over 300 seeded sets, n<=10, m_j<=9"));

    Tally display;
    for (unsigned trial = 0; trial < 20; ++trial) {
        auto n = static_cast<unsigned>(rng.uniform(4, 8));
        RootSet roots = rng.root_set(n, 9);
        const ArbInt literal[] = {display_e2(roots), display_e3(roots), display_e4(roots),
                                  n >= 5 ? display_e5(roots) : ArbInt(0)};
        for (unsigned i = 2; i <= std::min(5u, n); ++i) {
            ArbInt expected = esp_direct(roots, i);
            display.record(literal[i - 2] == expected, [&] {
                return roots.to_string() + " e" + std::to_string(i) + ": " + literal[i - 2].str() +
                       " vs " + expected.str();
            });
        }
    }
    suite.checks.push_back(display.result("display_block", "e2..e5 literal expansions, 20 seeded sets"));

    Tally weights;
    SeededRng weight_rng(config.seed ^ 0x9e3779b97f4a7c15ULL);
    for (unsigned trial = 0; trial < 50; ++trial) {
        auto n = static_cast<unsigned>(weight_rng.uniform(2, 8));
        RootSet roots = weight_rng.root_set(n, 9);
        for (unsigned i = 2; i <= n; ++i) {
            auto seq = coeff_recurrence(n, i, i - 1);
            ArbInt swapped = esp_extraction(roots, i, {.explain_limit = 0, .weights = seq.values}).value;
            ArbInt expected = esp_direct(roots, i);
            weights.record(swapped == expected, [&] {
                return roots.to_string() + " i=" + std::to_string(i) + ": " + swapped.str();
            });
        }
    }
    suite.checks.push_back(weights.result("recurrence_weights", "extractions with recurrence-derived C_h"));

    const unsigned rows = 8;
    auto stirling = specialize(Family::stirling1, rows);
    auto reference = unsigned_stirling_first_triangle(rows + 1);
    Tally stirling_rows;
    for (unsigned n = 1; n <= rows; ++n) {
        bool ok = true;
        for (unsigned i = 0; i <= n; ++i) ok = ok && stirling[n - 1][i] == reference[n + 1][n + 1 - i];
        stirling_rows.record(ok, [&] { return "row " + std::to_string(n); });
    }
    suite.checks.push_back(stirling_rows.result("stirling1_rows", "rows equal |s(n+1, n+1-i)|"));

    auto pascal = specialize(Family::pascal, rows);
    Tally pascal_rows;
    for (unsigned n = 1; n <= rows; ++n) {
        bool ok = true;
        for (unsigned i = 0; i <= n; ++i) ok = ok && pascal[n - 1][i] == binomial_first(ArbInt(n), i);
        pascal_rows.record(ok, [&] { return "row " + std::to_string(n); });
    }
    suite.checks.push_back(pascal_rows.result("pascal_rows", "rows equal C(n, i)"));
    return suite;
}

SuiteResult convolution_suite(const SuiteConfig&) {
    SuiteResult suite{"convolution", {}};
    constexpr unsigned kMaxN = 20;
    constexpr unsigned kMaxH = 12;
    Tally recurrence;
    Tally closed;
    Tally routes;
    for (unsigned n = 1; n <= kMaxN; ++n) {
        for (unsigned i = 1; i <= n; ++i) {
            auto rec = coeff_recurrence(n, i, kMaxH);
            auto cf = coeff_closed_sequence(n, i, kMaxH);
            auto where = [n, i] { return "n=" + std::to_string(n) + " i=" + std::to_string(i); };
            recurrence.record(verify_convolution(n, i, kMaxH, rec).ok, where);
            closed.record(verify_convolution(n, i, kMaxH, cf).ok, where);
            routes.record(rec.values == cf.values, where);
        }
    }
    const std::string scope = "(n, i) cells, n<=20, h<=12";
    suite.checks.push_back(recurrence.result("recurrence_sequence", scope));
    suite.checks.push_back(closed.result("closed_sequence", scope));
    suite.checks.push_back(routes.result("route_equivalence", scope));
    return suite;
}

SuiteResult vandermonde_suite(const SuiteConfig&) {
    SuiteResult suite{"vandermonde", {}};
    Tally sums;
    Tally identification;
    std::size_t intermediate_differs = 0;
    std::size_t intermediate_total = 0;
    for (unsigned n = 1; n <= 20; ++n) {
        for (unsigned i = 1; i <= n; ++i) {
            for (unsigned h = 0; h <= 12; ++h) {
                auto report = vandermonde_degeneration_check(n, i, h);
                sums.record(report.ok, [&] {
                    return "n=" + std::to_string(n) + " i=" + std::to_string(i) + " h=" +
                           std::to_string(h) + " sum " + report.sum.str();
                });
            }
            for (unsigned k = 1; k <= 13; ++k) {
                ArbInt negated = binomial_first(-ArbInt(n) + i - 1, k - 1);
                ArbInt multiset = binomial_second(ArbInt(n - i + 1), k - 1);
                if (k % 2 == 0) multiset = -multiset;
                identification.record(negated == multiset, [&] {
                    return "n=" + std::to_string(n) + " i=" + std::to_string(i) + " k=" + std::to_string(k);
                });
                ++intermediate_total;
                if (coeff_displayed_intermediate(n, i, k) != coeff_closed(n, i, k)) ++intermediate_differs;
            }
        }
    }
    suite.checks.push_back(sums.result("degeneration_sum", "(n, i, h) cells, n<=20, h<=12"));
    auto ident = identification.result("pairwise_identification", "C(-n+i-1,k-1) = (-1)^(k-1)<<n-i+1,k-1>>");
    ident.detail += "; intermediate form (-1)^(k-1)C(n-i+k,k-1) differs at " +
                    std::to_string(intermediate_differs) + "/" + std::to_string(intermediate_total);
    suite.checks.push_back(std::move(ident));
    return suite;
}

SuiteResult gf_suite(const SuiteConfig& config) {
    SuiteResult suite{"gf", {}};
    const unsigned order = config.truncation;
    Tally untransformed;
    Tally transformed;
    Tally coherent;
    std::string note;
    for (unsigned n = 1; n <= 12; ++n) {
        for (unsigned i = 1; i <= n; ++i) {
            auto u = verify_gf_untransformed(n, i, order);
            auto t = verify_gf_transformed(n, i, order);
            auto where = [n, i] { return "n=" + std::to_string(n) + " i=" + std::to_string(i); };
            untransformed.record(u.ok, where);
            transformed.record(t.ok, where);
            coherent.record(u.ok == t.ok, where);
            if (n == 12 && i == 1) note = t.note;
        }
    }
    const std::string scope = "(n, i) cells, n<=12, T=" + std::to_string(order);
    suite.checks.push_back(untransformed.result("untransformed", scope));
    auto tr = transformed.result("transformed", scope);
    tr.detail += "; n=12 i=1: " + note;
    suite.checks.push_back(std::move(tr));
    suite.checks.push_back(coherent.result("substitution_coherence", scope));
    return suite;
}

SuiteResult layers_suite(const SuiteConfig&) {
    SuiteResult suite{"layers", {}};
    const ArbInt four_fact = factorial(4);
    struct Example {
        std::vector<unsigned> lambda;
        long long magnitude;
    };
    const Example examples[] = {{{1, 1}, 22}, {{2, 1}, 18}, {{3, 1}, 4}, {{2, 2}, 6}};
    Tally example;
    for (const auto& e : examples) {
        Ratio k = monomial_coefficient(4, ExponentVector(e.lambda));
        example.record(k.abs() == Ratio(e.magnitude, four_fact), [&] { return k.to_string(); });
    }
    auto ex = example.result("order4_magnitudes", "|K| equal 22/4!, 18/4!, 4/4!, 6/4!");
    ex.detail += "; signed: (1,1) " + monomial_coefficient(4, ExponentVector({1, 1})).to_string() +
                 ", (2,1) " + monomial_coefficient(4, ExponentVector({2, 1})).to_string() +
                 ", (3,1) " + monomial_coefficient(4, ExponentVector({3, 1})).to_string() +
                 ", (2,2) " + monomial_coefficient(4, ExponentVector({2, 2})).to_string();
    suite.checks.push_back(std::move(ex));

    Tally unit;
    Tally denominators;
    for (unsigned i = 1; i <= 8; ++i) {
        Ratio k = monomial_coefficient(i, ExponentVector(std::vector<unsigned>(i, 1)));
        unit.record(k == Ratio(1), [&] { return "i=" + std::to_string(i) + ": " + k.to_string(); });
        for (unsigned s = 1; s <= i; ++s) {
            for (unsigned p = s; p <= i; ++p) {
                for (const auto& [lambda, coeff] : support_layer(i, s, p)) {
                    denominators.record(factorial(i) % coeff.den() == 0, [&, &l = lambda] {
                        return "i=" + std::to_string(i) + " " + l.to_string();
                    });
                }
            }
        }
    }
    suite.checks.push_back(unit.result("top_coefficient", "K_i^(1,...,1) = 1 for i<=8"));
    suite.checks.push_back(denominators.result("denominators", "denominators dividing i!, i<=8"));

    Tally decomposition;
    std::string note;
    for (unsigned n = 1; n <= 5; ++n) {
        for_each_root_set(n, 4, [&](const RootSet& roots) {
            for (unsigned i = 1; i <= n; ++i) {
                auto report = verify_layer_decomposition(roots, i);
                if (note.empty()) note = report.note;
                decomposition.record(report.ok, [&] {
                    return roots.to_string() + " i=" + std::to_string(i) + ": total " +
                           report.total.to_string() + " expected " + report.expected.str();
                });
            }
        });
    }
    auto dec = decomposition.result("decomposition", "instances with n<=5, m_j<=4");
    dec.detail += "; " + note;
    suite.checks.push_back(std::move(dec));

    // Shared support: the layer contributed by subsets of the first three
    // roots must not change when two more roots are appended.
    Tally nested;
    for_each_root_set(3, 4, [&](const RootSet& small) {
        std::vector<ArbInt> grown(small.elements().begin(), small.elements().end());
        grown.emplace_back(2);
        grown.emplace_back(3);
        RootSet big(std::move(grown));
        for (unsigned i = 1; i <= 3; ++i) {
            auto a = verify_layer_decomposition(small, i);
            auto b = verify_layer_decomposition(big, i);
            // Layer s of `small` must equal the part of layer s of `big`
            // supported inside {1,2,3}.
            bool ok = a.ok && b.ok;
            for (unsigned s = 1; s <= i && ok; ++s) {
                ArbInt inside = 0;
                for_each_k_subset(3, s, [&](const std::vector<unsigned>& J) {
                    for (unsigned p = s; p <= i; ++p) {
                        for (const auto& [lambda, k] : support_layer(i, s, p)) {
                            ArbInt mono = k.num() * (factorial(i) / k.den());
                            for (std::size_t r = 0; r < J.size(); ++r) {
                                mono *= boost::multiprecision::pow(big.at(J[r]), lambda.parts()[r]);
                            }
                            inside += mono;
                        }
                    }
                });
                ok = Ratio(inside, factorial(i)) == a.by_support[s - 1].second;
            }
            nested.record(ok, [&] { return small.to_string() + " i=" + std::to_string(i); });
        }
    });
    suite.checks.push_back(nested.result("n_independence", "nested sets n=3 within n=5"));
    return suite;
}

SuiteResult multiplicity_suite(const SuiteConfig&) {
    SuiteResult suite{"multiplicity", {}};
    Tally counts;
    for (unsigned n = 1; n <= 8; ++n) {
        for (unsigned t = 0; t <= n; ++t) {
            for_each_k_subset(n, t, [&](const std::vector<unsigned>& fixed) {
                IndexSubset J(fixed);
                for (unsigned s = t; s <= n; ++s) {
                    ArbInt counted = count_containing_supersets(n, J, s);
                    ArbInt expected = binomial_first(ArbInt(n - t), s - t);
                    counts.record(counted == expected, [&] {
                        return "n=" + std::to_string(n) + " J=" + J.to_string() + " s=" +
                               std::to_string(s) + ": " + counted.str();
                    });
                }
            });
        }
    }
    suite.checks.push_back(counts.result("superset_counts", "(n, J, s) cases with n<=8"));
    return suite;
}

using SuiteFn = SuiteResult (*)(const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites = {
        {"equivalence", equivalence_suite}, {"convolution", convolution_suite},
        {"vandermonde", vandermonde_suite}, {"gf", gf_suite},
        {"layers", layers_suite},           {"multiplicity", multiplicity_suite},
    };
    return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        out.emplace_back("all");
        return out;
    }();
    return names;
}

std::vector<SuiteResult> run_suites(std::string_view name, const SuiteConfig& config) {
    std::vector<SuiteResult> results;
    for (const auto& [suite, fn] : registry()) {
        if (name == "all" || name == suite) results.push_back(fn(config));
    }
    if (results.empty()) throw UsageError("unknown suite '" + std::string(name) + "'");
    return results;
}

}  // namespace symex
