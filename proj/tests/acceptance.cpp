// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "oracles.hpp"
#include "symex/coeffs.hpp"
#include "symex/esp.hpp"
#include "symex/polyexpand.hpp"
#include "symex/series.hpp"
#include "symex/subsets.hpp"
#include "symex/verify.hpp"

#ifndef SYMEX_BINARY
#error "SYMEX_BINARY must point at the symex executable"
#endif

using namespace symex;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

template <typename Fn>
void for_each_tuple(unsigned n, unsigned max_root, Fn&& fn) {
    std::vector<long long> digits(n, 1);
    while (true) {
        fn(digits);
        std::size_t j = 0;
        while (j < n && digits[j] == static_cast<long long>(max_root)) digits[j++] = 1;
        if (j == n) return;
        ++digits[j];
    }
}

RootSet to_roots(const std::vector<long long>& v) {
    return RootSet(std::vector<ArbInt>(v.begin(), v.end()));
}

Verdict theorem_reproduction() {
    auto start = Clock::now();
    std::size_t sets = 0, instances = 0, bad = 0;
    for (unsigned n = 1; n <= 6; ++n) {
        for_each_tuple(n, 4, [&](const std::vector<long long>& v) {
            RootSet roots = to_roots(v);
            ++sets;
            for (unsigned i = 1; i <= n; ++i) {
                ++instances;
                if (esp_extraction(roots, i, {.explain_limit = 0}).value != esp_direct(roots, i)) ++bad;
            }
        });
    }
    SeededRng rng(42);
    std::size_t random_instances = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto n = static_cast<unsigned>(rng.uniform(1, 10));
        RootSet roots = rng.root_set(n, 9);
        for (unsigned i = 1; i <= n; ++i) {
            ++random_instances;
            if (esp_extraction(roots, i, {.explain_limit = 0}).value != esp_direct(roots, i)) ++bad;
        }
    }
    double t = seconds_since(start);
    std::ostringstream d;
    d << sets << " exhaustive sets (" << instances << " instances) + 300 seeded sets ("
      << random_instances << " instances), " << bad << " mismatches, " << t << " s (limit 10 s)";
    return {bad == 0 && t < 10.0, d.str()};
}

Verdict display_block() {
    SeededRng rng(42);
    std::size_t checks = 0, bad = 0;
    for (int trial = 0; trial < 20; ++trial) {
        auto n = static_cast<unsigned>(rng.uniform(4, 8));
        RootSet roots = rng.root_set(n, 9);
        const std::array<std::function<ArbInt(const RootSet&)>, 4> literal = {display_e2, display_e3,
                                                                               display_e4, display_e5};
        for (unsigned i = 2; i <= std::min(5u, n); ++i) {
            ++checks;
            if (literal[i - 2](roots) != esp_direct(roots, i)) ++bad;
        }
    }
    return {bad == 0, std::to_string(checks) + " literal e2..e5 evaluations over 20 seeded sets, " +
                          std::to_string(bad) + " mismatches"};
}

Verdict complete_convolution() {
    auto start = Clock::now();
    std::size_t cells = 0, bad = 0;
    for (unsigned n = 1; n <= 20; ++n) {
        for (unsigned i = 1; i <= n; ++i) {
            ++cells;
            bool ok = verify_convolution(n, i, 12, coeff_recurrence(n, i, 12)).ok &&
                      verify_convolution(n, i, 12, coeff_closed_sequence(n, i, 12)).ok;
            if (!ok) ++bad;
        }
    }
    double t = seconds_since(start);
    std::ostringstream d;
    d << cells << " (n, i) cells x h<=12 with recurrence and closed-form C_h, " << bad
      << " failures, " << t << " s (limit 5 s)";
    return {bad == 0 && t < 5.0, d.str()};
}

Verdict vandermonde_degeneration() {
    std::size_t cells = 0, bad = 0;
    for (unsigned n = 1; n <= 20; ++n) {
        for (unsigned i = 1; i <= n; ++i) {
            for (unsigned h = 0; h <= 12; ++h) {
                ++cells;
                auto report = vandermonde_degeneration_check(n, i, h);
                if (!report.ok || report.sum != 1) ++bad;
            }
            for (unsigned k = 1; k <= 13; ++k) {
                if (binomial_first(-ArbInt(n) + i - 1, k - 1) != coeff_closed(n, i, k)) ++bad;
            }
        }
    }
    return {bad == 0, std::to_string(cells) + " (n, i, h) sums equal 1 with term-wise C(-n+i-1,k-1) = C_k, " +
                          std::to_string(bad) + " failures"};
}

Verdict generating_functions() {
    std::size_t cells = 0, bad = 0;
    for (unsigned n = 1; n <= 12; ++n) {
        for (unsigned i = 1; i <= n; ++i) {
            ++cells;
            if (!verify_gf_untransformed(n, i, 30).ok || !verify_gf_transformed(n, i, 30).ok) ++bad;
        }
    }
    return {bad == 0, std::to_string(cells) + " (n, i) cells at truncation 30, both identities, " +
                          std::to_string(bad) + " failures"};
}

Verdict multiplicity() {
    std::size_t cases = 0, bad = 0;
    for (unsigned n = 1; n <= 8; ++n) {
        for (unsigned t = 0; t <= n; ++t) {
            for (const auto& J : k_subsets(n, t)) {
                for (unsigned s = t; s <= n; ++s) {
                    ++cases;
                    if (count_containing_supersets(n, J, s) != oracle::pascal(8)[n - t][s - t]) ++bad;
                }
            }
        }
    }
    return {bad == 0, std::to_string(cases) + " (n, J, s) cases, " + std::to_string(bad) + " failures"};
}

Verdict proof_example() {
    const ArbInt f4 = factorial(4);
    struct Expected {
        std::vector<unsigned> lambda;
        long long magnitude;
    };
    std::size_t bad = 0;
    std::ostringstream signs;
    for (const auto& e : {Expected{{1, 1}, 22}, Expected{{2, 1}, 18}, Expected{{3, 1}, 4},
                          Expected{{2, 2}, 6}}) {
        Ratio k = monomial_coefficient(4, ExponentVector(e.lambda));
        if (k.abs() != Ratio(e.magnitude, f4)) ++bad;
        ArbInt over24 = k.num() * (f4 / k.den());
        signs << ExponentVector(e.lambda).to_string() << "=" << over24 << "/4! ";
    }
    for (unsigned i = 1; i <= 8; ++i) {
        if (monomial_coefficient(i, ExponentVector(std::vector<unsigned>(i, 1))) != Ratio(1)) ++bad;
    }
    std::size_t instances = 0;
    std::string note;
    for (unsigned n = 1; n <= 5; ++n) {
        for_each_tuple(n, 4, [&](const std::vector<long long>& v) {
            RootSet roots = to_roots(v);
            for (unsigned i = 1; i <= n; ++i) {
                ++instances;
                auto report = verify_layer_decomposition(roots, i);
                note = report.note;
                if (!report.ok || report.total != Ratio(binomial_first(roots.accumulate(), i))) ++bad;
            }
        });
    }
    return {bad == 0, "signed " + signs.str() + "; K_i^(1..1)=1 for i<=8; " + std::to_string(instances) +
                          " layer decompositions; " + std::to_string(bad) + " failures. Note: " + note};
}

Verdict specializations() {
    // |s(n, k)| from c(n+1, k) = n c(n, k) + c(n, k-1), written out here.
    std::vector<std::vector<ArbInt>> c{{1}};
    for (unsigned n = 0; n <= 9; ++n) {
        std::vector<ArbInt> next(n + 2, ArbInt(0));
        for (unsigned k = 0; k <= n + 1; ++k) {
            if (k <= n) next[k] += c[n][k] * n;
            if (k >= 1) next[k] += c[n][k - 1];
        }
        c.push_back(std::move(next));
    }
    auto pascal_ref = oracle::pascal(8);
    auto stirling = specialize(Family::stirling1, 8);
    auto pascal = specialize(Family::pascal, 8);
    std::size_t bad = 0;
    for (unsigned n = 1; n <= 8; ++n) {
        for (unsigned i = 0; i <= n; ++i) {
            if (stirling[n - 1][i] != c[n + 1][n + 1 - i]) ++bad;
            if (pascal[n - 1][i] != pascal_ref[n][i]) ++bad;
        }
    }
    return {bad == 0, "stirling1 and pascal rows 1-8, " + std::to_string(bad) + " mismatched entries"};
}

struct Captured {
    int status = -1;
    std::string out;
};

Captured capture(const std::string& args) {
    Captured result;
    std::string command = std::string(SYMEX_BINARY) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buffer{};
    std::size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) result.out.append(buffer.data(), got);
    int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

Verdict cli_determinism() {
    auto first = capture("verify --suite all --seed 42");
    auto second = capture("verify --suite all --seed 42");
    bool identical = first.out == second.out && !first.out.empty();
    bool exits = first.status == 0 && second.status == 0;

    auto bench = capture("bench --json");
    bool bench_ok = bench.status == 0;
    std::size_t cells = 0;
    try {
        auto records = nlohmann::json::parse(bench.out);
        for (const auto& r : records) {
            ++cells;
            bench_ok = bench_ok && r["agree"].get<bool>() && r["median_ns"].size() == 3;
        }
    } catch (const std::exception&) {
        bench_ok = false;
    }
    bench_ok = bench_ok && cells > 0;
    std::ostringstream d;
    d << "verify outputs " << (identical ? "byte-identical" : "DIFFER") << " (" << first.out.size()
      << " bytes), exit codes " << first.status << "/" << second.status << "; default bench grid "
      << cells << " cells, values " << (bench_ok ? "agree" : "DISAGREE");
    return {identical && exits && bench_ok, d.str()};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Verdict (*run)();
    };
    const Criterion criteria[] = {
        {"theorem reproduction", theorem_reproduction},
        {"display block e2..e5", display_block},
        {"complete convolution", complete_convolution},
        {"vandermonde degeneration", vandermonde_degeneration},
        {"generating functions", generating_functions},
        {"multiplicity lemma", multiplicity},
        {"order-4 expansion and layers", proof_example},
        {"specializations", specializations},
        {"cli determinism", cli_determinism},
    };

    int failed = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (v.pass ? "PASS" : "FAIL") << " [" << index << "] " << c.name << ": " << v.detail
                  << '\n';
        failed += !v.pass;
    }
    std::cout << (failed ? "FAILED " : "ALL PASSED ") << index - failed << '/' << index << '\n';
    return failed ? 1 : 0;
}
