#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "symex/bigcomb.hpp"
#include "symex/root_set.hpp"

namespace symex {

/// mt19937_64 with a modulo reduction, so a seed gives the same stream with
/// every standard library (std::uniform_int_distribution is not portable).
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        return lo + engine_() % (hi - lo + 1);
    }
    RootSet root_set(unsigned n, std::uint64_t max_root);
    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// The order-2..5 sieve written out bracket by bracket with explicit index
/// loops, independent of esp_extraction. Require n >= i.
ArbInt display_e2(const RootSet& roots);
ArbInt display_e3(const RootSet& roots);
ArbInt display_e4(const RootSet& roots);
ArbInt display_e5(const RootSet& roots);

/// |s(n, k)| for 0 <= k <= n by c(n+1, k) = n·c(n, k) + c(n, k-1).
std::vector<std::vector<ArbInt>> unsigned_stirling_first_triangle(unsigned max_n);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool passed() const;
};

struct SuiteConfig {
    std::uint64_t seed = 42;
    unsigned truncation = 30;
};

const std::vector<std::string>& suite_names();

/// Runs one named suite, or every suite for "all". Throws UsageError for an
/// unknown name.
std::vector<SuiteResult> run_suites(std::string_view name, const SuiteConfig& config);

}  // namespace symex
