#include "symex/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "symex/coeffs.hpp"
#include "symex/esp.hpp"
#include "symex/verify.hpp"

namespace symex::cli {

namespace {

using Json = nlohmann::ordered_json;

enum class Command { compute, coeffs, verify, bench, specialize };

struct RunConfig {
    Command command = Command::compute;
    std::string roots;
    unsigned i = 0;
    std::string method = "extraction";
    bool explain = false;
    bool json = false;
    std::uint64_t seed = 42;
    unsigned truncation = 30;
    unsigned n = 0;
    unsigned h_max = 0;
    std::string suite = "all";
    std::string family;
    unsigned rows = 0;
    std::string methods = "dp,extraction,direct";
    std::size_t explain_limit = 12;
    std::optional<unsigned> bench_n;
    std::optional<unsigned> bench_i;
    unsigned reps = 3;
};

std::string str(const ArbInt& v) { return v.str(); }

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> parts;
    std::stringstream in(csv);
    std::string token;
    while (std::getline(in, token, ',')) {
        if (!token.empty()) parts.push_back(token);
    }
    return parts;
}

void print_breakdown(const RootSet& roots, const ExtractionBreakdown& bd, std::ostream& out) {
    out << "e_" << bd.i << " of " << roots.to_string() << " by extraction\n";
    out << "head C(" << roots.accumulate() << ", " << bd.i << ") = " << bd.head << '\n';
    for (const auto& term : bd.terms) {
        out << "h=" << term.h << " weight C_" << term.h << " = " << term.weight << ", multiplier "
            << term.multiplier << ", " << term.bracket_size << " subsets of size " << bd.i - term.h
            << ", bracket total " << term.bracket_total << '\n';
        for (const auto& [subset, value] : term.bracket) {
            out << "  " << subset.to_string() << " C(" << subset_sum(roots, subset.indices())
                << ", " << bd.i << ") = " << value << '\n';
        }
    }
    if (!bd.materialized && !bd.terms.empty()) {
        out << "(per-subset lines omitted: n = " << roots.size() << " exceeds the explain limit)\n";
    }
    out << "total = " << bd.total << '\n';
}

Json breakdown_json(const ExtractionBreakdown& bd, bool with_brackets) {
    Json terms = Json::array();
    for (const auto& term : bd.terms) {
        Json t{{"h", term.h}, {"weight", str(term.weight)}, {"bracket_total", str(term.bracket_total)}};
        if (with_brackets && bd.materialized) {
            Json entries = Json::array();
            for (const auto& [subset, value] : term.bracket) {
                entries.push_back({{"subset", subset.indices()}, {"value", str(value)}});
            }
            t["bracket"] = std::move(entries);
        }
        terms.push_back(std::move(t));
    }
    return {{"head", str(bd.head)}, {"terms", std::move(terms)}};
}

int cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    RootSet roots = RootSet::parse(cfg.roots);
    if (cfg.method == "all") {
        auto report = esp_compare(roots, cfg.i);
        if (cfg.json) {
            Json runs = Json::array();
            for (const auto& run : report.runs) {
                runs.push_back({{"method", method_name(run.method)}, {"value", str(run.value)},
                                {"median_ns", run.median.count()}});
            }
            out << Json{{"value", str(report.runs.front().value)}, {"method", "all"},
                        {"agree", report.agree}, {"runs", std::move(runs)}}
                       .dump(2)
                << '\n';
        } else {
            out << report.runs.front().value << '\n';
            if (cfg.explain) {
                for (const auto& run : report.runs) {
                    out << method_name(run.method) << ' ' << run.value << ' ' << run.median.count()
                        << " ns\n";
                }
            }
        }
        if (!report.agree) {
            err << "methods disagree\n";
            return kCheckFailed;
        }
        return kOk;
    }

    Method method = parse_method(cfg.method);
    if (method != Method::extraction) {
        ArbInt value = method == Method::direct ? esp_direct(roots, cfg.i) : [&] {
            auto e = esp_all(roots);
            return cfg.i < e.size() ? e[cfg.i] : ArbInt(0);
        }();
        if (cfg.json) {
            out << Json{{"value", str(value)}, {"method", cfg.method}}.dump(2) << '\n';
        } else {
            out << value << '\n';
        }
        return kOk;
    }

    auto result = esp_extraction(roots, cfg.i, {.explain_limit = cfg.explain_limit});
    if (cfg.json) {
        out << Json{{"value", str(result.value)}, {"method", "extraction"},
                    {"breakdown", breakdown_json(result.breakdown, cfg.explain)}}
                   .dump(2)
            << '\n';
    } else {
        out << result.value << '\n';
        if (cfg.explain) print_breakdown(roots, result.breakdown, out);
    }
    return kOk;
}

int cmd_coeffs(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    if (cfg.n < 1 || cfg.i < 1 || cfg.i > cfg.n) {
        throw UsageError("coeffs needs 1 <= i <= n");
    }
    const unsigned h_max = cfg.h_max ? cfg.h_max : std::max(1u, cfg.i - 1);
    auto rec = coeff_recurrence(cfg.n, cfg.i, h_max);
    auto closed = coeff_closed_sequence(cfg.n, cfg.i, h_max);
    auto conv = verify_convolution(cfg.n, cfg.i, h_max, closed);
    bool agree = rec.values == closed.values && conv.ok;

    if (cfg.json) {
        Json rows = Json::array();
        for (unsigned h = 1; h <= h_max; ++h) {
            rows.push_back({{"h", h}, {"recurrence", str(rec.at(h))}, {"closed", str(closed.at(h))},
                            {"convolution", str(conv.rows[h - 1].sum)}});
        }
        out << Json{{"n", cfg.n}, {"i", cfg.i}, {"h_max", h_max}, {"agree", agree}, {"rows", rows}}
                   .dump(2)
            << '\n';
    } else {
        out << "# n=" << cfg.n << " i=" << cfg.i << " h_max=" << h_max << '\n';
        out << "# h C_h(recurrence) C_h(closed) convolution\n";
        for (unsigned h = 1; h <= h_max; ++h) {
            out << h << ' ' << rec.at(h) << ' ' << closed.at(h) << ' ' << conv.rows[h - 1].sum
                << '\n';
        }
    }
    return agree ? kOk : kCheckFailed;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    auto results = run_suites(cfg.suite, {.seed = cfg.seed, .truncation = cfg.truncation});
    std::size_t passed = 0;
    std::size_t total = 0;
    for (const auto& suite : results) {
        for (const auto& check : suite.checks) {
            ++total;
            passed += check.passed;
        }
    }
    const bool ok = passed == total;

    if (cfg.json) {
        Json suites = Json::array();
        for (const auto& suite : results) {
            Json checks = Json::array();
            for (const auto& check : suite.checks) {
                checks.push_back({{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
            }
            suites.push_back({{"name", suite.suite}, {"passed", suite.passed()}, {"checks", checks}});
        }
        out << Json{{"suite", cfg.suite}, {"seed", cfg.seed}, {"truncation", cfg.truncation},
                    {"passed", ok}, {"suites", suites}}
                   .dump(2)
            << '\n';
    } else {
        out << "# symex verify suite=" << cfg.suite << " seed=" << cfg.seed
            << " truncation=" << cfg.truncation << '\n';
        for (const auto& suite : results) {
            for (const auto& check : suite.checks) {
                out << (check.passed ? "PASS " : "FAIL ") << suite.suite << '/' << check.name << ": "
                    << check.detail << '\n';
            }
        }
        out << "# " << passed << '/' << total << " checks passed\n";
    }
    return ok ? kOk : kCheckFailed;
}

int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::vector<Method> methods;
    for (const auto& name : split_csv(cfg.methods)) methods.push_back(parse_method(name));
    if (methods.empty()) throw UsageError("--methods is empty");

    std::vector<unsigned> ns = cfg.bench_n ? std::vector<unsigned>{*cfg.bench_n}
                                           : std::vector<unsigned>{6, 10, 14};
    std::vector<unsigned> is = cfg.bench_i ? std::vector<unsigned>{*cfg.bench_i}
                                           : std::vector<unsigned>{2, 3, 5};
    if (std::find(ns.begin(), ns.end(), 0u) != ns.end() ||
        std::find(is.begin(), is.end(), 0u) != is.end()) {
        throw UsageError("bench needs n >= 1 and i >= 1");
    }

    Json records = Json::array();
    bool all_agree = true;
    if (!cfg.json) {
        out << "# symex bench seed=" << cfg.seed << " reps=" << std::max(cfg.reps, 3u)
            << " roots uniform in [1, 9]\n";
        out << "# n i value";
        for (Method m : methods) out << ' ' << method_name(m) << "_median_ns";
        out << " agree\n";
    }
    for (unsigned n : ns) {
        SeededRng rng(cfg.seed + n);
        RootSet roots = rng.root_set(n, 9);
        for (unsigned i : is) {
            if (i > n) {
                if (cfg.bench_n && cfg.bench_i) throw UsageError("bench needs i <= n");
                continue;
            }
            auto report = esp_compare(roots, i, methods, cfg.reps);
            all_agree = all_agree && report.agree;
            if (cfg.json) {
                Json timings = Json::object();
                for (const auto& run : report.runs) {
                    timings[std::string(method_name(run.method))] = run.median.count();
                }
                records.push_back({{"n", n}, {"i", i}, {"roots", roots.to_string()},
                                   {"value", str(report.runs.front().value)},
                                   {"agree", report.agree}, {"median_ns", std::move(timings)}});
            } else {
                out << n << ' ' << i << ' ' << report.runs.front().value;
                for (const auto& run : report.runs) out << ' ' << run.median.count();
                out << ' ' << (report.agree ? "yes" : "NO") << '\n';
            }
        }
    }
    if (cfg.json) out << records.dump(2) << '\n';
    if (!all_agree) {
        err << "bench: methods disagree\n";
        return kCheckFailed;
    }
    return kOk;
}

int cmd_specialize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Family family = parse_family(cfg.family);
    auto triangle = specialize(family, cfg.rows);

    bool consistent = true;
    if (family == Family::stirling1) {
        // |s(n+1, k)| from the signed recurrence.
        for (unsigned n = 1; n <= cfg.rows; ++n) {
            auto signed_row = stirling_first_row(n + 1);
            for (unsigned i = 0; i <= n; ++i) {
                ArbInt expected = abs(signed_row[n + 1 - i]);
                if (triangle[n - 1][i] != expected) consistent = false;
            }
        }
    }

    if (cfg.json) {
        Json rows = Json::array();
        for (const auto& row : triangle) {
            Json r = Json::array();
            for (const auto& v : row) r.push_back(str(v));
            rows.push_back(std::move(r));
        }
        out << Json{{"family", family_name(family)}, {"rows", rows}}.dump(2) << '\n';
    } else {
        for (const auto& row : triangle) {
            for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k];
            out << '\n';
        }
    }
    if (!consistent) {
        err << "stirling1 rows disagree with the signed Stirling recurrence\n";
        return kCheckFailed;
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact elementary symmetric polynomials by binomial-product extraction", "symex"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* compute = app.add_subcommand("compute", "compute e_i of a root set");
    compute->add_option("--roots", cfg.roots, "comma-separated positive integers")->required();
    compute->add_option("--i", cfg.i, "order")->required();
    compute->add_option("--method", cfg.method, "direct | dp | extraction | all")
        ->check(CLI::IsMember({"direct", "dp", "extraction", "all"}));
    compute->add_flag("--explain", cfg.explain, "print the term breakdown");
    compute->add_flag("--json", cfg.json);
    compute->add_option("--explain-limit", cfg.explain_limit,
                        "largest n for which per-subset lines are kept");

    auto* coeffs = app.add_subcommand("coeffs", "sieve coefficients C_h by both routes");
    coeffs->add_option("--n", cfg.n)->required();
    coeffs->add_option("--i", cfg.i)->required();
    coeffs->add_option("--h-max", cfg.h_max, "default max(1, i-1)");
    coeffs->add_flag("--json", cfg.json);

    auto* verify = app.add_subcommand("verify", "run identity checks");
    verify->add_option("--suite", cfg.suite,
                       "equivalence | convolution | vandermonde | gf | layers | multiplicity | all");
    verify->add_option("--seed", cfg.seed);
    verify->add_option("--truncation", cfg.truncation, "series order for the gf suite");
    verify->add_flag("--json", cfg.json);

    auto* bench = app.add_subcommand("bench", "time the algorithms against each other");
    bench->add_option("--n", cfg.bench_n);
    bench->add_option("--i", cfg.bench_i);
    bench->add_option("--methods", cfg.methods, "csv of dp, extraction, direct");
    bench->add_option("--seed", cfg.seed);
    bench->add_option("--reps", cfg.reps, "repetitions per cell (at least 3)");
    bench->add_flag("--json", cfg.json);

    auto* special = app.add_subcommand("specialize", "triangles from specialized root sets");
    special->add_option("--family", cfg.family, "pascal | stirling1")->required();
    special->add_option("--rows", cfg.rows)->required()->check(CLI::PositiveNumber);
    special->add_flag("--json", cfg.json);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (compute->parsed()) return cmd_compute(cfg, out, err);
        if (coeffs->parsed()) return cmd_coeffs(cfg, out, err);
        if (verify->parsed()) return cmd_verify(cfg, out, err);
        if (bench->parsed()) return cmd_bench(cfg, out, err);
        if (special->parsed()) return cmd_specialize(cfg, out, err);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace symex::cli
