#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "symex/cli.hpp"

using namespace symex;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string last_line(const std::string& text) {
    auto end = text.find_last_not_of('\n');
    auto start = text.rfind('\n', end);
    return text.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

}  // namespace

TEST(CliCompute, Values) {
    auto a = run({"compute", "--roots", "2,3,4", "--i", "3", "--method", "extraction"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, "24\n");

    auto b = run({"compute", "--roots", "2,3,4", "--i", "0"});
    EXPECT_EQ(b.code, 0);
    EXPECT_EQ(b.out, "1\n");

    for (const char* method : {"direct", "dp", "all"}) {
        auto c = run({"compute", "--roots", "1,2,3,4,5,6", "--i", "3", "--method", method});
        EXPECT_EQ(c.code, 0) << method;
        EXPECT_EQ(c.out.substr(0, 4), "735\n") << method;
    }
}

TEST(CliCompute, ExitCodes) {
    EXPECT_EQ(run({"compute", "--roots", "2,3", "--i", "5", "--method", "extraction"}).code, 3);
    EXPECT_EQ(run({"compute", "--roots", "2,3", "--i", "5", "--method", "direct"}).code, 0);
    EXPECT_EQ(run({"compute", "--roots", "2,0", "--i", "1"}).code, 2);
    EXPECT_EQ(run({"compute", "--roots", "a,b", "--i", "1"}).code, 2);
    EXPECT_EQ(run({"compute", "--roots", "2,3", "--i", "1", "--method", "magic"}).code, 2);
    EXPECT_EQ(run({"compute", "--i", "1"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST(CliCompute, ExplainListsBrackets) {
    auto r = run({"compute", "--roots", "2,3,4", "--i", "3", "--explain"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("head C(9, 3) = 84"), std::string::npos);
    EXPECT_NE(r.out.find("bracket total 65"), std::string::npos);
    EXPECT_NE(r.out.find("{2,3} C(7, 3) = 35"), std::string::npos);
    EXPECT_NE(r.out.find("bracket total 5"), std::string::npos);

    auto limited = run({"compute", "--roots", "2,3,4", "--i", "3", "--explain", "--explain-limit", "2"});
    EXPECT_EQ(limited.out.find("{2,3} C(7, 3)"), std::string::npos);
    EXPECT_NE(limited.out.find("bracket total 65"), std::string::npos);
}

TEST(CliCompute, JsonSchema) {
    auto r = run({"compute", "--roots", "2,3,4", "--i", "3", "--json"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["value"], "24");
    EXPECT_EQ(j["method"], "extraction");
    EXPECT_EQ(j["breakdown"]["head"], "84");
    ASSERT_EQ(j["breakdown"]["terms"].size(), 2u);
    EXPECT_EQ(j["breakdown"]["terms"][0]["h"], 1);
    EXPECT_EQ(j["breakdown"]["terms"][0]["weight"], "1");
    EXPECT_EQ(j["breakdown"]["terms"][0]["bracket_total"], "65");
    EXPECT_EQ(j["breakdown"]["terms"][1]["weight"], "-1");

    auto direct = nlohmann::json::parse(
        run({"compute", "--roots", "2,3,4", "--i", "3", "--json", "--method", "direct"}).out);
    EXPECT_FALSE(direct.contains("breakdown"));
    EXPECT_TRUE(direct["value"].is_string());
}

TEST(CliCompute, LargeValuesStayExactInJson) {
    auto r = run({"compute", "--roots", "1000000007,998244353,123456789123", "--i", "3", "--json"});
    auto j = nlohmann::json::parse(r.out);
    // 1000000007 · 998244353 · 123456789123
    EXPECT_EQ(j["value"], "123240043444226870489826006933");
}

TEST(CliCoeffs, Table) {
    auto r = run({"coeffs", "--n", "5", "--i", "3", "--h-max", "3"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("\n1 1 1 1\n2 -3 -3 1\n3 6 6 1\n"), std::string::npos);

    auto single = run({"coeffs", "--n", "4", "--i", "4", "--h-max", "1"});
    EXPECT_EQ(single.code, 0);
    EXPECT_EQ(last_line(single.out), "1 1 1 1");

    EXPECT_EQ(run({"coeffs", "--n", "3", "--i", "5", "--h-max", "2"}).code, 2);

    auto j = nlohmann::json::parse(run({"coeffs", "--n", "5", "--i", "3", "--h-max", "3", "--json"}).out);
    EXPECT_EQ(j["rows"][1]["recurrence"], "-3");
    EXPECT_EQ(j["rows"][1]["convolution"], "1");
}

TEST(CliVerify, SuitesAndExitCodes) {
    auto conv = run({"verify", "--suite", "convolution"});
    EXPECT_EQ(conv.code, 0);
    EXPECT_EQ(conv.out.find("FAIL"), std::string::npos);

    auto eq = run({"verify", "--suite", "equivalence", "--seed", "42"});
    EXPECT_EQ(eq.code, 0);
    EXPECT_NE(eq.out.find("seed=42"), std::string::npos);

    EXPECT_EQ(run({"verify", "--suite", "nosuch"}).code, 2);

    auto j = nlohmann::json::parse(run({"verify", "--suite", "gf", "--json", "--truncation", "12"}).out);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["truncation"], 12);
}

TEST(CliVerify, Deterministic) {
    auto a = run({"verify", "--suite", "all", "--seed", "7"});
    auto b = run({"verify", "--suite", "all", "--seed", "7"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(CliBench, Grid) {
    auto a = run({"bench", "--n", "18", "--i", "4", "--methods", "dp,extraction", "--json"});
    ASSERT_EQ(a.code, 0);
    auto j = nlohmann::json::parse(a.out);
    ASSERT_EQ(j.size(), 1u);
    EXPECT_TRUE(j[0]["agree"].get<bool>());
    EXPECT_EQ(j[0]["median_ns"].size(), 2u);

    auto b = nlohmann::json::parse(run({"bench", "--n", "5", "--i", "2", "--methods", "direct", "--json"}).out);
    EXPECT_EQ(b[0]["median_ns"].size(), 1u);

    auto c = nlohmann::json::parse(run({"bench", "--methods", "dp", "--json"}).out);
    EXPECT_EQ(c.size(), 9u);

    EXPECT_EQ(run({"bench", "--methods", "quantum"}).code, 2);
    EXPECT_EQ(run({"bench", "--n", "3", "--i", "5"}).code, 2);
}

TEST(CliSpecialize, Rows) {
    EXPECT_EQ(last_line(run({"specialize", "--family", "pascal", "--rows", "4"}).out), "1 4 6 4 1");
    EXPECT_EQ(last_line(run({"specialize", "--family", "stirling1", "--rows", "3"}).out), "1 6 11 6");
    EXPECT_EQ(run({"specialize", "--family", "stirling1", "--rows", "1"}).out, "1 1\n");
    EXPECT_EQ(run({"specialize", "--family", "lah", "--rows", "3"}).code, 2);
    EXPECT_EQ(run({"specialize", "--family", "pascal", "--rows", "0"}).code, 2);
}
