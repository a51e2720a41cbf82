#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "commands.hpp"

using qkig::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, MulDivisorJson) {
    const Result r = call({"mul-divisor", "--n", "3", "--pair", "2,6", "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out,
              "{\"n\":3,\"terms\":[{\"q\":0,\"pair\":[1,4],\"coeff\":-2},{\"q\":0,\"pair\":[1,5],\"coeff\":2},"
              "{\"q\":0,\"pair\":[2,4],\"coeff\":1},{\"q\":1,\"pair\":[4,6],\"coeff\":1},"
              "{\"q\":1,\"pair\":[5,6],\"coeff\":-1}]}\n");
    EXPECT_EQ(call({"mul-divisor", "--n", "3", "--pair", "2,6", "--json"}).out, r.out);
}

TEST(Cli, MulSeidelJson) {
    const Result r = call({"mul-seidel", "--n", "3", "--pair", "1,3", "--json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["terms"], nlohmann::json::parse(R"([{"q":2,"pair":[4,6],"coeff":1}])"));
}

TEST(Cli, TextMirrorsNotation) {
    const Result r = call({"mul-divisor", "--n", "3", "--pair", "1,4"});
    EXPECT_EQ(r.out, "O_{1,3} - q*O_{3,6} + q*O_{4,6}\n");
    EXPECT_EQ(call({"mul-divisor", "--n", "3", "--pair", "1,4", "--classical"}).out, "O_{1,3}\n");
    EXPECT_EQ(call({"richardson-expand", "--n", "3", "--p", "2"}).out, "-2*O_{1,4} + 2*O_{1,5} + O_{2,4}\n");
}

TEST(Cli, ErrorsAndExitCodes) {
    Result r = call({"mul-divisor", "--n", "3", "--pair", "2,5"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("2n+1"), std::string::npos) << r.err;
    EXPECT_EQ(call({"mul-divisor", "--n", "3", "--pair", "2;5"}).code, 2);
    EXPECT_EQ(call({"basis", "--n", "1"}).code, 2);
    EXPECT_EQ(call({"richardson-expand", "--n", "3", "--p", "6"}).code, 2);
    r = call({"product-special", "--n", "3", "--u", "1,2", "--v", "1,2"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("unsupported family"), std::string::npos);
    EXPECT_NE(call({"mul-divisor", "--n", "3"}).code, 0);
    EXPECT_NE(call({"verify", "--suite", "nope"}).code, 0);
}

TEST(Cli, ProductSpecialAndClassify) {
    Result r = call({"product-special", "--n", "3", "--u", "1,3", "--v", "3,5"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "-2*q*O_{1,4} + 2*q*O_{1,5} + q*O_{2,4} + q^2*O_{4,6} - q^2*O_{5,6}\n");
    r = call({"classify", "--n", "3", "--u", "1,3", "--v", "3,5", "--json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["c2"].get<bool>());
    EXPECT_EQ(j["q_support"], nlohmann::json::parse("[1,2]"));
    EXPECT_FALSE(j["richardson_nonempty"].get<bool>());
}

TEST(Cli, GammaDescriptor) {
    const Result r = call({"gamma", "--n", "3", "--u", "1,2", "--v", "1,2", "--deg", "2", "--broken", "--json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["kind"], "empty");
    EXPECT_EQ(j["dim"], -1);
    const auto m = nlohmann::json::parse(call({"gamma", "--n", "3", "--u", "5,6", "--v", "1,4", "--deg", "1", "--json"}).out);
    EXPECT_TRUE(m.contains("indices"));
}

TEST(Cli, BasisAndTable) {
    const auto b = nlohmann::json::parse(call({"basis", "--n", "2", "--json"}).out);
    ASSERT_EQ(b["basis"].size(), 4u);
    EXPECT_EQ(b["basis"][0]["dual"], nlohmann::json::parse("[3,4]"));
    const auto t = nlohmann::json::parse(call({"table", "--n", "3", "--op", "seidel", "--format", "json"}).out);
    EXPECT_EQ(t["rows"].size(), 12u);
    const Result txt = call({"table", "--n", "2", "--op", "divisor", "--format", "text"});
    EXPECT_NE(txt.out.find("O_{3,4} -> O_{2,4}"), std::string::npos);
}

TEST(Cli, VerifyExitCodeAndSeed) {
    Result r = call({"verify", "--suite", "chevalley", "--n-max", "4"});
    EXPECT_EQ(r.code, 0) << r.out;
    r = call({"verify", "--suite", "geometry", "--n-max", "2", "--trials", "20", "--seed", "5", "--json"});
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j[0]["seed"], 5);
    EXPECT_EQ(j[0]["failures"].size(), 0u);

    ::setenv(qkig::cli::kSeedEnv, "99", 1);
    r = call({"verify", "--suite", "geometry", "--n-max", "2", "--trials", "10", "--json"});
    EXPECT_EQ(nlohmann::json::parse(r.out)[0]["seed"], 99);
    r = call({"verify", "--suite", "geometry", "--n-max", "2", "--trials", "10", "--seed", "3", "--json"});
    EXPECT_EQ(nlohmann::json::parse(r.out)[0]["seed"], 3);
    ::unsetenv(qkig::cli::kSeedEnv);
}
