#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include <json.hpp>

#include "test_support.hpp"

using pseudotrap::testing::run_command;
namespace fs = std::filesystem;

namespace {

const std::string cli = PSEUDOTRAP_CLI_PATH;

class Cli : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        dir_ = fs::temp_directory_path() / ("pseudotrap-cli-" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    static void TearDownTestSuite() { fs::remove_all(dir_); }

    static std::string path(const std::string& name) { return (dir_ / name).string(); }

    static pseudotrap::testing::CommandResult run(const std::string& args) {
        return run_command("'" + cli + "' " + args + " 2>/dev/null");
    }

    static std::string generate(const std::string& name, const std::string& args) {
        const auto p = path(name);
        EXPECT_EQ(run("generate " + args + " -o '" + p + "'").status, 0);
        return p;
    }

    static inline fs::path dir_;
};

} // namespace

TEST_F(Cli, TrapSearchOnRotationEight) {
    const auto sys = generate("z8.json", "rotation --q 8");
    const auto r = run("trap -s '" + sys + "' --eps 2 --search");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["recommended"], nlohmann::json({{"delta", 1}, {"n", 5}}));
    EXPECT_EQ(j["theorem"], "trap-search");
    EXPECT_EQ(j["oracle_checked"], false);
}

TEST_F(Cli, TrapSearchWithOracle) {
    const auto sys = generate("z8o.json", "rotation --q 8");
    const auto r = run("trap -s '" + sys + "' --eps 2 --search --oracle");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["oracle_checked"], true);
}

TEST_F(Cli, FixedCheckFailIsStillExitZero) {
    const auto sys = generate("z8f.json", "rotation --q 8");
    const auto r = run("cover -s '" + sys + "' --eps 2 --delta 1 --n 4 --oracle");
    ASSERT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["results"][0]["status"], "fail");
    EXPECT_EQ(j["results"][0]["counterexample"], nlohmann::json({0, 1, 2, 3, 4}));
    EXPECT_EQ(j["oracle_checked"], true);
}

TEST_F(Cli, MinimalOnFiveCycle) {
    const auto sys = generate("c5.json", "rotation --q 5");
    const auto r = run("minimal -s '" + sys + "'");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out)["minimal"], true);
}

TEST_F(Cli, UnknownFlagIsUsageError) {
    const auto sys = generate("u.json", "rotation --q 5");
    const auto r = run("minimal -s '" + sys + "' --bogus");
    EXPECT_EQ(r.status, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(run("no-such-command").status, 2);
    EXPECT_EQ(run("trap -s '" + sys + "' --eps 2").status, 2);
    EXPECT_EQ(run("trap -s '" + sys + "' --eps zero --search").status, 2);
}

TEST_F(Cli, BadInputFileIsUsageError) {
    EXPECT_EQ(run("minimal -s '" + path("missing.json") + "'").status, 2);
    const auto bad = path("bad.json");
    std::ofstream(bad) << R"({"dist": [[0, 1], [1, 0]], "map": [0, 5]})";
    EXPECT_EQ(run("minimal -s '" + bad + "'").status, 2);
}

TEST_F(Cli, StateCapGivesExitThree) {
    const auto sys = generate("cap.json", "rotation --q 8");
    const auto r = run("trap -s '" + sys + "' --eps 2 --delta 2 --n 4 --state-cap 2");
    EXPECT_EQ(r.status, 3);
    EXPECT_EQ(nlohmann::json::parse(r.out)["results"][0]["status"], "undecided-resource");
    const auto env = run_command("PSEUDOTRAP_STATE_CAP=2 '" + cli + "' trap -s '" + sys + "' --eps 2 --search 2>/dev/null");
    EXPECT_EQ(env.status, 3);
}

TEST_F(Cli, GenerateMatchesLibrary) {
    const auto r = run("generate interval --kind logistic --r 7/2 --grid 6 --scale 2");
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(r.out, pseudotrap::save_system(pseudotrap::interval_map_grid(
                         pseudotrap::IntervalMap::make_logistic(7, 2), 6, 2)));
    EXPECT_EQ(run("generate random --n 6 --seed 3 --metric random-valid").out,
              pseudotrap::save_system(pseudotrap::random_map(6, pseudotrap::RandomMetric::random_valid, 3)));
    EXPECT_EQ(run("generate attractors --gaps 2,1 --separation 3").out,
              pseudotrap::save_system(pseudotrap::disjoint_attractors({2, 1}, 3)));
    EXPECT_EQ(run("generate attractors --gaps 4,1 --separation 1").status, 2);
}

TEST_F(Cli, OtherSubcommands) {
    const auto fixed = generate("two.json", "attractors --gaps 1,1 --separation 10");
    auto j = nlohmann::json::parse(run("minimality-criterion -s '" + fixed + "'").out);
    EXPECT_EQ(j["minimal"], false);
    EXPECT_EQ(j["counterexample"]["eps"], 10);

    j = nlohmann::json::parse(run("hausdorff -s '" + fixed + "' --a 0 --b 0,1").out);
    EXPECT_EQ(j["h"], 10);
    EXPECT_EQ(j["least_eps"], 11);

    j = nlohmann::json::parse(run("omega -s '" + fixed + "' --point 1").out);
    EXPECT_EQ(j["cycles"], nlohmann::json::parse("[[0],[1]]"));

    j = nlohmann::json::parse(run("orbital -s '" + fixed + "' --eps 5 --delta 11 --horizon 1").out);
    EXPECT_EQ(j["verdict"], "fail");

    j = nlohmann::json::parse(run("uniformity-check -s '" + fixed + "'").out);
    EXPECT_EQ(j["all_pass"], true);

    const auto sws = nlohmann::json::parse(run("sws -s '" + fixed + "' --eps grid").out);
    EXPECT_EQ(sws.size(), 2u);

    const auto z7 = generate("z7.json", "rotation --q 7");
    j = nlohmann::json::parse(run("strong-orbital -s '" + z7 + "' --eps 2 --horizon 14").out);
    EXPECT_EQ(j["recommended"], nlohmann::json({{"delta", 1}, {"n", 4}}));
    EXPECT_EQ(run("strong-orbital -s '" + fixed + "' --eps 2 --horizon 3").status, 2);

    const auto dot = path("g.dot");
    EXPECT_EQ(run("export-dot -s '" + z7 + "' --delta 1 -o '" + dot + "'").status, 0);
    std::ifstream in(dot);
    std::string first;
    std::getline(in, first);
    EXPECT_EQ(first, "digraph pseudo_orbit {");
}
