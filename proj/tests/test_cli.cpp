#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "polluxe/cli.hpp"
#include "polluxe/error.hpp"

using namespace polluxe;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code = -1;
    std::string out, err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

class CliRun : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("polluxe_cli_" + std::to_string(::getpid()) + "_" +
                ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string& name, const std::string& text) {
        const fs::path p = dir_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p;
    }

    Outcome run(const std::string& args) {
        const fs::path out = dir_ / "stdout.txt", err = dir_ / "stderr.txt";
        const std::string cmd = std::string(POLLUXE_CLI) + " " + args + " >" + out.string() + " 2>" + err.string();
        const int status = std::system(cmd.c_str());
        Outcome o;
        o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        o.out = slurp(out);
        o.err = slurp(err);
        return o;
    }

    fs::path dir_;
};

const char* kWorked = R"({"p": 3, "n": 2, "weight": [3, 2, 1, 0], "satake": ["-729", "27", "-27", "1"]})";

} // namespace

TEST(ExitCodes, Mapping) {
    EXPECT_EQ(cli::exit_code(ErrorKind::Parse), 1);
    EXPECT_EQ(cli::exit_code(ErrorKind::InvalidConfig), 1);
    EXPECT_EQ(cli::exit_code(ErrorKind::Axiom), 2);
    EXPECT_EQ(cli::exit_code(ErrorKind::CentralCritOnly), 2);
    EXPECT_EQ(cli::exit_code(ErrorKind::OddPurityWeight), 2);
    EXPECT_EQ(cli::exit_code(ErrorKind::NotDivisible), 3);
    EXPECT_EQ(cli::exit_code(ErrorKind::LevelTooLow), 3);
}

TEST(ConfigHash, StableAndSensitive) {
    const Json a = Json::parse(kWorked);
    EXPECT_EQ(cli::config_hash(a), cli::config_hash(Json::parse(kWorked)));
    EXPECT_EQ(cli::config_hash(a).size(), 16u);
    Json b = a;
    b["p"] = 5;
    EXPECT_NE(cli::config_hash(a), cli::config_hash(b));
}

TEST(Runners, AnalyzeWorkedInstance) {
    const Json r = cli::run_analyze(Json::parse(kWorked));
    EXPECT_EQ(r["schema"], "polluxe/1");
    EXPECT_EQ(r["version"], kVersion);
    EXPECT_EQ(r["ncs_set"], Json::parse("[[2,4],[3,4]]"));
    EXPECT_EQ(r["pollack_checks"]["pollack"], true);
    EXPECT_EQ(r["pollack_checks"]["bounded_case"], true);
    EXPECT_EQ(r["lambda_valuation"], "6");
}

TEST(Runners, LogpmReportsCoefficientsTableAndVanishing) {
    const Json r = cli::run_logpm(Json::parse(R"({"p":3,"j":0,"sign":"+","level":1,"degree":6})"));
    EXPECT_EQ(r["expansion"]["coeffs"], Json::parse(R"(["1/3","1","2","7/3","5/3","2/3","1/9"])"));
    bool saw = false;
    for (const auto& row : r["factor_table"]) {
        EXPECT_TRUE(row["match"].get<bool>());
        if (row["n"] == 2 && row["h"] == 2) {
            EXPECT_EQ(row["closed_form"], "-2/3");
            EXPECT_EQ(row["direct"], "-2/3");
            saw = true;
        }
    }
    EXPECT_TRUE(saw);
    for (const auto& row : r["disc_valuation"]) EXPECT_TRUE(row["match"].get<bool>());
    EXPECT_TRUE(r["vanishing"]["pattern_ok"].get<bool>());
    for (const auto& pt : r["vanishing"]["points"])
        if (pt["m"].get<int>() % 2 == 0) EXPECT_TRUE(pt["zero"].get<bool>());
}

TEST(Runners, SynthRoundTrip) {
    const Json r = cli::run_synth(Json::parse(R"({"p":3,"crit":[1,2],"level":2,"degree":6,"seed":1})"));
    EXPECT_TRUE(r["roundtrip_exact"].get<bool>());
    EXPECT_TRUE(r["reconstructs"].get<bool>());
    EXPECT_TRUE(r["parity"]["plus"]["passed"].get<bool>());
    EXPECT_TRUE(r["parity"]["minus"]["passed"].get<bool>());
    EXPECT_TRUE(r["point_identities"]["holds"].get<bool>());
}

TEST(Runners, DecomposeAcceptsSeriesFromTheConfig) {
    const Json synth = cli::run_synth(Json::parse(R"({"p":3,"crit":[1,2],"level":1,"degree":4,"seed":9})"));
    Json cfg = Json::parse(R"({"p":3,"crit":[1,2],"level":1,"m_max":2})");
    cfg["L_alpha"] = synth["instance"]["l_alpha"];
    cfg["L_beta"] = synth["instance"]["l_beta"];
    const Json r = cli::run_decompose(cfg);
    EXPECT_EQ(r["extracted"], synth["extracted"]);
    EXPECT_TRUE(r["reconstructs"].get<bool>());
}

TEST(Runners, NonvanishReport) {
    const Json r = cli::run_nonvanish(Json::parse(
        R"({"p":3,"crit":[1,2],"w":2,"m_max":2,"distribution":{"p":3,"claimed_order":null,"branches":[
            {"p":3,"trunc_degree":1,"exact":true,"coeffs":["1","3"]},
            {"p":3,"trunc_degree":0,"exact":true,"coeffs":["5"]}]}})"));
    EXPECT_EQ(r["center"], 1);
    for (const auto& b : r["branches"]) {
        EXPECT_TRUE(b["exceptional"].empty());
        EXPECT_EQ(b["weierstrass"]["lambda"], 0);
    }
}

TEST_F(CliRun, AnalyzeToStdoutIsDeterministic) {
    const auto cfg = write("w.json", kWorked);
    const Outcome a = run("analyze --config " + cfg.string());
    const Outcome b = run("analyze --config " + cfg.string());
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(Json::parse(a.out)["command"], "analyze");
}

TEST_F(CliRun, OutFileAndSummary) {
    const auto cfg = write("w.json", kWorked);
    const auto out = dir_ / "report.json";
    const Outcome o = run("analyze --config " + cfg.string() + " --out " + out.string());
    EXPECT_EQ(o.code, 0);
    EXPECT_NE(o.out.find("config_hash: "), std::string::npos);
    EXPECT_EQ(o.out, cli::render_summary(Json::parse(slurp(out))));
    const Outcome quiet = run("analyze --config " + cfg.string() + " --out " + out.string() + " --quiet");
    EXPECT_EQ(quiet.code, 0);
    EXPECT_TRUE(quiet.out.empty());
}

TEST_F(CliRun, MalformedJsonIsExitOneWithPosition) {
    const auto cfg = write("bad.json", "{\"p\": 3,, }");
    const Outcome o = run("analyze --config " + cfg.string());
    EXPECT_EQ(o.code, 1);
    EXPECT_NE(o.err.find("byte 9"), std::string::npos) << o.err;
}

TEST_F(CliRun, PurityViolationIsExitTwo) {
    const auto cfg = write("p.json", R"({"p":3,"n":2,"weight":[3,2,2,0],"satake":["-729","27","-27","1"]})");
    const Outcome o = run("analyze --config " + cfg.string());
    EXPECT_EQ(o.code, 2);
    EXPECT_NE(o.err.find("purity"), std::string::npos);
}

TEST_F(CliRun, EvenPrimeIsExitTwo) {
    const auto cfg = write("p.json", R"({"p":2,"n":2,"weight":[3,2,1,0],"satake":["-729","27","-27","1"]})");
    const Outcome o = run("analyze --config " + cfg.string());
    EXPECT_EQ(o.code, 2);
    EXPECT_NE(o.err.find("odd prime required"), std::string::npos);
}

TEST_F(CliRun, SynthSeedFlagOverridesConfig) {
    const auto cfg = write("s.json", R"({"p":3,"crit":[1,2],"level":2,"degree":5,"seed":4})");
    const Outcome a = run("synth --config " + cfg.string() + " --seed 1");
    const Outcome b = run("synth --config " + cfg.string() + " --seed 1");
    const Outcome c = run("synth --config " + cfg.string());
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out, c.out);
    const Json r = Json::parse(a.out);
    EXPECT_EQ(r["seed"], 1);
    EXPECT_TRUE(r["roundtrip_exact"].get<bool>());
}

TEST_F(CliRun, TamperedPlusPartIsExitThree) {
    const auto cfg = write(
        "t.json", R"({"p":3,"crit":[1,2],"level":2,"degree":6,"seed":1,"tamper_plus":{"k":3,"delta":"1"}})");
    const Outcome o = run("synth --config " + cfg.string());
    EXPECT_EQ(o.code, 3);
    EXPECT_NE(o.err.find("NotDivisible"), std::string::npos);
}

TEST_F(CliRun, CentralCritIsExitTwo) {
    const auto cfg = write("c.json", R"({"p":3,"crit":[1],"level":1,"degree":4,"seed":1,"nonvanish":{"w":2}})");
    const Outcome o = run("synth --config " + cfg.string());
    EXPECT_EQ(o.code, 2);
    EXPECT_NE(o.err.find("CentralCritOnly"), std::string::npos);
}

TEST_F(CliRun, LevelBeyondTheCapIsExitThree) {
    const auto cfg = write("l.json", R"({"p":3,"j":0,"sign":"+","level":1,"m_max":4})");
    const Outcome o = run("logpm --config " + cfg.string());
    EXPECT_EQ(o.code, 3);
    EXPECT_NE(o.err.find("LevelTooLow"), std::string::npos);
}

TEST_F(CliRun, OutOfRangeFieldIsExitOne) {
    const auto cfg = write("r.json", R"({"p":3,"j":0,"sign":"+","level":4})");
    EXPECT_EQ(run("logpm --config " + cfg.string()).code, 1);
    EXPECT_EQ(run("logpm --config " + (dir_ / "missing.json").string()).code, 1);
}
