#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <sys/wait.h>

#include "orbitlab/commands.hpp"

using namespace orbitlab;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

const char* cli_path() {
    if (const char* env = std::getenv("ORBITLAB_CLI")) return env;
#ifdef ORBITLAB_CLI
    return ORBITLAB_CLI;
#else
    return nullptr;
#endif
}

RunResult run_cli(const std::string& args) {
    const char* bin = cli_path();
    if (!bin) return {};
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int st = pclose(pipe);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

std::set<std::string> diff_keys(const OutputRecord& r) {
    std::set<std::string> out;
    for (const auto& d : r.result["diffs"]) out.insert(d["kind"].get<std::string>() + ": " + d["where"].get<std::string>());
    return out;
}

}  // namespace

TEST(Cli, JsonRoundTrip) {
    for (const auto& rec : {cmd_orbits(parse_type("C2")), cmd_oq(parse_type("G2"), 2, LevelFamily::Principal),
                            cmd_level(parse_type("A1"), "-1/2"), cmd_exceptional(parse_type("G2")),
                            cmd_character(parse_type("A1"), "2", "-1/2", 6, std::nullopt)}) {
        const json j = rec;
        EXPECT_EQ(j.at("command"), rec.command);
        const auto back = json::parse(j.dump()).get<OutputRecord>();
        EXPECT_EQ(back, rec) << rec.command;
    }
}

TEST(Cli, OrbitsCommand) {
    const auto c2 = cmd_orbits(parse_type("C2"));
    EXPECT_EQ(c2.result["orbits"].size(), 4u);
    EXPECT_EQ(c2.result["dim"], 10);
    const auto g2 = cmd_orbits(parse_type("G2"));
    ASSERT_EQ(g2.result["orbits"].size(), 5u);
    bool tilde = false;
    for (const auto& o : g2.result["orbits"]) tilde |= o["label"] == "~A1";
    EXPECT_TRUE(tilde);
    EXPECT_NE(render_text(g2).find("~A1"), std::string::npos);
}

TEST(Cli, OqAndLevel) {
    const auto oq = cmd_oq(parse_type("E8"), 6, LevelFamily::Principal);
    EXPECT_EQ(oq.result["orbit"]["label"], "E8(a7)");
    EXPECT_EQ(oq.provenance, std::vector<std::string>{"Oq:E8"});
    EXPECT_THROW(cmd_oq(parse_type("E6"), 3, LevelFamily::Coprincipal), DomainError);
    EXPECT_THROW(cmd_oq(parse_type("G2"), 0, LevelFamily::Principal), DomainError);

    const auto lv = cmd_level(parse_type("G2"), "-4+5/2");
    EXPECT_TRUE(lv.result["admissible"].get<bool>());
    EXPECT_EQ(lv.result["orbit"], "~A1");
    const auto bad = cmd_level(parse_type("A1"), "-2");
    EXPECT_FALSE(bad.result["admissible"].get<bool>());
    const auto hv = cmd_level(parse_type("G2"), "-hv+7/12");
    EXPECT_TRUE(hv.result["admissible"].get<bool>());
}

TEST(Cli, ChargeCommand) {
    const auto c = cmd_charge(parse_type("E8"), "E8(a7)", "-30+p/6", 37, std::nullopt);
    EXPECT_EQ(c.result["central_charge"], "-240/37");
    EXPECT_TRUE(c.result.contains("formula"));
    const auto sym = cmd_charge(parse_type("F4"), "B3", "-9+p/8", std::nullopt, std::nullopt);
    EXPECT_FALSE(sym.result.contains("central_charge"));
    EXPECT_EQ(parse_formula(sym.result["formula"].get<std::string>()), parse_formula("562-21p-3744/p"));
}

TEST(Cli, CollapseNilindexDenominator) {
    EXPECT_EQ(cmd_collapse(Family::B, "8,1").result["collapse"], "7,1,1");
    EXPECT_EQ(cmd_nilindex(Family::A, "3,1").result["ad_nilpotency_index"], 5);
    const auto d = cmd_denominator(parse_type("A1"), LevelFamily::Principal, 12);
    EXPECT_TRUE(d.result["agree"].get<bool>());
    EXPECT_EQ(d.exit_code, 0);
}

TEST(Cli, TablesCleanTypes) {
    for (const char* t : {"G2", "E6", "E8", "A5", "B4", "D6"}) {
        const auto r = cmd_tables(parse_type(t));
        EXPECT_TRUE(r.result["diffs"].empty()) << t << " " << r.result["diffs"].dump();
        EXPECT_EQ(r.exit_code, 0);
    }
}

// Known disagreements with the printed golden copies; each is a recomputable misprint.
TEST(Cli, TablesReportDocumentedMisprints) {
    const auto e7 = cmd_tables(parse_type("E7"));
    EXPECT_EQ(e7.exit_code, 3);
    for (const auto& k : diff_keys(e7)) EXPECT_NE(k.find("E6(a1)"), std::string::npos) << k;
    bool sign = false;
    for (const auto& d : e7.result["diffs"]) sign |= d["actual"] == "-56p + 2199 - 21546/p";
    EXPECT_TRUE(sign);

    const auto f4 = cmd_tables(parse_type("F4"));
    EXPECT_EQ(f4.exit_code, 3);
    for (const auto& d : f4.result["diffs"]) {
        EXPECT_EQ(d["kind"], "charge");
        EXPECT_NE(d["where"].get<std::string>().find("F4(a1)"), std::string::npos);
    }

    const auto c3 = cmd_tables(parse_type("C3"));
    EXPECT_EQ(diff_keys(c3), (std::set<std::string>{"exceptional: C3 q=4 (4,2)", "orbit: C3 q=2", "orbit: C3 q=4"}));
    const auto d5 = cmd_tables(parse_type("D5"));
    EXPECT_EQ(diff_keys(d5), (std::set<std::string>{"exceptional: D5 q=3 (3,3,3,1)"}));
    EXPECT_TRUE(cmd_tables(parse_type("C2")).result["diffs"].empty());
}

TEST(Cli, ExitCodes) {
    if (!cli_path()) GTEST_SKIP() << "CLI path unknown";
    EXPECT_EQ(run_cli("orbits C 2").status, 0);
    EXPECT_EQ(run_cli("").status, 1);
    EXPECT_EQ(run_cli("orbits Q 2").status, 1);
    EXPECT_EQ(run_cli("level A 1 0.5").status, 1);
    EXPECT_EQ(run_cli("oq G 2 0").status, 2);
    EXPECT_EQ(run_cli("charge A 1 2 -2").status, 2);
    EXPECT_EQ(run_cli("tables G 2").status, 0);
    EXPECT_EQ(run_cli("tables E 7").status, 3);

    const auto j = run_cli("oq G 2 2 --json");
    ASSERT_EQ(j.status, 0);
    const auto rec = json::parse(j.out).get<OutputRecord>();
    EXPECT_EQ(rec, cmd_oq(parse_type("G2"), 2, LevelFamily::Principal));
}
