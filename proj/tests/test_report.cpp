#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "ramond/report.hpp"
#include "ramond/run.hpp"

using namespace ramond;

namespace {

RunConfig command(const char* name)
{
    RunConfig c;
    c.command = name;
    return c;
}

void collect_anchors(const nlohmann::json& report, std::set<std::string>& out)
{
    for (const auto& s : report["body"]["sections"])
        for (const auto& c : s["checks"])
            out.insert(c["anchor"].get<std::string>());
}

} // namespace

TEST(Report, DigestIsFnv1a)
{
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
    EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ULL);
}

TEST(Report, DeterministicBody)
{
    RunConfig c = command("probe-orbit");
    c.alpha = "1/2";
    c.b = "1/3";
    c.t_bound = 6;
    auto a = run(c).report;
    auto b = run(c).report;
    EXPECT_EQ(a["body"].dump(), b["body"].dump());
    EXPECT_EQ(a["footer"]["body_fnv1a64"], b["footer"]["body_fnv1a64"]);
    EXPECT_EQ(a["schema_version"], kReportSchemaVersion);
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(a["body"].dump())));
    EXPECT_EQ(a["footer"]["body_fnv1a64"], hex);
    EXPECT_FALSE(a["body"].contains("wall_time_ms"));
}

TEST(Report, CheckFields)
{
    CheckResult r;
    r.id = "x";
    r.anchor = "structure constants";
    r.instance = "i";
    r.checked = 3;
    r.skipped = 1;
    r.record_failure("boom");
    r.detail("k", "v");
    auto j = check_json(r);
    EXPECT_EQ(j["status"], "fail");
    EXPECT_EQ(j["failed"], 1);
    EXPECT_EQ(j["failures"][0], "boom");
    EXPECT_EQ(j["details"]["k"], "v");
    CheckResult leak;
    leak.skipped = 2;
    EXPECT_EQ(check_json(leak)["status"], "skipped-leakage");
}

TEST(Run, SelectAndMutate)
{
    RunConfig c = command("report-all");
    c.select = std::vector<int>{};
    auto empty = run(c);
    EXPECT_EQ(empty.exit_code, 0);
    EXPECT_TRUE(empty.report["body"]["sections"].empty());

    c.select = std::vector<int>{1};
    EXPECT_EQ(run(c).exit_code, 0);
    c.mutate = "LL_C";
    auto mutated = run(c);
    EXPECT_EQ(mutated.exit_code, 1);
    EXPECT_EQ(mutated.report["body"]["sections"][0]["status"], "fail");
    c.mutate = "nope";
    EXPECT_THROW(run(c), ConfigError);
    c.mutate.clear();
    c.select = std::vector<int>{10};
    EXPECT_THROW(run(c), ConfigError);
}

TEST(Run, AnchorsAreKnown)
{
    std::set<std::string> seen;
    RunConfig c = command("report-all");
    c.select = std::vector<int>{1, 2, 4, 5, 6, 7, 8};
    collect_anchors(run(c).report, seen);
    for (const char* cmd : {"verify-module", "probe-orbit", "probe-submodule", "probe-identities"}) {
        RunConfig p = command(cmd);
        p.b = std::string(cmd) == "probe-identities" || std::string(cmd) == "verify-module" ? "symbolic" : "1/2";
        p.alpha = "1/2";
        p.mode_bound = 1;
        p.t_bound = 3;
        collect_anchors(run(p).report, seen);
    }
    for (const char* m : {"phi", "psi-quotient", "pi", "hom", "witness"}) {
        RunConfig p = command("check-iso");
        p.map = m;
        p.alpha = "1/2";
        p.b = "1/3";
        p.mode_bound = 1;
        collect_anchors(run(p).report, seen);
    }
    EXPECT_GE(seen.size(), 12u);
    for (const auto& a : seen)
        EXPECT_TRUE(known_anchors().count(a)) << a;
}

TEST(Config, SchemaAndOverlay)
{
    RunConfig c;
    apply_config_json(c, nlohmann::json::parse(R"({"family": "omega", "lambda": "3", "mode-bound": 1,
                                                   "select": [1, 2], "expect-dim": 0})"));
    EXPECT_EQ(c.family, "omega");
    EXPECT_EQ(c.lambda, "3");
    EXPECT_EQ(c.mode_bound, 1);
    EXPECT_EQ(*c.select, (std::vector<int>{1, 2}));
    EXPECT_EQ(*c.expect_dim, 0);
    EXPECT_THROW(apply_config_json(c, nlohmann::json::parse(R"({"colour": "red"})")), ConfigError);
    EXPECT_THROW(apply_config_json(c, nlohmann::json::parse(R"({"mode-bound": "two"})")), ConfigError);
    EXPECT_THROW(apply_config_json(c, nlohmann::json::parse("[1]")), ConfigError);
    for (const auto& k : config_keys())
        EXPECT_TRUE(config_json(RunConfig{}).contains(k) || k == "output") << k;

    RunConfig bad = command("verify-module");
    bad.family = "sphere";
    EXPECT_THROW(run(bad), ConfigError);
    RunConfig sym = command("probe-orbit");
    EXPECT_THROW(run(sym), ConfigError);
    EXPECT_THROW(apply_config_file(c, "/nonexistent/config.json"), ConfigError);
}

TEST(Run, CommandExamples)
{
    RunConfig a = command("verify-algebra");
    a.algebra = "T";
    a.mode_bound = 3;
    EXPECT_EQ(run(a).exit_code, 0);

    RunConfig o = command("probe-orbit");
    o.alpha = "0";
    o.b = "0";
    o.t_bound = 6;
    auto triv = run(o);
    EXPECT_EQ(triv.exit_code, 1);
    EXPECT_EQ(triv.report["body"]["sections"][0]["checks"][0]["details"]["filled_inner"], "false");
    o.expect_filled = false;
    EXPECT_EQ(run(o).exit_code, 0);

    RunConfig s = command("probe-submodule");
    s.alpha = "1/2";
    s.b = "1/3";
    s.candidate = "even";
    EXPECT_EQ(run(s).exit_code, 1);

    RunConfig lit = command("check-iso");
    lit.map = "psi-rank-two-literal";
    lit.lambda = "lambda";
    lit.alpha = "alpha";
    lit.t_bound = 0;
    lit.mode_bound = 1;
    EXPECT_EQ(run(lit).exit_code, 1);
    lit.map = "psi-rank-two";
    EXPECT_EQ(run(lit).exit_code, 0);
}
