#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vtwist/commands.hpp"
#include "vtwist/sampling.hpp"

using namespace vtwist;

namespace {

CommandOptions quiet(int sign = 1, std::uint64_t seed = 1) {
    CommandOptions o;
    o.sign = sign;
    o.timing = false;
    o.seed = seed;
    return o;
}

}  // namespace

TEST(JsonRoundTrip, RandomInstances) {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        const VTwistedHiggsField f = random_instance(seed);
        const json j = instance_to_json(f);
        const InstanceDocument d = instance_from_json(json::parse(j.dump()));
        EXPECT_EQ(d.hecke, f.hecke());
        ASSERT_TRUE(d.pair);
        EXPECT_EQ(*d.pair, f.pair());
        EXPECT_EQ(reconstruct(*d.pair, d.hecke), f);
    }
}

TEST(JsonRoundTrip, SpectralData) {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const SpectralInstance s = random_spectral_instance(seed, 2 + static_cast<int>(seed % 2), 1);
        EXPECT_EQ(spectral_from_json(json::parse(spectral_to_json(s.data).dump())), s.data);
    }
}

TEST(JsonErrors, AreInputErrors) {
    const json base = json::parse(R"({"hecke":{"S":1,"L":1,"points":[{"x":"0","lambda":"1"}]},
        "E":{"twists":[0,0]},"Theta":{"twist":1,"entries":[["0","1"],["x","0"]]},
        "ThetaPrime":{"twist":1,"entries":[["0","1"],["x","0"]]}})");
    EXPECT_NO_THROW(instance_from_json(base));
    json bad = base;
    bad["Theta"]["entries"][0][0] = "t^^2";
    EXPECT_THROW(instance_from_json(bad), ParseError);
    bad = base;
    bad["Theta"]["twist"] = 2;
    EXPECT_THROW(instance_from_json(bad), ValidationError);
    bad = base;
    bad.erase("ThetaPrime");
    EXPECT_THROW(instance_from_json(bad), ParseError);
    bad = base;
    bad["hecke"]["points"][0]["lambda"] = true;
    EXPECT_THROW(instance_from_json(bad), ParseError);
    bad = base;
    bad["E"]["twists"] = json::array({0, 1});
    EXPECT_THROW(instance_from_json(bad), ValidationError);
}

TEST(Selftest, DefaultConventionPasses) {
    const CommandResult r = cmd_selftest(50, quiet());
    EXPECT_EQ(r.exit_code, 0) << r.report.dump(2);
    EXPECT_EQ(r.report["instances_checked"], 50);
}

TEST(Selftest, FlippedSignIsCaught) {
    const CommandResult r = cmd_selftest(50, quiet(-1));
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_EQ(r.report["property"], "eigenvalue_condition");
    EXPECT_TRUE(r.report.contains("instance"));
    // the embedded document reproduces the failure
    const InstanceDocument d = instance_from_json(r.report["instance"]);
    EXPECT_FALSE(eigenvalue_condition(d.require_pair(), d.hecke, -1).ok);
}

TEST(Selftest, EmptyRun) {
    const CommandResult r = cmd_selftest(0, quiet());
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.report["instances_checked"], 0);
    EXPECT_EQ(cmd_selftest(-1, quiet()).exit_code, 2);
}

TEST(Determinism, ReportsAreReproducible) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const json doc = instance_to_json(random_instance(seed));
        EXPECT_EQ(cmd_check(doc, quiet(1, seed)).report.dump(), cmd_check(doc, quiet(1, seed)).report.dump());
        EXPECT_EQ(cmd_spectral(doc, quiet()).report.dump(), cmd_spectral(doc, quiet()).report.dump());
    }
    EXPECT_EQ(cmd_selftest(5, quiet(1, 9)).report.dump(), cmd_selftest(5, quiet(1, 9)).report.dump());
    EXPECT_FALSE(cmd_selftest(1, quiet()).report.contains("timing_ms"));
    EXPECT_TRUE(cmd_selftest(1, CommandOptions{}).report.contains("timing_ms"));
}

TEST(FailureReports, EmbedTheInstance) {
    const json doc = json::parse(R"({"hecke":{"S":1,"L":1,"points":[{"x":"0","lambda":"1"}]},
        "E":{"twists":[0,0]},"Theta":{"twist":1,"entries":[["0","1"],["x","0"]]},
        "ThetaPrime":{"twist":1,"entries":[["0","2"],["2*x","0"]]}})");
    const CommandResult r = cmd_check(doc, quiet());
    EXPECT_EQ(r.exit_code, 1);
    EXPECT_EQ(r.report["instance"], doc);
    EXPECT_FALSE(r.report["fiber"]["ok"].get<bool>());
    const CommandResult rc = cmd_reconstruct(doc, quiet());
    EXPECT_EQ(rc.exit_code, 1);
    EXPECT_EQ(rc.report["error"], "FiberConditionError");
    EXPECT_EQ(rc.report["instance"], doc);
}

TEST(PropertySuite, AcceptsRandomInstances) {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        const auto fail = detail::check_properties(random_instance(seed), seed, 1);
        EXPECT_FALSE(fail) << seed << ": " << fail->property << " " << fail->detail;
    }
}
