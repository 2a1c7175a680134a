#include "vls/presets.h"
#include "vls/scenario.h"

#include <doctest.h>

#include <stdexcept>

#include <algorithm>

using namespace vls;

namespace {

bool
Mentions(const std::vector<std::string>& msgs, const std::string& text)
{
    return std::any_of(msgs.begin(), msgs.end(), [&](const std::string& m) { return m.find(text) != std::string::npos; });
}

} // namespace

TEST_CASE("every preset validates cleanly")
{
    for (const auto& name : PresetNames())
    {
        const auto cfg = Preset(name);
        REQUIRE(cfg.has_value());
        const ValidationReport r = Validate(*cfg);
        CHECK_MESSAGE(r.Ok(), name);
        CHECK(cfg->name == name);
    }
    CHECK_FALSE(Preset("fig4").has_value());
}

TEST_CASE("preset contents")
{
    const auto fig3a = *Preset("fig3a");
    std::vector<std::uint32_t> cw;
    for (const auto& s : fig3a.stations)
    {
        cw.push_back(s.cwMin);
    }
    CHECK(cw == std::vector<std::uint32_t>{128, 64, 128, 64, 42, 32, 128, 64, 26, 42});

    const auto fig3b = *Preset("fig3b");
    std::vector<std::int64_t> w;
    for (const auto& s : fig3b.stations)
    {
        w.push_back(s.weight.Micros() / Fixed6::kScale);
        CHECK(s.vls.clockSpeed == Fixed6::FromInt(1));
    }
    CHECK(w == std::vector<std::int64_t>{1, 2, 1, 2, 3, 4, 1, 2, 5, 3});

    const auto fig6b = *Preset("fig6b");
    const auto* markov = std::get_if<MarkovChannel>(&fig6b.stations[0].channel.mode);
    REQUIRE(markov != nullptr);
    CHECK(markov->lambdaGood == 20.0);
    CHECK(markov->lambdaBad == 113.0);

    const auto fig5a = *Preset("fig5a");
    CHECK(fig5a.capture);
    CHECK(fig5a.stations[0].channel.captureClass == CaptureClass::Strong);

    const auto fig7c = *Preset("fig7c");
    REQUIRE(fig7c.topology.has_value());
    CHECK(fig7c.topology->edges.size() == 6);
    CHECK(fig7c.stations[2].destination == 2u);
}

TEST_CASE("validation errors")
{
    ScenarioConfig cfg = *Preset("fig2b");
    cfg.stations[3].vls.clockSpeed = Fixed6{};
    ValidationReport r = Validate(cfg);
    CHECK_FALSE(r.Ok());
    CHECK(Mentions(r.errors, "clock speed"));

    cfg = *Preset("fig2a");
    cfg.stations[1].id = cfg.stations[0].id;
    CHECK(Mentions(Validate(cfg).errors, "duplicate"));

    cfg = *Preset("fig2a");
    cfg.stations[0].weight = Fixed6{};
    CHECK_FALSE(Validate(cfg).Ok());

    cfg = *Preset("fig2a");
    cfg.phy.difs = cfg.phy.sifs;
    CHECK_FALSE(Validate(cfg).Ok());

    cfg = *Preset("fig2a");
    cfg.stations.clear();
    CHECK_FALSE(Validate(cfg).Ok());

    cfg = *Preset("fig7c");
    cfg.stations[0].destination = 5; // not within sensing range
    CHECK_FALSE(Validate(cfg).Ok());

    cfg = *Preset("fig7c");
    cfg.stations[0].vls.enabled = true;
    CHECK_FALSE(Validate(cfg).Ok());

    cfg = *Preset("fig2b");
    cfg.stations[0].vls.variant = VlsVariant::Ap;
    cfg.stations[0].weight = Fixed6::Parse("1.5");
    CHECK_FALSE(Validate(cfg).Ok());
}

TEST_CASE("stability advisory is only a warning")
{
    ScenarioConfig cfg = *Preset("fig2b");
    cfg.stations[0].vls.clockSpeed = Fixed6::FromInt(1);
    cfg.stations[0].vls.burstCap = 4;
    cfg.stations[0].winProbEstimate = 0.25;
    ValidationReport r = Validate(cfg);
    CHECK(r.Ok());
    CHECK(Mentions(r.warnings, "potential credit instability"));

    cfg.stations[0].vls.burstCap = 5;
    CHECK_FALSE(Mentions(Validate(cfg).warnings, "potential credit instability"));
}

TEST_CASE("serialization round-trips")
{
    for (const auto& name : PresetNames())
    {
        const ScenarioConfig cfg = *Preset(name);
        const std::string text = SerializeScenario(cfg);
        const ScenarioConfig back = ParseScenario(text);
        CHECK_MESSAGE(back == cfg, name);
        CHECK(SerializeScenario(back) == text);
    }

    ScenarioConfig cfg = *Preset("fig2b");
    cfg.stations[1].channel.mode = BernoulliChannel{0.125};
    cfg.stations[2].vls.metric = FairnessMetric::AirTime;
    cfg.stations[2].vls.burstCap = 7;
    cfg.stations[3].vls.variant = VlsVariant::Ap;
    cfg.stations[4].startS = 2.5;
    cfg.stations[5].winProbEstimate = 0.1;
    cfg.stations[6].weight = Fixed6::Parse("0.333333");
    const std::string text = SerializeScenario(cfg);
    CHECK(ParseScenario(text) == cfg);
    CHECK(SerializeScenario(ParseScenario(text)) == text);
}

TEST_CASE("parser rejects malformed input")
{
    CHECK_THROWS_AS(ParseScenario("{"), std::invalid_argument);
    CHECK_THROWS_AS(ParseScenario(R"({"stations": [], "bogus": 1})"), std::invalid_argument);
    CHECK_THROWS_AS(ParseScenario(R"({"stations": [{"id": 1, "weight": "x"}]})"), std::invalid_argument);
    CHECK_THROWS_AS(ParseScenario(R"({"stations": [{"id": 1, "channel": {"mode": "fading"}}]})"),
                    std::invalid_argument);
    const ScenarioConfig minimal = ParseScenario(R"({"stations": [{"id": 1}, {"id": 2}]})");
    CHECK(minimal.stations.size() == 2);
    CHECK(minimal.durationS == 20.0);
}
