#include "vls/presets.h"

#include <array>

namespace vls {

namespace {

constexpr std::size_t kStations = 10;

ScenarioConfig
SingleDomain(std::string name)
{
    ScenarioConfig cfg;
    cfg.name = std::move(name);
    cfg.durationS = 20.0;
    for (std::size_t i = 0; i < kStations; ++i)
    {
        StationConfig s;
        s.id = static_cast<StationId>(i + 1);
        cfg.stations.push_back(s);
    }
    return cfg;
}

// c = 1/N keeps per-slot credit increments small, which is what the 1 s
// fairness windows need.
void
EnableVls(ScenarioConfig& cfg, Fixed6 c)
{
    for (auto& s : cfg.stations)
    {
        s.vls.enabled = true;
        s.vls.clockSpeed = c;
    }
}

Fixed6
InverseCount(std::size_t n)
{
    return Fixed6::FromMicros(Fixed6::kScale / static_cast<std::int64_t>(n));
}

ScenarioConfig
Fig2(bool vls)
{
    ScenarioConfig cfg = SingleDomain(vls ? "fig2b" : "fig2a");
    if (vls)
    {
        EnableVls(cfg, InverseCount(kStations));
    }
    return cfg;
}

ScenarioConfig
Fig3(bool vls)
{
    ScenarioConfig cfg = SingleDomain(vls ? "fig3b" : "fig3a");
    constexpr std::array<std::uint32_t, kStations> cwMin{128, 64, 128, 64, 42, 32, 128, 64, 26, 42};
    constexpr std::array<std::int64_t, kStations> weight{1, 2, 1, 2, 3, 4, 1, 2, 5, 3};
    for (std::size_t i = 0; i < kStations; ++i)
    {
        if (vls)
        {
            cfg.stations[i].weight = Fixed6::FromInt(weight[i]);
        }
        else
        {
            cfg.stations[i].cwMin = cwMin[i];
        }
    }
    if (vls)
    {
        EnableVls(cfg, Fixed6::FromInt(1));
    }
    return cfg;
}

ScenarioConfig
Fig5(bool vls)
{
    ScenarioConfig cfg = SingleDomain(vls ? "fig5b" : "fig5a");
    cfg.capture = true;
    cfg.stations[0].channel.captureClass = CaptureClass::Strong;
    if (vls)
    {
        EnableVls(cfg, InverseCount(kStations));
    }
    return cfg;
}

ScenarioConfig
Fig6(char variant)
{
    ScenarioConfig cfg = SingleDomain(std::string("fig6") + variant);
    if (variant != 'c')
    {
        cfg.stations[0].channel.mode = MarkovChannel{20.0, 113.0};
    }
    if (variant != 'a')
    {
        EnableVls(cfg, InverseCount(kStations));
    }
    return cfg;
}

ScenarioConfig
Fig7(bool controller)
{
    ScenarioConfig cfg;
    cfg.name = controller ? "fig7c" : "fig7b";
    cfg.durationS = 20.0;
    cfg.warmupS = 5.0;
    // short frames so that bursts well under 1 ms remain expressible
    cfg.phy.packetPayload = 100;
    constexpr std::array<StationId, 5> dest{2, 1, 2, 5, 4};
    for (StationId id = 1; id <= 5; ++id)
    {
        StationConfig s;
        s.id = id;
        s.destination = dest[id - 1];
        if (controller)
        {
            s.weight = Fixed6::FromMicros(333'333);
        }
        cfg.stations.push_back(s);
    }
    TopologyConfig t;
    t.edges = {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}};
    t.controller = controller;
    if (!controller)
    {
        t.updatePeriodUs.reset();
    }
    cfg.topology = t;
    return cfg;
}

} // namespace

const std::vector<std::string>&
PresetNames()
{
    static const std::vector<std::string> names{"fig2a", "fig2b", "fig3a", "fig3b", "fig5a", "fig5b",
                                                "fig6a", "fig6b", "fig6c", "fig7b", "fig7c"};
    return names;
}

std::optional<ScenarioConfig>
Preset(std::string_view name)
{
    if (name == "fig2a" || name == "fig2b")
    {
        return Fig2(name.back() == 'b');
    }
    if (name == "fig3a" || name == "fig3b")
    {
        return Fig3(name.back() == 'b');
    }
    if (name == "fig5a" || name == "fig5b")
    {
        return Fig5(name.back() == 'b');
    }
    if (name == "fig6a" || name == "fig6b" || name == "fig6c")
    {
        return Fig6(name.back());
    }
    if (name == "fig7b" || name == "fig7c")
    {
        return Fig7(name.back() == 'c');
    }
    return std::nullopt;
}

} // namespace vls
