#ifndef VLS_SCENARIO_H
#define VLS_SCENARIO_H

#include "vls/channel.h"
#include "vls/fixed.h"
#include "vls/multi_domain.h"
#include "vls/phy.h"
#include "vls/vls.h"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vls {

enum class VlsVariant
{
    Distributed,
    Ap,
};

struct VlsConfig
{
    bool enabled = false;
    Fixed6 clockSpeed = Fixed6::FromInt(1);
    std::optional<std::uint32_t> burstCap;
    FairnessMetric metric = FairnessMetric::Packets;
    VlsVariant variant = VlsVariant::Distributed;

    bool operator==(const VlsConfig&) const = default;
};

struct StationConfig
{
    StationId id = 1;
    Fixed6 weight = Fixed6::FromInt(1);
    std::uint32_t cwMin = 32;
    std::uint32_t cwMax = 1024;
    ChannelSpec channel;
    VlsConfig vls;
    /// Flow destination; empty means the access point.
    std::optional<StationId> destination;
    /// Time the station becomes backlogged.
    double startS = 0.0;
    /// Optional per-slot win probability estimate for the credit stability advisory.
    std::optional<double> winProbEstimate;

    bool operator==(const StationConfig&) const = default;
};

/// Multi-collision-domain operation: explicit sensing graph plus throughput-feedback burst control.
struct TopologyConfig
{
    std::vector<std::pair<StationId, StationId>> edges;
    bool controller = true;
    double alpha = 0.1;
    StepSchedule schedule = StepSchedule::Constant;
    /// Empty disables updates.
    std::optional<TimeUs> updatePeriodUs = 4000;
    TimeUs averagingWindowUs = 40'000;
    TimeUs initialBurstUs = 1000;
    /// 0 means one packet airtime.
    TimeUs minBurstUs = 0;
    TimeUs maxBurstUs = 10'000;

    bool operator==(const TopologyConfig&) const = default;
};

struct ScenarioConfig
{
    std::string name = "custom";
    double durationS = 20.0;
    std::uint64_t seed = 1;
    /// Statistics in the summary ignore [0, warmup).
    double warmupS = 0.0;
    TimeUs samplePeriodUs = 100'000;
    TimeUs fairnessWindowUs = 1'000'000;
    PhyParams phy;
    bool capture = false;
    std::vector<StationConfig> stations;
    std::optional<TopologyConfig> topology;

    TimeUs DurationUs() const;
    TimeUs WarmupUs() const;
    const StationConfig& Station(StationId id) const;

    bool operator==(const ScenarioConfig&) const = default;
};

struct ValidationReport
{
    std::vector<std::string> errors;
    std::vector<std::string> warnings;

    bool Ok() const { return errors.empty(); }
};

/// Structural problems are errors; the credit stability test is only a warning.
ValidationReport Validate(const ScenarioConfig& cfg);

std::string SerializeScenario(const ScenarioConfig& cfg);
/// Throws std::invalid_argument on malformed input or unknown keys.
ScenarioConfig ParseScenario(const std::string& text);
ScenarioConfig LoadScenarioFile(const std::string& path);

} // namespace vls

#endif
