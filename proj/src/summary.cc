#include "vls/summary.h"

#include <json.hpp>

namespace vls {

RunSummary
Summarize(const SimResult& result)
{
    const ScenarioConfig& cfg = result.config;
    RunSummary s;
    s.scenario = cfg.name;
    s.seed = cfg.seed;
    s.durationS = cfg.durationS;
    s.warmupS = cfg.warmupS;

    const double spanS = static_cast<double>(cfg.DurationUs() - cfg.WarmupUs()) / 1e6;
    std::vector<double> throughput;
    std::vector<double> weights;
    std::vector<StationId> ids;
    for (const auto& st : result.stations)
    {
        StationSummary row;
        row.id = st.id;
        row.weight = st.weight;
        row.throughputBps = spanS > 0 ? static_cast<double>(st.bytesAfterWarmup) * 8.0 / spanS : 0.0;
        row.packets = st.packets;
        row.attempts = st.attempts;
        row.losses = st.losses;
        row.deferrals = st.deferrals;
        row.meanBurstMs = st.meanBurstMs;
        row.credit = st.credit;
        s.totalThroughputBps += row.throughputBps;
        throughput.push_back(row.throughputBps);
        weights.push_back(row.weight);
        ids.push_back(st.id);
        s.perStation.push_back(row);
    }
    if (s.totalThroughputBps > 0)
    {
        s.weightedFairnessError = WeightedFairnessError(throughput, weights);
    }
    const ThroughputSeries series =
        WindowedThroughput(result.deliveries, ids, cfg.fairnessWindowUs, cfg.WarmupUs(), cfg.DurationUs());
    s.jain1sMean = MeanJainIndex(series);
    return s;
}

std::string
SummaryToJson(const RunSummary& summary)
{
    nlohmann::ordered_json j;
    j["scenario"] = summary.scenario;
    j["seed"] = summary.seed;
    j["duration_s"] = summary.durationS;
    j["warmup_s"] = summary.warmupS;
    j["jain_1s_mean"] = summary.jain1sMean;
    j["weighted_fairness_error"] = summary.weightedFairnessError;
    j["total_throughput_bps"] = summary.totalThroughputBps;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : summary.perStation)
    {
        nlohmann::ordered_json o;
        o["station_id"] = r.id;
        o["weight"] = r.weight;
        o["throughput_bps"] = r.throughputBps;
        o["packets"] = r.packets;
        o["attempts"] = r.attempts;
        o["losses"] = r.losses;
        o["deferrals"] = r.deferrals;
        o["mean_burst_ms"] = r.meanBurstMs;
        o["credit"] = r.credit;
        rows.push_back(o);
    }
    j["per_station"] = rows;
    return j.dump(2) + "\n";
}

} // namespace vls
