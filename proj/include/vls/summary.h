#ifndef VLS_SUMMARY_H
#define VLS_SUMMARY_H

#include "vls/simulator.h"

#include <string>
#include <vector>

namespace vls {

struct StationSummary
{
    StationId id = 0;
    double weight = 1.0;
    double throughputBps = 0.0; // after warmup
    std::uint64_t packets = 0;
    std::uint64_t attempts = 0;
    std::uint64_t losses = 0;
    std::uint64_t deferrals = 0;
    double meanBurstMs = 0.0;
    double credit = 0.0;
};

/// Run-level figures; everything is measured over [warmup, duration).
struct RunSummary
{
    std::string scenario;
    std::uint64_t seed = 0;
    double durationS = 0.0;
    double warmupS = 0.0;
    double jain1sMean = 0.0;
    double weightedFairnessError = 0.0;
    double totalThroughputBps = 0.0;
    std::vector<StationSummary> perStation;
};

RunSummary Summarize(const SimResult& result);
std::string SummaryToJson(const RunSummary& summary);

} // namespace vls

#endif
