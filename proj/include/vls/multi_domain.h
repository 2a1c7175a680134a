#ifndef VLS_MULTI_DOMAIN_H
#define VLS_MULTI_DOMAIN_H

#include "vls/phy.h"

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace vls {

/**
 * Symmetric carrier-sensing relation between stations. Every station senses
 * itself, so Neighbors(j) always contains j.
 */
class ContentionGraph
{
  public:
    ContentionGraph() = default;
    explicit ContentionGraph(std::vector<StationId> stations);

    /// A graph in which every station senses every other.
    static ContentionGraph Complete(std::vector<StationId> stations);

    void AddStation(StationId id);
    /// Adds the symmetric edge a--b. Throws std::invalid_argument for unknown ids.
    void AddEdge(StationId a, StationId b);

    bool Senses(StationId a, StationId b) const;
    const std::set<StationId>& Neighbors(StationId j) const;
    const std::vector<StationId>& Stations() const { return m_stations; }
    std::vector<std::pair<StationId, StationId>> Edges() const;

    /// Maximal cliques: the collision domains.
    std::vector<std::set<StationId>> CollisionDomains() const;
    bool IsComplete() const;

  private:
    std::vector<StationId> m_stations;
    std::map<StationId, std::set<StationId>> m_adj;
};

enum class StepSchedule
{
    Constant,
    Inverse, // alpha / k on the k-th update
};

struct BurstController
{
    double burstUs = 1000.0;
    double alpha = 0.1;
    StepSchedule schedule = StepSchedule::Constant;
    double minBurstUs = 1.0;
    double maxBurstUs = 10'000.0;
    std::uint64_t updates = 0;

    double StepSize() const;
};

/**
 * b <- b - alpha * b * (S_j / sum S - W_j / sum W), clamped to the
 * controller's bounds. A zero throughput sum carries no information and
 * leaves the controller untouched.
 */
BurstController UpdateBurst(BurstController ctrl, double ownThroughput, double neighborhoodThroughput,
                            double ownWeight, double neighborhoodWeight);

/**
 * Delivered bytes per station over a sliding window. Stations overhear their
 * neighbours perfectly, so one monitor serves every station.
 */
class ThroughputMonitor
{
  public:
    explicit ThroughputMonitor(TimeUs window);

    void Record(StationId station, TimeUs at, std::uint64_t bytes);
    /// Rate in bit/s over (now - window, now], clipped at t = 0.
    double Rate(StationId station, TimeUs now);
    /// (S_j, sum over Neighbors(j) of S_k) for station j.
    std::pair<double, double> Observe(StationId station, const ContentionGraph& graph, TimeUs now);
    TimeUs Window() const { return m_window; }

  private:
    void Expire(StationId station, TimeUs now);

    struct Sample
    {
        TimeUs at;
        std::uint64_t bytes;
    };

    TimeUs m_window;
    std::map<StationId, std::deque<Sample>> m_samples;
    std::map<StationId, std::uint64_t> m_windowBytes;
};

/// Update instants of the index-th of n stations: phase index*period/n, then every period, within [0, duration).
std::vector<TimeUs> ScheduleUpdates(TimeUs period, TimeUs duration, std::size_t index, std::size_t stationCount);

} // namespace vls

#endif
