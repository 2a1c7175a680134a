#ifndef VLS_SIMULATOR_H
#define VLS_SIMULATOR_H

#include "vls/medium_event.h"
#include "vls/metrics.h"
#include "vls/scenario.h"

#include <functional>
#include <memory>
#include <vector>

namespace vls {

struct StationStats
{
    StationId id = 0;
    double weight = 1.0;
    std::uint64_t packets = 0;
    std::uint64_t bytes = 0;
    std::uint64_t bytesAfterWarmup = 0;
    std::uint64_t attempts = 0; // DATA frames sent
    std::uint64_t losses = 0;   // DATA frames not ACKed
    std::uint64_t bursts = 0;   // bursts with at least one ACK
    std::uint64_t burstPackets = 0;
    std::uint64_t deferrals = 0; // contention wins given up for lack of credit
    std::uint64_t virtualSlots = 0;
    double credit = 0.0;
    std::uint32_t finalCw = 0;
    /// Mean burst length (ms) over bursts started after warmup: the controller's length
    /// with a topology, otherwise the planned data airtime.
    double meanBurstMs = 0.0;
    double controllerBurstUs = 0.0;
};

struct SimResult
{
    ScenarioConfig config;
    MetricsTrace trace;
    std::vector<Delivery> deliveries;
    std::vector<StationStats> stations; // ascending id
    std::uint64_t eventsProcessed = 0;
};

/**
 * Event-driven CSMA/CA simulation of one scenario. Every station senses the
 * stations it shares an edge with (all of them without a topology, plus an
 * implicit access point that receives every flow). Each DATA frame reserves
 * the medium for DATA + SIFS + ACK at every station that hears it; a burst
 * continues after SIFS without carrier sensing.
 */
class Simulator
{
  public:
    /// Throws std::invalid_argument if the scenario fails validation.
    explicit Simulator(ScenarioConfig cfg);
    ~Simulator();
    Simulator(const Simulator&) = delete;
    Simulator& operator=(const Simulator&) = delete;

    /// Busy periods and idle slots as heard by the access point (single domain only).
    void Subscribe(std::function<void(const MediumEvent&)> observer);
    /// Every backoff draw: (station, time, drawn slots).
    void SubscribeBackoff(std::function<void(StationId, TimeUs, std::uint32_t)> observer);

    SimResult Run();

  private:
    class Impl;
    std::unique_ptr<Impl> m_impl;
};

/// Convenience: validate, run and return the result.
SimResult RunScenario(const ScenarioConfig& cfg);

} // namespace vls

#endif
