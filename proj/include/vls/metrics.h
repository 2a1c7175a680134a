#ifndef VLS_METRICS_H
#define VLS_METRICS_H

#include "vls/phy.h"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace vls {

/// An ACKed DATA packet.
struct Delivery
{
    TimeUs at = 0;
    StationId station = 0;
    std::uint32_t bytes = 0;
};

struct TraceRow
{
    double timeS = 0.0;
    StationId stationId = 0;
    double windowThroughputBps = 0.0;
    std::uint64_t cumulativePackets = 0;
    std::uint64_t cumulativeBytes = 0;
    double credit = 0.0;
    double meanBurstLen = 0.0; // packets per successful burst, cumulative
    std::uint64_t virtualSlots = 0;
};

/// Sampled per-station time series; rows are ordered by (time, station).
struct MetricsTrace
{
    std::vector<TraceRow> rows;

    static const std::vector<std::string>& Columns();
    void WriteCsv(std::ostream& os) const;
    std::string ToCsv() const;
};

/// (sum x)^2 / (n * sum x^2). Throws std::invalid_argument for empty, negative or all-zero input.
double JainIndex(std::span<const double> x);

/// max_j |(T_j / W_j) / mean_k(T_k / W_k) - 1|. Throws std::invalid_argument on size mismatch or W_j <= 0.
double WeightedFairnessError(std::span<const double> throughput, std::span<const double> weights);

/// Delivered bits per station in consecutive non-overlapping windows, as bit/s.
struct ThroughputSeries
{
    TimeUs window = 0;
    TimeUs start = 0;
    std::vector<StationId> stations;
    std::vector<std::vector<double>> bps; // [window index][station index]

    std::size_t Windows() const { return bps.size(); }
};

/// Full windows in [start, end); deliveries outside are ignored.
ThroughputSeries WindowedThroughput(std::span<const Delivery> deliveries, std::span<const StationId> stations,
                                    TimeUs window, TimeUs start, TimeUs end);

/// Windows from t = 0 up to and including the one holding the last delivery.
ThroughputSeries WindowedThroughput(std::span<const Delivery> deliveries, TimeUs window);

/// Average Jain index across windows; windows where nobody delivered are skipped. 0 if none remain.
double MeanJainIndex(const ThroughputSeries& series);

} // namespace vls

#endif
