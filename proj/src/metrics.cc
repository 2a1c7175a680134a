#include "vls/metrics.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vls {

const std::vector<std::string>&
MetricsTrace::Columns()
{
    static const std::vector<std::string> cols{"time_s",          "station_id",
                                               "window_throughput_bps", "cumulative_packets",
                                               "cumulative_bytes", "credit",
                                               "mean_burst_len",  "virtual_slots"};
    return cols;
}

void
MetricsTrace::WriteCsv(std::ostream& os) const
{
    const auto& cols = Columns();
    for (std::size_t i = 0; i < cols.size(); ++i)
    {
        os << (i ? "," : "") << cols[i];
    }
    os << "\r\n";
    std::ostringstream line;
    line << std::fixed;
    for (const auto& r : rows)
    {
        line.str("");
        line << std::setprecision(3) << r.timeS << ',' << r.stationId << ',' << std::setprecision(1)
             << r.windowThroughputBps << ',' << r.cumulativePackets << ',' << r.cumulativeBytes << ','
             << std::setprecision(6) << r.credit << ',' << std::setprecision(4) << r.meanBurstLen << ','
             << r.virtualSlots << "\r\n";
        os << line.str();
    }
}

std::string
MetricsTrace::ToCsv() const
{
    std::ostringstream os;
    WriteCsv(os);
    return os.str();
}

double
JainIndex(std::span<const double> x)
{
    if (x.empty())
    {
        throw std::invalid_argument("JainIndex: empty input");
    }
    double sum = 0.0;
    double sumSq = 0.0;
    for (double v : x)
    {
        if (v < 0.0 || !std::isfinite(v))
        {
            throw std::invalid_argument("JainIndex: throughputs must be finite and non-negative");
        }
        sum += v;
        sumSq += v * v;
    }
    if (sumSq == 0.0)
    {
        throw std::invalid_argument("JainIndex: undefined for an all-zero vector");
    }
    return sum * sum / (static_cast<double>(x.size()) * sumSq);
}

double
WeightedFairnessError(std::span<const double> throughput, std::span<const double> weights)
{
    if (throughput.size() != weights.size() || throughput.empty())
    {
        throw std::invalid_argument("WeightedFairnessError: size mismatch");
    }
    std::vector<double> ratio;
    ratio.reserve(throughput.size());
    for (std::size_t i = 0; i < throughput.size(); ++i)
    {
        if (!(weights[i] > 0.0))
        {
            throw std::invalid_argument("WeightedFairnessError: weights must be positive");
        }
        ratio.push_back(throughput[i] / weights[i]);
    }
    double mean = 0.0;
    for (double r : ratio)
    {
        mean += r;
    }
    mean /= static_cast<double>(ratio.size());
    if (mean == 0.0)
    {
        return 0.0;
    }
    double worst = 0.0;
    for (double r : ratio)
    {
        worst = std::max(worst, std::fabs(r / mean - 1.0));
    }
    return worst;
}

ThroughputSeries
WindowedThroughput(std::span<const Delivery> deliveries, std::span<const StationId> stations, TimeUs window,
                   TimeUs start, TimeUs end)
{
    if (window <= 0)
    {
        throw std::invalid_argument("WindowedThroughput: window must be positive");
    }
    ThroughputSeries s;
    s.window = window;
    s.start = start;
    s.stations.assign(stations.begin(), stations.end());
    if (end <= start)
    {
        return s;
    }
    const std::size_t n = static_cast<std::size_t>((end - start) / window);
    std::map<StationId, std::size_t> column;
    for (std::size_t i = 0; i < s.stations.size(); ++i)
    {
        column[s.stations[i]] = i;
    }
    std::vector<std::vector<std::uint64_t>> bits(n, std::vector<std::uint64_t>(s.stations.size(), 0));
    for (const auto& d : deliveries)
    {
        if (d.at < start)
        {
            continue;
        }
        const auto w = static_cast<std::size_t>((d.at - start) / window);
        auto col = column.find(d.station);
        if (w >= n || col == column.end())
        {
            continue;
        }
        bits[w][col->second] += std::uint64_t{8} * d.bytes;
    }
    const double windowS = static_cast<double>(window) / 1e6;
    s.bps.resize(n);
    for (std::size_t w = 0; w < n; ++w)
    {
        s.bps[w].reserve(s.stations.size());
        for (auto b : bits[w])
        {
            s.bps[w].push_back(static_cast<double>(b) / windowS);
        }
    }
    return s;
}

ThroughputSeries
WindowedThroughput(std::span<const Delivery> deliveries, TimeUs window)
{
    if (window <= 0)
    {
        throw std::invalid_argument("WindowedThroughput: window must be positive");
    }
    if (deliveries.empty())
    {
        ThroughputSeries s;
        s.window = window;
        return s;
    }
    std::set<StationId> ids;
    TimeUs last = 0;
    for (const auto& d : deliveries)
    {
        ids.insert(d.station);
        last = std::max(last, d.at);
    }
    const std::vector<StationId> stations(ids.begin(), ids.end());
    const TimeUs end = (last / window + 1) * window;
    return WindowedThroughput(deliveries, stations, window, 0, end);
}

double
MeanJainIndex(const ThroughputSeries& series)
{
    double sum = 0.0;
    std::size_t used = 0;
    for (const auto& w : series.bps)
    {
        if (std::all_of(w.begin(), w.end(), [](double v) { return v == 0.0; }))
        {
            continue;
        }
        sum += JainIndex(w);
        ++used;
    }
    return used == 0 ? 0.0 : sum / static_cast<double>(used);
}

} // namespace vls
