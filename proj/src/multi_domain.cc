#include "vls/multi_domain.h"

#include <algorithm>
#include <stdexcept>

namespace vls {

ContentionGraph::ContentionGraph(std::vector<StationId> stations)
{
    for (StationId id : stations)
    {
        AddStation(id);
    }
}

ContentionGraph
ContentionGraph::Complete(std::vector<StationId> stations)
{
    ContentionGraph g(stations);
    for (std::size_t i = 0; i < stations.size(); ++i)
    {
        for (std::size_t k = i + 1; k < stations.size(); ++k)
        {
            g.AddEdge(stations[i], stations[k]);
        }
    }
    return g;
}

void
ContentionGraph::AddStation(StationId id)
{
    if (m_adj.contains(id))
    {
        throw std::invalid_argument("ContentionGraph: duplicate station " + std::to_string(id));
    }
    m_stations.push_back(id);
    m_adj[id].insert(id);
}

void
ContentionGraph::AddEdge(StationId a, StationId b)
{
    if (!m_adj.contains(a) || !m_adj.contains(b))
    {
        throw std::invalid_argument("ContentionGraph: edge references unknown station");
    }
    m_adj[a].insert(b);
    m_adj[b].insert(a);
}

bool
ContentionGraph::Senses(StationId a, StationId b) const
{
    auto it = m_adj.find(a);
    return it != m_adj.end() && it->second.contains(b);
}

const std::set<StationId>&
ContentionGraph::Neighbors(StationId j) const
{
    auto it = m_adj.find(j);
    if (it == m_adj.end())
    {
        throw std::invalid_argument("ContentionGraph: unknown station " + std::to_string(j));
    }
    return it->second;
}

std::vector<std::pair<StationId, StationId>>
ContentionGraph::Edges() const
{
    std::vector<std::pair<StationId, StationId>> edges;
    for (const auto& [a, nbrs] : m_adj)
    {
        for (StationId b : nbrs)
        {
            if (a < b)
            {
                edges.emplace_back(a, b);
            }
        }
    }
    return edges;
}

bool
ContentionGraph::IsComplete() const
{
    return std::all_of(m_adj.begin(), m_adj.end(),
                       [this](const auto& kv) { return kv.second.size() == m_stations.size(); });
}

namespace {

void
BronKerbosch(const std::map<StationId, std::set<StationId>>& adj, std::set<StationId> r,
             std::set<StationId> p, std::set<StationId> x, std::vector<std::set<StationId>>& out)
{
    if (p.empty() && x.empty())
    {
        out.push_back(r);
        return;
    }
    const std::set<StationId> candidates = p;
    for (StationId v : candidates)
    {
        const auto& nv = adj.at(v);
        std::set<StationId> r2 = r;
        r2.insert(v);
        std::set<StationId> p2;
        std::set<StationId> x2;
        for (StationId u : p)
        {
            if (u != v && nv.contains(u))
            {
                p2.insert(u);
            }
        }
        for (StationId u : x)
        {
            if (u != v && nv.contains(u))
            {
                x2.insert(u);
            }
        }
        BronKerbosch(adj, r2, p2, x2, out);
        p.erase(v);
        x.insert(v);
    }
}

} // namespace

std::vector<std::set<StationId>>
ContentionGraph::CollisionDomains() const
{
    std::vector<std::set<StationId>> out;
    std::set<StationId> all(m_stations.begin(), m_stations.end());
    BronKerbosch(m_adj, {}, all, {}, out);
    std::sort(out.begin(), out.end());
    return out;
}

double
BurstController::StepSize() const
{
    if (schedule == StepSchedule::Inverse)
    {
        return alpha / static_cast<double>(updates + 1);
    }
    return alpha;
}

BurstController
UpdateBurst(BurstController ctrl, double ownThroughput, double neighborhoodThroughput, double ownWeight,
            double neighborhoodWeight)
{
    if (!(neighborhoodThroughput > 0.0))
    {
        return ctrl;
    }
    if (!(neighborhoodWeight > 0.0))
    {
        throw std::invalid_argument("UpdateBurst: neighbourhood weight must be positive");
    }
    const double error = ownThroughput / neighborhoodThroughput - ownWeight / neighborhoodWeight;
    const double next = ctrl.burstUs - ctrl.StepSize() * ctrl.burstUs * error;
    ctrl.burstUs = std::clamp(next, ctrl.minBurstUs, ctrl.maxBurstUs);
    ++ctrl.updates;
    return ctrl;
}

ThroughputMonitor::ThroughputMonitor(TimeUs window)
    : m_window(window)
{
    if (window <= 0)
    {
        throw std::invalid_argument("ThroughputMonitor: window must be positive");
    }
}

void
ThroughputMonitor::Record(StationId station, TimeUs at, std::uint64_t bytes)
{
    auto& q = m_samples[station];
    if (!q.empty() && at < q.back().at)
    {
        throw std::logic_error("ThroughputMonitor: samples must arrive in time order");
    }
    q.push_back({at, bytes});
    m_windowBytes[station] += bytes;
}

void
ThroughputMonitor::Expire(StationId station, TimeUs now)
{
    auto it = m_samples.find(station);
    if (it == m_samples.end())
    {
        return;
    }
    auto& q = it->second;
    auto& sum = m_windowBytes[station];
    while (!q.empty() && q.front().at <= now - m_window)
    {
        sum -= q.front().bytes;
        q.pop_front();
    }
}

double
ThroughputMonitor::Rate(StationId station, TimeUs now)
{
    Expire(station, now);
    const TimeUs span = std::min(now, m_window);
    if (span <= 0)
    {
        return 0.0;
    }
    auto it = m_windowBytes.find(station);
    const std::uint64_t bytes = it == m_windowBytes.end() ? 0 : it->second;
    return static_cast<double>(bytes) * 8.0 * 1e6 / static_cast<double>(span);
}

std::pair<double, double>
ThroughputMonitor::Observe(StationId station, const ContentionGraph& graph, TimeUs now)
{
    const double own = Rate(station, now);
    double sum = 0.0;
    for (StationId k : graph.Neighbors(station))
    {
        sum += k == station ? own : Rate(k, now);
    }
    return {own, sum};
}

std::vector<TimeUs>
ScheduleUpdates(TimeUs period, TimeUs duration, std::size_t index, std::size_t stationCount)
{
    if (period <= 0)
    {
        throw std::invalid_argument("ScheduleUpdates: period must be positive");
    }
    if (stationCount == 0 || index >= stationCount)
    {
        throw std::invalid_argument("ScheduleUpdates: station index out of range");
    }
    std::vector<TimeUs> times;
    const TimeUs phase = static_cast<TimeUs>(index) * period / static_cast<TimeUs>(stationCount);
    for (TimeUs t = phase; t < duration; t += period)
    {
        times.push_back(t);
    }
    return times;
}

} // namespace vls
