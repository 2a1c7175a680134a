#include "vls/vls.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace vls {

std::string
ToString(FairnessMetric m)
{
    switch (m)
    {
    case FairnessMetric::Packets:
        return "packets";
    case FairnessMetric::Bits:
        return "bits";
    case FairnessMetric::AirTime:
        return "airtime";
    }
    return "packets";
}

FairnessMetric
ParseFairnessMetric(const std::string& s)
{
    if (s == "packets")
    {
        return FairnessMetric::Packets;
    }
    if (s == "bits")
    {
        return FairnessMetric::Bits;
    }
    if (s == "airtime")
    {
        return FairnessMetric::AirTime;
    }
    throw std::invalid_argument("unknown fairness metric '" + s + "'");
}

std::int64_t
MetricQuantum(FairnessMetric metric, const PacketInfo& packet)
{
    switch (metric)
    {
    case FairnessMetric::Packets:
        return 1;
    case FairnessMetric::Bits:
        return std::int64_t{8} * packet.payloadBytes;
    case FairnessMetric::AirTime:
        return packet.airtime;
    }
    return 1;
}

Credit
Credit::Increment(Fixed6 c, Fixed6 w, std::int64_t quantum)
{
    return FromRaw(Raw{c.Micros()} * Raw{w.Micros()} * Raw{quantum});
}

double
Credit::ToDouble() const
{
    // split to keep precision for large magnitudes
    const Raw whole = m_raw / kScale;
    const Raw frac = m_raw % kScale;
    return static_cast<double>(whole) + static_cast<double>(frac) / static_cast<double>(kScale);
}

std::int64_t
Credit::FloorPackets(std::int64_t quantum) const
{
    if (quantum <= 0)
    {
        throw std::invalid_argument("Credit::FloorPackets: quantum must be positive");
    }
    const Raw unit = Raw{quantum} * kScale;
    Raw q = m_raw / unit;
    if (m_raw % unit != 0 && m_raw < 0)
    {
        --q;
    }
    return static_cast<std::int64_t>(q);
}

VlsState
VlsState::Make(StationId id, Fixed6 weight, Fixed6 clockSpeed, std::optional<std::uint32_t> burstCap,
               FairnessMetric metric)
{
    if (weight <= Fixed6{})
    {
        throw std::invalid_argument("VlsState: weight must be positive");
    }
    if (clockSpeed <= Fixed6{})
    {
        throw std::invalid_argument("VlsState: clock speed must be positive");
    }
    if (burstCap && *burstCap == 0)
    {
        throw std::invalid_argument("VlsState: burst cap must be positive");
    }
    VlsState s;
    s.stationId = id;
    s.weight = weight;
    s.clockSpeed = clockSpeed;
    s.burstCap = burstCap;
    s.metric = metric;
    return s;
}

VlsState
OnVirtualSlot(VlsState s, std::int64_t quantum)
{
    const Credit inc = Credit::Increment(s.clockSpeed, s.weight, quantum);
    ++s.virtualSlots;
    s.credit += inc;
    s.accrued += inc;
    return s;
}

std::uint32_t
BurstLengthOnWin(const VlsState& s, std::int64_t quantum)
{
    if (s.credit <= Credit{})
    {
        return 0;
    }
    std::int64_t n = std::max<std::int64_t>(1, s.credit.FloorPackets(quantum));
    if (s.burstCap)
    {
        n = std::min<std::int64_t>(n, *s.burstCap);
    }
    n = std::min<std::int64_t>(n, std::numeric_limits<std::uint32_t>::max());
    return static_cast<std::uint32_t>(n);
}

VlsState
OnBurstProgress(VlsState s, std::uint32_t planned, std::uint32_t acked, bool aborted, std::int64_t quantum)
{
    if (acked > planned)
    {
        throw std::logic_error("OnBurstProgress: more packets acknowledged than planned");
    }
    if (!aborted && acked != planned)
    {
        throw std::logic_error("OnBurstProgress: completed burst must acknowledge every packet");
    }
    const Credit charge = Credit::Units(static_cast<std::int64_t>(acked) * quantum);
    s.credit -= charge;
    s.spent += charge;
    return s;
}

std::uint64_t
ApCounter::RecordAndPiggyback(StationId station)
{
    m_lastReported[station] = m_v;
    return m_v;
}

std::optional<std::uint64_t>
ApCounter::LastReported(StationId station) const
{
    auto it = m_lastReported.find(station);
    if (it == m_lastReported.end())
    {
        return std::nullopt;
    }
    return it->second;
}

std::uint32_t
ApVariantBurst(std::uint32_t weight, std::optional<std::uint64_t> vPrev, std::uint64_t vNow)
{
    if (weight == 0)
    {
        throw std::invalid_argument("ApVariantBurst: weight must be positive");
    }
    if (!vPrev)
    {
        return weight;
    }
    if (vNow <= *vPrev)
    {
        throw std::logic_error("ApVariantBurst: piggybacked count did not advance");
    }
    const std::uint64_t extra = std::uint64_t{weight} * (vNow - *vPrev - 1);
    return static_cast<std::uint32_t>(std::min<std::uint64_t>(
        weight + extra, std::numeric_limits<std::uint32_t>::max()));
}

namespace {

void
CheckStabilityInputs(double weight, double clockSpeed, double winProb)
{
    if (!(weight > 0.0) || !(clockSpeed > 0.0))
    {
        throw std::invalid_argument("stability check: weight and clock speed must be positive");
    }
    if (!(winProb >= 0.0 && winProb <= 1.0))
    {
        throw std::invalid_argument("stability check: win probability must lie in [0,1]");
    }
}

StabilityVerdict
Compare(double effectiveCap, double weight, double clockSpeed, double winProb)
{
    StabilityVerdict v;
    if (winProb == 0.0)
    {
        v.verdict = Stability::Unstable;
        v.threshold = std::numeric_limits<double>::infinity();
        v.diagnostic = "zero win probability: credit grows without bound";
        return v;
    }
    v.threshold = weight * clockSpeed / winProb;
    if (effectiveCap > v.threshold)
    {
        v.verdict = Stability::Stable;
    }
    else
    {
        v.verdict = Stability::Unstable;
        v.diagnostic = "burst limit " + std::to_string(effectiveCap) + " <= W*c/p = " +
                       std::to_string(v.threshold);
    }
    return v;
}

} // namespace

StabilityVerdict
StabilityCheck(std::optional<double> burstCap, double weight, double clockSpeed, double winProb)
{
    CheckStabilityInputs(weight, clockSpeed, winProb);
    if (!burstCap && winProb > 0.0)
    {
        StabilityVerdict v;
        v.threshold = weight * clockSpeed / winProb;
        return v;
    }
    return Compare(burstCap.value_or(std::numeric_limits<double>::infinity()), weight, clockSpeed,
                   winProb);
}

StabilityVerdict
StabilityCheckMarkov(std::optional<double> burstCap, double weight, double clockSpeed,
                     double winProb, std::span<const double> goodPeriods)
{
    CheckStabilityInputs(weight, clockSpeed, winProb);
    if (goodPeriods.empty())
    {
        throw std::invalid_argument("StabilityCheckMarkov: no good-period samples");
    }
    const double cap = burstCap.value_or(std::numeric_limits<double>::infinity());
    double sum = 0.0;
    for (double t : goodPeriods)
    {
        if (t < 0.0)
        {
            throw std::invalid_argument("StabilityCheckMarkov: negative good period");
        }
        sum += std::min(cap, t);
    }
    return Compare(sum / static_cast<double>(goodPeriods.size()), weight, clockSpeed, winProb);
}

Fixed6
ComputeClockBroadcast(const ClockPolicy& policy)
{
    if (const auto* k = std::get_if<KnownStationCount>(&policy))
    {
        if (k->n == 0)
        {
            throw std::invalid_argument("clock policy: station count must be positive");
        }
        return Fixed6::FromDouble(1.0 / k->n);
    }
    if (const auto* d = std::get_if<DelayTarget>(&policy))
    {
        if (d->measuredDelay == 0.0)
        {
            throw std::invalid_argument("clock policy: measured delay must be non-zero");
        }
        return Fixed6::FromDouble(d->currentSpeed * d->targetDelay / d->measuredDelay);
    }
    const auto& ap = std::get<ApControlledSpeed>(policy);
    return Fixed6::FromDouble(ap.value);
}

ClockSpeedTable::ClockSpeedTable(Fixed6 initial)
    : m_initial(initial)
{
    if (initial <= Fixed6{})
    {
        throw std::invalid_argument("ClockSpeedTable: initial speed must be positive");
    }
}

void
ClockSpeedTable::Merge(StationId sender, Fixed6 c)
{
    if (c <= Fixed6{})
    {
        throw std::invalid_argument("ClockSpeedTable: broadcast speed must be positive");
    }
    m_entries[sender] = c;
}

Fixed6
ClockSpeedTable::Effective() const
{
    if (m_entries.empty())
    {
        return m_initial;
    }
    Fixed6 lowest = m_entries.begin()->second;
    for (const auto& [id, c] : m_entries)
    {
        lowest = std::min(lowest, c);
    }
    return lowest;
}

} // namespace vls
