#ifndef VLS_VLS_H
#define VLS_VLS_H

#include "vls/fixed.h"
#include "vls/phy.h"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>

namespace vls {

enum class FairnessMetric
{
    Packets,
    Bits,
    AirTime,
};

std::string ToString(FairnessMetric m);
FairnessMetric ParseFairnessMetric(const std::string& s);

struct PacketInfo
{
    std::uint32_t payloadBytes = 0;
    TimeUs airtime = 0;
};

/// Amount one packet costs in the given metric: 1, its payload bits, or its airtime in us.
std::int64_t MetricQuantum(FairnessMetric metric, const PacketInfo& packet);

/**
 * Exact credit amount, stored in units of 1e-12 of the active metric so that
 * (clock speed * weight) products of two six-digit decimals are exact.
 */
class Credit
{
  public:
    static constexpr std::int64_t kScale = 1'000'000'000'000LL;
    using Raw = __int128;

    constexpr Credit() = default;
    static constexpr Credit FromRaw(Raw raw)
    {
        Credit c;
        c.m_raw = raw;
        return c;
    }
    static constexpr Credit Units(std::int64_t units) { return FromRaw(Raw{units} * kScale); }
    /// c * w * quantum, exact.
    static Credit Increment(Fixed6 c, Fixed6 w, std::int64_t quantum);

    constexpr Raw RawValue() const { return m_raw; }
    double ToDouble() const;
    /// floor(credit / quantum) as a whole number of packets.
    std::int64_t FloorPackets(std::int64_t quantum) const;

    Credit& operator+=(Credit o)
    {
        m_raw += o.m_raw;
        return *this;
    }
    Credit& operator-=(Credit o)
    {
        m_raw -= o.m_raw;
        return *this;
    }
    friend Credit operator+(Credit a, Credit b) { return a += b; }
    friend Credit operator-(Credit a, Credit b) { return a -= b; }
    friend bool operator==(Credit a, Credit b) { return a.m_raw == b.m_raw; }
    friend auto operator<=>(Credit a, Credit b) { return a.m_raw <=> b.m_raw; }

  private:
    Raw m_raw = 0;
};

/// Per-station scheduler state. Invariant: credit == accrued - spent.
struct VlsState
{
    StationId stationId = 0;
    Fixed6 weight = Fixed6::FromInt(1);
    Fixed6 clockSpeed = Fixed6::FromInt(1);
    std::optional<std::uint32_t> burstCap; // packets
    FairnessMetric metric = FairnessMetric::Packets;

    Credit credit;
    Credit accrued;
    Credit spent;
    std::uint64_t virtualSlots = 0;

    static VlsState Make(StationId id, Fixed6 weight, Fixed6 clockSpeed,
                         std::optional<std::uint32_t> burstCap = std::nullopt,
                         FairnessMetric metric = FairnessMetric::Packets);
};

/// One virtual slot observed: V += 1, credit += c * W * quantum.
VlsState OnVirtualSlot(VlsState s, std::int64_t quantum = 1);

/**
 * Packets to send after winning contention (the winning slot must already be
 * counted): min(cap, floor(credit)), or a single packet when that floor is 0
 * but some credit is left. Returns 0 when credit <= 0: the station defers
 * instead of transmitting, which keeps credit above minus one packet.
 */
std::uint32_t BurstLengthOnWin(const VlsState& s, std::int64_t quantum = 1);

/// Charges the ACKed packets of a burst. Throws std::logic_error if acked > planned.
VlsState OnBurstProgress(VlsState s, std::uint32_t planned, std::uint32_t acked, bool aborted,
                         std::int64_t quantum = 1);

/// Virtual-slot counter kept by an access point and piggybacked in ACKs.
class ApCounter
{
  public:
    void OnVirtualSlot() { ++m_v; }
    std::uint64_t Value() const { return m_v; }
    /// Returns the current count and remembers it as the station's last report.
    std::uint64_t RecordAndPiggyback(StationId station);
    std::optional<std::uint64_t> LastReported(StationId station) const;

  private:
    std::uint64_t m_v = 0;
    std::map<StationId, std::uint64_t> m_lastReported;
};

/**
 * Total burst of the AP-assisted variant: W on the first win, otherwise
 * W + W * (vNow - vPrev - 1). Throws std::logic_error if vNow <= vPrev.
 */
std::uint32_t ApVariantBurst(std::uint32_t weight, std::optional<std::uint64_t> vPrev, std::uint64_t vNow);

enum class Stability
{
    Stable,
    Unstable,
};

struct StabilityVerdict
{
    Stability verdict = Stability::Stable;
    double threshold = 0.0; // W * c / p
    std::string diagnostic;
};

/**
 * Capped credits stay bounded iff burstCap > W * c / p. Without a cap the
 * credits are always stable. p == 0 is reported Unstable.
 */
StabilityVerdict StabilityCheck(std::optional<double> burstCap, double weight, double clockSpeed,
                                double winProb);

/**
 * Same test with a time-varying channel: E[min(B, T)] > W * c / p, where
 * goodPeriods are sampled good-state lengths in packet units (may be +inf).
 * Throws std::invalid_argument on an empty sample set.
 */
StabilityVerdict StabilityCheckMarkov(std::optional<double> burstCap, double weight,
                                      double clockSpeed, double winProb,
                                      std::span<const double> goodPeriods);

struct KnownStationCount
{
    std::uint32_t n = 0;
};

struct DelayTarget
{
    double currentSpeed = 0.0; // c0
    double targetDelay = 0.0;  // D
    double measuredDelay = 0.0; // d
};

struct ApControlledSpeed
{
    double value = 0.0;
};

using ClockPolicy = std::variant<KnownStationCount, DelayTarget, ApControlledSpeed>;

/// Clock speed a station broadcasts under the given policy.
Fixed6 ComputeClockBroadcast(const ClockPolicy& policy);

/**
 * Latest broadcast clock speed per sender. The effective speed is the
 * minimum over stored entries, or the initial value while none exist.
 */
class ClockSpeedTable
{
  public:
    explicit ClockSpeedTable(Fixed6 initial = Fixed6::FromInt(1));

    /// Replaces the sender's previous value. Throws std::invalid_argument if c <= 0.
    void Merge(StationId sender, Fixed6 c);
    Fixed6 Effective() const;
    std::size_t Size() const { return m_entries.size(); }

  private:
    Fixed6 m_initial;
    std::map<StationId, Fixed6> m_entries;
};

} // namespace vls

#endif
