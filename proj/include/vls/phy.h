#ifndef VLS_PHY_H
#define VLS_PHY_H

#include <cstdint>

namespace vls {

/// Simulation time in integer microseconds.
using TimeUs = std::int64_t;

using StationId = std::uint32_t;

/**
 * Timing parameters of the shared medium. Defaults are 802.11b DSSS values
 * at 11 Mbit/s with a 1000-byte payload.
 */
struct PhyParams
{
    TimeUs slotTime = 20;
    TimeUs sifs = 10;
    TimeUs difs = 50;
    std::uint64_t dataRate = 11'000'000; // bits/s
    std::uint32_t packetPayload = 1000;  // bytes
    TimeUs ackDuration = 112;
    TimeUs headerOverhead = 192; // PLCP preamble + header

    /// Throws std::invalid_argument if a duration is non-positive or DIFS <= SIFS.
    void Validate() const;

    bool operator==(const PhyParams&) const = default;
};

/// header_overhead + ceil(8 * nBytes / dataRate) in microseconds.
TimeUs PacketAirtime(const PhyParams& phy, std::uint32_t nBytes);

/// Medium occupancy of one DATA-SIFS-ACK exchange (the ACK timeout on failure).
TimeUs ExchangeDuration(const PhyParams& phy, std::uint32_t nBytes);

} // namespace vls

#endif
