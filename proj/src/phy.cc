#include "vls/phy.h"

#include <stdexcept>

namespace vls {

void
PhyParams::Validate() const
{
    if (slotTime <= 0 || sifs <= 0 || difs <= 0 || ackDuration <= 0 || headerOverhead < 0)
    {
        throw std::invalid_argument("phy: durations must be positive");
    }
    if (dataRate == 0)
    {
        throw std::invalid_argument("phy: data rate must be positive");
    }
    if (packetPayload == 0)
    {
        throw std::invalid_argument("phy: packet payload must be positive");
    }
    if (difs <= sifs)
    {
        throw std::invalid_argument("phy: DIFS must exceed SIFS");
    }
}

TimeUs
PacketAirtime(const PhyParams& phy, std::uint32_t nBytes)
{
    if (nBytes == 0)
    {
        throw std::invalid_argument("PacketAirtime: zero-length packet");
    }
    if (phy.dataRate == 0)
    {
        throw std::invalid_argument("PacketAirtime: zero data rate");
    }
    // exact integer ceil(8 n 1e6 / rate)
    const std::uint64_t bitsTimesMicro = std::uint64_t{8} * nBytes * 1'000'000ULL;
    const std::uint64_t payloadUs = (bitsTimesMicro + phy.dataRate - 1) / phy.dataRate;
    return phy.headerOverhead + static_cast<TimeUs>(payloadUs);
}

TimeUs
ExchangeDuration(const PhyParams& phy, std::uint32_t nBytes)
{
    return PacketAirtime(phy, nBytes) + phy.sifs + phy.ackDuration;
}

} // namespace vls
