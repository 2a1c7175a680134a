#include "vls/station_mac.h"

#include <algorithm>
#include <stdexcept>

namespace vls {

StationMac
StationMac::Make(StationId id, std::uint32_t cwMin, std::uint32_t cwMax)
{
    if (cwMin == 0 || cwMax < cwMin)
    {
        throw std::invalid_argument("StationMac: require 0 < cwMin <= cwMax");
    }
    StationMac mac;
    mac.stationId = id;
    mac.cwMin = cwMin;
    mac.cwMax = cwMax;
    mac.cw = cwMin;
    return mac;
}

std::uint32_t
DrawBackoff(const StationMac& mac, RngStream& rng)
{
    return rng.UniformInt(mac.cw);
}

StationMac
ApplyBeb(StationMac mac, TxOutcome outcome)
{
    if (outcome == TxOutcome::Loss)
    {
        mac.cw = std::min(2 * mac.cw, mac.cwMax);
        ++mac.retryCount;
    }
    else
    {
        mac.cw = mac.cwMin;
        mac.retryCount = 0;
    }
    return mac;
}

} // namespace vls
