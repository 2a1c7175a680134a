#ifndef VLS_STATION_MAC_H
#define VLS_STATION_MAC_H

#include "vls/phy.h"
#include "vls/rng.h"

#include <cstdint>

namespace vls {

/// DCF contention state of one station.
struct StationMac
{
    StationId stationId = 0;
    std::uint32_t cwMin = 32;
    std::uint32_t cwMax = 1024;
    std::uint32_t cw = 32;
    std::uint32_t backoffCounter = 0;
    std::uint32_t retryCount = 0;
    bool backlogged = true;

    static StationMac Make(StationId id, std::uint32_t cwMin, std::uint32_t cwMax);
};

enum class TxOutcome
{
    Success,
    Loss,
};

/// Uniform draw in [0, cw). Does not touch the MAC state.
std::uint32_t DrawBackoff(const StationMac& mac, RngStream& rng);

/// Binary exponential backoff: double on loss (capped at cwMax), reset on success.
StationMac ApplyBeb(StationMac mac, TxOutcome outcome);

} // namespace vls

#endif
