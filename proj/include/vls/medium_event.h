#ifndef VLS_MEDIUM_EVENT_H
#define VLS_MEDIUM_EVENT_H

#include "vls/channel.h"
#include "vls/phy.h"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace vls {

/// One interval of medium activity as seen by an observer that hears every station.
struct MediumEvent
{
    enum class Kind
    {
        IdleSlot,
        SuccessBurst, // stations = {winner}, packets >= 1
        Collision,    // stations.size() >= 2, nothing delivered
        FailedTx,     // stations = {sender}, lost to channel error
    };

    Kind kind = Kind::IdleSlot;
    std::vector<StationId> stations;
    std::uint32_t packets = 0;
    TimeUs airtime = 0;
    TimeUs start = 0;
    TimeUs duration = 0;

    bool CountsAsVirtualSlot() const { return kind != Kind::IdleSlot; }
    bool operator==(const MediumEvent&) const = default;
};

std::string ToString(MediumEvent::Kind kind);

struct Contender
{
    StationId station;
    CaptureClass captureClass = CaptureClass::Normal;
    ChannelState channel = ChannelState::Good;
};

/**
 * What happens in a backoff slot given the stations whose counters reached
 * zero. The first packet of the slot decides the kind; a SuccessBurst here
 * reports the packet that opened the burst.
 */
MediumEvent ResolveSlot(std::span<const Contender> contenders, bool captureEnabled, TimeUs start,
                        TimeUs slotTime, TimeUs exchangeDuration);

} // namespace vls

#endif
