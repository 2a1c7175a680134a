#include "vls/medium_event.h"

#include <algorithm>

namespace vls {

std::string
ToString(MediumEvent::Kind kind)
{
    switch (kind)
    {
    case MediumEvent::Kind::IdleSlot:
        return "idle";
    case MediumEvent::Kind::SuccessBurst:
        return "success";
    case MediumEvent::Kind::Collision:
        return "collision";
    case MediumEvent::Kind::FailedTx:
        return "failed";
    }
    return "?";
}

MediumEvent
ResolveSlot(std::span<const Contender> contenders, bool captureEnabled, TimeUs start,
            TimeUs slotTime, TimeUs exchangeDuration)
{
    MediumEvent ev;
    ev.start = start;
    if (contenders.empty())
    {
        ev.kind = MediumEvent::Kind::IdleSlot;
        ev.duration = slotTime;
        return ev;
    }

    std::vector<Transmission> txs;
    txs.reserve(contenders.size());
    for (const auto& c : contenders)
    {
        txs.push_back({c.station, c.captureClass});
        ev.stations.push_back(c.station);
    }
    std::sort(ev.stations.begin(), ev.stations.end());
    ev.duration = exchangeDuration;

    auto state = [&](StationId id) {
        for (const auto& c : contenders)
        {
            if (c.station == id)
            {
                return c.channel;
            }
        }
        return ChannelState::Bad;
    };
    const ReceptionOutcome out = ResolveReception(txs, state, captureEnabled);
    switch (out.kind)
    {
    case ReceptionOutcome::Kind::Delivered:
        ev.kind = MediumEvent::Kind::SuccessBurst;
        ev.stations = {out.station};
        ev.packets = 1;
        ev.airtime = exchangeDuration;
        break;
    case ReceptionOutcome::Kind::Lost:
        ev.kind = contenders.size() == 1 ? MediumEvent::Kind::FailedTx : MediumEvent::Kind::Collision;
        break;
    case ReceptionOutcome::Kind::CollisionLost:
        ev.kind = MediumEvent::Kind::Collision;
        break;
    }
    return ev;
}

} // namespace vls
