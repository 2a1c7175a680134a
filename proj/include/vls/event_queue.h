#ifndef VLS_EVENT_QUEUE_H
#define VLS_EVENT_QUEUE_H

#include "vls/phy.h"

#include <cstdint>
#include <functional>
#include <queue>
#include <unordered_set>
#include <vector>

namespace vls {

/**
 * Discrete-event kernel. Events pop in (time, insertion order); the clock
 * only moves forward as events are processed.
 */
class EventQueue
{
  public:
    using Callback = std::function<void()>;
    using EventId = std::uint64_t;

    /// Schedules cb at absolute time `at`. Scheduling into the past throws std::logic_error.
    EventId Schedule(TimeUs at, Callback cb);
    /// Cancelling an event that already ran (or was cancelled) is a no-op.
    void Cancel(EventId id);

    TimeUs Now() const { return m_now; }
    bool Empty() const;
    std::size_t Pending() const { return m_heap.size() - m_cancelled.size(); }
    std::uint64_t Processed() const { return m_processed; }

    /// Pops and executes the next live event. Returns false when nothing is pending.
    bool Step();
    /// Runs every event with time <= end, then sets the clock to end.
    void RunUntil(TimeUs end);

  private:
    struct Entry
    {
        TimeUs time;
        EventId seq;
        Callback cb;
    };

    struct Later
    {
        bool operator()(const Entry& a, const Entry& b) const
        {
            return a.time != b.time ? a.time > b.time : a.seq > b.seq;
        }
    };

    void DropCancelledTop();

    TimeUs m_now = 0;
    std::uint64_t m_processed = 0;
    EventId m_nextSeq = 0;
    std::priority_queue<Entry, std::vector<Entry>, Later> m_heap;
    std::unordered_set<EventId> m_cancelled;
    std::unordered_set<EventId> m_live;
};

} // namespace vls

#endif
