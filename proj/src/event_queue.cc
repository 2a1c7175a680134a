#include "vls/event_queue.h"

#include <stdexcept>
#include <utility>

namespace vls {

EventQueue::EventId
EventQueue::Schedule(TimeUs at, Callback cb)
{
    if (at < m_now)
    {
        throw std::logic_error("EventQueue: cannot schedule into the past");
    }
    const EventId id = m_nextSeq++;
    m_heap.push(Entry{at, id, std::move(cb)});
    m_live.insert(id);
    return id;
}

void
EventQueue::Cancel(EventId id)
{
    if (m_live.erase(id) > 0)
    {
        m_cancelled.insert(id);
    }
}

bool
EventQueue::Empty() const
{
    return m_live.empty();
}

void
EventQueue::DropCancelledTop()
{
    while (!m_heap.empty())
    {
        auto it = m_cancelled.find(m_heap.top().seq);
        if (it == m_cancelled.end())
        {
            return;
        }
        m_cancelled.erase(it);
        m_heap.pop();
    }
}

bool
EventQueue::Step()
{
    DropCancelledTop();
    if (m_heap.empty())
    {
        return false;
    }
    // priority_queue::top is const; the callback is moved out via a copy of the entry
    Entry e = std::move(const_cast<Entry&>(m_heap.top()));
    m_heap.pop();
    m_live.erase(e.seq);
    m_now = e.time;
    ++m_processed;
    e.cb();
    return true;
}

void
EventQueue::RunUntil(TimeUs end)
{
    while (true)
    {
        DropCancelledTop();
        if (m_heap.empty() || m_heap.top().time > end)
        {
            break;
        }
        Step();
    }
    if (end > m_now)
    {
        m_now = end;
    }
}

} // namespace vls
