#include "vls/simulator.h"

#include "vls/event_queue.h"
#include "vls/multi_domain.h"
#include "vls/station_mac.h"
#include "vls/vls.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>

namespace vls {

namespace {

enum class FrameKind
{
    Data,
    Ack,
};

struct Reception
{
    int sender = -1;
    ChannelState channel = ChannelState::Good;
    std::vector<int> interferers;
    bool receiverBusy = false; // half duplex: the receiver itself transmitted
};

/// Carrier-sense view of one node.
struct Node
{
    std::vector<int> sensers; // nodes that hear this node, itself included
    std::vector<int> active;  // emitters currently heard
    TimeUs navUntil = 0;
    bool busy = false;
    bool everBusy = false;
    TimeUs idleSince = 0;
    std::vector<Reception> receptions;
};

enum class Phase
{
    Inactive,
    Contending,
    Transmitting,
};

struct Station
{
    StationConfig cfg;
    StationMac mac;
    RngStream backoffRng;
    StationChannel channel;
    int dest = -1;
    Phase phase = Phase::Inactive;
    TimeUs readySince = 0;

    std::optional<EventQueue::EventId> access;
    TimeUs accessTime = 0;
    TimeUs countStart = 0;

    std::uint32_t planned = 0;
    std::uint32_t acked = 0;
    bool apReported = false;

    bool vlsOn = false;
    VlsState vls;

    BurstController ctrl;

    StationStats stats;
    std::uint64_t vsCount = 0;
    std::uint64_t bytesAtLastSample = 0;
    double burstMsSum = 0.0;
    std::uint64_t burstsAfterWarmup = 0;

    Station(const StationConfig& c, std::uint64_t seed)
        : cfg(c),
          mac(StationMac::Make(c.id, c.cwMin, c.cwMax)),
          backoffRng(seed, 1000 + c.id),
          channel(c.channel, RngStream(seed, 2000 + c.id))
    {
    }
};

struct BusyPeriod
{
    TimeUs start = 0;
    TimeUs end = 0;
    std::vector<StationId> transmitters;
    std::map<StationId, std::uint32_t> acks;
};

} // namespace

class Simulator::Impl
{
  public:
    explicit Impl(ScenarioConfig cfg);

    void Subscribe(std::function<void(const MediumEvent&)> observer)
    {
        m_observers.push_back(std::move(observer));
    }

    void SubscribeBackoff(std::function<void(StationId, TimeUs, std::uint32_t)> observer)
    {
        m_backoffObservers.push_back(std::move(observer));
    }

    SimResult Run();

  private:
    bool IsStation(int node) const { return node < static_cast<int>(m_st.size()); }
    TimeUs Now() const { return m_q.Now(); }

    void Activate(int i);
    void DrawBackoffFor(int i);
    void TryScheduleAccess(int i);
    void ScheduleAccessFrom(int i, TimeUs countStart);
    void FreezeAccess(int i);
    void OnAccess(int i);
    std::uint32_t PlanBurst(int i);
    void StartPacket(int i);
    void StartEmission(int e, FrameKind kind, TimeUs duration);
    void EndEmission(int e);
    void EndData(int i);
    void ExchangeDone(int i, bool delivered);
    void FinishBurst(int i, bool aborted);
    void UpdateBusy(int k);
    void OnBusyStart(int k);
    void UpdateController(int i);
    void Sample();

    void OpenBusyPeriod();
    void CloseBusyPeriod();
    void EmitIdleSlots(TimeUs idleSince, TimeUs until);
    void Emit(const MediumEvent& ev);

    ScenarioConfig m_cfg;
    EventQueue m_q;
    std::vector<Node> m_nodes;
    std::vector<Station> m_st;
    std::map<StationId, int> m_index;
    int m_ap = -1;
    ContentionGraph m_graph;
    ThroughputMonitor m_monitor;
    ApCounter m_apCounter;
    ClockSpeedTable m_clock;
    TimeUs m_airtime = 0;
    TimeUs m_exchange = 0;
    std::int64_t m_quantumBase = 1;

    SimResult m_result;
    std::vector<std::function<void(const MediumEvent&)>> m_observers;
    std::vector<std::function<void(StationId, TimeUs, std::uint32_t)>> m_backoffObservers;
    std::optional<BusyPeriod> m_busyPeriod;
    TimeUs m_apIdleSince = 0;
};

Simulator::Impl::Impl(ScenarioConfig cfg)
    : m_cfg(std::move(cfg)),
      m_monitor(m_cfg.topology ? m_cfg.topology->averagingWindowUs : 40'000)
{
    const ValidationReport report = Validate(m_cfg);
    if (!report.Ok())
    {
        std::string msg = "invalid scenario:";
        for (const auto& e : report.errors)
        {
            msg += "\n  " + e;
        }
        throw std::invalid_argument(msg);
    }
    std::sort(m_cfg.stations.begin(), m_cfg.stations.end(),
              [](const StationConfig& a, const StationConfig& b) { return a.id < b.id; });
    m_airtime = PacketAirtime(m_cfg.phy, m_cfg.phy.packetPayload);
    m_exchange = m_airtime + m_cfg.phy.sifs + m_cfg.phy.ackDuration;

    std::vector<StationId> ids;
    for (const auto& s : m_cfg.stations)
    {
        m_index[s.id] = static_cast<int>(m_st.size());
        m_st.emplace_back(s, m_cfg.seed);
        ids.push_back(s.id);
    }
    const int n = static_cast<int>(m_st.size());
    if (m_cfg.topology)
    {
        m_graph = ContentionGraph(ids);
        for (const auto& [a, b] : m_cfg.topology->edges)
        {
            if (!m_graph.Senses(a, b))
            {
                m_graph.AddEdge(a, b);
            }
        }
        m_nodes.resize(n);
        for (int i = 0; i < n; ++i)
        {
            for (StationId k : m_graph.Neighbors(m_st[i].cfg.id))
            {
                m_nodes[i].sensers.push_back(m_index.at(k));
            }
        }
    }
    else
    {
        m_graph = ContentionGraph::Complete(ids);
        m_ap = n;
        m_nodes.resize(n + 1);
        for (int i = 0; i <= n; ++i)
        {
            for (int k = 0; k <= n; ++k)
            {
                m_nodes[i].sensers.push_back(k);
            }
        }
    }

    const PacketInfo packet{m_cfg.phy.packetPayload, m_airtime};
    for (auto& st : m_st)
    {
        st.dest = st.cfg.destination ? m_index.at(*st.cfg.destination) : m_ap;
        st.stats.id = st.cfg.id;
        st.stats.weight = st.cfg.weight.ToDouble();
        st.vlsOn = st.cfg.vls.enabled;
        if (st.vlsOn)
        {
            st.vls = VlsState::Make(st.cfg.id, st.cfg.weight, st.cfg.vls.clockSpeed, st.cfg.vls.burstCap,
                                    st.cfg.vls.metric);
        }
        (void)MetricQuantum(st.cfg.vls.metric, packet);
        if (m_cfg.topology)
        {
            const auto& t = *m_cfg.topology;
            st.ctrl.burstUs = static_cast<double>(t.initialBurstUs);
            st.ctrl.alpha = t.alpha;
            st.ctrl.schedule = t.schedule;
            st.ctrl.minBurstUs = static_cast<double>(t.minBurstUs > 0 ? t.minBurstUs : m_airtime);
            st.ctrl.maxBurstUs = static_cast<double>(t.maxBurstUs);
            st.ctrl.burstUs = std::clamp(st.ctrl.burstUs, st.ctrl.minBurstUs, st.ctrl.maxBurstUs);
        }
    }
    m_result.config = m_cfg;
}

void
Simulator::Impl::Emit(const MediumEvent& ev)
{
    for (const auto& obs : m_observers)
    {
        obs(ev);
    }
}

void
Simulator::Impl::EmitIdleSlots(TimeUs idleSince, TimeUs until)
{
    if (m_observers.empty())
    {
        return;
    }
    const TimeUs slot = m_cfg.phy.slotTime;
    const TimeUs first = idleSince + m_cfg.phy.difs;
    for (TimeUs t = first; t + slot <= until; t += slot)
    {
        MediumEvent ev;
        ev.kind = MediumEvent::Kind::IdleSlot;
        ev.start = t;
        ev.duration = slot;
        Emit(ev);
    }
}

void
Simulator::Impl::OpenBusyPeriod()
{
    CloseBusyPeriod();
    if (m_observers.empty())
    {
        return;
    }
    EmitIdleSlots(m_apIdleSince, Now());
    m_busyPeriod = BusyPeriod{Now(), Now(), {}, {}};
}

void
Simulator::Impl::CloseBusyPeriod()
{
    if (!m_busyPeriod)
    {
        return;
    }
    const BusyPeriod bp = *m_busyPeriod;
    m_busyPeriod.reset();
    MediumEvent ev;
    ev.start = bp.start;
    ev.duration = bp.end - bp.start;
    ev.airtime = ev.duration;
    if (!bp.acks.empty())
    {
        ev.kind = MediumEvent::Kind::SuccessBurst;
        ev.stations = {bp.acks.begin()->first};
        ev.packets = bp.acks.begin()->second;
    }
    else
    {
        ev.stations = bp.transmitters;
        std::sort(ev.stations.begin(), ev.stations.end());
        ev.kind = ev.stations.size() >= 2 ? MediumEvent::Kind::Collision : MediumEvent::Kind::FailedTx;
        ev.airtime = 0;
    }
    Emit(ev);
}

void
Simulator::Impl::DrawBackoffFor(int i)
{
    Station& st = m_st[i];
    st.mac.backoffCounter = DrawBackoff(st.mac, st.backoffRng);
    for (const auto& obs : m_backoffObservers)
    {
        obs(st.cfg.id, Now(), st.mac.backoffCounter);
    }
}

void
Simulator::Impl::Activate(int i)
{
    Station& st = m_st[i];
    st.phase = Phase::Contending;
    st.readySince = Now();
    DrawBackoffFor(i);
    if (st.vlsOn)
    {
        // the joining station broadcasts its clock speed; delivery is immediate
        m_clock.Merge(st.cfg.id, st.cfg.vls.clockSpeed);
        const Fixed6 c = m_clock.Effective();
        for (auto& other : m_st)
        {
            if (other.vlsOn)
            {
                other.vls.clockSpeed = c;
            }
        }
    }
    TryScheduleAccess(i);
}

void
Simulator::Impl::ScheduleAccessFrom(int i, TimeUs countStart)
{
    Station& st = m_st[i];
    st.countStart = countStart;
    st.accessTime = std::max(Now(), countStart + static_cast<TimeUs>(st.mac.backoffCounter) * m_cfg.phy.slotTime);
    st.access = m_q.Schedule(st.accessTime, [this, i] { OnAccess(i); });
}

void
Simulator::Impl::TryScheduleAccess(int i)
{
    Station& st = m_st[i];
    if (st.phase != Phase::Contending || st.access || m_nodes[i].busy)
    {
        return;
    }
    const TimeUs start = std::max(m_nodes[i].idleSince, st.readySince);
    ScheduleAccessFrom(i, start + m_cfg.phy.difs);
}

void
Simulator::Impl::FreezeAccess(int i)
{
    Station& st = m_st[i];
    if (!st.access || st.accessTime == Now())
    {
        // a countdown expiring this very microsecond cannot have sensed the new carrier
        return;
    }
    m_q.Cancel(*st.access);
    st.access.reset();
    if (Now() > st.countStart)
    {
        const auto elapsed = static_cast<std::uint32_t>((Now() - st.countStart) / m_cfg.phy.slotTime);
        st.mac.backoffCounter -= std::min(elapsed, st.mac.backoffCounter);
    }
}

std::uint32_t
Simulator::Impl::PlanBurst(int i)
{
    Station& st = m_st[i];
    if (m_cfg.topology)
    {
        const auto n = static_cast<std::uint32_t>(std::floor(st.ctrl.burstUs / static_cast<double>(m_airtime)));
        return std::max<std::uint32_t>(n, 1);
    }
    if (!st.vlsOn)
    {
        return 1;
    }
    if (st.cfg.vls.variant == VlsVariant::Ap)
    {
        // the first W packets go out before the AP reports its slot count
        return static_cast<std::uint32_t>(st.cfg.weight.Micros() / Fixed6::kScale);
    }
    const std::int64_t quantum = MetricQuantum(st.vls.metric, {m_cfg.phy.packetPayload, m_airtime});
    VlsState prospective = st.vls;
    if (!m_nodes[i].busy)
    {
        // own burst opens a virtual slot, counted once the carrier goes up
        prospective = OnVirtualSlot(prospective, quantum);
    }
    return BurstLengthOnWin(prospective, quantum);
}

void
Simulator::Impl::OnAccess(int i)
{
    Station& st = m_st[i];
    st.access.reset();
    const std::uint32_t n = PlanBurst(i);
    if (n == 0)
    {
        ++st.stats.deferrals;
        DrawBackoffFor(i);
        if (!m_nodes[i].busy)
        {
            ScheduleAccessFrom(i, Now() + m_cfg.phy.slotTime);
        }
        return;
    }
    st.phase = Phase::Transmitting;
    st.planned = n;
    st.acked = 0;
    st.apReported = false;
    if (Now() >= m_cfg.WarmupUs())
    {
        // with a topology the controller's length is the burst length; otherwise the data airtime
        st.burstMsSum += m_cfg.topology ? st.ctrl.burstUs / 1000.0
                                        : static_cast<double>(n) * static_cast<double>(m_airtime) / 1000.0;
        ++st.burstsAfterWarmup;
    }
    StartPacket(i);
}

void
Simulator::Impl::StartEmission(int e, FrameKind kind, TimeUs duration)
{
    for (int k : m_nodes[e].sensers)
    {
        Node& node = m_nodes[k];
        node.active.push_back(e);
        for (auto& rx : node.receptions)
        {
            if (rx.sender == e)
            {
                continue;
            }
            if (k == e)
            {
                rx.receiverBusy = true;
            }
            else
            {
                rx.interferers.push_back(e);
            }
        }
        UpdateBusy(k);
    }
    if (kind == FrameKind::Ack)
    {
        m_q.Schedule(Now() + duration, [this, e] { EndEmission(e); });
    }
}

void
Simulator::Impl::EndEmission(int e)
{
    for (int k : m_nodes[e].sensers)
    {
        auto& active = m_nodes[k].active;
        auto it = std::find(active.begin(), active.end(), e);
        if (it != active.end())
        {
            active.erase(it);
        }
        UpdateBusy(k);
    }
}

void
Simulator::Impl::StartPacket(int i)
{
    Station& st = m_st[i];
    const TimeUs t = Now();
    const ChannelState channel = st.channel.PacketState(t);
    ++st.stats.attempts;

    StartEmission(i, FrameKind::Data, m_airtime);

    // after StartEmission, which opens a new busy period at the AP when needed
    if (m_busyPeriod)
    {
        auto& tx = m_busyPeriod->transmitters;
        if (std::find(tx.begin(), tx.end(), st.cfg.id) == tx.end())
        {
            tx.push_back(st.cfg.id);
        }
        m_busyPeriod->end = std::max(m_busyPeriod->end, t + m_exchange);
    }

    Reception rx;
    rx.sender = i;
    rx.channel = channel;
    for (int e : m_nodes[st.dest].active)
    {
        if (e == st.dest)
        {
            rx.receiverBusy = true;
        }
        else if (e != i)
        {
            rx.interferers.push_back(e);
        }
    }
    m_nodes[st.dest].receptions.push_back(std::move(rx));

    // NAV from the duration field covers SIFS + ACK at every station that hears the frame
    const TimeUs nav = t + m_exchange;
    for (int k : m_nodes[i].sensers)
    {
        m_nodes[k].navUntil = std::max(m_nodes[k].navUntil, nav);
    }
    m_q.Schedule(nav, [this, i] {
        for (int k : m_nodes[i].sensers)
        {
            UpdateBusy(k);
        }
    });
    m_q.Schedule(t + m_airtime, [this, i] { EndData(i); });
}

void
Simulator::Impl::EndData(int i)
{
    EndEmission(i);
    Station& st = m_st[i];
    auto& receptions = m_nodes[st.dest].receptions;
    auto it = std::find_if(receptions.begin(), receptions.end(), [i](const Reception& r) { return r.sender == i; });
    if (it == receptions.end())
    {
        throw std::logic_error("EndData: reception record missing");
    }
    const Reception rx = std::move(*it);
    receptions.erase(it);

    bool delivered = false;
    if (!rx.receiverBusy)
    {
        std::vector<Transmission> txs;
        txs.push_back({st.cfg.id, st.cfg.channel.captureClass});
        for (int e : rx.interferers)
        {
            const bool isStation = IsStation(e);
            txs.push_back({isStation ? m_st[e].cfg.id : StationId{0},
                           isStation ? m_st[e].cfg.channel.captureClass : CaptureClass::Normal});
        }
        const StationId me = st.cfg.id;
        const auto state = [&rx, me](StationId id) { return id == me ? rx.channel : ChannelState::Good; };
        const ReceptionOutcome out = ResolveReception(txs, state, m_cfg.capture);
        delivered = out.kind == ReceptionOutcome::Kind::Delivered && out.station == me;
    }

    if (delivered)
    {
        const int dest = st.dest;
        const TimeUs ack = m_cfg.phy.ackDuration;
        m_q.Schedule(Now() + m_cfg.phy.sifs, [this, dest, ack] { StartEmission(dest, FrameKind::Ack, ack); });
    }
    m_q.Schedule(Now() + m_cfg.phy.sifs + m_cfg.phy.ackDuration,
                 [this, i, delivered] { ExchangeDone(i, delivered); });
}

void
Simulator::Impl::ExchangeDone(int i, bool delivered)
{
    Station& st = m_st[i];
    if (!delivered)
    {
        ++st.stats.losses;
        st.mac = ApplyBeb(st.mac, TxOutcome::Loss);
        FinishBurst(i, true);
        return;
    }

    ++st.acked;
    const std::uint32_t bytes = m_cfg.phy.packetPayload;
    ++st.stats.packets;
    st.stats.bytes += bytes;
    if (Now() >= m_cfg.WarmupUs())
    {
        st.stats.bytesAfterWarmup += bytes;
    }
    m_result.deliveries.push_back({Now(), st.cfg.id, bytes});
    if (m_cfg.topology)
    {
        m_monitor.Record(st.cfg.id, Now(), bytes);
    }
    if (m_busyPeriod)
    {
        ++m_busyPeriod->acks[st.cfg.id];
    }
    st.mac = ApplyBeb(st.mac, TxOutcome::Success);

    if (st.vlsOn && st.cfg.vls.variant == VlsVariant::Ap && !st.apReported && st.acked == st.planned)
    {
        // the ACK of the W-th packet carries the AP's slot count
        st.apReported = true;
        const auto previous = m_apCounter.LastReported(st.cfg.id);
        const std::uint64_t v = m_apCounter.RecordAndPiggyback(st.cfg.id);
        const auto weight = static_cast<std::uint32_t>(st.cfg.weight.Micros() / Fixed6::kScale);
        st.planned = ApVariantBurst(weight, previous, v);
        if (st.cfg.vls.burstCap)
        {
            st.planned = std::min(st.planned, std::max(*st.cfg.vls.burstCap, st.acked));
        }
    }

    if (st.acked < st.planned)
    {
        m_q.Schedule(Now() + m_cfg.phy.sifs, [this, i] { StartPacket(i); });
        return;
    }
    FinishBurst(i, false);
}

void
Simulator::Impl::FinishBurst(int i, bool aborted)
{
    Station& st = m_st[i];
    if (st.vlsOn && st.cfg.vls.variant == VlsVariant::Distributed)
    {
        const std::int64_t quantum = MetricQuantum(st.vls.metric, {m_cfg.phy.packetPayload, m_airtime});
        st.vls = OnBurstProgress(st.vls, st.planned, st.acked, aborted, quantum);
    }
    if (st.acked > 0)
    {
        ++st.stats.bursts;
        st.stats.burstPackets += st.acked;
    }
    st.phase = Phase::Contending;
    st.readySince = Now();
    DrawBackoffFor(i);
    TryScheduleAccess(i);
}

void
Simulator::Impl::UpdateBusy(int k)
{
    Node& node = m_nodes[k];
    const bool busyNow = !node.active.empty() || Now() < node.navUntil;
    if (busyNow && !node.busy)
    {
        node.busy = true;
        OnBusyStart(k);
    }
    else if (!busyNow && node.busy)
    {
        node.busy = false;
        node.idleSince = Now();
        if (k == m_ap)
        {
            m_apIdleSince = Now();
        }
        if (IsStation(k))
        {
            TryScheduleAccess(k);
        }
    }
}

void
Simulator::Impl::OnBusyStart(int k)
{
    Node& node = m_nodes[k];
    const bool newSlot = !node.everBusy || Now() - node.idleSince >= m_cfg.phy.difs;
    node.everBusy = true;
    if (k == m_ap)
    {
        if (newSlot)
        {
            m_apCounter.OnVirtualSlot();
            OpenBusyPeriod();
        }
        return;
    }
    Station& st = m_st[k];
    if (newSlot && st.phase != Phase::Inactive)
    {
        ++st.vsCount;
        if (st.vlsOn && st.cfg.vls.variant == VlsVariant::Distributed)
        {
            st.vls = OnVirtualSlot(st.vls, MetricQuantum(st.vls.metric, {m_cfg.phy.packetPayload, m_airtime}));
        }
    }
    FreezeAccess(k);
}

void
Simulator::Impl::UpdateController(int i)
{
    Station& st = m_st[i];
    const auto [own, sum] = m_monitor.Observe(st.cfg.id, m_graph, Now());
    double weightSum = 0.0;
    for (StationId k : m_graph.Neighbors(st.cfg.id))
    {
        weightSum += m_st[m_index.at(k)].cfg.weight.ToDouble();
    }
    st.ctrl = UpdateBurst(st.ctrl, own, sum, st.cfg.weight.ToDouble(), weightSum);
}

void
Simulator::Impl::Sample()
{
    const double periodS = static_cast<double>(m_cfg.samplePeriodUs) / 1e6;
    const double timeS = static_cast<double>(Now()) / 1e6;
    for (auto& st : m_st)
    {
        TraceRow row;
        row.timeS = timeS;
        row.stationId = st.cfg.id;
        row.windowThroughputBps = static_cast<double>(st.stats.bytes - st.bytesAtLastSample) * 8.0 / periodS;
        row.cumulativePackets = st.stats.packets;
        row.cumulativeBytes = st.stats.bytes;
        row.credit = st.vlsOn ? st.vls.credit.ToDouble() : 0.0;
        row.meanBurstLen = st.stats.bursts ? static_cast<double>(st.stats.burstPackets) / st.stats.bursts : 0.0;
        row.virtualSlots = st.vsCount;
        st.bytesAtLastSample = st.stats.bytes;
        m_result.trace.rows.push_back(row);
    }
}

SimResult
Simulator::Impl::Run()
{
    const TimeUs duration = m_cfg.DurationUs();
    if (duration > 0)
    {
        for (int i = 0; i < static_cast<int>(m_st.size()); ++i)
        {
            const auto start = static_cast<TimeUs>(std::llround(m_st[i].cfg.startS * 1e6));
            if (start <= duration)
            {
                m_q.Schedule(start, [this, i] { Activate(i); });
            }
        }
        for (TimeUs t = m_cfg.samplePeriodUs; t <= duration; t += m_cfg.samplePeriodUs)
        {
            m_q.Schedule(t, [this] { Sample(); });
        }
        if (m_cfg.topology && m_cfg.topology->controller && m_cfg.topology->updatePeriodUs)
        {
            for (std::size_t i = 0; i < m_st.size(); ++i)
            {
                for (TimeUs t : ScheduleUpdates(*m_cfg.topology->updatePeriodUs, duration, i, m_st.size()))
                {
                    m_q.Schedule(t, [this, i] { UpdateController(static_cast<int>(i)); });
                }
            }
        }
        m_q.RunUntil(duration);
        m_result.eventsProcessed = m_q.Processed();
        CloseBusyPeriod();
    }

    for (const auto& st : m_st)
    {
        StationStats s = st.stats;
        s.virtualSlots = st.vsCount;
        s.credit = st.vlsOn ? st.vls.credit.ToDouble() : 0.0;
        s.finalCw = st.mac.cw;
        s.meanBurstMs = st.burstsAfterWarmup ? st.burstMsSum / static_cast<double>(st.burstsAfterWarmup) : 0.0;
        s.controllerBurstUs = st.ctrl.burstUs;
        m_result.stations.push_back(s);
    }
    return std::move(m_result);
}

Simulator::Simulator(ScenarioConfig cfg)
    : m_impl(std::make_unique<Impl>(std::move(cfg)))
{
}

Simulator::~Simulator() = default;

void
Simulator::Subscribe(std::function<void(const MediumEvent&)> observer)
{
    m_impl->Subscribe(std::move(observer));
}

void
Simulator::SubscribeBackoff(std::function<void(StationId, TimeUs, std::uint32_t)> observer)
{
    m_impl->SubscribeBackoff(std::move(observer));
}

SimResult
Simulator::Run()
{
    return m_impl->Run();
}

SimResult
RunScenario(const ScenarioConfig& cfg)
{
    Simulator sim(cfg);
    return sim.Run();
}

} // namespace vls
