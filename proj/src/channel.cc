#include "vls/channel.h"

#include <cmath>
#include <stdexcept>

namespace vls {

namespace {

void
CheckRates(double lambdaGood, double lambdaBad)
{
    // NaN fails both comparisons
    if (!(lambdaGood > 0.0) || !(lambdaBad > 0.0))
    {
        throw std::invalid_argument("Gilbert-Elliott rates must be positive");
    }
}

} // namespace

double
StationaryLossProb(double lambdaGood, double lambdaBad)
{
    CheckRates(lambdaGood, lambdaBad);
    if (std::isinf(lambdaBad))
    {
        return std::isinf(lambdaGood) ? 0.5 : 0.0;
    }
    if (std::isinf(lambdaGood))
    {
        return 1.0;
    }
    return lambdaGood / (lambdaGood + lambdaBad);
}

GilbertElliott::GilbertElliott(double lambdaGood, double lambdaBad)
    : m_lambdaGood(lambdaGood),
      m_lambdaBad(lambdaBad)
{
    CheckRates(lambdaGood, lambdaBad);
}

double
GilbertElliott::StationaryLossProb() const
{
    return vls::StationaryLossProb(m_lambdaGood, m_lambdaBad);
}

double
GilbertElliott::DrawDwellUs(ChannelState s, RngStream& rng) const
{
    const double rate = s == ChannelState::Good ? m_lambdaGood : m_lambdaBad;
    return rng.Exponential(rate) * 1e6;
}

ChannelState
GilbertElliott::StateAt(TimeUs t, RngStream& rng)
{
    if (!m_started)
    {
        m_started = true;
        m_lastQuery = t;
        m_state = rng.Bernoulli(StationaryLossProb()) ? ChannelState::Bad : ChannelState::Good;
        m_nextTransition = static_cast<double>(t) + DrawDwellUs(m_state, rng);
    }
    if (t < m_lastQuery)
    {
        throw std::logic_error("GilbertElliott: backward query");
    }
    m_lastQuery = t;
    while (m_nextTransition <= static_cast<double>(t))
    {
        m_state = m_state == ChannelState::Good ? ChannelState::Bad : ChannelState::Good;
        m_nextTransition += DrawDwellUs(m_state, rng);
    }
    return m_state;
}

void
ChannelSpec::Validate() const
{
    if (const auto* b = std::get_if<BernoulliChannel>(&mode))
    {
        if (!(b->lossProb >= 0.0 && b->lossProb <= 1.0))
        {
            throw std::invalid_argument("channel: loss probability must lie in [0,1]");
        }
    }
    else if (const auto* m = std::get_if<MarkovChannel>(&mode))
    {
        CheckRates(m->lambdaGood, m->lambdaBad);
    }
}

StationChannel::StationChannel(const ChannelSpec& spec, RngStream rng)
    : m_spec(spec),
      m_rng(std::move(rng))
{
    m_spec.Validate();
    if (const auto* m = std::get_if<MarkovChannel>(&m_spec.mode))
    {
        m_markov.emplace(m->lambdaGood, m->lambdaBad);
    }
}

ChannelState
StationChannel::PacketState(TimeUs t)
{
    if (m_markov)
    {
        return m_markov->StateAt(t, m_rng);
    }
    if (const auto* b = std::get_if<BernoulliChannel>(&m_spec.mode))
    {
        return m_rng.Bernoulli(b->lossProb) ? ChannelState::Bad : ChannelState::Good;
    }
    return ChannelState::Good;
}

ReceptionOutcome
ResolveReception(std::span<const Transmission> txs,
                 const std::function<ChannelState(StationId)>& channelState,
                 bool captureEnabled)
{
    if (txs.empty())
    {
        throw std::logic_error("ResolveReception: empty transmission set");
    }
    if (txs.size() == 1)
    {
        const StationId id = txs.front().station;
        return channelState(id) == ChannelState::Good ? ReceptionOutcome::Delivered(id)
                                                      : ReceptionOutcome::Lost();
    }
    if (!captureEnabled)
    {
        return ReceptionOutcome::CollisionLost();
    }
    const Transmission* strong = nullptr;
    for (const auto& tx : txs)
    {
        if (tx.captureClass == CaptureClass::Strong)
        {
            if (strong != nullptr)
            {
                return ReceptionOutcome::CollisionLost();
            }
            strong = &tx;
        }
    }
    if (strong == nullptr)
    {
        return ReceptionOutcome::CollisionLost();
    }
    return channelState(strong->station) == ChannelState::Good
               ? ReceptionOutcome::Delivered(strong->station)
               : ReceptionOutcome::Lost();
}

} // namespace vls
