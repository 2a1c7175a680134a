#ifndef VLS_CHANNEL_H
#define VLS_CHANNEL_H

#include "vls/phy.h"
#include "vls/rng.h"

#include <functional>
#include <optional>
#include <span>
#include <variant>

namespace vls {

enum class ChannelState
{
    Good,
    Bad,
};

/// lambdaGood / (lambdaGood + lambdaBad); throws std::invalid_argument on non-positive rates.
double StationaryLossProb(double lambdaGood, double lambdaBad);

/**
 * Two-state Markov channel with exponential dwell times. lambdaGood is the
 * rate (1/s) of leaving Good, lambdaBad the rate of leaving Bad. Everything
 * is lost while Bad.
 *
 * The process is sampled forward only; the initial state is drawn from the
 * stationary distribution on the first query.
 */
class GilbertElliott
{
  public:
    GilbertElliott(double lambdaGood, double lambdaBad);

    ChannelState StateAt(TimeUs t, RngStream& rng);

    double StationaryLossProb() const;
    double LambdaGood() const { return m_lambdaGood; }
    double LambdaBad() const { return m_lambdaBad; }
    /// Time (us, fractional) of the next state change; valid after the first query.
    double NextTransitionUs() const { return m_nextTransition; }

  private:
    double DrawDwellUs(ChannelState s, RngStream& rng) const;

    double m_lambdaGood;
    double m_lambdaBad;
    ChannelState m_state = ChannelState::Good;
    double m_nextTransition = 0.0;
    TimeUs m_lastQuery = 0;
    bool m_started = false;
};

enum class CaptureClass
{
    Normal,
    Strong,
};

struct PerfectChannel
{
    bool operator==(const PerfectChannel&) const = default;
};

struct BernoulliChannel
{
    double lossProb = 0.0;
    bool operator==(const BernoulliChannel&) const = default;
};

struct MarkovChannel
{
    double lambdaGood = 0.0;
    double lambdaBad = 0.0;
    bool operator==(const MarkovChannel&) const = default;
};

using ChannelMode = std::variant<PerfectChannel, BernoulliChannel, MarkovChannel>;

struct ChannelSpec
{
    ChannelMode mode = PerfectChannel{};
    CaptureClass captureClass = CaptureClass::Normal;

    void Validate() const;
    bool operator==(const ChannelSpec&) const = default;
};

/// Runtime channel of one uplink: decides per DATA packet whether it survives.
class StationChannel
{
  public:
    StationChannel(const ChannelSpec& spec, RngStream rng);

    /// Channel condition for a packet starting at t (Bernoulli: one draw per call).
    ChannelState PacketState(TimeUs t);
    const ChannelSpec& Spec() const { return m_spec; }

  private:
    ChannelSpec m_spec;
    RngStream m_rng;
    std::optional<GilbertElliott> m_markov;
};

struct Transmission
{
    StationId station;
    CaptureClass captureClass = CaptureClass::Normal;
};

struct ReceptionOutcome
{
    enum class Kind
    {
        Delivered,
        Lost,
        CollisionLost,
    };

    Kind kind;
    StationId station = 0; // meaningful for Delivered only

    static ReceptionOutcome Delivered(StationId id) { return {Kind::Delivered, id}; }
    static ReceptionOutcome Lost() { return {Kind::Lost, 0}; }
    static ReceptionOutcome CollisionLost() { return {Kind::CollisionLost, 0}; }
    bool operator==(const ReceptionOutcome&) const = default;
};

/**
 * Receiver-side resolution of a set of overlapping transmissions.
 * A lone transmission is delivered iff its channel is Good. With two or more,
 * capture (when enabled) delivers the single Strong transmitter, subject to
 * its own channel; anything else is a collision.
 * Throws std::logic_error on an empty set.
 */
ReceptionOutcome ResolveReception(std::span<const Transmission> txs,
                                  const std::function<ChannelState(StationId)>& channelState,
                                  bool captureEnabled);

} // namespace vls

#endif
