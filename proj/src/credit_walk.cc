#include "vls/credit_walk.h"

#include <stdexcept>

namespace vls {

CreditWalk::CreditWalk(Fixed6 weight, Fixed6 clockSpeed, std::optional<std::uint32_t> burstCap,
                       double winProb)
    : m_state(VlsState::Make(0, weight, clockSpeed, burstCap)),
      m_winProb(winProb)
{
    if (!(winProb >= 0.0 && winProb <= 1.0))
    {
        throw std::invalid_argument("CreditWalk: win probability must lie in [0,1]");
    }
}

CreditWalk::Step
CreditWalk::Advance(RngStream& rng)
{
    Step step;
    m_state = OnVirtualSlot(m_state);
    step.creditBeforeSpend = m_state.credit.ToDouble();
    if (rng.Bernoulli(m_winProb))
    {
        const std::uint32_t n = BurstLengthOnWin(m_state);
        if (n > 0)
        {
            step.won = true;
            step.burst = n;
            m_state = OnBurstProgress(m_state, n, n, false);
        }
    }
    step.creditAfter = m_state.credit.ToDouble();
    return step;
}

} // namespace vls
