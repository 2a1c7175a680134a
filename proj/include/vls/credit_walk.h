#ifndef VLS_CREDIT_WALK_H
#define VLS_CREDIT_WALK_H

#include "vls/rng.h"
#include "vls/vls.h"

namespace vls {

/**
 * Credit of one station driven by i.i.d. contention wins, isolated from the
 * MAC: every virtual slot accrues c * W, and with probability winProb the
 * station wins that slot and spends its burst.
 */
class CreditWalk
{
  public:
    CreditWalk(Fixed6 weight, Fixed6 clockSpeed, std::optional<std::uint32_t> burstCap, double winProb);

    struct Step
    {
        bool won = false;
        std::uint32_t burst = 0;
        double creditBeforeSpend = 0.0;
        double creditAfter = 0.0;
    };

    Step Advance(RngStream& rng);
    const VlsState& State() const { return m_state; }

  private:
    VlsState m_state;
    double m_winProb;
};

} // namespace vls

#endif
