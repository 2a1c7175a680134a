#include "vls/credit_walk.h"
#include "vls/fixed.h"
#include "vls/vls.h"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <limits>
#include <vector>

using namespace vls;

namespace {

Fixed6
F(const char* s)
{
    return Fixed6::Parse(s);
}

VlsState
State(const char* weight, const char* c, std::optional<std::uint32_t> cap = std::nullopt)
{
    return VlsState::Make(1, F(weight), F(c), cap);
}

} // namespace

TEST_CASE("fixed-point decimals")
{
    CHECK(F("0.25").Micros() == 250'000);
    CHECK(F("3").Micros() == 3'000'000);
    CHECK(F("0.333333").ToString() == "0.333333");
    CHECK(F("1.500000").ToString() == "1.5");
    CHECK_THROWS_AS(F("0.1234567"), std::invalid_argument);
    CHECK_THROWS_AS(F("abc"), std::invalid_argument);
    CHECK_THROWS_AS(F(""), std::invalid_argument);
    CHECK(F("0.5") < F("0.6"));
}

TEST_CASE("on_virtual_slot")
{
    VlsState s = OnVirtualSlot(State("2", "1"));
    CHECK(s.credit == Credit::Units(2));
    CHECK(s.virtualSlots == 1);

    s = OnVirtualSlot(State("1", "0.5"));
    CHECK(s.credit.ToDouble() == doctest::Approx(0.5));
    s = OnVirtualSlot(s);
    CHECK(s.credit == Credit::Units(1));

    s = State("2", "1");
    for (int i = 0; i < 3; ++i)
    {
        s = OnVirtualSlot(s);
    }
    CHECK(s.credit == Credit::Units(6));
}

TEST_CASE("burst_length_on_win")
{
    VlsState s = State("2", "1");
    for (int i = 0; i < 3; ++i)
    {
        s = OnVirtualSlot(s);
    }
    CHECK(BurstLengthOnWin(s) == 6);

    s = OnVirtualSlot(State("1", "1.5"));
    REQUIRE(BurstLengthOnWin(s) == 1);
    s = OnBurstProgress(s, 1, 1, false);
    CHECK(s.credit.ToDouble() == doctest::Approx(0.5));

    s = State("2", "1", 2);
    for (int i = 0; i < 3; ++i)
    {
        s = OnVirtualSlot(s);
    }
    REQUIRE(BurstLengthOnWin(s) == 2);
    s = OnBurstProgress(s, 2, 2, false);
    CHECK(s.credit == Credit::Units(4));
}

TEST_CASE("minimum transmission and deferral")
{
    VlsState s = OnVirtualSlot(State("1", "0.3"));
    REQUIRE(BurstLengthOnWin(s) == 1);
    s = OnBurstProgress(s, 1, 1, false);
    CHECK(s.credit.ToDouble() == doctest::Approx(-0.7));
    // debt: a win is given up until credit turns positive
    CHECK(BurstLengthOnWin(s) == 0);
    s = OnVirtualSlot(OnVirtualSlot(s));
    CHECK(BurstLengthOnWin(s) == 0);
    s = OnVirtualSlot(s);
    CHECK(s.credit.ToDouble() == doctest::Approx(0.2));
    CHECK(BurstLengthOnWin(s) == 1);
}

TEST_CASE("on_burst_progress")
{
    VlsState base = State("2", "1");
    for (int i = 0; i < 3; ++i)
    {
        base = OnVirtualSlot(base);
    }
    VlsState s = OnBurstProgress(base, 6, 6, false);
    CHECK(s.credit == Credit::Units(0));
    CHECK(s.spent == Credit::Units(6));

    s = OnBurstProgress(base, 6, 2, true);
    CHECK(s.credit == Credit::Units(4));

    s = OnBurstProgress(base, 1, 0, true);
    CHECK(s.credit == base.credit);
    s = OnVirtualSlot(s);
    CHECK(s.credit == Credit::Units(8));

    CHECK_THROWS_AS(OnBurstProgress(base, 2, 3, false), std::logic_error);
    CHECK_THROWS_AS(OnBurstProgress(base, 3, 2, false), std::logic_error);
}

TEST_CASE("credit conservation holds exactly with awkward decimals")
{
    VlsState s = VlsState::Make(4, F("0.333333"), F("0.142857"), 3);
    RngStream rng(2, 2);
    for (int i = 0; i < 100'000; ++i)
    {
        s = OnVirtualSlot(s);
        if (rng.Bernoulli(0.2))
        {
            const std::uint32_t n = BurstLengthOnWin(s);
            if (n > 0)
            {
                const std::uint32_t acked = rng.UniformInt(n + 1);
                s = OnBurstProgress(s, n, acked, acked < n);
            }
        }
        REQUIRE(s.credit == s.accrued - s.spent);
        REQUIRE(s.credit > Credit::Units(-1));
    }
    CHECK(s.accrued == Credit::FromRaw(Credit::Raw{333'333} * 142'857 * 100'000));
}

TEST_CASE("metric quantum")
{
    const PacketInfo packet{1000, 920};
    CHECK(MetricQuantum(FairnessMetric::Packets, packet) == 1);
    CHECK(MetricQuantum(FairnessMetric::Bits, packet) == 8000);
    CHECK(MetricQuantum(FairnessMetric::AirTime, packet) == 920);
    CHECK(ParseFairnessMetric("airtime") == FairnessMetric::AirTime);
    CHECK(ToString(FairnessMetric::Bits) == "bits");
    CHECK_THROWS_AS(ParseFairnessMetric("bytes"), std::invalid_argument);
}

TEST_CASE("bits metric charges payload bits")
{
    VlsState s = VlsState::Make(1, F("1"), F("1"), std::nullopt, FairnessMetric::Bits);
    s = OnVirtualSlot(s, 8000);
    s = OnVirtualSlot(s, 8000);
    REQUIRE(BurstLengthOnWin(s, 8000) == 2);
    s = OnBurstProgress(s, 2, 2, false, 8000);
    CHECK(s.credit == Credit::Units(0));
}

TEST_CASE("ap counter and piggyback")
{
    ApCounter ap;
    for (int i = 0; i < 5; ++i)
    {
        ap.OnVirtualSlot();
    }
    CHECK_FALSE(ap.LastReported(7).has_value());
    CHECK(ap.RecordAndPiggyback(7) == 5);
    for (int i = 0; i < 4; ++i)
    {
        ap.OnVirtualSlot();
    }
    CHECK(ap.RecordAndPiggyback(7) == 9);
    CHECK(ap.LastReported(7) == 9u);
}

TEST_CASE("ap variant burst")
{
    CHECK(ApVariantBurst(2, 5, 9) == 8);
    CHECK(ApVariantBurst(3, 10, 11) == 3);
    CHECK(ApVariantBurst(1, 0, 100) == 100);
    CHECK(ApVariantBurst(4, std::nullopt, 17) == 4);
    CHECK_THROWS_AS(ApVariantBurst(1, 5, 5), std::logic_error);
}

TEST_CASE("stability check")
{
    StabilityVerdict v = StabilityCheck(5.0, 1, 1, 0.25);
    CHECK(v.verdict == Stability::Stable);
    CHECK(v.threshold == doctest::Approx(4.0));
    CHECK(StabilityCheck(4.0, 1, 1, 0.25).verdict == Stability::Unstable);
    CHECK(StabilityCheck(std::nullopt, 1, 1, 0.25).verdict == Stability::Stable);
    v = StabilityCheck(5.0, 1, 1, 0.0);
    CHECK(v.verdict == Stability::Unstable);
    CHECK(v.diagnostic.find("zero win probability") != std::string::npos);
}

TEST_CASE("stability check with a time-varying channel")
{
    const std::vector<double> forever{std::numeric_limits<double>::infinity()};
    CHECK(StabilityCheckMarkov(5.0, 1, 1, 0.25, forever).verdict == Stability::Stable);
    CHECK(StabilityCheckMarkov(4.0, 1, 1, 0.25, forever).verdict == Stability::Unstable);
    const std::vector<double> two{2.0, 2.0, 2.0};
    CHECK(StabilityCheckMarkov(10.0, 1, 1, 0.4, two).verdict == Stability::Unstable);
    CHECK_THROWS_AS(StabilityCheckMarkov(10.0, 1, 1, 0.4, {}), std::invalid_argument);
}

TEST_CASE("exponential good periods: verdict follows E[min(B,T)] = (1 - exp(-lambda B)) / lambda")
{
    constexpr double kLambda = 0.2;
    constexpr double kCap = 8.0;
    const double expected = (1.0 - std::exp(-kLambda * kCap)) / kLambda;
    RngStream rng(6, 6);
    std::vector<double> samples;
    for (int i = 0; i < 200'000; ++i)
    {
        samples.push_back(rng.Exponential(kLambda));
    }
    // threshold W*c/p placed 3% either side of the closed form
    const double p = 0.25;
    CHECK(StabilityCheckMarkov(kCap, 1, expected * 0.97 * p, p, samples).verdict == Stability::Stable);
    CHECK(StabilityCheckMarkov(kCap, 1, expected * 1.03 * p, p, samples).verdict == Stability::Unstable);
}

TEST_CASE("clock speed broadcast")
{
    CHECK(ComputeClockBroadcast(KnownStationCount{10}) == F("0.1"));
    CHECK(ComputeClockBroadcast(DelayTarget{0.5, 10, 20}) == F("0.25"));
    CHECK(ComputeClockBroadcast(DelayTarget{0.5, 7, 7}) == F("0.5"));
    CHECK(ComputeClockBroadcast(ApControlledSpeed{0.2}) == F("0.2"));
    CHECK_THROWS_AS(ComputeClockBroadcast(KnownStationCount{0}), std::invalid_argument);
    CHECK_THROWS_AS(ComputeClockBroadcast(DelayTarget{0.5, 1, 0}), std::invalid_argument);
}

TEST_CASE("clock speed table follows the minimum of latest values")
{
    ClockSpeedTable t;
    t.Merge(1, F("0.5"));
    CHECK(t.Effective() == F("0.5"));
    t.Merge(2, F("0.25"));
    CHECK(t.Effective() == F("0.25"));
    t.Merge(2, F("0.6"));
    CHECK(t.Effective() == F("0.5"));
    CHECK(t.Size() == 2);
    CHECK_THROWS_AS(t.Merge(3, F("0")), std::invalid_argument);
}

TEST_CASE("credit walk: with no cap the burst equals m * W")
{
    CreditWalk walk(F("3"), F("1"), std::nullopt, 0.3);
    RngStream rng(1, 1);
    std::uint64_t m = 0;
    for (int i = 0; i < 10'000; ++i)
    {
        ++m;
        const auto step = walk.Advance(rng);
        if (step.won)
        {
            REQUIRE(step.burst == 3 * m);
            m = 0;
        }
    }
}
