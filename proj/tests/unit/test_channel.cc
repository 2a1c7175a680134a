#include "vls/channel.h"

#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <limits>
#include <vector>

using namespace vls;

namespace {

ChannelState
AlwaysGood(StationId)
{
    return ChannelState::Good;
}

} // namespace

TEST_CASE("stationary loss probability")
{
    CHECK(StationaryLossProb(20, 113) == doctest::Approx(20.0 / 133.0));
    CHECK(StationaryLossProb(20, 113) == doctest::Approx(0.1504).epsilon(0.001));
    CHECK(StationaryLossProb(7, 7) == doctest::Approx(0.5));
    CHECK(StationaryLossProb(1, 999) == doctest::Approx(0.001));
    CHECK(StationaryLossProb(5, std::numeric_limits<double>::infinity()) == 0.0);
    CHECK_THROWS_AS(StationaryLossProb(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(StationaryLossProb(1, -1), std::invalid_argument);
    CHECK_THROWS_AS(StationaryLossProb(std::nan(""), 1), std::invalid_argument);
}

TEST_CASE("infinite bad rate keeps the channel good")
{
    GilbertElliott ch(50, std::numeric_limits<double>::infinity());
    RngStream rng(1, 1);
    for (TimeUs t = 0; t < 10'000'000; t += 997)
    {
        CHECK(ch.StateAt(t, rng) == ChannelState::Good);
    }
}

TEST_CASE("state sequence is reproducible")
{
    GilbertElliott a(20, 113);
    GilbertElliott b(20, 113);
    RngStream ra(3, 4);
    RngStream rb(3, 4);
    for (TimeUs t = 0; t < 5'000'000; t += 1000)
    {
        REQUIRE(a.StateAt(t, ra) == b.StateAt(t, rb));
    }
}

TEST_CASE("queries must move forward")
{
    GilbertElliott ch(20, 113);
    RngStream rng(1, 1);
    ch.StateAt(100, rng);
    CHECK_THROWS_AS(ch.StateAt(50, rng), std::logic_error);
}

TEST_CASE("time fraction in Bad matches the stationary probability")
{
    // fast rates so that 1e7 us hold thousands of dwells
    GilbertElliott ch(200, 1130);
    RngStream rng(11, 2);
    long bad = 0;
    long samples = 0;
    for (TimeUs t = 0; t < 10'000'000; t += 10)
    {
        bad += ch.StateAt(t, rng) == ChannelState::Bad;
        ++samples;
    }
    const double fraction = static_cast<double>(bad) / samples;
    CHECK(std::abs(fraction - ch.StationaryLossProb()) <= 0.01);
}

TEST_CASE("dwell means match 1/lambda")
{
    GilbertElliott ch(20, 113);
    RngStream rng(21, 5);
    ch.StateAt(0, rng);
    std::vector<double> good;
    std::vector<double> bad;
    while (good.size() < 10'000 || bad.size() < 10'000)
    {
        const double next = ch.NextTransitionUs();
        const ChannelState s = ch.StateAt(static_cast<TimeUs>(std::ceil(next)), rng);
        (s == ChannelState::Good ? good : bad).push_back(ch.NextTransitionUs() - next);
    }
    double g = 0;
    double b = 0;
    for (double x : good)
    {
        g += x;
    }
    for (double x : bad)
    {
        b += x;
    }
    g /= static_cast<double>(good.size());
    b /= static_cast<double>(bad.size());
    CHECK(g == doctest::Approx(1e6 / 20).epsilon(0.05));
    CHECK(b == doctest::Approx(1e6 / 113).epsilon(0.05));
}

TEST_CASE("Bernoulli loss converges within three standard errors")
{
    ChannelSpec spec;
    spec.mode = BernoulliChannel{0.15};
    StationChannel ch(spec, RngStream(8, 8));
    constexpr int kN = 200'000;
    int lost = 0;
    for (int i = 0; i < kN; ++i)
    {
        lost += ch.PacketState(i) == ChannelState::Bad;
    }
    const double se = std::sqrt(0.15 * 0.85 / kN);
    CHECK(std::abs(static_cast<double>(lost) / kN - 0.15) <= 3 * se);
}

TEST_CASE("channel spec validation")
{
    ChannelSpec spec;
    CHECK_NOTHROW(spec.Validate());
    spec.mode = BernoulliChannel{1.5};
    CHECK_THROWS_AS(spec.Validate(), std::invalid_argument);
    spec.mode = MarkovChannel{0, 3};
    CHECK_THROWS_AS(spec.Validate(), std::invalid_argument);
}

TEST_CASE("resolve_reception")
{
    const std::vector<Transmission> strongNormal{{1, CaptureClass::Strong}, {2, CaptureClass::Normal}};
    CHECK(ResolveReception(strongNormal, AlwaysGood, true) == ReceptionOutcome::Delivered(1));
    CHECK(ResolveReception(strongNormal, AlwaysGood, false) == ReceptionOutcome::CollisionLost());

    const std::vector<Transmission> single{{1}};
    CHECK(ResolveReception(single, AlwaysGood, false) == ReceptionOutcome::Delivered(1));
    CHECK(ResolveReception(single, [](StationId) { return ChannelState::Bad; }, false) == ReceptionOutcome::Lost());

    const std::vector<Transmission> normals{{1}, {2}};
    CHECK(ResolveReception(normals, AlwaysGood, true) == ReceptionOutcome::CollisionLost());

    const std::vector<Transmission> twoStrong{{1, CaptureClass::Strong}, {2, CaptureClass::Strong}};
    CHECK(ResolveReception(twoStrong, AlwaysGood, true) == ReceptionOutcome::CollisionLost());

    // capture cannot rescue a strong packet hit by its own channel
    const auto s1Bad = [](StationId id) { return id == 1 ? ChannelState::Bad : ChannelState::Good; };
    CHECK(ResolveReception(strongNormal, s1Bad, true) == ReceptionOutcome::Lost());

    CHECK_THROWS_AS(ResolveReception({}, AlwaysGood, true), std::logic_error);
}

TEST_CASE("no capture and perfect channels: every overlap is a collision")
{
    RngStream rng(4, 4);
    for (int trial = 0; trial < 200; ++trial)
    {
        std::vector<Transmission> txs;
        const std::uint32_t n = 2 + rng.UniformInt(6);
        for (std::uint32_t i = 0; i < n; ++i)
        {
            txs.push_back({i + 1, rng.Bernoulli(0.5) ? CaptureClass::Strong : CaptureClass::Normal});
        }
        CHECK(ResolveReception(txs, AlwaysGood, false) == ReceptionOutcome::CollisionLost());
    }
}
