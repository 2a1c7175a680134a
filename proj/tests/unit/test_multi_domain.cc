#include "vls/multi_domain.h"

#include <doctest.h>

#include <stdexcept>

using namespace vls;

namespace {

ContentionGraph
Fig7Graph()
{
    ContentionGraph g({1, 2, 3, 4, 5});
    for (auto [a, b] : {std::pair{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}})
    {
        g.AddEdge(a, b);
    }
    return g;
}

} // namespace

TEST_CASE("contention graph")
{
    const ContentionGraph g = Fig7Graph();
    CHECK(g.Senses(1, 3));
    CHECK(g.Senses(3, 1));
    CHECK_FALSE(g.Senses(1, 4));
    CHECK(g.Neighbors(3) == std::set<StationId>{1, 2, 3, 4, 5});
    CHECK(g.Neighbors(1) == std::set<StationId>{1, 2, 3});
    const auto domains = g.CollisionDomains();
    REQUIRE(domains.size() == 2);
    CHECK(domains[0] == std::set<StationId>{1, 2, 3});
    CHECK(domains[1] == std::set<StationId>{3, 4, 5});
    CHECK_FALSE(g.IsComplete());
    CHECK(ContentionGraph::Complete({1, 2, 3}).IsComplete());
    CHECK(g.Edges().size() == 6);

    ContentionGraph h({1, 2});
    CHECK_THROWS_AS(h.AddEdge(1, 9), std::invalid_argument);
    CHECK_THROWS_AS(h.AddStation(2), std::invalid_argument);
}

TEST_CASE("update_burst")
{
    BurstController c;
    c.burstUs = 1000;
    c.alpha = 0.1;
    c.minBurstUs = 100;
    BurstController next = UpdateBurst(c, 1.0, 3.0, 1.0, 3.0);
    CHECK(next.burstUs == doctest::Approx(1000));

    next = UpdateBurst(c, 0.5, 1.0, 1.0, 3.0);
    CHECK(next.burstUs == doctest::Approx(1000 * (1 - 0.1 / 6)));
    CHECK(next.burstUs == doctest::Approx(983.33).epsilon(1e-4));

    // share above target shrinks, below target grows
    CHECK(UpdateBurst(c, 2, 3, 1, 3).burstUs < 1000);
    CHECK(UpdateBurst(c, 0.5, 3, 1, 3).burstUs > 1000);

    next = UpdateBurst(c, 0, 0, 1, 3);
    CHECK(next.burstUs == 1000);
    CHECK(next.updates == 0);

    c.burstUs = 9990;
    CHECK(UpdateBurst(c, 0, 3, 1, 1).burstUs == 10'000);
    c.burstUs = 101;
    CHECK(UpdateBurst(c, 3, 3, 0.1, 1).burstUs == 100);
}

TEST_CASE("inverse step schedule")
{
    BurstController c;
    c.schedule = StepSchedule::Inverse;
    c.alpha = 0.2;
    CHECK(c.StepSize() == doctest::Approx(0.2));
    c = UpdateBurst(c, 1, 2, 1, 3);
    CHECK(c.StepSize() == doctest::Approx(0.1));
}

TEST_CASE("throughput monitor")
{
    const ContentionGraph g = Fig7Graph();
    ThroughputMonitor m(40'000);
    auto [own, sum] = m.Observe(1, g, 50'000);
    CHECK(own == 0.0);
    CHECK(sum == 0.0);

    m.Record(1, 60'000, 1000);
    std::tie(own, sum) = m.Observe(1, g, 80'000);
    CHECK(own == doctest::Approx(200'000));
    CHECK(sum == doctest::Approx(200'000));

    m.Record(4, 70'000, 1000);
    std::tie(own, sum) = m.Observe(1, g, 80'000);
    CHECK(sum == doctest::Approx(200'000)); // station 4 is out of range
    std::tie(own, sum) = m.Observe(3, g, 80'000);
    CHECK(own == 0.0);
    CHECK(sum == doctest::Approx(400'000));

    // the window slides
    CHECK(m.Rate(1, 100'000) == doctest::Approx(0.0));

    // clipped at t = 0
    ThroughputMonitor early(40'000);
    early.Record(2, 5'000, 1000);
    CHECK(early.Rate(2, 10'000) == doctest::Approx(8000.0 / 0.01));

    CHECK_THROWS_AS(m.Record(4, 10, 1), std::logic_error);
}

TEST_CASE("symmetric traffic gives equal estimates")
{
    ContentionGraph g({1, 2});
    g.AddEdge(1, 2);
    ThroughputMonitor m(40'000);
    for (TimeUs t = 0; t < 200'000; t += 1000)
    {
        m.Record(1, t, 1000);
        m.Record(2, t + 500, 1000);
    }
    const auto [s1, sum1] = m.Observe(1, g, 200'000);
    const auto [s2, sum2] = m.Observe(2, g, 200'000);
    CHECK(std::abs(s1 - s2) <= 8000.0 / 0.04);
    CHECK(sum1 == doctest::Approx(sum2));
}

TEST_CASE("schedule_updates")
{
    CHECK(ScheduleUpdates(4000, 100'000, 0, 5).size() == 25);
    const auto third = ScheduleUpdates(4000, 100'000, 2, 5);
    REQUIRE(third.size() == 25);
    CHECK(third.front() == 1600);
    CHECK(third[1] == 5600);
    CHECK(ScheduleUpdates(4000, 100'000, 2, 5) == third);
    CHECK_THROWS_AS(ScheduleUpdates(0, 100, 0, 1), std::invalid_argument);
}
