#include "vls/scenario.h"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace vls {

using Json = nlohmann::ordered_json;

TimeUs
ScenarioConfig::DurationUs() const
{
    return static_cast<TimeUs>(std::llround(durationS * 1e6));
}

TimeUs
ScenarioConfig::WarmupUs() const
{
    return static_cast<TimeUs>(std::llround(warmupS * 1e6));
}

const StationConfig&
ScenarioConfig::Station(StationId id) const
{
    for (const auto& s : stations)
    {
        if (s.id == id)
        {
            return s;
        }
    }
    throw std::out_of_range("no station " + std::to_string(id));
}

ValidationReport
Validate(const ScenarioConfig& cfg)
{
    ValidationReport r;
    auto error = [&r](std::string msg) { r.errors.push_back(std::move(msg)); };

    try
    {
        cfg.phy.Validate();
    }
    catch (const std::invalid_argument& e)
    {
        error(e.what());
    }
    if (!(cfg.durationS >= 0.0) || !std::isfinite(cfg.durationS))
    {
        error("duration must be non-negative");
    }
    if (!(cfg.warmupS >= 0.0) || (cfg.durationS > 0.0 && cfg.warmupS >= cfg.durationS))
    {
        error("warmup must lie in [0, duration)");
    }
    if (cfg.samplePeriodUs <= 0 || cfg.fairnessWindowUs <= 0)
    {
        error("sample period and fairness window must be positive");
    }
    if (cfg.stations.empty())
    {
        error("scenario has no stations");
    }

    std::set<StationId> ids;
    for (const auto& s : cfg.stations)
    {
        if (!ids.insert(s.id).second)
        {
            error("duplicate station id " + std::to_string(s.id));
        }
    }

    for (const auto& s : cfg.stations)
    {
        const std::string who = "station " + std::to_string(s.id) + ": ";
        if (s.weight <= Fixed6{})
        {
            error(who + "weight must be positive");
        }
        if (s.cwMin == 0 || s.cwMax < s.cwMin)
        {
            error(who + "require 0 < cw_min <= cw_max");
        }
        try
        {
            s.channel.Validate();
        }
        catch (const std::invalid_argument& e)
        {
            error(who + e.what());
        }
        if (!(s.startS >= 0.0))
        {
            error(who + "start time must be non-negative");
        }
        if (s.vls.clockSpeed <= Fixed6{})
        {
            error(who + "clock speed c must be positive");
        }
        if (s.vls.burstCap && *s.vls.burstCap == 0)
        {
            error(who + "burst cap must be positive");
        }
        if (s.vls.enabled && cfg.topology)
        {
            error(who + "credit-based VLS needs a single collision domain; multi-domain runs use the burst controller");
        }
        if (s.vls.enabled && s.vls.variant == VlsVariant::Ap)
        {
            if (s.weight.Micros() % Fixed6::kScale != 0)
            {
                error(who + "the AP variant needs an integer weight");
            }
        }
        if (s.destination)
        {
            if (!ids.contains(*s.destination) || *s.destination == s.id)
            {
                error(who + "destination must be another declared station");
            }
        }
        else if (cfg.topology)
        {
            error(who + "multi-domain flows need an explicit destination station");
        }
        if (s.winProbEstimate)
        {
            const double p = *s.winProbEstimate;
            if (!(p >= 0.0 && p <= 1.0))
            {
                error(who + "win probability estimate must lie in [0,1]");
            }
            else if (s.vls.enabled && s.vls.burstCap && s.weight > Fixed6{} && s.vls.clockSpeed > Fixed6{})
            {
                const auto v = StabilityCheck(static_cast<double>(*s.vls.burstCap), s.weight.ToDouble(),
                                              s.vls.clockSpeed.ToDouble(), p);
                if (v.verdict == Stability::Unstable)
                {
                    r.warnings.push_back(who + "potential credit instability (" + v.diagnostic + ")");
                }
            }
        }
    }

    if (cfg.topology)
    {
        const auto& t = *cfg.topology;
        for (const auto& [a, b] : t.edges)
        {
            if (!ids.contains(a) || !ids.contains(b) || a == b)
            {
                error("topology: edge " + std::to_string(a) + "-" + std::to_string(b) +
                      " references an unknown station");
            }
        }
        std::set<std::pair<StationId, StationId>> edgeSet;
        for (auto [a, b] : t.edges)
        {
            edgeSet.insert({std::min(a, b), std::max(a, b)});
        }
        for (const auto& s : cfg.stations)
        {
            if (s.destination && !edgeSet.contains({std::min(s.id, *s.destination), std::max(s.id, *s.destination)}))
            {
                error("station " + std::to_string(s.id) + ": destination is out of sensing range");
            }
        }
        if (!(t.alpha > 0.0))
        {
            error("topology: alpha must be positive");
        }
        if (t.updatePeriodUs && *t.updatePeriodUs <= 0)
        {
            error("topology: update period must be positive");
        }
        if (t.averagingWindowUs <= 0 || t.initialBurstUs <= 0 || t.maxBurstUs <= 0 || t.minBurstUs < 0 ||
            (t.minBurstUs > 0 && t.minBurstUs > t.maxBurstUs))
        {
            error("topology: burst bounds and averaging window must be positive and ordered");
        }
    }
    return r;
}

namespace {

std::string
ToString(VlsVariant v)
{
    return v == VlsVariant::Ap ? "ap" : "distributed";
}

VlsVariant
ParseVariant(const std::string& s)
{
    if (s == "distributed")
    {
        return VlsVariant::Distributed;
    }
    if (s == "ap")
    {
        return VlsVariant::Ap;
    }
    throw std::invalid_argument("unknown VLS variant '" + s + "'");
}

Json
ChannelToJson(const ChannelSpec& ch)
{
    Json j;
    if (const auto* b = std::get_if<BernoulliChannel>(&ch.mode))
    {
        j["mode"] = "bernoulli";
        j["loss"] = b->lossProb;
    }
    else if (const auto* m = std::get_if<MarkovChannel>(&ch.mode))
    {
        j["mode"] = "markov";
        j["lambda_good"] = m->lambdaGood;
        j["lambda_bad"] = m->lambdaBad;
    }
    else
    {
        j["mode"] = "perfect";
    }
    j["capture_class"] = ch.captureClass == CaptureClass::Strong ? "strong" : "normal";
    return j;
}

/// Reads keys of one JSON object, rejecting keys that were never looked at.
class ObjectReader
{
  public:
    ObjectReader(const Json& j, std::string where)
        : m_j(j),
          m_where(std::move(where))
    {
        if (!j.is_object())
        {
            throw std::invalid_argument(m_where + ": expected an object");
        }
    }

    bool Has(const std::string& key)
    {
        m_seen.insert(key);
        return m_j.contains(key);
    }

    const Json& At(const std::string& key)
    {
        m_seen.insert(key);
        if (!m_j.contains(key))
        {
            throw std::invalid_argument(m_where + ": missing key '" + key + "'");
        }
        return m_j.at(key);
    }

    template <typename T>
    T Get(const std::string& key, T fallback)
    {
        if (!Has(key))
        {
            return fallback;
        }
        try
        {
            return m_j.at(key).get<T>();
        }
        catch (const nlohmann::json::exception&)
        {
            throw std::invalid_argument(m_where + ": bad value for '" + key + "'");
        }
    }

    Fixed6 GetDecimal(const std::string& key, Fixed6 fallback)
    {
        if (!Has(key))
        {
            return fallback;
        }
        const Json& v = m_j.at(key);
        if (v.is_string())
        {
            return Fixed6::Parse(v.get<std::string>());
        }
        if (v.is_number_integer())
        {
            return Fixed6::FromInt(v.get<std::int64_t>());
        }
        if (v.is_number())
        {
            // decimal literals are re-read through their shortest text form
            std::ostringstream os;
            os << v;
            return Fixed6::Parse(os.str());
        }
        throw std::invalid_argument(m_where + ": '" + key + "' must be a decimal");
    }

    void Finish() const
    {
        for (const auto& [key, value] : m_j.items())
        {
            if (!m_seen.contains(key))
            {
                throw std::invalid_argument(m_where + ": unknown key '" + key + "'");
            }
        }
    }

  private:
    const Json& m_j;
    std::string m_where;
    std::set<std::string> m_seen;
};

ChannelSpec
ChannelFromJson(const Json& j, const std::string& where)
{
    ObjectReader r(j, where);
    ChannelSpec ch;
    const std::string mode = r.Get<std::string>("mode", "perfect");
    if (mode == "bernoulli")
    {
        ch.mode = BernoulliChannel{r.Get<double>("loss", 0.0)};
    }
    else if (mode == "markov")
    {
        ch.mode = MarkovChannel{r.Get<double>("lambda_good", 0.0), r.Get<double>("lambda_bad", 0.0)};
    }
    else if (mode != "perfect")
    {
        throw std::invalid_argument(where + ": unknown channel mode '" + mode + "'");
    }
    const std::string cls = r.Get<std::string>("capture_class", "normal");
    if (cls == "strong")
    {
        ch.captureClass = CaptureClass::Strong;
    }
    else if (cls != "normal")
    {
        throw std::invalid_argument(where + ": unknown capture class '" + cls + "'");
    }
    r.Finish();
    return ch;
}

} // namespace

std::string
SerializeScenario(const ScenarioConfig& cfg)
{
    Json j;
    j["name"] = cfg.name;
    j["duration_s"] = cfg.durationS;
    j["seed"] = cfg.seed;
    j["warmup_s"] = cfg.warmupS;
    j["sample_period_us"] = cfg.samplePeriodUs;
    j["fairness_window_us"] = cfg.fairnessWindowUs;
    j["capture"] = cfg.capture;
    j["phy"] = {{"slot_us", cfg.phy.slotTime},
                {"sifs_us", cfg.phy.sifs},
                {"difs_us", cfg.phy.difs},
                {"data_rate_bps", cfg.phy.dataRate},
                {"payload_bytes", cfg.phy.packetPayload},
                {"ack_us", cfg.phy.ackDuration},
                {"header_overhead_us", cfg.phy.headerOverhead}};
    Json stations = Json::array();
    for (const auto& s : cfg.stations)
    {
        Json st;
        st["id"] = s.id;
        st["weight"] = s.weight.ToString();
        st["cw_min"] = s.cwMin;
        st["cw_max"] = s.cwMax;
        st["channel"] = ChannelToJson(s.channel);
        if (s.destination)
        {
            st["destination"] = *s.destination;
        }
        else
        {
            st["destination"] = "ap";
        }
        st["start_s"] = s.startS;
        if (s.winProbEstimate)
        {
            st["win_prob_estimate"] = *s.winProbEstimate;
        }
        Json v;
        v["enabled"] = s.vls.enabled;
        v["c"] = s.vls.clockSpeed.ToString();
        if (s.vls.burstCap)
        {
            v["burst_cap"] = *s.vls.burstCap;
        }
        v["metric"] = ToString(s.vls.metric);
        v["variant"] = ToString(s.vls.variant);
        st["vls"] = v;
        stations.push_back(st);
    }
    j["stations"] = stations;
    if (cfg.topology)
    {
        const auto& t = *cfg.topology;
        Json tj;
        Json edges = Json::array();
        for (const auto& [a, b] : t.edges)
        {
            edges.push_back({a, b});
        }
        tj["edges"] = edges;
        tj["controller"] = t.controller;
        tj["alpha"] = t.alpha;
        tj["alpha_schedule"] = t.schedule == StepSchedule::Inverse ? "inverse" : "constant";
        if (t.updatePeriodUs)
        {
            tj["update_period_us"] = *t.updatePeriodUs;
        }
        else
        {
            tj["update_period_us"] = nullptr;
        }
        tj["averaging_window_us"] = t.averagingWindowUs;
        tj["initial_burst_us"] = t.initialBurstUs;
        tj["min_burst_us"] = t.minBurstUs;
        tj["max_burst_us"] = t.maxBurstUs;
        j["topology"] = tj;
    }
    return j.dump(2) + "\n";
}

ScenarioConfig
ParseScenario(const std::string& text)
{
    Json j;
    try
    {
        j = Json::parse(text);
    }
    catch (const nlohmann::json::parse_error& e)
    {
        throw std::invalid_argument(std::string("scenario is not valid JSON: ") + e.what());
    }
    ScenarioConfig cfg;
    ObjectReader r(j, "scenario");
    cfg.name = r.Get<std::string>("name", cfg.name);
    cfg.durationS = r.Get<double>("duration_s", cfg.durationS);
    cfg.seed = r.Get<std::uint64_t>("seed", cfg.seed);
    cfg.warmupS = r.Get<double>("warmup_s", cfg.warmupS);
    cfg.samplePeriodUs = r.Get<TimeUs>("sample_period_us", cfg.samplePeriodUs);
    cfg.fairnessWindowUs = r.Get<TimeUs>("fairness_window_us", cfg.fairnessWindowUs);
    cfg.capture = r.Get<bool>("capture", cfg.capture);
    if (r.Has("phy"))
    {
        ObjectReader p(r.At("phy"), "phy");
        cfg.phy.slotTime = p.Get<TimeUs>("slot_us", cfg.phy.slotTime);
        cfg.phy.sifs = p.Get<TimeUs>("sifs_us", cfg.phy.sifs);
        cfg.phy.difs = p.Get<TimeUs>("difs_us", cfg.phy.difs);
        cfg.phy.dataRate = p.Get<std::uint64_t>("data_rate_bps", cfg.phy.dataRate);
        cfg.phy.packetPayload = p.Get<std::uint32_t>("payload_bytes", cfg.phy.packetPayload);
        cfg.phy.ackDuration = p.Get<TimeUs>("ack_us", cfg.phy.ackDuration);
        cfg.phy.headerOverhead = p.Get<TimeUs>("header_overhead_us", cfg.phy.headerOverhead);
        p.Finish();
    }
    const Json& stations = r.At("stations");
    if (!stations.is_array())
    {
        throw std::invalid_argument("scenario: 'stations' must be an array");
    }
    for (const auto& sj : stations)
    {
        StationConfig s;
        ObjectReader sr(sj, "station");
        s.id = sr.Get<StationId>("id", s.id);
        const std::string where = "station " + std::to_string(s.id);
        s.weight = sr.GetDecimal("weight", s.weight);
        s.cwMin = sr.Get<std::uint32_t>("cw_min", s.cwMin);
        s.cwMax = sr.Get<std::uint32_t>("cw_max", s.cwMax);
        if (sr.Has("channel"))
        {
            s.channel = ChannelFromJson(sr.At("channel"), where + " channel");
        }
        if (sr.Has("destination"))
        {
            const Json& d = sr.At("destination");
            if (d.is_string() && d.get<std::string>() == "ap")
            {
                s.destination.reset();
            }
            else if (d.is_number_unsigned())
            {
                s.destination = d.get<StationId>();
            }
            else
            {
                throw std::invalid_argument(where + ": destination must be \"ap\" or a station id");
            }
        }
        s.startS = sr.Get<double>("start_s", s.startS);
        if (sr.Has("win_prob_estimate"))
        {
            s.winProbEstimate = sr.Get<double>("win_prob_estimate", 0.0);
        }
        if (sr.Has("vls"))
        {
            ObjectReader v(sr.At("vls"), where + " vls");
            s.vls.enabled = v.Get<bool>("enabled", s.vls.enabled);
            s.vls.clockSpeed = v.GetDecimal("c", s.vls.clockSpeed);
            if (v.Has("burst_cap"))
            {
                s.vls.burstCap = v.Get<std::uint32_t>("burst_cap", 0);
            }
            s.vls.metric = ParseFairnessMetric(v.Get<std::string>("metric", "packets"));
            s.vls.variant = ParseVariant(v.Get<std::string>("variant", "distributed"));
            v.Finish();
        }
        sr.Finish();
        cfg.stations.push_back(s);
    }
    if (r.Has("topology"))
    {
        TopologyConfig t;
        ObjectReader tr(r.At("topology"), "topology");
        const Json& edges = tr.At("edges");
        if (!edges.is_array())
        {
            throw std::invalid_argument("topology: 'edges' must be an array of pairs");
        }
        for (const auto& e : edges)
        {
            if (!e.is_array() || e.size() != 2)
            {
                throw std::invalid_argument("topology: each edge is a pair of station ids");
            }
            t.edges.emplace_back(e[0].get<StationId>(), e[1].get<StationId>());
        }
        t.controller = tr.Get<bool>("controller", t.controller);
        t.alpha = tr.Get<double>("alpha", t.alpha);
        const std::string sched = tr.Get<std::string>("alpha_schedule", "constant");
        if (sched == "inverse")
        {
            t.schedule = StepSchedule::Inverse;
        }
        else if (sched != "constant")
        {
            throw std::invalid_argument("topology: unknown alpha schedule '" + sched + "'");
        }
        if (tr.Has("update_period_us"))
        {
            const Json& p = tr.At("update_period_us");
            if (p.is_null())
            {
                t.updatePeriodUs.reset();
            }
            else
            {
                t.updatePeriodUs = p.get<TimeUs>();
            }
        }
        t.averagingWindowUs = tr.Get<TimeUs>("averaging_window_us", t.averagingWindowUs);
        t.initialBurstUs = tr.Get<TimeUs>("initial_burst_us", t.initialBurstUs);
        t.minBurstUs = tr.Get<TimeUs>("min_burst_us", t.minBurstUs);
        t.maxBurstUs = tr.Get<TimeUs>("max_burst_us", t.maxBurstUs);
        tr.Finish();
        cfg.topology = t;
    }
    r.Finish();
    return cfg;
}

ScenarioConfig
LoadScenarioFile(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
    {
        throw std::invalid_argument("cannot open scenario file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ParseScenario(ss.str());
}

} // namespace vls
