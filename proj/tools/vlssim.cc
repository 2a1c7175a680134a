// Command-line driver: run one scenario (from a file or a preset) and write
// trace.csv plus summary.json.

#include "vls/presets.h"
#include "vls/simulator.h"
#include "vls/summary.h"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <thread>

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

struct Options
{
    std::string scenarioPath;
    std::string preset;
    std::optional<std::uint64_t> seed;
    std::optional<double> duration;
    std::string outDir = ".";
    bool summaryOnly = false;
    unsigned sweep = 0;
    bool listPresets = false;
    bool dumpConfig = false;
};

void
WriteFile(const fs::path& path, const std::string& text)
{
    std::ofstream os(path, std::ios::binary);
    if (!os)
    {
        throw std::runtime_error("cannot write " + path.string());
    }
    os << text;
}

vls::RunSummary
RunOne(const vls::ScenarioConfig& cfg, const fs::path& dir, bool summaryOnly)
{
    const vls::SimResult result = vls::RunScenario(cfg);
    const vls::RunSummary summary = vls::Summarize(result);
    fs::create_directories(dir);
    if (!summaryOnly)
    {
        WriteFile(dir / (cfg.name + ".csv"), result.trace.ToCsv());
    }
    WriteFile(dir / (cfg.name + ".summary.json"), vls::SummaryToJson(summary));
    return summary;
}

} // namespace

int
main(int argc, char** argv)
{
    CLI::App app{"CSMA/CA simulator with virtual-length-slot fair scheduling"};
    Options opt;
    auto* scenario = app.add_option("--scenario", opt.scenarioPath, "scenario JSON file");
    auto* preset = app.add_option("--preset", opt.preset, "built-in experiment (see --list-presets)");
    scenario->excludes(preset);
    app.add_option("--seed", opt.seed, "RNG seed override");
    app.add_option("--duration", opt.duration, "simulated seconds override")->check(CLI::NonNegativeNumber);
    app.add_option("--out", opt.outDir, "output directory")->capture_default_str();
    app.add_flag("--summary-only", opt.summaryOnly, "skip the trace CSV");
    app.add_option("--sweep", opt.sweep, "run this many consecutive seeds in parallel, one subdirectory each");
    app.add_flag("--list-presets", opt.listPresets, "print preset names and exit");
    app.add_flag("--dump-config", opt.dumpConfig, "print the resolved scenario JSON and exit");
    CLI11_PARSE(app, argc, argv);

    if (opt.listPresets)
    {
        for (const auto& n : vls::PresetNames())
        {
            std::cout << n << "\n";
        }
        return kExitOk;
    }

    vls::ScenarioConfig cfg;
    try
    {
        if (!opt.preset.empty())
        {
            auto p = vls::Preset(opt.preset);
            if (!p)
            {
                std::cerr << "error: unknown preset '" << opt.preset << "'\n";
                return kExitValidation;
            }
            cfg = *p;
        }
        else if (!opt.scenarioPath.empty())
        {
            cfg = vls::LoadScenarioFile(opt.scenarioPath);
        }
        else
        {
            std::cerr << "error: one of --scenario or --preset is required\n";
            return kExitValidation;
        }
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    if (opt.seed)
    {
        cfg.seed = *opt.seed;
    }
    if (opt.duration)
    {
        cfg.durationS = *opt.duration;
        if (cfg.warmupS >= cfg.durationS)
        {
            cfg.warmupS = 0.0;
        }
    }

    const vls::ValidationReport report = vls::Validate(cfg);
    for (const auto& w : report.warnings)
    {
        std::cerr << "warning: " << w << "\n";
    }
    if (!report.Ok())
    {
        for (const auto& e : report.errors)
        {
            std::cerr << "error: " << e << "\n";
        }
        return kExitValidation;
    }
    if (opt.dumpConfig)
    {
        std::cout << vls::SerializeScenario(cfg);
        return kExitOk;
    }

    try
    {
        if (opt.sweep == 0)
        {
            const auto s = RunOne(cfg, opt.outDir, opt.summaryOnly);
            std::cout << cfg.name << " seed=" << cfg.seed << " jain_1s_mean=" << s.jain1sMean
                      << " weighted_fairness_error=" << s.weightedFairnessError
                      << " total_throughput_bps=" << s.totalThroughputBps << "\n";
            return kExitOk;
        }
        std::vector<std::future<vls::RunSummary>> runs;
        for (unsigned k = 0; k < opt.sweep; ++k)
        {
            vls::ScenarioConfig c = cfg;
            c.seed = cfg.seed + k;
            const fs::path dir = fs::path(opt.outDir) / ("seed_" + std::to_string(c.seed));
            runs.push_back(std::async(std::launch::async, [c, dir, &opt] { return RunOne(c, dir, opt.summaryOnly); }));
        }
        for (auto& f : runs)
        {
            const auto s = f.get();
            std::cout << s.scenario << " seed=" << s.seed << " jain_1s_mean=" << s.jain1sMean
                      << " weighted_fairness_error=" << s.weightedFairnessError
                      << " total_throughput_bps=" << s.totalThroughputBps << "\n";
        }
    }
    catch (const std::exception& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}
