#include <doctest.h>

#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "singeq/cli/commands.hpp"

namespace fs = std::filesystem;
using namespace singeq::cli;

namespace {

constexpr int kSeeds = 100;

struct Preset {
    std::string name;
    std::vector<std::string> flags;
};

int run_quiet(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    return run(args, out, err);
}

}  // namespace

// generate -> solve -> verify for every placement, odd N and distribution.
TEST_CASE("pipeline round trip over odd-N presets and seeds")
{
    const fs::path dir = fs::temp_directory_path() / "singeq_test_roundtrip";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const std::string config = (dir / "config.json").string();
    const std::string report = (dir / "report.json").string();

    const std::vector<Preset> placements{
        {"line", {"--line"}},
        {"circle", {"--circle"}},
        {"flower", {"--curve", "flower"}},
        {"figure-eight", {"--curve", "figure-eight"}},
        {"plane", {"--plane"}},
    };
    const std::vector<std::string> distributions{"--even", "--arclength", "--random"};

    int total_failures = 0;
    for (const Preset& placement : placements) {
        for (int n : {3, 5, 7, 9}) {
            for (const std::string& dist : distributions) {
                if (placement.name == "plane" && dist != "--random") {
                    continue;
                }
                std::map<std::string, int> tally;
                for (int seed = 1; seed <= kSeeds; ++seed) {
                    std::vector<std::string> gen{"generate", "--n", std::to_string(n), dist, "--seed",
                                                 std::to_string(seed), "--out", config};
                    gen.insert(gen.begin() + 1, placement.flags.begin(), placement.flags.end());
                    if (const int code = run_quiet(gen); code != exit_ok) {
                        ++tally["generate exit " + std::to_string(code)];
                        continue;
                    }
                    if (const int code = run_quiet({"solve", config, "--out", report}); code != exit_ok) {
                        ++tally["solve exit " + std::to_string(code)];
                        continue;
                    }
                    if (const int code = run_quiet({"verify", report}); code != exit_ok) {
                        ++tally["verify exit " + std::to_string(code)];
                    }
                }
                int failures = 0;
                std::string detail;
                for (const auto& [what, count] : tally) {
                    failures += count;
                    detail += " " + what + " x" + std::to_string(count);
                }
                total_failures += failures;
                const std::string label = placement.name + " n=" + std::to_string(n) + " " + dist;
                INFO(label, ":", detail);
                CHECK(failures == 0);
            }
        }
    }
    MESSAGE("round trip failures in total: " << total_failures);
}
