#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "evt/csv.hpp"
#include "evt/simulate.hpp"

namespace evt {

using Json = nlohmann::ordered_json;

/// Current version of the emitted report JSON (documented in docs/report_schema.md).
inline constexpr int kReportSchemaVersion = 1;

enum class TailChoice { Upper, Lower, Both };

[[nodiscard]] std::string to_string(TailChoice choice);
TailChoice parse_tail_choice(const std::string& text);
[[nodiscard]] std::vector<Tail> tails_of(TailChoice choice);

struct InputSpec {
    std::filesystem::path path;
    std::string label;  // defaults to the file stem
    SeriesKind kind = SeriesKind::Returns;
    CsvColumns columns;
};

/// Full pipeline configuration: one declarative object, filled from a JSON
/// config file and/or command-line flags (flags win).
struct RunConfig {
    std::vector<InputSpec> inputs;
    TailChoice tail = TailChoice::Both;
    std::vector<BlockScheme> schemes = {BlockScheme::month(), BlockScheme::quarter(),
                                        BlockScheme::semester()};
    std::vector<double> ks = {20.0};
    double level = 0.95;
    double fraction = 0.10;
    BlockOptions blocks{};
    FitConfig fit{};
    ProfileOptions profile{};
    CoverageConfig sim{};
    std::uint64_t seed = 42;
    std::filesystem::path out_dir = "out";
    bool write_json = true;
    bool write_csv = true;
    bool normalize_timestamps = false;  // emit null generated_at for byte-stable output

    /// Throws std::invalid_argument on violated invariants (no input, k <= 1,
    /// fraction outside (0, 0.5), level outside (0, 1), ...).
    void validate_common() const;
};

/// Merge a JSON config document (same keys as the CLI flags) into config.
void apply_config_file(RunConfig& config, const Json& doc);

/// Load the series named by an input spec (prices are converted to returns).
ReturnSeries load_input(const InputSpec& input);

/// Table-1-style report: full / upper-10% / lower-10% summary rows per index.
Json summary_report(const RunConfig& config);

/// Table-2-style report: GEV parameter estimates with profile CIs per
/// (index, scheme, tail). Non-converged fits are flagged, not dropped.
Json fit_report(const RunConfig& config);

/// Table-3-style report: k-block return levels with asymmetric profile CIs per
/// (index, scheme, tail, k). Lower-tail levels are positive loss magnitudes.
Json risk_report(const RunConfig& config);

/// QQ-plot data against the fitted normal for full series and both 10% tails.
Json qq_report(const RunConfig& config);

/// Monte Carlo coverage study of the fitting and CI machinery.
Json coverage_report(const RunConfig& config);

/// Files written for one command (JSON reports plus per-row CSV mirrors whose
/// numbers are serialized identically to the JSON fields).
struct WrittenFiles {
    std::vector<std::filesystem::path> paths;
};

/// Write the report artifacts for `command` into config.out_dir (atomically:
/// write-temp-then-rename). Returns the paths written.
WrittenFiles write_report_files(const std::string& command, const Json& report,
                                const RunConfig& config);

/// Render the human-readable table for a report to a string (parameters at 3
/// decimals, risk levels at 2, per the published tables' conventions).
std::string human_table(const std::string& command, const Json& report);

/// Serialize a double exactly as nlohmann::json prints it, so CSV mirrors are
/// byte-equal to the JSON fields.
std::string json_number(double x);

/// True when any fit row in the report failed to converge.
bool has_convergence_failures(const Json& report);

}  // namespace evt
