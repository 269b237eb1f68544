#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lisum/counting_model.hpp"
#include "lisum/types.hpp"
#include "lisum/zero_catalog.hpp"

namespace lisum {

enum class Command { verify, compute, asymptotic, compare, residuals, perturb, gr_check };

/// Process exit codes shared by every command.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

struct NRange {
    std::int64_t lo = 1;
    std::int64_t hi = 1;
};

struct RunConfig {
    Command command = Command::compute;
    Real b = 0;
    std::optional<std::int64_t> n;
    std::optional<NRange> n_range;
    std::vector<std::int64_t> n_grid{200, 500, 1000, 2000};
    std::optional<std::filesystem::path> zeros_path;
    CountingKind model = CountingKind::smooth_rvm_plus_7_8;
    std::vector<PlantedZero> plants;
    std::int64_t n_max = 10000;
    bool with_integrals = false;
    std::optional<std::filesystem::path> output_path;
    Real tol_rel = 1e-8L;
    Real tol_abs = 1e-10L;
    Real tol_sine = 1e-6L;
    Real tol_log_sine = 1e-5L;
    unsigned threads = 0;
};

/// "lo..hi" with 0 <= lo <= hi.
NRange parse_n_range(std::string_view text);
/// "sigma,T".
PlantedZero parse_plant(std::string_view text);
/// Full-precision decimal parse; throws Error on trailing junk.
Real parse_real(std::string_view text);
std::optional<CountingKind> parse_model(std::string_view text);
std::string_view model_name(CountingKind kind);

/// Shortest decimal that reads back to the same Real.
std::string format_real(Real x);

/// Header of the compare CSV.
inline constexpr std::string_view kCompareHeader =
    "n,zero_sum,tail_bound,eq6,eq7,eq8,asymptotic,residual";

/// Runs one command, writing results to `out` and diagnostics to `log`.
/// Returns an ExitCode; library errors on inputs map to kExitUsage.
int run_command(const RunConfig& config, std::ostream& out, std::ostream& log);

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_compute(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_asymptotic(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_compare(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_residuals(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_perturb(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_gr_check(const RunConfig& config, std::ostream& out, std::ostream& log);

/// Heights at which `verify` checks the counting envelope.
std::vector<Real> verify_heights(const ZeroCatalog& catalog);

/// Mean of N_emp(T) - N_smooth(T) over consecutive blocks of `block` zeros
/// (exact integral mean). A missing zero shifts every later block by -1.
std::vector<Real> windowed_count_drift(const ZeroCatalog& catalog, std::size_t block = 256);

/// Largest |windowed drift| tolerated by `verify`.
inline constexpr Real kDriftLimit = 0.5L;

}  // namespace lisum
