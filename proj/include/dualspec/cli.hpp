#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dualspec::cli {

inline constexpr const char* kToolName = "dualspec";
inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kConfigError = 2, kSolverError = 3, kCorrespondenceError = 4 };

// Bad command line or configuration (exit 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Command { Spectrum, Density, Eigenfunction, Green, Duality };
enum class Format { Csv, Json };
enum class TheoryKind { Oscillator, Coulomb };

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    int points = 0;

    // Inclusive linspace; GridError-free because validated at parse time.
    std::vector<double> nodes() const;
};

struct RunConfig {
    Command command = Command::Spectrum;
    TheoryKind theory = TheoryKind::Oscillator;
    double coupling = 0.0;  // lambda or g
    double kappa0 = 1.0;
    std::optional<double> zeta;
    std::optional<double> zeta_s;
    std::optional<double> zeta_a;
    int n_max = 10;
    GridSpec energy;
    GridSpec space;
    Format format = Format::Csv;
    std::string out;  // empty: standard output
    double tol = 1e-10;
    double perturb = 0.0;

    // eigenfunction selector: exactly one of these
    std::optional<int> level;
    std::optional<double> state_energy;
    bool zero_mode = false;
    std::optional<std::string> parity;  // "even" / "odd" for full-line states

    // green
    double w_re = 0.0;
    double w_im = 0.0;
    double point = 1.0;

    bool full_line() const { return zeta_s.has_value(); }
};

// "0.3", "-pi/4", "pi/2", "2*pi/3", "pi".
double parse_angle(const std::string& text);

// ConfigError on any invalid combination. Returns nullopt after --help/--version
// (the text has been written to `out`).
std::optional<RunConfig> parse_arguments(std::span<const std::string> args, std::ostream& out);

// Table payload with a self-describing header. Cells keep their type so the
// JSON form re-parses into an identical record.
using Cell = std::variant<std::int64_t, double, std::string, bool>;

struct OutputRecord {
    std::vector<std::pair<std::string, Cell>> header;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

// 17 significant digits; "inf", "-inf", "nan" for non-finite values.
std::string format_real(double v);
std::string to_csv(const OutputRecord& record);
std::string to_json(const OutputRecord& record);
OutputRecord from_json(const std::string& text);

struct RunResult {
    OutputRecord record;
    int exit_code = kOk;
};

// Executes one configured command. Library errors propagate as exceptions.
RunResult execute(const RunConfig& config);

// Worker count from DUALSPEC_THREADS (ConfigError when malformed), else the
// hardware concurrency.
int thread_budget();
// Calls body(i) for i in [0, n) on up to thread_budget() threads. The first
// exception (lowest index) is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Full command-line entry point: parse, execute, write, map errors onto exit
// codes with a one-line reason on `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace dualspec::cli
