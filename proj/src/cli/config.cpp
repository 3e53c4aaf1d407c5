#include "dualspec/cli.hpp"

#include "dualspec/extension.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <regex>
#include <sstream>

namespace dualspec::cli {

namespace {

// Raw option values as typed on the command line; validated afterwards.
struct Raw {
    std::string theory;
    std::optional<double> lambda;
    std::optional<double> g;
    double kappa0 = 1.0;
    std::optional<std::string> zeta, zeta_s, zeta_a;
    int n_max = 10;
    std::optional<double> e_min, e_max;
    std::optional<int> e_points;
    std::optional<double> u_min, u_max;
    std::optional<int> u_points;
    std::string format = "csv";
    std::string out;
    double tol = 1e-10;
    double perturb = 0.0;
    std::optional<int> level;
    std::optional<double> energy;
    bool zero_mode = false;
    std::optional<std::string> parity;
    double w_re = 0.0;
    std::optional<double> w_im;
    double point = 1.0;
};

void add_options(CLI::App& sub, Raw& raw) {
    sub.add_option("--theory", raw.theory, "osc | coulomb");
    sub.add_option("--lambda", raw.lambda, "oscillator coupling");
    sub.add_option("--g", raw.g, "Coulomb coupling");
    sub.add_option("--kappa0", raw.kappa0, "boundary scale (> 0)");
    sub.add_option("--zeta", raw.zeta, "half-line extension angle, e.g. 0.3 or pi/2");
    sub.add_option("--zeta-s", raw.zeta_s, "even-sector angle (full line)");
    sub.add_option("--zeta-a", raw.zeta_a, "odd-sector angle (full line)");
    sub.add_option("--n-max", raw.n_max, "highest level index");
    sub.add_option("--e-min", raw.e_min, "energy grid start");
    sub.add_option("--e-max", raw.e_max, "energy grid end");
    sub.add_option("--e-points", raw.e_points, "energy grid size");
    sub.add_option("--u-min", raw.u_min, "spatial grid start");
    sub.add_option("--u-max", raw.u_max, "spatial grid end");
    sub.add_option("--u-points", raw.u_points, "spatial grid size");
    sub.add_option("--format", raw.format, "csv | json");
    sub.add_option("--out", raw.out, "output file (default: stdout)");
    sub.add_option("--tol", raw.tol, "correspondence tolerance");
    sub.add_option("--perturb", raw.perturb, "test hook: scale the duality coupling map by 1 + p");
    sub.add_option("--level", raw.level, "eigenfunction: level index");
    sub.add_option("--energy", raw.energy, "eigenfunction: continuum energy");
    sub.add_flag("--zero-mode", raw.zero_mode, "eigenfunction: zero-energy bound state");
    sub.add_option("--parity", raw.parity, "eigenfunction on the full line: even | odd");
    sub.add_option("--w-re", raw.w_re, "green: Re W");
    sub.add_option("--w-im", raw.w_im, "green: Im W (> 0)");
    sub.add_option("--point", raw.point, "green: fixed first point");
}

[[noreturn]] void fail(const std::string& why) { throw ConfigError(why); }

double checked_angle(const std::string& name, const std::string& text) {
    double v;
    try {
        v = parse_angle(text);
    } catch (const ConfigError& e) {
        fail(name + ": " + e.what());
    }
    if (!std::isfinite(v) || std::abs(v) > Extension::kHalfPi) fail(name + " must lie in [-pi/2, pi/2]");
    return v;
}

GridSpec grid(const char* name, std::optional<double> lo, std::optional<double> hi, std::optional<int> n,
              GridSpec fallback) {
    GridSpec g{lo.value_or(fallback.min), hi.value_or(fallback.max), n.value_or(fallback.points)};
    if (!std::isfinite(g.min) || !std::isfinite(g.max)) fail(std::string(name) + " grid bounds must be finite");
    if (g.points < 0 || g.points > 10'000'000) fail(std::string(name) + " grid size out of range");
    if (g.points > 1 && !(g.min < g.max)) fail(std::string(name) + " grid needs min < max");
    return g;
}

RunConfig validate(Command cmd, const Raw& raw) {
    RunConfig c;
    c.command = cmd;

    std::string theory = raw.theory;
    if (theory.empty() && cmd == Command::Duality) theory = "osc";
    if (theory == "osc" || theory == "oscillator")
        c.theory = TheoryKind::Oscillator;
    else if (theory == "coulomb")
        c.theory = TheoryKind::Coulomb;
    else if (theory.empty())
        fail("--theory is required (osc | coulomb)");
    else
        fail("unknown theory '" + theory + "'");

    if (c.theory == TheoryKind::Oscillator) {
        if (raw.g) fail("--g belongs to the coulomb theory");
        if (!raw.lambda) fail("--lambda is required for the oscillator");
        c.coupling = *raw.lambda;
    } else {
        if (raw.lambda) fail("--lambda belongs to the oscillator theory");
        if (!raw.g) fail("--g is required for the coulomb theory");
        c.coupling = *raw.g;
    }
    if (!std::isfinite(c.coupling)) fail("coupling must be finite");
    if (cmd == Command::Duality && c.theory != TheoryKind::Oscillator)
        fail("duality is driven from the oscillator side (--theory osc --lambda ...)");

    c.kappa0 = raw.kappa0;
    if (!std::isfinite(c.kappa0) || !(c.kappa0 > 0.0)) fail("--kappa0 must be positive");

    if (raw.zeta) c.zeta = checked_angle("--zeta", *raw.zeta);
    if (raw.zeta_s) c.zeta_s = checked_angle("--zeta-s", *raw.zeta_s);
    if (raw.zeta_a) c.zeta_a = checked_angle("--zeta-a", *raw.zeta_a);
    if (c.zeta_s.has_value() != c.zeta_a.has_value()) fail("--zeta-s and --zeta-a must be given together");
    if (c.zeta && c.zeta_s) fail("--zeta excludes --zeta-s/--zeta-a");
    if (!c.zeta && !c.zeta_s) fail("an extension angle is required (--zeta, or --zeta-s with --zeta-a)");
    const bool full_line_ok = cmd == Command::Spectrum || cmd == Command::Eigenfunction;
    if (c.zeta_s && !full_line_ok) fail("--zeta-s/--zeta-a apply to spectrum and eigenfunction only");

    c.n_max = raw.n_max;
    if (c.n_max < 0 || c.n_max > 100000) fail("--n-max must lie in [0, 100000]");

    switch (cmd) {
    case Command::Spectrum: c.energy = grid("energy", raw.e_min, raw.e_max, raw.e_points, {0.0, 10.0, 0}); break;
    case Command::Density: c.energy = grid("energy", raw.e_min, raw.e_max, raw.e_points, {0.0, 10.0, 101}); break;
    case Command::Duality: c.energy = grid("energy", raw.e_min, raw.e_max, raw.e_points, {-10.0, 10.0, 50}); break;
    default: break;
    }
    if (cmd == Command::Eigenfunction || cmd == Command::Green) {
        c.space = grid("spatial", raw.u_min, raw.u_max, raw.u_points, {0.04, 4.0, 100});
        if (c.space.points < 1) fail("spatial grid must have at least one point");
    }

    if (raw.format == "csv")
        c.format = Format::Csv;
    else if (raw.format == "json")
        c.format = Format::Json;
    else
        fail("--format must be csv or json");
    c.out = raw.out;

    c.tol = raw.tol;
    if (!(c.tol > 0.0) || !(c.tol < 1.0)) fail("--tol must lie in (0, 1)");
    c.perturb = raw.perturb;
    if (!std::isfinite(c.perturb) || c.perturb <= -1.0) fail("--perturb must be finite and > -1");

    if (cmd == Command::Eigenfunction) {
        const int chosen = int(raw.level.has_value()) + int(raw.energy.has_value()) + int(raw.zero_mode);
        if (chosen > 1) fail("choose one of --level, --energy, --zero-mode");
        c.level = raw.level;
        c.state_energy = raw.energy;
        c.zero_mode = raw.zero_mode;
        if (chosen == 0) c.level = 0;
        if (c.level && *c.level < 0) fail("--level must be >= 0");
        if (c.state_energy && !std::isfinite(*c.state_energy)) fail("--energy must be finite");
        if (c.zeta_s) {
            if (!raw.parity) fail("--parity (even | odd) is required with --zeta-s/--zeta-a");
            if (*raw.parity != "even" && *raw.parity != "odd") fail("--parity must be even or odd");
            c.parity = raw.parity;
        } else if (raw.parity) {
            fail("--parity applies to full-line eigenfunctions only");
        }
    }

    if (cmd == Command::Green) {
        if (!raw.w_im) fail("green needs --w-im > 0");
        c.w_re = raw.w_re;
        c.w_im = *raw.w_im;
        if (!std::isfinite(c.w_re) || !std::isfinite(c.w_im)) fail("W must be finite");
        if (!(c.w_im > 0.0)) fail("green needs Im W > 0 (--w-im)");
        c.point = raw.point;
        if (!std::isfinite(c.point) || c.point < 0.0) fail("--point must be finite and >= 0");
    }
    return c;
}

}  // namespace

std::vector<double> GridSpec::nodes() const {
    std::vector<double> out(std::size_t(std::max(points, 0)));
    if (points == 1) out[0] = min;
    for (int i = 0; points > 1 && i < points; ++i) {
        const double t = double(i) / double(points - 1);
        out[std::size_t(i)] = i == points - 1 ? max : min + t * (max - min);
    }
    return out;
}

double parse_angle(const std::string& text) {
    static const std::regex number(R"(^\s*[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?\s*$)");
    static const std::regex pi_form(R"(^\s*([+-])?\s*(?:(\d+\.?\d*|\.\d+)\s*\*\s*)?pi\s*(?:/\s*(\d+\.?\d*|\.\d+))?\s*$)");
    std::smatch m;
    if (std::regex_match(text, number)) return std::stod(text);
    if (std::regex_match(text, m, pi_form)) {
        double v = std::numbers::pi;
        if (m[2].matched) v *= std::stod(m[2].str());
        if (m[3].matched) {
            const double d = std::stod(m[3].str());
            if (d == 0.0) throw ConfigError("division by zero in angle '" + text + "'");
            v /= d;
        }
        if (m[1].matched && m[1].str() == "-") v = -v;
        // pi/2 written symbolically must land exactly on the identified endpoint.
        if (std::abs(std::abs(v) - Extension::kHalfPi) < 1e-15) v = v > 0 ? Extension::kHalfPi : -Extension::kHalfPi;
        return v;
    }
    throw ConfigError("cannot parse angle '" + text + "'");
}

std::optional<RunConfig> parse_arguments(std::span<const std::string> args, std::ostream& out) {
    CLI::App app{"Spectra, densities, eigenfunctions, Green functions and duality checks for the half-line "
                 "oscillator and its Coulomb-like dual",
                 kToolName};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    Raw raw;
    const std::map<Command, CLI::App*> subs = {
        {Command::Spectrum, app.add_subcommand("spectrum", "discrete levels, weights, densities and atoms")},
        {Command::Density, app.add_subcommand("density", "continuous spectral density on an energy grid")},
        {Command::Eigenfunction, app.add_subcommand("eigenfunction", "normalized eigenfunction on a spatial grid")},
        {Command::Green, app.add_subcommand("green", "Green function slice G(point, p; W)")},
        {Command::Duality, app.add_subcommand("duality", "verify the oscillator/Coulomb spectral correspondence")},
    };
    for (const auto& [cmd, sub] : subs) add_options(*sub, raw);

    std::vector<std::string> argv(args.begin(), args.end());
    std::reverse(argv.begin(), argv.end());  // CLI11 consumes a reversed vector
    try {
        app.parse(argv);
    } catch (const CLI::Success& e) {
        // --help / --version
        app.exit(e, out, out);
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        std::string what = e.what();
        std::replace(what.begin(), what.end(), '\n', ' ');
        fail(what);
    }
    for (const auto& [cmd, sub] : subs) {
        if (sub->parsed()) return validate(cmd, raw);
    }
    fail("no subcommand given");
}

}  // namespace dualspec::cli
