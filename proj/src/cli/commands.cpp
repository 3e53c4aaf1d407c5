#include "dualspec/cli.hpp"

#include "dualspec/duality.hpp"
#include "dualspec/errors.hpp"
#include "dualspec/spectral.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

namespace dualspec::cli {

namespace {

using Row = std::vector<Cell>;

Theory make_theory(const RunConfig& c) {
    if (c.theory == TheoryKind::Oscillator) return OscillatorTheory(c.coupling, c.kappa0);
    return CoulombTheory(c.coupling, c.kappa0);
}

std::string command_name(Command c) {
    switch (c) {
    case Command::Spectrum: return "spectrum";
    case Command::Density: return "density";
    case Command::Eigenfunction: return "eigenfunction";
    case Command::Green: return "green";
    case Command::Duality: return "duality";
    }
    return "unknown";
}

std::string support_name(const ContinuumSupport& s) {
    switch (s.kind) {
    case SupportKind::Empty: return "empty";
    case SupportKind::HalfLine: return "half_line";
    case SupportKind::WholeLine: return "whole_line";
    }
    return "unknown";
}

std::string regime_name(DiscreteRegime r) {
    switch (r) {
    case DiscreteRegime::Tower: return "tower";
    case DiscreteRegime::BelowThreshold: return "below_threshold";
    case DiscreteRegime::None: return "none";
    }
    return "unknown";
}

std::string parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

OutputRecord base_record(const RunConfig& c) {
    OutputRecord r;
    r.header.emplace_back("tool", std::string(kToolName));
    r.header.emplace_back("version", std::string(kToolVersion));
    r.header.emplace_back("command", command_name(c.command));
    r.header.emplace_back("theory", c.theory == TheoryKind::Oscillator ? std::string("oscillator") : std::string("coulomb"));
    r.header.emplace_back(c.theory == TheoryKind::Oscillator ? "lambda" : "g", c.coupling);
    r.header.emplace_back("kappa0", c.kappa0);
    if (c.zeta) r.header.emplace_back("zeta", *c.zeta);
    if (c.zeta_s) {
        r.header.emplace_back("zeta_s", *c.zeta_s);
        r.header.emplace_back("zeta_a", *c.zeta_a);
    }
    return r;
}

// Evaluates f on every node in parallel; output order follows the nodes.
template <class F>
std::vector<double> sweep(const std::vector<double>& nodes, F&& f) {
    std::vector<double> out(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t i) { out[i] = f(nodes[i]); });
    return out;
}

// Chunked sweep for kernels that amortise a setup (level solve) per call.
template <class F>
std::vector<double> chunked(const std::vector<double>& nodes, F&& f) {
    const std::size_t chunk = 64;
    const std::size_t blocks = (nodes.size() + chunk - 1) / chunk;
    std::vector<double> out(nodes.size());
    parallel_for(blocks, [&](std::size_t b) {
        const std::size_t lo = b * chunk;
        const std::size_t hi = std::min(nodes.size(), lo + chunk);
        const std::vector<double> part = f(std::span<const double>(nodes).subspan(lo, hi - lo));
        std::copy(part.begin(), part.end(), out.begin() + std::ptrdiff_t(lo));
    });
    return out;
}

RunResult spectrum_cmd(const RunConfig& c) {
    const Theory th = make_theory(c);
    OutputRecord r = base_record(c);
    r.header.emplace_back("n_max", std::int64_t(c.n_max));
    r.header.emplace_back("regime", regime_name(discrete_regime(th)));
    r.header.emplace_back("support", support_name(continuum_support(th)));

    if (c.full_line()) {
        const FullLineSpectrum fl = assemble_full_line(th, Extension(*c.zeta_s), Extension(*c.zeta_a), c.n_max);
        r.header.emplace_back("continuum_multiplicity", std::int64_t(fl.continuum_multiplicity));
        r.columns = {"kind", "index", "energy", "value", "multiplicity", "sectors"};
        for (std::size_t i = 0; i < fl.levels.size(); ++i) {
            const FullLineLevel& l = fl.levels[i];
            std::string sectors;
            for (std::size_t k = 0; k < l.sectors.size(); ++k)
                sectors += (k ? "+" : "") + parity_name(l.sectors[k]) + ":" + std::to_string(l.sector_indices[k]);
            r.rows.push_back({std::string("level"), std::int64_t(i), l.energy, NAN, std::int64_t(l.multiplicity), sectors});
        }
        for (std::size_t i = 0; i < fl.atoms.size(); ++i)
            r.rows.push_back({std::string("atom"), std::int64_t(i), fl.atoms[i].energy, fl.atoms[i].weight, std::int64_t(1),
                              std::string("")});
        return {r, kOk};
    }

    const Extension zeta(*c.zeta);
    const SpectrumResult s = spectrum(th, zeta, c.n_max, {});
    r.columns = {"kind", "index", "energy", "value"};
    for (const Level& l : s.levels) r.rows.push_back({std::string("level"), std::int64_t(l.index), l.energy, l.weight});
    if (s.atom) r.rows.push_back({std::string("atom"), std::int64_t(0), s.atom->energy, s.atom->weight});
    std::vector<double> grid;
    for (double E : c.energy.nodes()) {
        if (s.support.contains(E)) grid.push_back(E);
    }
    const std::vector<double> dens = sweep(grid, [&](double E) { return continuous_density(th, zeta, E); });
    for (std::size_t i = 0; i < grid.size(); ++i)
        r.rows.push_back({std::string("density"), std::int64_t(i), grid[i], dens[i]});
    return {r, kOk};
}

RunResult density_cmd(const RunConfig& c) {
    const Theory th = make_theory(c);
    const Extension zeta(*c.zeta);
    OutputRecord r = base_record(c);
    r.header.emplace_back("support", support_name(continuum_support(th)));
    r.columns = {"energy", "density"};
    const std::vector<double> grid = c.energy.nodes();
    const std::vector<double> dens = sweep(grid, [&](double E) { return continuous_density(th, zeta, E); });
    for (std::size_t i = 0; i < grid.size(); ++i) r.rows.push_back({grid[i], dens[i]});
    return {r, kOk};
}

RunResult eigenfunction_cmd(const RunConfig& c) {
    const Theory th = make_theory(c);
    OutputRecord r = base_record(c);
    EigenSelector which;
    if (c.level) {
        which = LevelIndex{*c.level};
        r.header.emplace_back("state", std::string("level"));
        r.header.emplace_back("level", std::int64_t(*c.level));
    } else if (c.state_energy) {
        which = ContinuumEnergy{*c.state_energy};
        r.header.emplace_back("state", std::string("continuum"));
        r.header.emplace_back("energy", *c.state_energy);
    } else {
        which = ZeroEnergyState{};
        r.header.emplace_back("state", std::string("zero_mode"));
    }
    const std::string coord = c.theory == TheoryKind::Oscillator ? "u" : "x";
    r.columns = {coord, "value"};
    const std::vector<double> grid = c.space.nodes();
    std::vector<double> values;
    if (c.full_line()) {
        const Parity parity = *c.parity == "even" ? Parity::Even : Parity::Odd;
        const Extension zeta(parity == Parity::Even ? *c.zeta_s : *c.zeta_a);
        r.header.emplace_back("parity", *c.parity);
        values = chunked(grid, [&](std::span<const double> p) { return full_line_eigenfunction(th, zeta, parity, which, p); });
    } else {
        const Extension zeta(*c.zeta);
        values = chunked(grid, [&](std::span<const double> p) { return eigenfunction(th, zeta, which, p); });
    }
    for (std::size_t i = 0; i < grid.size(); ++i) r.rows.push_back({grid[i], values[i]});
    return {r, kOk};
}

RunResult green_cmd(const RunConfig& c) {
    const Theory th = make_theory(c);
    const Extension zeta(*c.zeta);
    const Complex W(c.w_re, c.w_im);
    OutputRecord r = base_record(c);
    r.header.emplace_back("w_re", c.w_re);
    r.header.emplace_back("w_im", c.w_im);
    r.header.emplace_back("point", c.point);
    r.columns = {"point", "re", "im"};
    const std::vector<double> grid = c.space.nodes();
    std::vector<Complex> values(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) { values[i] = green_function(th, zeta, c.point, grid[i], W); });
    for (std::size_t i = 0; i < grid.size(); ++i) r.rows.push_back({grid[i], values[i].real(), values[i].imag()});
    return {r, kOk};
}

RunResult duality_cmd(const RunConfig& c) {
    const Extension zeta(*c.zeta);
    const std::vector<double> samples = c.energy.nodes();
    const CorrespondenceReport rep =
        verify_spectrum_correspondence(c.coupling, zeta, c.n_max, samples, c.tol, c.kappa0, c.perturb);
    OutputRecord r = base_record(c);
    r.header.emplace_back("n_max", std::int64_t(c.n_max));
    r.header.emplace_back("tol", c.tol);
    r.header.emplace_back("perturb", c.perturb);
    r.header.emplace_back("passed", rep.passed);
    r.header.emplace_back("mismatches", std::int64_t(rep.mismatches));
    r.header.emplace_back("worst_residual", rep.worst_residual);
    r.columns = {"direction", "osc_energy", "osc_lambda", "coulomb_energy", "coulomb_g",
                 "source_class", "image_class", "residual", "ok"};
    for (const CorrespondenceEntry& e : rep.entries) {
        r.rows.push_back({e.direction, e.osc.energy.real(), e.osc.lambda.real(), e.coulomb.energy.real(),
                          e.coulomb.g.real(), spectral_class_name(e.source_class), spectral_class_name(e.image_class),
                          e.residual, e.ok});
    }
    return {r, rep.passed ? kOk : kCorrespondenceError};
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    std::replace(s.begin(), s.end(), '"', '\'');
    return s;
}

void report(std::ostream& err, int code, std::string_view kind, const std::string& message) {
    err << "error exit=" << code << " kind=" << kind << " message=\"" << one_line(message) << "\"\n";
}

}  // namespace

RunResult execute(const RunConfig& config) {
    switch (config.command) {
    case Command::Spectrum: return spectrum_cmd(config);
    case Command::Density: return density_cmd(config);
    case Command::Eigenfunction: return eigenfunction_cmd(config);
    case Command::Green: return green_cmd(config);
    case Command::Duality: return duality_cmd(config);
    }
    throw ConfigError("unknown command");
}

int thread_budget() {
    if (const char* env = std::getenv("DUALSPEC_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1 || v > 4096)
            throw ConfigError("DUALSPEC_THREADS must be a positive integer");
        return int(v);
    }
    return std::max(1, int(std::thread::hardware_concurrency()));
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min<std::size_t>(std::size_t(thread_budget()), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::mutex mu;
    std::size_t failed_at = n;
    std::exception_ptr failure;
    // Static interleaved partition: deterministic assignment, no shared counter.
    auto worker = [&](std::size_t w) {
        for (std::size_t i = w; i < n; i += workers) {
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (i < failed_at) {
                    failed_at = i;
                    failure = std::current_exception();
                }
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker, w);
    worker(0);
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        auto parsed = parse_arguments(args, out);
        if (!parsed) return kOk;
        config = *parsed;
        thread_budget();  // reject a malformed DUALSPEC_THREADS before any work
    } catch (const ConfigError& e) {
        report(err, kConfigError, "config", e.what());
        return kConfigError;
    } catch (const Error& e) {
        report(err, kConfigError, error_kind_name(e.kind()), e.what());
        return kConfigError;
    }

    RunResult result;
    try {
        result = execute(config);
    } catch (const ConfigError& e) {
        report(err, kConfigError, "config", e.what());
        return kConfigError;
    } catch (const CorrespondenceViolation& e) {
        report(err, kCorrespondenceError, error_kind_name(e.kind()), e.what());
        return kCorrespondenceError;
    } catch (const Error& e) {
        report(err, kSolverError, error_kind_name(e.kind()), e.what());
        return kSolverError;
    } catch (const std::exception& e) {
        report(err, kSolverError, "internal", e.what());
        return kSolverError;
    }

    const std::string text = config.format == Format::Json ? to_json(result.record) : to_csv(result.record);
    if (config.out.empty()) {
        out << text;
    } else {
        std::ofstream file(config.out, std::ios::binary | std::ios::trunc);
        file << text;
        if (!file) {
            report(err, kSolverError, "io", "cannot write " + config.out);
            return kSolverError;
        }
    }
    if (result.exit_code == kCorrespondenceError)
        report(err, kCorrespondenceError, "correspondence_violation",
               "duality check failed; see the rows with ok=false");
    return result.exit_code;
}

}  // namespace dualspec::cli
