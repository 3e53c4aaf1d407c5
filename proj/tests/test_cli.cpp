#include "dualspec/cli.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace dualspec::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

// Scoped environment override.
class EnvGuard {
public:
    EnvGuard(const char* name, const char* value) : name_(name) {
        if (const char* old = std::getenv(name)) old_ = old;
        if (value)
            ::setenv(name, value, 1);
        else
            ::unsetenv(name);
    }
    ~EnvGuard() {
        if (old_.empty())
            ::unsetenv(name_);
        else
            ::setenv(name_, old_.c_str(), 1);
    }

private:
    const char* name_;
    std::string old_;
};

std::vector<std::string> data_lines(const std::string& csv) {
    std::vector<std::string> lines;
    std::istringstream is(csv);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty() && line[0] != '#') lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("angles accept numbers and multiples of pi") {
    CHECK(parse_angle("0.3") == 0.3);
    CHECK(parse_angle("pi/2") == std::numbers::pi / 2.0);
    CHECK(parse_angle("-pi/2") == -std::numbers::pi / 2.0);
    CHECK(parse_angle("-pi/4") == doctest::Approx(-std::numbers::pi / 4.0).epsilon(1e-16));
    CHECK(parse_angle("2*pi/5") == doctest::Approx(2.0 * std::numbers::pi / 5.0).epsilon(1e-16));
    CHECK_THROWS_AS(parse_angle("pie"), ConfigError);
    CHECK_THROWS_AS(parse_angle(""), ConfigError);
    CHECK_THROWS_AS(parse_angle("pi/0"), ConfigError);
}

TEST_CASE("Coulomb tower from the command line") {
    const Outcome r = invoke({"spectrum", "--theory", "coulomb", "--g", "-1", "--zeta", "0", "--n-max", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());
    const auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "kind,index,energy,value");
    CHECK(lines[1].rfind("level,0,-4.00000000000000", 0) == 0);
    CHECK(lines[2].rfind("level,1,-0.16000000000000", 0) == 0);
    CHECK(lines[3].rfind("level,2,-0.049382716049382", 0) == 0);
}

TEST_CASE("oscillator tower at the symbolic half angle") {
    const Outcome r = invoke({"spectrum", "--theory", "osc", "--lambda", "1", "--zeta", "pi/2", "--n-max", "3"});
    REQUIRE(r.code == 0);
    const auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 5);
    CHECK(lines[1].rfind("level,0,3,", 0) == 0);
    CHECK(lines[4].rfind("level,3,15,", 0) == 0);
}

TEST_CASE("configuration errors exit with code 2 and a one-line reason") {
    const std::vector<std::vector<std::string>> bad = {
        {"spectrum", "--theory", "osc", "--lambda", "1", "--zeta", "4"},
        {"spectrum", "--theory", "osc", "--g", "1", "--zeta", "0"},
        {"spectrum", "--lambda", "1", "--zeta", "0"},
        {"spectrum", "--theory", "osc", "--lambda", "1", "--zeta", "0", "--kappa0", "-1"},
        {"green", "--theory", "osc", "--lambda", "1", "--zeta", "0", "--w-re", "1", "--w-im", "0"},
        {"density", "--theory", "osc", "--lambda", "0", "--zeta", "0", "--format", "xml"},
        {"duality", "--theory", "coulomb", "--g", "1", "--zeta", "0"},
        {"spectrum", "--theory", "osc", "--lambda", "1", "--zeta-s", "0"},
        {"spectrum", "--theory", "osc", "--lambda", "1", "--zeta", "0", "--tol", "0"},
        {"bogus"},
        {},
    };
    for (const auto& args : bad) {
        const Outcome r = invoke(args);
        CAPTURE(r.err);
        CHECK(r.code == 2);
        CHECK(r.out.empty());
        CHECK(r.err.rfind("error exit=2 kind=config message=\"", 0) == 0);
        CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
    }
}

TEST_CASE("solver errors exit with code 3") {
    const Outcome empty = invoke({"density", "--theory", "osc", "--lambda", "1", "--zeta", "0.3"});
    CHECK(empty.code == 3);
    CHECK(empty.err.find("kind=out_of_support") != std::string::npos);
    const Outcome missing = invoke({"eigenfunction", "--theory", "coulomb", "--g", "1", "--zeta", "0.2"});
    CHECK(missing.code == 3);
    CHECK(missing.err.find("kind=not_in_spectrum") != std::string::npos);
}

TEST_CASE("duality command passes and the negative control exits with code 4") {
    const Outcome ok = invoke({"duality", "--lambda", "1", "--zeta", "pi/2", "--n-max", "5", "--format", "json"});
    REQUIRE(ok.code == 0);
    const OutputRecord rec = from_json(ok.out);
    bool passed = false;
    for (const auto& [key, value] : rec.header)
        if (key == "passed") passed = std::get<bool>(value);
    CHECK(passed);

    const Outcome inverted = invoke({"duality", "--lambda", "-1", "--zeta", "0.4", "--e-points", "50"});
    CHECK(inverted.code == 0);

    const Outcome bad = invoke({"duality", "--lambda", "1", "--zeta", "pi/2", "--n-max", "5", "--perturb", "1e-3"});
    CHECK(bad.code == 4);
    CHECK(bad.err.find("exit=4") != std::string::npos);
    CHECK_FALSE(bad.out.empty());  // the failing report is still written
}

TEST_CASE("every command produces output") {
    const std::vector<std::vector<std::string>> good = {
        {"density", "--theory", "osc", "--lambda", "0", "--zeta", "pi/2", "--e-min", "0", "--e-max", "10", "--e-points", "11"},
        {"density", "--theory", "coulomb", "--g", "-1", "--zeta", "pi/2", "--e-min", "1e-8", "--e-max", "1", "--e-points", "3"},
        {"eigenfunction", "--theory", "osc", "--lambda", "1", "--zeta", "0", "--level", "0"},
        {"eigenfunction", "--theory", "coulomb", "--g", "1", "--zeta", "-1.1071487177940904", "--zero-mode"},
        {"eigenfunction", "--theory", "osc", "--lambda", "-1", "--zeta", "0.2", "--energy", "1.5"},
        {"eigenfunction", "--theory", "osc", "--lambda", "1", "--zeta-s", "0", "--zeta-a", "pi/2", "--parity", "odd",
         "--u-min", "-2", "--u-max", "2", "--u-points", "5"},
        {"green", "--theory", "coulomb", "--g", "1", "--zeta", "0.1", "--w-re", "1", "--w-im", "0.5", "--u-points", "4"},
        {"spectrum", "--theory", "osc", "--lambda", "1", "--zeta-s", "0", "--zeta-a", "pi/2", "--n-max", "4"},
        {"spectrum", "--theory", "coulomb", "--g", "-1", "--zeta", "0.3", "--n-max", "2", "--e-points", "5"},
    };
    for (const auto& args : good) {
        const Outcome r = invoke(args);
        CAPTURE(args[0]);
        CAPTURE(r.err);
        CHECK(r.code == 0);
        CHECK(data_lines(r.out).size() >= 2);
    }
}

TEST_CASE("documented density values") {
    const Outcome r = invoke({"density", "--theory", "osc", "--lambda", "0", "--zeta", "pi/2", "--e-min", "4",
                              "--e-max", "4", "--e-points", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const OutputRecord rec = from_json(r.out);
    REQUIRE(rec.rows.size() == 1);
    CHECK(std::get<double>(rec.rows[0][1]) == doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-14));
}

TEST_CASE("ground-state profile from the command line") {
    const Outcome r = invoke({"eigenfunction", "--theory", "osc", "--lambda", "1", "--zeta", "0", "--level", "0",
                              "--u-min", "0.04", "--u-max", "4", "--u-points", "100", "--format", "json"});
    REQUIRE(r.code == 0);
    const OutputRecord rec = from_json(r.out);
    REQUIRE(rec.rows.size() == 100);
    const double norm = std::sqrt(2.0 / std::sqrt(std::numbers::pi));
    for (const auto& row : rec.rows) {
        const double u = std::get<double>(row[0]);
        CHECK(std::get<double>(row[1]) == doctest::Approx(norm * std::exp(-u * u / 2.0)).epsilon(1e-10));
    }
}

TEST_CASE("output is byte-identical across runs and thread counts") {
    const std::vector<std::string> args = {"density", "--theory", "osc", "--lambda", "-1", "--zeta", "0.3",
                                           "--e-min", "-5", "--e-max", "5", "--e-points", "257"};
    std::string first;
    {
        EnvGuard env("DUALSPEC_THREADS", "1");
        first = invoke(args).out;
    }
    for (const char* threads : {"2", "3", "8"}) {
        EnvGuard env("DUALSPEC_THREADS", threads);
        CHECK(invoke(args).out == first);
    }
    std::vector<std::string> json_args = args;
    json_args.insert(json_args.end(), {"--format", "json"});
    CHECK(invoke(json_args).out == invoke(json_args).out);
}

TEST_CASE("malformed thread budget is a configuration error") {
    EnvGuard env("DUALSPEC_THREADS", "many");
    const Outcome r = invoke({"spectrum", "--theory", "osc", "--lambda", "1", "--zeta", "0"});
    CHECK(r.code == 2);
    CHECK_THROWS_AS(thread_budget(), ConfigError);
    EnvGuard zero("DUALSPEC_THREADS", "0");
    CHECK_THROWS_AS(thread_budget(), ConfigError);
    EnvGuard four("DUALSPEC_THREADS", "4");
    CHECK(thread_budget() == 4);
}

TEST_CASE("parallel_for keeps order and reports the first failure") {
    EnvGuard env("DUALSPEC_THREADS", "4");
    std::vector<int> out(100, -1);
    parallel_for(out.size(), [&](std::size_t i) { out[i] = int(i * i); });
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == int(i * i));
    try {
        parallel_for(50, [](std::size_t i) {
            if (i == 7 || i == 30) throw std::runtime_error("fail " + std::to_string(i));
        });
        FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()) == "fail 7");
    }
}

TEST_CASE("JSON records round-trip losslessly") {
    OutputRecord rec;
    rec.header = {{"tool", std::string("dualspec")}, {"n", std::int64_t(3)}, {"x", 0.1}, {"ok", true}};
    rec.columns = {"a", "b", "c"};
    rec.rows = {{1.0 / 3.0, std::string("level"), std::int64_t(-2)},
                {INFINITY, std::string("with,comma"), std::int64_t(7)},
                {-0.0, std::string("q\"uote"), std::int64_t(0)}};
    const OutputRecord back = from_json(to_json(rec));
    CHECK(back == rec);
    CHECK_THROWS_AS(from_json("{"), ConfigError);
    CHECK_THROWS_AS(from_json("[1, 2]"), ConfigError);

    for (const auto& args : std::vector<std::vector<std::string>>{
             {"spectrum", "--theory", "coulomb", "--g", "-1", "--zeta", "0.3", "--n-max", "3", "--e-points", "4"},
             {"duality", "--lambda", "1", "--zeta", "0.6", "--n-max", "3"}}) {
        std::vector<std::string> j = args;
        j.insert(j.end(), {"--format", "json"});
        const std::string text = invoke(j).out;
        CHECK(to_json(from_json(text)) == text);
    }
}

TEST_CASE("CSV formatting") {
    CHECK(format_real(0.1) == "0.10000000000000001");
    CHECK(format_real(-4.0) == "-4");
    CHECK(format_real(NAN) == "nan");
    CHECK(format_real(-INFINITY) == "-inf");
    OutputRecord rec;
    rec.header = {{"k", std::string("v")}};
    rec.columns = {"a", "b"};
    rec.rows = {{std::string("x,y"), true}};
    CHECK(to_csv(rec) == "# k=v\na,b\n\"x,y\",true\n");
}

TEST_CASE("output file option") {
    const auto path = std::filesystem::temp_directory_path() / "dualspec_cli_test.csv";
    std::filesystem::remove(path);
    const Outcome r = invoke({"spectrum", "--theory", "osc", "--lambda", "1", "--zeta", "0", "--n-max", "1", "--out",
                              path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == invoke({"spectrum", "--theory", "osc", "--lambda", "1", "--zeta", "0", "--n-max", "1"}).out);
    std::filesystem::remove(path);

    const Outcome unwritable = invoke({"spectrum", "--theory", "osc", "--lambda", "1", "--zeta", "0", "--out",
                                       "/nonexistent-dir/x.csv"});
    CHECK(unwritable.code == 3);
}

TEST_CASE("help and version") {
    const Outcome h = invoke({"--help"});
    CHECK(h.code == 0);
    CHECK(h.out.find("spectrum") != std::string::npos);
    const Outcome v = invoke({"--version"});
    CHECK(v.code == 0);
    CHECK(v.out.find("1.0.0") != std::string::npos);
}
