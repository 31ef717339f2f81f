#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "heinz/ballharmonic.hpp"
#include "heinz/errors.hpp"
#include "heinz/extremal.hpp"
#include "heinz/profile.hpp"
#include "heinz/report.hpp"
#include "heinz/rng.hpp"
#include "heinz/specfun.hpp"
#include "heinz/types.hpp"
#include "heinz/verify.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

using heinz::report::fmt_num;
using heinz::report::make_record;
using heinz::report::Report;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream is(s);
    while (std::getline(is, tok, sep)) out.push_back(tok);
    return out;
}

int parse_int(const std::string& tok) {
    size_t pos = 0;
    const int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("not an integer: " + tok);
    return v;
}

double parse_real(const std::string& tok) {
    size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("not a number: " + tok);
    return v;
}

// "3" | "2..8" | "2,5,7"
std::vector<int> parse_n_list(const std::string& spec) {
    std::vector<int> out;
    const auto dots = spec.find("..");
    if (dots != std::string::npos) {
        const int a = parse_int(spec.substr(0, dots));
        const int b = parse_int(spec.substr(dots + 2));
        if (b < a) throw std::invalid_argument("empty dimension range: " + spec);
        for (int v = a; v <= b; ++v) out.push_back(v);
    } else {
        for (const auto& tok : split(spec, ',')) out.push_back(parse_int(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty dimension list");
    for (int v : out) {
        if (v < 2 || v > 64) {
            throw std::invalid_argument("dimension out of range [2,64]: " +
                                        std::to_string(v));
        }
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& spec) {
    std::vector<int> out;
    for (const auto& tok : split(spec, ',')) out.push_back(parse_int(tok));
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

// "start:step:stop" (inclusive) | "v" | "v1,v2,..."
std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        const auto parts = split(spec, ':');
        if (parts.size() != 3) {
            throw std::invalid_argument("grid must be start:step:stop, got " + spec);
        }
        const double start = parse_real(parts[0]);
        const double step = parse_real(parts[1]);
        const double stop = parse_real(parts[2]);
        if (!(step > 0.0)) throw std::invalid_argument("grid step must be > 0");
        const long count =
            static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
        if (count < 1) throw std::invalid_argument("empty grid: " + spec);
        for (long k = 0; k < count; ++k) {
            out.push_back(std::min(start + k * step, stop));
        }
    } else {
        for (const auto& tok : split(spec, ',')) out.push_back(parse_real(tok));
    }
    if (out.empty()) throw std::invalid_argument("empty grid");
    return out;
}

struct OutputOpts {
    std::string format = "table";
    std::string output;
};

void add_output_opts(CLI::App* cmd, OutputOpts& o) {
    cmd->add_option("--format", o.format, "table, csv or json")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--output", o.output, "write the report to this path");
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f << text;
}

// table_text is the human view used for --format table; csv/json always
// serialize the record list itself
int emit(const Report& rep, const OutputOpts& o, const std::string& table_text) {
    std::string text;
    if (o.format == "json") {
        text = heinz::report::to_json(rep);
    } else if (o.format == "csv") {
        text = heinz::report::to_csv(rep);
    } else {
        text = table_text.empty() ? heinz::report::to_table(rep) : table_text;
    }
    if (!o.output.empty()) {
        write_text(o.output, text);
        std::cout << "report written to " << o.output << ": "
                  << (rep.pass() ? "PASS" : "FAIL") << " (min margin "
                  << fmt_num(rep.min_margin()) << ")\n";
    } else {
        std::cout << text;
    }
    return rep.pass() ? 0 : 1;
}

std::uint64_t sub_seed(std::uint64_t seed, int kind, int n, int j) {
    const std::uint64_t id = (static_cast<std::uint64_t>(kind) << 32) |
                             (static_cast<std::uint64_t>(n) << 16) |
                             static_cast<std::uint64_t>(j);
    return heinz::rng::derive(seed, id);
}

int cmd_constants(const std::string& n_spec, double tol, const OutputOpts& o) {
    const double refs[3] = {2.0 / kPi, std::sqrt(2.0) - 1.0, (4.0 - kPi) / kPi};
    Report rep;
    std::ostringstream tb;
    char line[160];
    std::snprintf(line, sizeof(line), "%4s %22s %22s %18s\n", "n", "C_n",
                  "reference", "discrepancy");
    tb << line;
    for (int n : parse_n_list(n_spec)) {
        const heinz::EvalResult c = heinz::heinz_constant(n, tol);
        if (n <= 4) {
            const double ref = refs[n - 2];
            const double budget = c.error_bound + 1e-15;
            rep.points.push_back(make_record(n, ref, c.value, budget));
            rep.points.push_back(make_record(n, c.value, ref, budget));
            std::snprintf(line, sizeof(line), "%4d %22s %22s %18s\n", n,
                          fmt_num(c.value).c_str(), fmt_num(ref).c_str(),
                          fmt_num(c.value - ref).c_str());
        } else {
            rep.points.push_back(make_record(n, 0.0, c.value, c.error_bound));
            std::snprintf(line, sizeof(line), "%4d %22s %22s %18s\n", n,
                          fmt_num(c.value).c_str(), "-", "-");
        }
        tb << line;
    }
    return emit(rep, o, tb.str());
}

int cmd_profile(int n, const std::string& which, const std::string& grid_spec,
                double tol, const OutputOpts& o) {
    if (n < 2 || n > 64) {
        throw std::invalid_argument("dimension out of range [2,64]: " +
                                    std::to_string(n));
    }
    const heinz::Which w = which == "V" ? heinz::Which::V : heinz::Which::U;
    Report rep;
    std::ostringstream tb;
    char line[200];
    std::snprintf(line, sizeof(line), "%12s %20s %14s %20s %16s\n", "r", which.c_str(),
                  "error_bound", "oracle", "diff");
    tb << line;
    for (double r : parse_grid(grid_spec)) {
        const heinz::EvalResult e = w == heinz::Which::U
                                        ? heinz::u_profile(n, r, tol)
                                        : heinz::v_profile(n, r, tol);
        if (n <= 4) {
            const double orc = heinz::closed_form_oracle(n, w, r);
            const double budget = e.error_bound + 1e-14 * (1.0 + std::fabs(orc));
            rep.points.push_back(make_record(r, orc, e.value, budget));
            rep.points.push_back(make_record(r, e.value, orc, budget));
            std::snprintf(line, sizeof(line), "%12s %20s %14s %20s %16s\n",
                          fmt_num(r).c_str(), fmt_num(e.value).c_str(),
                          fmt_num(e.error_bound).c_str(), fmt_num(orc).c_str(),
                          fmt_num(e.value - orc).c_str());
        } else {
            rep.points.push_back(make_record(r, 0.0, e.value, e.error_bound));
            std::snprintf(line, sizeof(line), "%12s %20s %14s %20s %16s\n",
                          fmt_num(r).c_str(), fmt_num(e.value).c_str(),
                          fmt_num(e.error_bound).c_str(), "-", "-");
        }
        tb << line;
    }
    return emit(rep, o, tb.str());
}

std::vector<heinz::BallPoint> points_along(const std::vector<double>& dir,
                                           const std::vector<double>& radii) {
    std::vector<heinz::BallPoint> pts;
    for (double r : radii) {
        heinz::BallPoint x;
        x.coords.resize(dir.size());
        for (size_t j = 0; j < dir.size(); ++j) x.coords[j] = r * dir[j];
        pts.push_back(std::move(x));
    }
    return pts;
}

int cmd_schwarz(const std::string& n_spec, const std::string& grid_spec, int maps,
                long samples, std::uint64_t seed, const OutputOpts& o) {
    const auto radii = parse_grid(grid_spec);
    Report all;
    for (int n : parse_n_list(n_spec)) {
        for (int j = 0; j < maps; ++j) {
            const auto map = heinz::verify::random_odd_map(n, sub_seed(seed, 1, n, j));
            const auto dir = heinz::verify::random_unit_vector(n, sub_seed(seed, 2, n, j));
            all.append(heinz::verify::verify_generalized_schwarz(
                map, points_along(dir, radii), samples, sub_seed(seed, 3, n, j)));
        }
        std::vector<double> axis(n, 0.0);
        axis[n - 1] = 1.0;
        all.append(heinz::verify::verify_generalized_schwarz(
            heinz::verify::sign_map(n), points_along(axis, radii), samples,
            sub_seed(seed, 4, n, 0)));
    }
    return emit(all, o, "");
}

int cmd_ratio(const std::string& n_spec, const std::string& grid_spec, int maps,
              long samples, std::uint64_t seed, const OutputOpts& o) {
    const auto radii = parse_grid(grid_spec);
    Report all;
    for (int n : parse_n_list(n_spec)) {
        for (int j = 0; j < maps; ++j) {
            const auto map = heinz::verify::random_odd_map(n, sub_seed(seed, 1, n, j));
            const auto dir = heinz::verify::random_unit_vector(n, sub_seed(seed, 2, n, j));
            all.append(heinz::verify::verify_ratio_bound(map, radii, dir, samples,
                                                         sub_seed(seed, 3, n, j)));
        }
        std::vector<double> axis(n, 0.0);
        axis[n - 1] = 1.0;
        all.append(heinz::verify::verify_ratio_bound(heinz::verify::sign_map(n), radii,
                                                     axis, samples,
                                                     sub_seed(seed, 4, n, 0)));
    }
    return emit(all, o, "");
}

int cmd_monotone(const std::string& n_spec, const std::string& grid_spec, double tol,
                 const OutputOpts& o) {
    const auto grid = parse_grid(grid_spec);
    Report all;
    std::ostringstream tb;
    for (int n : parse_n_list(n_spec)) {
        const Report rep = heinz::check_monotone_v(n, grid, tol);
        tb << "n = " << n << "\n" << heinz::report::to_table(rep);
        all.append(rep);
    }
    return emit(all, o, tb.str());
}

int cmd_sharpness(const std::string& n_spec, const std::string& m_spec,
                  const std::string& grid_spec, double tol, const OutputOpts& o) {
    const auto ms = parse_int_list(m_spec);
    const auto rs = parse_grid(grid_spec);
    Report all;
    std::ostringstream tb;
    for (int n : parse_n_list(n_spec)) {
        const auto t = heinz::verify::sharpness_sweep(n, ms, rs, tol);
        tb << heinz::verify::sharpness_table_text(t);
        all.append(t.rep);
    }
    return emit(all, o, tb.str());
}

int cmd_identities(const std::string& n_spec, const std::string& r_spec, long kmax,
                   double tol, const OutputOpts& o) {
    const auto rs = parse_grid(r_spec);
    const std::vector<double> ys = {0.0, 0.25, 0.5, 0.75, 1.0};
    Report all;
    for (int n : parse_n_list(n_spec)) {
        for (double r : rs) {
            all.points.push_back(heinz::specfun::check_transform_3f2_to_4f3(n, r, tol));
            all.points.push_back(heinz::specfun::check_kummer_quadratic(n, r, tol));
        }
        all.append(heinz::check_coefficient_split(n, kmax));
        all.append(heinz::check_positivity_2f1(n, ys));
    }
    return emit(all, o, "");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sharp Heinz constants for harmonic mappings of the unit ball"};
    app.require_subcommand(1);

    OutputOpts out;
    double tol = 1e-10;
    std::uint64_t seed = 12345;
    long samples = 200000;
    int maps = 20;
    long kmax = 50;
    int profile_n = 3;
    std::string n_spec = "2..4";
    std::string which = "U";
    std::string profile_grid = "0:0.1:1";
    std::string mc_grid = "0.2,0.5,0.8,0.95";
    std::string monotone_grid = "0:0.01:1";
    std::string sharp_grid = "0.9,0.99,0.999";
    std::string m_spec = "2,5,20,100";
    std::string r_spec = "0.1,0.5,0.9";

    std::function<int()> action;

    auto add_tol = [&tol](CLI::App* cmd) {
        cmd->add_option("--tol", tol, "target tolerance")
            ->check(CLI::Range(1e-13, 1.0))
            ->capture_default_str();
    };
    auto add_n = [&n_spec](CLI::App* cmd) {
        cmd->add_option("--n", n_spec, "dimensions: k, a..b or comma list")
            ->capture_default_str();
    };

    auto* constants = app.add_subcommand("constants", "Heinz constants C_n");
    add_n(constants);
    add_tol(constants);
    add_output_opts(constants, out);
    constants->callback([&] {
        action = [&] { return cmd_constants(n_spec, tol, out); };
    });

    auto* profile = app.add_subcommand("profile", "extremal profile U(rN) or V(r)");
    profile->add_option("--n", profile_n, "dimension")->capture_default_str();
    profile->add_option("--which", which, "U or V")
        ->check(CLI::IsMember({"U", "V"}))
        ->capture_default_str();
    profile->add_option("--grid", profile_grid, "r grid: start:step:stop, value or comma list")
        ->capture_default_str();
    add_tol(profile);
    add_output_opts(profile, out);
    profile->callback([&] {
        action = [&] { return cmd_profile(profile_n, which, profile_grid, tol, out); };
    });

    auto* verify = app.add_subcommand("verify", "verification harness");
    verify->require_subcommand(1);

    auto* schwarz = verify->add_subcommand("schwarz", "generalized Schwarz inequality");
    add_n(schwarz);
    schwarz->add_option("--grid", mc_grid, "radii, all <= 0.95")->capture_default_str();
    schwarz->add_option("--maps", maps, "random odd maps per dimension")
        ->check(CLI::Range(0, 10000))
        ->capture_default_str();
    schwarz->add_option("--samples", samples, "Monte Carlo samples per point")
        ->capture_default_str();
    schwarz->add_option("--seed", seed, "PRNG seed")->capture_default_str();
    add_output_opts(schwarz, out);
    schwarz->callback([&] {
        action = [&] { return cmd_schwarz(n_spec, mc_grid, maps, samples, seed, out); };
    });

    auto* ratio = verify->add_subcommand("ratio", "Heinz ratio bound (1-||u||)/(1-r) >= C_n");
    add_n(ratio);
    ratio->add_option("--grid", mc_grid, "radii, all <= 0.95")->capture_default_str();
    ratio->add_option("--maps", maps, "random odd maps per dimension")
        ->check(CLI::Range(0, 10000))
        ->capture_default_str();
    ratio->add_option("--samples", samples, "Monte Carlo samples per point")
        ->capture_default_str();
    ratio->add_option("--seed", seed, "PRNG seed")->capture_default_str();
    add_output_opts(ratio, out);
    ratio->callback([&] {
        action = [&] { return cmd_ratio(n_spec, mc_grid, maps, samples, seed, out); };
    });

    auto* monotone = verify->add_subcommand("monotone", "V decreasing and V >= C_n");
    add_n(monotone);
    monotone->add_option("--grid", monotone_grid, "r grid")->capture_default_str();
    add_tol(monotone);
    add_output_opts(monotone, out);
    monotone->callback([&] {
        action = [&] { return cmd_monotone(n_spec, monotone_grid, tol, out); };
    });

    auto* sharpness = verify->add_subcommand("sharpness", "extremal sequence sweep");
    add_n(sharpness);
    sharpness->add_option("--m", m_spec, "m values (comma list, each >= 2)")
        ->capture_default_str();
    sharpness->add_option("--grid", sharp_grid, "r values in [0.9, 1)")
        ->capture_default_str();
    add_tol(sharpness);
    add_output_opts(sharpness, out);
    sharpness->callback([&] {
        action = [&] { return cmd_sharpness(n_spec, m_spec, sharp_grid, tol, out); };
    });

    auto* identities = verify->add_subcommand("identities",
                                              "hypergeometric identity suite");
    add_n(identities);
    identities->add_option("--r", r_spec, "r values in (0,1)")->capture_default_str();
    identities->add_option("--kmax", kmax, "coefficient-split depth")
        ->check(CLI::Range(1L, 100000L))
        ->capture_default_str();
    add_tol(identities);
    add_output_opts(identities, out);
    identities->callback([&] {
        action = [&] { return cmd_identities(n_spec, r_spec, kmax, tol, out); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 3;
    }

    try {
        return action ? action() : 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad arguments: " << e.what() << "\n";
        return 3;
    } catch (const std::out_of_range& e) {
        std::cerr << "bad arguments: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 2;
    }
}
