#include "heinz/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "heinz/ballharmonic.hpp"
#include "heinz/errors.hpp"
#include "heinz/profile.hpp"
#include "heinz/rng.hpp"

namespace heinz::verify {

namespace {

constexpr double kTwoPi = 6.28318530717958648;

double norm2(const std::vector<double>& v) {
    double s = 0.0;
    for (double c : v) s += c * c;
    return std::sqrt(s);
}

// l2 fold of componentwise bounds: ||a_est - a|| <= ||(eb_1,...,eb_n)||
double fold_bounds(const std::vector<EvalResult>& comps) {
    double s = 0.0;
    for (const auto& c : comps) s += c.error_bound * c.error_bound;
    return std::sqrt(s);
}

std::vector<double> values_of(const std::vector<EvalResult>& comps) {
    std::vector<double> v(comps.size());
    for (size_t j = 0; j < comps.size(); ++j) v[j] = comps[j].value;
    return v;
}

// sequential uniform/gaussian draws on a derived substream
struct Stream {
    std::uint64_t seed;
    long k = 0;
    double uniform() { return rng::uniform01(rng::bits_at(seed, k++)); }
    double gaussian() {
        double g0, g1;
        rng::gaussian_pair(uniform(), uniform(), g0, g1);
        return g0;
    }
};

// linear extrapolation to t = 0 of (t1,v1), (t2,v2) with t1 > t2 > 0
double extrapolate(double t1, double v1, double t2, double v2) {
    return v2 + (v2 - v1) * t2 / (t1 - t2);
}

} // namespace

double schwarz_centering_factor(int n, double r) {
    if (n < 2) throw std::invalid_argument("schwarz_centering_factor: n >= 2");
    if (!(r >= 0.0 && r <= 1.0)) {
        throw std::invalid_argument("schwarz_centering_factor: r in [0,1]");
    }
    return (1.0 - r * r) * std::pow(1.0 + r * r, -n / 2.0);
}

report::Report verify_generalized_schwarz(const BoundaryMap& map,
                                          const std::vector<BallPoint>& grid,
                                          long samples, std::uint64_t seed) {
    const int n = map.n;
    report::Report rep;
    const BallPoint origin = BallPoint::axis(n, 0.0);
    const auto u0 = ball::mc_extension(map, origin, samples, rng::derive(seed, 0));

    for (size_t i = 0; i < grid.size(); ++i) {
        const BallPoint& x = grid[i];
        const double r = x.norm();
        const auto ux = ball::mc_extension(map, x, samples, rng::derive(seed, i + 1));
        const double factor = schwarz_centering_factor(n, r);

        double lhs2 = 0.0, eb2 = 0.0;
        for (int j = 0; j < n; ++j) {
            const double d = ux[j].value - factor * u0[j].value;
            const double e = ux[j].error_bound + factor * u0[j].error_bound;
            lhs2 += d * d;
            eb2 += e * e;
        }
        EvalResult u = u_profile(n, r, 1e-12);
        rep.points.push_back(report::make_record(
            r, std::sqrt(lhs2), u.value, std::sqrt(eb2) + u.error_bound));
    }
    return rep;
}

report::Report verify_ratio_bound(const BoundaryMap& map,
                                  const std::vector<double>& r_grid,
                                  const std::vector<double>& direction,
                                  long samples, std::uint64_t seed) {
    const int n = map.n;
    if (static_cast<int>(direction.size()) != n) {
        throw std::invalid_argument("verify_ratio_bound: direction has wrong dimension");
    }
    std::vector<double> dir = direction;
    const double dn = norm2(dir);
    if (dn == 0.0) throw std::invalid_argument("verify_ratio_bound: zero direction");
    for (double& c : dir) c /= dn;

    const BallPoint origin = BallPoint::axis(n, 0.0);
    const auto u0 = ball::mc_extension(map, origin, samples, rng::derive(seed, 0));
    const double u0_norm = norm2(values_of(u0));
    const double u0_budget = fold_bounds(u0);
    if (u0_norm > u0_budget) {
        throw CenterNotZero("sampled u(0) has norm " + std::to_string(u0_norm) +
                            " exceeding the statistical budget " +
                            std::to_string(u0_budget));
    }

    const EvalResult c = heinz_constant(n, 1e-13);
    report::Report rep;
    for (size_t i = 0; i < r_grid.size(); ++i) {
        const double r = r_grid[i];
        BallPoint x;
        x.coords.resize(n);
        for (int j = 0; j < n; ++j) x.coords[j] = r * dir[j];
        const auto ux = ball::mc_extension(map, x, samples, rng::derive(seed, i + 1));
        const double quotient = (1.0 - norm2(values_of(ux))) / (1.0 - r);
        const double budget = fold_bounds(ux) / (1.0 - r) + c.error_bound;
        rep.points.push_back(report::make_record(r, c.value, quotient, budget));
    }
    return rep;
}

report::PointRecord verify_norm_derivative_inequality(
    const std::vector<AxisymProfile>& components, double r, double tol) {
    if (components.empty()) {
        throw std::invalid_argument("verify_norm_derivative_inequality: no components");
    }
    if (!(r > 0.0 && r <= 0.95)) {
        throw std::invalid_argument("verify_norm_derivative_inequality: r in (0, 0.95]");
    }
    const double h = 1e-5;
    double plus2 = 0.0, minus2 = 0.0, der2 = 0.0;
    double ebp = 0.0, ebm = 0.0, ebd = 0.0;
    for (const auto& comp : components) {
        const EvalResult up = ball::axisym_extension(comp, r + h, tol);
        const EvalResult um = ball::axisym_extension(comp, r - h, tol);
        const EvalResult d = ball::axisym_radial_derivative(comp, r, tol);
        plus2 += up.value * up.value;
        minus2 += um.value * um.value;
        der2 += d.value * d.value;
        ebp += up.error_bound * up.error_bound;
        ebm += um.error_bound * um.error_bound;
        ebd += d.error_bound * d.error_bound;
    }
    const double fd = (std::sqrt(plus2) - std::sqrt(minus2)) / (2.0 * h);
    // centered-difference curvature term bounded crudely by 100 |h|^2 / 6
    // for the smooth profiles in play at r <= 0.95
    const double fd_budget =
        (std::sqrt(ebp) + std::sqrt(ebm)) / (2.0 * h) + 100.0 * h * h / 6.0 + 1e-11;
    return report::make_record(r, fd, std::sqrt(der2),
                               tol + fd_budget + std::sqrt(ebd));
}

SharpnessTable sharpness_sweep(int n, const std::vector<int>& m_list,
                               const std::vector<double>& r_list, double tol) {
    if (n < 2) throw std::invalid_argument("sharpness_sweep: n >= 2");
    for (int m : m_list) {
        if (m < 2) throw std::invalid_argument("sharpness_sweep: m >= 2");
    }
    for (double r : r_list) {
        if (!(r >= 0.9 && r < 1.0)) {
            throw std::invalid_argument("sharpness_sweep: r in [0.9, 1)");
        }
    }
    std::vector<int> ms = m_list;
    std::sort(ms.begin(), ms.end());
    ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
    std::vector<double> rs = r_list;
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
    if (rs.empty()) throw std::invalid_argument("sharpness_sweep: empty r_list");

    SharpnessTable t;
    t.n = n;
    const EvalResult c = heinz_constant(n, std::min(tol, 1e-12));
    t.c_n = c.value;
    t.c_n_budget = c.error_bound;

    auto eval_row = [&](int m, double r) {
        const AxisymProfile prof = m == 0 ? sign_profile(n) : h_m_profile(m, n);
        const EvalResult um = ball::axisym_extension(prof, r, tol);
        const EvalResult dm = ball::axisym_radial_derivative(prof, r, tol);
        SharpnessRow row;
        row.m = m;
        row.r = r;
        row.quotient = (1.0 - std::fabs(um.value)) / (1.0 - r);
        row.quotient_budget = um.error_bound / (1.0 - r);
        row.deriv = dm.value;
        row.deriv_budget = dm.error_bound;
        return row;
    };

    for (int m : ms) {
        for (double r : rs) t.rows.push_back(eval_row(m, r));
    }
    std::vector<SharpnessRow> limit;
    for (double r : rs) limit.push_back(eval_row(0, r));
    t.rows.insert(t.rows.end(), limit.begin(), limit.end());

    // Heinz quotient >= C_n - 1e-6 on every row (including the limit profile)
    for (const auto& row : t.rows) {
        const double x = row.m + row.r;
        t.rep.points.push_back(report::make_record(
            x, t.c_n, row.quotient, row.quotient_budget + t.c_n_budget + 1e-6));
    }
    // quotient non-increasing in m beyond m = 10, at fixed r
    const size_t nr = rs.size();
    for (size_t i = 0; i + 1 < ms.size(); ++i) {
        if (ms[i] < 10) continue;
        for (size_t k = 0; k < nr; ++k) {
            const SharpnessRow& a = t.rows[i * nr + k];
            const SharpnessRow& b = t.rows[(i + 1) * nr + k];
            t.rep.points.push_back(report::make_record(
                b.m + b.r, b.quotient, a.quotient,
                a.quotient_budget + b.quotient_budget + tol));
        }
    }
    if (!ms.empty() && ms.back() >= 10) {
        for (size_t k = 0; k < nr; ++k) {
            const SharpnessRow& a = t.rows[(ms.size() - 1) * nr + k];
            const SharpnessRow& b = limit[k];
            t.rep.points.push_back(report::make_record(
                b.r, b.quotient, a.quotient,
                a.quotient_budget + b.quotient_budget + tol));
        }
    }

    const double r_near = 1.0 - 1e-6;
    const EvalResult dnear =
        ball::axisym_radial_derivative(sign_profile(n), r_near, std::max(tol, 1e-6));
    t.deriv_near_one = dnear.value;
    t.rep.points.push_back(report::make_record(
        1.0, std::fabs(t.deriv_near_one - t.c_n), 0.0,
        1e-3 + dnear.error_bound + t.c_n_budget));

    if (rs.size() >= 2) {
        const SharpnessRow& a = limit[limit.size() - 2];
        const SharpnessRow& b = limit[limit.size() - 1];
        const double t1 = 1.0 - a.r, t2 = 1.0 - b.r;
        const double coef = t2 / (t1 - t2);
        t.quotient_extrapolated = extrapolate(t1, a.quotient, t2, b.quotient);
        t.deriv_extrapolated = extrapolate(t1, a.deriv, t2, b.deriv);
        const double qeb =
            (1.0 + coef) * b.quotient_budget + coef * a.quotient_budget;
        const double deb = (1.0 + coef) * b.deriv_budget + coef * a.deriv_budget;
        t.rep.points.push_back(report::make_record(
            1.0, std::fabs(t.quotient_extrapolated - t.c_n), 0.0,
            1e-3 + qeb + t.c_n_budget));
        t.rep.points.push_back(report::make_record(
            1.0, std::fabs(t.deriv_extrapolated - t.c_n), 0.0,
            1e-3 + deb + t.c_n_budget));
    } else {
        t.quotient_extrapolated = limit.back().quotient;
        t.deriv_extrapolated = limit.back().deriv;
    }
    return t;
}

std::string sharpness_table_text(const SharpnessTable& t) {
    std::ostringstream os;
    char line[160];
    std::snprintf(line, sizeof(line), "n = %d, C_n = %s (+/- %s)\n", t.n,
                  report::fmt_num(t.c_n).c_str(),
                  report::fmt_num(t.c_n_budget).c_str());
    os << line;
    std::snprintf(line, sizeof(line), "%8s %8s %18s %14s %18s %14s\n", "m", "r",
                  "quotient", "q_budget", "deriv", "d_budget");
    os << line;
    for (const auto& row : t.rows) {
        char mcol[16];
        if (row.m == 0) {
            std::snprintf(mcol, sizeof(mcol), "limit");
        } else {
            std::snprintf(mcol, sizeof(mcol), "%d", row.m);
        }
        std::snprintf(line, sizeof(line), "%8s %8s %18s %14s %18s %14s\n", mcol,
                      report::fmt_num(row.r).c_str(),
                      report::fmt_num(row.quotient).c_str(),
                      report::fmt_num(row.quotient_budget).c_str(),
                      report::fmt_num(row.deriv).c_str(),
                      report::fmt_num(row.deriv_budget).c_str());
        os << line;
    }
    std::snprintf(line, sizeof(line), "limit-profile deriv at r = 1 - 1e-6: %s\n",
                  report::fmt_num(t.deriv_near_one).c_str());
    os << line;
    std::snprintf(line, sizeof(line),
                  "extrapolated to r = 1: quotient %s, deriv %s\n",
                  report::fmt_num(t.quotient_extrapolated).c_str(),
                  report::fmt_num(t.deriv_extrapolated).c_str());
    os << line;
    return os.str();
}

BoundaryMap random_odd_map(int n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("random_odd_map: n >= 2");
    constexpr int kTerms = 4;
    Stream st{rng::derive(seed, 101)};
    std::vector<std::vector<double>> amp(kTerms, std::vector<double>(n));
    std::vector<std::vector<double>> freq(kTerms, std::vector<double>(n));
    std::vector<double> phase(kTerms);
    for (int t = 0; t < kTerms; ++t) {
        for (int j = 0; j < n; ++j) amp[t][j] = st.gaussian() / kTerms;
        for (int j = 0; j < n; ++j) freq[t][j] = 1.5 * st.gaussian();
        phase[t] = kTwoPi * st.uniform();
    }

    auto raw = [amp, freq, phase, n](const std::vector<double>& zeta) {
        std::vector<double> out(n, 0.0);
        for (int t = 0; t < kTerms; ++t) {
            double dot = 0.0;
            for (int j = 0; j < n; ++j) dot += freq[t][j] * zeta[j];
            // odd part (g(zeta) - g(-zeta))/2 of g = sin(<w,zeta> + phase)
            const double odd =
                0.5 * (std::sin(dot + phase[t]) - std::sin(-dot + phase[t]));
            for (int j = 0; j < n; ++j) out[j] += amp[t][j] * odd;
        }
        return out;
    };

    const std::uint64_t grid_seed = rng::derive(seed, 202);
    double sup = 0.0;
    std::vector<double> probe(n);
    for (std::uint64_t i = 0; i < 4096; ++i) {
        rng::sphere_point(grid_seed, i, n, probe.data());
        sup = std::max(sup, norm2(raw(probe)));
    }
    const double scale = sup > 0.0 ? 1.0 / (1.05 * sup) : 1.0;

    auto f = [raw, scale, n](const std::vector<double>& zeta) {
        std::vector<double> out = raw(zeta);
        for (int j = 0; j < n; ++j) out[j] *= scale;
        return out;
    };
    return BoundaryMap{n, f};
}

std::vector<std::vector<double>> random_orthogonal(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_orthogonal: n >= 1");
    Stream st{seed};
    std::vector<std::vector<double>> q(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i) {
        for (;;) {
            for (int j = 0; j < n; ++j) q[i][j] = st.gaussian();
            for (int k = 0; k < i; ++k) { // modified Gram-Schmidt
                double dot = 0.0;
                for (int j = 0; j < n; ++j) dot += q[i][j] * q[k][j];
                for (int j = 0; j < n; ++j) q[i][j] -= dot * q[k][j];
            }
            const double nm = norm2(q[i]);
            if (nm > 1e-8) {
                for (int j = 0; j < n; ++j) q[i][j] /= nm;
                break;
            }
        }
    }
    return q;
}

std::vector<double> random_unit_vector(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_unit_vector: n >= 1");
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = rng::uniform01(rng::bits_at(seed, 0)) < 0.5 ? -1.0 : 1.0;
        return v;
    }
    rng::sphere_point(seed, 0, n, v.data());
    return v;
}

} // namespace heinz::verify
