#include "heinz/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

namespace heinz::report {

double Report::min_margin() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& p : points) m = std::min(m, p.margin);
    return m;
}

double Report::worst_x() const {
    double m = std::numeric_limits<double>::infinity();
    double x = std::numeric_limits<double>::quiet_NaN();
    for (const auto& p : points) {
        if (p.margin < m) {
            m = p.margin;
            x = p.x;
        }
    }
    return x;
}

bool Report::pass() const {
    return std::all_of(points.begin(), points.end(), [](const PointRecord& p) {
        return std::isfinite(p.margin) && p.margin >= -p.budget;
    });
}

void Report::append(const Report& other) {
    points.insert(points.end(), other.points.begin(), other.points.end());
}

PointRecord make_record(double x, double lhs, double rhs, double budget) {
    return {x, lhs, rhs, rhs - lhs, budget};
}

std::string fmt_num(double v) {
    if (!std::isfinite(v)) return v > 0 ? "1e9999" : (v < 0 ? "-1e9999" : "0");
    char buf[40];
    const double a = std::fabs(v);
    if (a > 0.0 && a < 1e-3) {
        std::snprintf(buf, sizeof(buf), "%.11e", v);
    } else {
        std::snprintf(buf, sizeof(buf), "%.12g", v);
    }
    return buf;
}

// Hand-rolled writer: fmt_num strings are emitted as JSON number tokens, so
// table/CSV/JSON carry identical digits and the bytes are library-stable.
std::string to_json(const Report& r) {
    std::ostringstream os;
    os << "{\n  \"points\": [";
    for (size_t i = 0; i < r.points.size(); ++i) {
        const auto& p = r.points[i];
        os << (i ? ",\n    " : "\n    ");
        os << "{\"x\": " << fmt_num(p.x) << ", \"lhs\": " << fmt_num(p.lhs)
           << ", \"rhs\": " << fmt_num(p.rhs)
           << ", \"margin\": " << fmt_num(p.margin)
           << ", \"budget\": " << fmt_num(p.budget) << "}";
    }
    os << (r.points.empty() ? "]" : "\n  ]");
    os << ",\n  \"summary\": {\"min_margin\": " << fmt_num(r.min_margin())
       << ", \"pass\": " << (r.pass() ? "true" : "false") << "}\n}\n";
    return os.str();
}

std::string to_csv(const Report& r) {
    std::ostringstream os;
    os << "x,lhs,rhs,margin,budget\n";
    for (const auto& p : r.points) {
        os << fmt_num(p.x) << ',' << fmt_num(p.lhs) << ',' << fmt_num(p.rhs)
           << ',' << fmt_num(p.margin) << ',' << fmt_num(p.budget) << '\n';
    }
    return os.str();
}

std::string to_table(const Report& r) {
    std::ostringstream os;
    char line[140];
    std::snprintf(line, sizeof(line), "%14s %20s %20s %16s %14s\n", "x", "lhs",
                  "rhs", "margin", "budget");
    os << line;
    for (const auto& p : r.points) {
        std::snprintf(line, sizeof(line), "%14s %20s %20s %16s %14s\n",
                      fmt_num(p.x).c_str(), fmt_num(p.lhs).c_str(),
                      fmt_num(p.rhs).c_str(), fmt_num(p.margin).c_str(),
                      fmt_num(p.budget).c_str());
        os << line;
    }
    std::snprintf(line, sizeof(line), "min_margin %s at x = %s: %s\n",
                  fmt_num(r.min_margin()).c_str(), fmt_num(r.worst_x()).c_str(),
                  r.pass() ? "PASS" : "FAIL");
    os << line;
    return os.str();
}

} // namespace heinz::report
