#pragma once

#include <string>
#include <vector>

namespace heinz::report {

// One verified claim: pass iff margin = rhs - lhs >= -budget.
// Identity checks store lhs = |A - B|, rhs = 0.
struct PointRecord {
    double x = 0.0;      // input point (r, k, m + r, ... depending on the check)
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0; // rhs - lhs
    double budget = 0.0; // tolerance plus propagated error bounds
};

struct Report {
    std::vector<PointRecord> points;

    double min_margin() const;
    double worst_x() const;     // x of the minimum-margin record
    bool pass() const;          // margin >= -budget at every point
    void append(const Report& other);
};

PointRecord make_record(double x, double lhs, double rhs, double budget);

// 12 significant digits; scientific for 0 < |v| < 1e-3.
std::string fmt_num(double v);

// {points:[{x,lhs,rhs,margin,budget}],summary:{min_margin,pass}}
std::string to_json(const Report& r);
std::string to_csv(const Report& r);
std::string to_table(const Report& r);

} // namespace heinz::report
