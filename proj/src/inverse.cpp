#include "vpart/inverse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace vpart {

namespace {

LevelSet widen_one_ulp(const LevelSet& s) {
    LevelSet out;
    for (const Interval& piece : s.pieces)
        out.pieces.push_back(
            {std::nextafter(piece.lo, -std::numeric_limits<double>::infinity()),
             std::nextafter(piece.hi, std::numeric_limits<double>::infinity())});
    return out;
}

// Pieces no wider than a few ulps are widened points, not real intervals.
bool hairline(const Interval& piece) {
    double scale = std::max({1.0, std::abs(piece.lo), std::abs(piece.hi)});
    return piece.width() <= 16.0 * std::numeric_limits<double>::epsilon() * scale;
}

InversionResult invert_with(const VaguePartition& p, const TargetVector& targets,
                            double tol) {
    if (targets.targets.empty())
        throw std::invalid_argument("need at least one target degree");
    if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
    std::set<std::string_view> seen;
    for (const auto& [name, value] : targets.targets) {
        if (!seen.insert(name).second)
            throw std::invalid_argument("duplicate target for '" + name + "'");
        if (!(value >= 0.0 && value <= 1.0))
            throw std::invalid_argument("target for '" + name + "' outside [0,1]");
    }

    InversionResult res;
    bool first = true;
    for (const auto& [name, value] : targets.targets) {
        auto idx = p.index_of(name);
        if (!idx) throw BindingError(name);
        const PiecewiseLinearFn& f = p.block(*idx);

        LevelSet ls = pl_level_set(f, value, tol);
        LevelSet widened = widen_one_ulp(ls);
        res.solutions = first ? widened : intersect(res.solutions, widened);
        first = false;

        PlExtrema e = pl_extrema(f);
        BlockFeasibility fb{name, value, !ls.empty(), value, 0.0};
        if (value < e.min_value) {
            fb.nearest_value = e.min_value;
            fb.nearest_x = e.min_x;
        } else if (value > e.max_value) {
            fb.nearest_value = e.max_value;
            fb.nearest_x = e.max_x;
        } else {
            fb.nearest_x = ls.pieces.front().lo;  // attainable, first solution
        }
        res.feasibility.push_back(fb);
    }

    LevelSet cleaned;
    for (const Interval& piece : res.solutions.pieces) {
        double lo = std::max(piece.lo, p.domain().lo);
        double hi = std::min(piece.hi, p.domain().hi);
        if (lo > hi) continue;  // widened sliver outside the domain
        if (hairline({lo, hi})) {
            double mid = lo + (hi - lo) / 2.0;
            cleaned.pieces.push_back({mid, mid});
        } else {
            cleaned.pieces.push_back({lo, hi});
        }
    }
    res.solutions = std::move(cleaned);
    return res;
}

}  // namespace

InversionResult invert(const VaguePartition& p, const TargetVector& targets) {
    return invert_with(p, targets, targets.tolerance);
}

InversionResult invert_approx(const VaguePartition& p, const TargetVector& targets,
                              double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("approximation tolerance must be positive");
    return invert_with(p, targets, tol);
}

}  // namespace vpart
