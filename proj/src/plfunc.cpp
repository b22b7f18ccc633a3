#include "vpart/plfunc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vpart {

namespace detail {

double polyline_eval(const std::vector<Breakpoint>& pts, double x) {
    if (x <= pts.front().x) return pts.front().y;
    if (x >= pts.back().x) return pts.back().y;
    auto it = std::lower_bound(pts.begin(), pts.end(), x,
                               [](const Breakpoint& p, double v) { return p.x < v; });
    if (it->x == x) return it->y;
    const Breakpoint& b = *it;
    const Breakpoint& a = *(it - 1);
    double t = (x - a.x) / (b.x - a.x);
    return a.y + t * (b.y - a.y);
}

namespace {

double raw_apply(RawOp op, double u, double v) {
    switch (op) {
        case RawOp::Min: return std::min(u, v);
        case RawOp::Max: return std::max(u, v);
        case RawOp::BoundedSum: return std::min(u + v, 1.0);
        case RawOp::BoundedDiff: return std::max(u + v - 1.0, 0.0);
        case RawOp::Sum: return u + v;
    }
    throw std::logic_error("unreachable raw op");
}

// Where the op stops being linear: min/max switch where f = g, the bounded
// ops where f + g = 1, plain sum nowhere.
double switch_fn(RawOp op, double fy, double gy) {
    switch (op) {
        case RawOp::Min:
        case RawOp::Max: return fy - gy;
        case RawOp::BoundedSum:
        case RawOp::BoundedDiff: return fy + gy - 1.0;
        case RawOp::Sum: return 0.0;
    }
    throw std::logic_error("unreachable raw op");
}

}  // namespace

std::vector<Breakpoint> polyline_combine(const std::vector<Breakpoint>& f,
                                         const std::vector<Breakpoint>& g, RawOp op) {
    std::vector<double> xs;
    xs.reserve(f.size() + g.size());
    for (const Breakpoint& p : f) xs.push_back(p.x);
    for (const Breakpoint& p : g) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    if (op != RawOp::Sum) {
        std::vector<double> crossings;
        for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
            double x0 = xs[i], x1 = xs[i + 1];
            double d0 = switch_fn(op, polyline_eval(f, x0), polyline_eval(g, x0));
            double d1 = switch_fn(op, polyline_eval(f, x1), polyline_eval(g, x1));
            if ((d0 < 0.0 && d1 > 0.0) || (d0 > 0.0 && d1 < 0.0)) {
                double xc = x0 + (x1 - x0) * (d0 / (d0 - d1));
                if (xc > x0 && xc < x1) crossings.push_back(xc);
            }
        }
        xs.insert(xs.end(), crossings.begin(), crossings.end());
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    }

    std::vector<Breakpoint> out;
    out.reserve(xs.size());
    for (double x : xs)
        out.push_back({x, raw_apply(op, polyline_eval(f, x), polyline_eval(g, x))});
    return out;
}

RawExtrema polyline_extrema(const std::vector<Breakpoint>& pts) {
    RawExtrema e{pts.front().y, pts.front().x, pts.front().y, pts.front().x};
    for (const Breakpoint& p : pts) {
        if (p.y < e.min_value) {
            e.min_value = p.y;
            e.min_x = p.x;
        }
        if (p.y > e.max_value) {
            e.max_value = p.y;
            e.max_x = p.x;
        }
    }
    return e;
}

LevelSet polyline_level_set(const std::vector<Breakpoint>& pts, double t, double tol) {
    double band_lo = t - tol, band_hi = t + tol;

    LevelSet out;
    auto add_piece = [&out](double lo, double hi) {
        if (!out.pieces.empty() && lo <= out.pieces.back().hi)
            out.pieces.back().hi = std::max(out.pieces.back().hi, hi);
        else
            out.pieces.push_back({lo, hi});
    };

    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Breakpoint& a = pts[i];
        const Breakpoint& b = pts[i + 1];
        if (a.y == b.y) {
            if (a.y >= band_lo && a.y <= band_hi) add_piece(a.x, b.x);
            continue;
        }
        double seg_lo = std::min(a.y, b.y), seg_hi = std::max(a.y, b.y);
        double c_lo = std::max(seg_lo, band_lo);
        double c_hi = std::min(seg_hi, band_hi);
        if (c_lo > c_hi) continue;
        // Invert the segment at both band edges; exact when the edge
        // coincides with a stored value.
        auto inv = [&a, &b](double c) {
            if (c == a.y) return a.x;
            if (c == b.y) return b.x;
            return a.x + (c - a.y) * (b.x - a.x) / (b.y - a.y);
        };
        double x1 = inv(c_lo), x2 = inv(c_hi);
        double lo = std::clamp(std::min(x1, x2), a.x, b.x);
        double hi = std::clamp(std::max(x1, x2), a.x, b.x);
        add_piece(lo, hi);
    }
    return out;
}

UnimodalVerdict polyline_unimodal(const std::vector<Breakpoint>& pts, double tol) {
    LevelSet unit = polyline_level_set(pts, 1.0, tol);
    if (unit.empty()) return {false, "never reaches 1", std::nullopt};

    double m1 = unit.pieces.front().lo;
    double m2 = unit.pieces.back().hi;

    // Between the first and last unit value the function must sit at 1;
    // raw candidates can also overshoot, which breaks monotonicity around
    // the crossing just as a dip does.
    for (const Breakpoint& p : pts) {
        if (p.x <= m1 || p.x >= m2) continue;
        if (1.0 - p.y > tol)
            return {false, "dips below 1 between unit values", p.x};
        if (p.y - 1.0 > tol)
            return {false, "exceeds 1 between unit values", p.x};
    }
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (pts[i].x <= m1 && pts[i].y < pts[i - 1].y - tol)
            return {false, "decreases before the unit plateau", pts[i].x};
        if (pts[i - 1].x >= m2 && pts[i].y > pts[i - 1].y + tol)
            return {false, "increases after the unit plateau", pts[i].x};
    }
    return {true, "", std::nullopt};
}

}  // namespace detail

bool LevelSet::contains(double x) const {
    for (const Interval& p : pieces) {
        if (x < p.lo) return false;
        if (x <= p.hi) return true;
    }
    return false;
}

LevelSet intersect(const LevelSet& a, const LevelSet& b) {
    LevelSet out;
    std::size_t i = 0, j = 0;
    while (i < a.pieces.size() && j < b.pieces.size()) {
        double lo = std::max(a.pieces[i].lo, b.pieces[j].lo);
        double hi = std::min(a.pieces[i].hi, b.pieces[j].hi);
        if (lo <= hi) out.pieces.push_back({lo, hi});
        if (a.pieces[i].hi < b.pieces[j].hi)
            ++i;
        else
            ++j;
    }
    return out;
}

PiecewiseLinearFn::PiecewiseLinearFn(Interval domain, std::vector<Breakpoint> pts)
    : domain_(domain), pts_(std::move(pts)) {
    if (!(domain_.lo < domain_.hi))
        throw std::invalid_argument("domain must have positive width");
    if (pts_.size() < 2)
        throw std::invalid_argument("need at least two breakpoints");
    for (const Breakpoint& p : pts_) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw std::invalid_argument("breakpoints must be finite");
        if (!(p.y >= 0.0 && p.y <= 1.0))
            throw std::invalid_argument("breakpoint value outside [0,1]: " +
                                        std::to_string(p.y));
    }
    for (std::size_t i = 1; i < pts_.size(); ++i)
        if (!(pts_[i - 1].x < pts_[i].x))
            throw std::invalid_argument("breakpoint abscissae must strictly increase");
    if (pts_.front().x != domain_.lo || pts_.back().x != domain_.hi)
        throw std::invalid_argument("breakpoints must span the domain exactly");
}

double PiecewiseLinearFn::operator()(double x) const {
    if (!domain_.contains(x))
        throw std::domain_error("argument " + std::to_string(x) +
                                " outside domain [" + std::to_string(domain_.lo) +
                                ", " + std::to_string(domain_.hi) + "]");
    return std::clamp(detail::polyline_eval(pts_, x), 0.0, 1.0);
}

PiecewiseLinearFn pl_constant(Interval domain, double y) {
    return PiecewiseLinearFn(domain, {{domain.lo, y}, {domain.hi, y}});
}

PiecewiseLinearFn pl_combine(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g,
                             PlOp op) {
    if (f.domain() != g.domain())
        throw std::invalid_argument("cannot combine functions on different domains");
    detail::RawOp raw;
    switch (op) {
        case PlOp::Min: raw = detail::RawOp::Min; break;
        case PlOp::Max: raw = detail::RawOp::Max; break;
        case PlOp::BoundedSum: raw = detail::RawOp::BoundedSum; break;
        case PlOp::BoundedDiff: raw = detail::RawOp::BoundedDiff; break;
        default: throw std::logic_error("unreachable pl op");
    }
    std::vector<Breakpoint> pts =
        detail::polyline_combine(f.breakpoints(), g.breakpoints(), raw);
    for (Breakpoint& p : pts) p.y = std::clamp(p.y, 0.0, 1.0);
    return PiecewiseLinearFn(f.domain(), std::move(pts));
}

PiecewiseLinearFn pl_complement(const PiecewiseLinearFn& f) {
    std::vector<Breakpoint> pts = f.breakpoints();
    for (Breakpoint& p : pts) p.y = 1.0 - p.y;
    return PiecewiseLinearFn(f.domain(), std::move(pts));
}

LevelSet pl_level_set(const PiecewiseLinearFn& f, double t, double tol) {
    if (!std::isfinite(t)) throw std::invalid_argument("level must be finite");
    if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
    return detail::polyline_level_set(f.breakpoints(), t, tol);
}

PlExtrema pl_extrema(const PiecewiseLinearFn& f) {
    detail::RawExtrema e = detail::polyline_extrema(f.breakpoints());
    return {e.min_value, e.min_x, e.max_value, e.max_x};
}

UnimodalVerdict pl_is_unimodal_with_plateau(const PiecewiseLinearFn& f, double tol) {
    if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
    return detail::polyline_unimodal(f.breakpoints(), tol);
}

SampledFn pl_sample_combine(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g,
                            const std::function<double(double, double)>& op,
                            double grid_step) {
    if (f.domain() != g.domain())
        throw std::invalid_argument("cannot combine functions on different domains");
    double width = f.domain().width();
    if (!(grid_step > 0.0) || grid_step > width)
        throw std::invalid_argument("grid step must lie in (0, domain width]");

    std::size_t cells = static_cast<std::size_t>(std::ceil(width / grid_step));
    double step = width / static_cast<double>(cells);

    std::vector<double> xs;
    xs.reserve(cells + 1 + f.breakpoints().size() + g.breakpoints().size());
    for (std::size_t i = 0; i < cells; ++i)
        xs.push_back(f.domain().lo + static_cast<double>(i) * step);
    xs.push_back(f.domain().hi);
    for (const Breakpoint& p : f.breakpoints()) xs.push_back(p.x);
    for (const Breakpoint& p : g.breakpoints()) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::vector<Breakpoint> pts;
    pts.reserve(xs.size());
    for (double x : xs) pts.push_back({x, std::clamp(op(f(x), g(x)), 0.0, 1.0)});
    return {PiecewiseLinearFn(f.domain(), std::move(pts)), step};
}

}  // namespace vpart
