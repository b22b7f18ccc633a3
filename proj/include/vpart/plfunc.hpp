#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace vpart {

// Closed interval, lo <= hi. A single point is lo == hi.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool operator==(const Interval&) const = default;
};

struct Breakpoint {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const Breakpoint&) const = default;
};

// Raw polyline helpers shared with partition validation. Points must be
// strictly increasing in x; y is unrestricted here. These are the exact
// workhorses: combined results carry breakpoints at every input breakpoint
// plus every abscissa where the operation switches segments.
namespace detail {

enum class RawOp { Min, Max, BoundedSum, BoundedDiff, Sum };

double polyline_eval(const std::vector<Breakpoint>& pts, double x);
std::vector<Breakpoint> polyline_combine(const std::vector<Breakpoint>& f,
                                         const std::vector<Breakpoint>& g, RawOp op);

struct RawExtrema {
    double min_value, min_x;  // smallest x attaining each bound
    double max_value, max_x;
};
RawExtrema polyline_extrema(const std::vector<Breakpoint>& pts);

}  // namespace detail

// Disjoint sorted union of closed intervals; points are degenerate intervals.
struct LevelSet {
    std::vector<Interval> pieces;
    bool empty() const { return pieces.empty(); }
    bool contains(double x) const;
};

LevelSet intersect(const LevelSet& a, const LevelSet& b);

// Verdict for "reaches 1 on a single closed plateau, non-decreasing before
// it, non-increasing after it". An empty unit level set fails.
struct UnimodalVerdict {
    bool ok = false;
    std::string reason;  // empty when ok
    std::optional<double> witness_x;
};

namespace detail {
LevelSet polyline_level_set(const std::vector<Breakpoint>& pts, double t, double tol);
UnimodalVerdict polyline_unimodal(const std::vector<Breakpoint>& pts, double tol);
}  // namespace detail

// Continuous piecewise-linear membership function on a closed domain.
// Breakpoints are strictly increasing in x, span the whole domain, and carry
// y in [0,1]; between breakpoints the value interpolates linearly.
class PiecewiseLinearFn {
public:
    // Throws invalid_argument if the breakpoint list breaks the invariants.
    PiecewiseLinearFn(Interval domain, std::vector<Breakpoint> pts);

    // domain_error outside the domain; result clamped into [0,1] so a
    // half-ulp interpolation spill never leaks out.
    double operator()(double x) const;

    const Interval& domain() const { return domain_; }
    const std::vector<Breakpoint>& breakpoints() const { return pts_; }

    bool operator==(const PiecewiseLinearFn&) const = default;

private:
    Interval domain_;
    std::vector<Breakpoint> pts_;
};

PiecewiseLinearFn pl_constant(Interval domain, double y);

enum class PlOp { Min, Max, BoundedSum, BoundedDiff };

// Exact pointwise combination; requires equal domains.
PiecewiseLinearFn pl_combine(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g,
                             PlOp op);

PiecewiseLinearFn pl_complement(const PiecewiseLinearFn& f);  // x -> 1 - f(x)

// {x : |f(x) - t| <= tol} as disjoint closed intervals, exact at tol = 0.
LevelSet pl_level_set(const PiecewiseLinearFn& f, double t, double tol = 0.0);

struct PlExtrema {
    double min_value, min_x;
    double max_value, max_x;
};
PlExtrema pl_extrema(const PiecewiseLinearFn& f);

UnimodalVerdict pl_is_unimodal_with_plateau(const PiecewiseLinearFn& f,
                                            double tol = 1e-9);

// Dense-sampled approximation of an arbitrary pointwise combination. The
// sample grid is equispaced plus both functions' breakpoints; accuracy is
// bounded by the step times the local curvature, so callers must treat the
// result as approximate.
struct SampledFn {
    PiecewiseLinearFn fn;
    double grid_step;
};
SampledFn pl_sample_combine(const PiecewiseLinearFn& f, const PiecewiseLinearFn& g,
                            const std::function<double(double, double)>& op,
                            double grid_step);

}  // namespace vpart
