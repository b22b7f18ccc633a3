#include "vpart/measure.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace vpart {

Judgement::Judgement(double x, std::vector<std::pair<std::string, double>> degrees)
    : x_(x), degrees_(std::move(degrees)) {
    if (!std::isfinite(x_)) throw std::invalid_argument("judged x must be finite");
    if (degrees_.empty()) throw std::invalid_argument("judgement needs at least one degree");
    std::set<std::string_view> names;
    for (const auto& [name, d] : degrees_) {
        if (name.empty()) throw std::invalid_argument("degree with empty name");
        if (!names.insert(name).second)
            throw std::invalid_argument("duplicate degree for '" + name + "'");
        if (!(d >= 0.0 && d <= 1.0))
            throw std::invalid_argument("degree for '" + name + "' outside [0,1]");
    }
}

std::optional<double> Judgement::find(std::string_view name) const {
    for (const auto& [n, d] : degrees_)
        if (n == name) return d;
    return std::nullopt;
}

Judgement judge(const VaguePartition& p, double x) {
    if (!p.domain().contains(x))
        throw std::domain_error("x outside the partition domain");
    std::vector<std::pair<std::string, double>> degrees;
    degrees.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        degrees.emplace_back(p.block_name(i), p.block(i)(x));
    return Judgement(x, std::move(degrees));
}

double eval_measure(const Judgement& j, const ConnectiveTriple& t, const ExprPtr& e) {
    if (!e) throw std::invalid_argument("null expression");
    switch (e->kind()) {
        case ExprKind::Bottom: return 0.0;
        case ExprKind::Top: return 1.0;
        case ExprKind::Atom: {
            auto d = j.find(e->name());
            if (!d) throw BindingError(e->name());
            return *d;
        }
        case ExprKind::Neg: return t.neg(eval_measure(j, t, e->child()));
        case ExprKind::And:
            return t.conj(eval_measure(j, t, e->left()), eval_measure(j, t, e->right()));
        case ExprKind::Or:
            return t.disj(eval_measure(j, t, e->left()), eval_measure(j, t, e->right()));
    }
    throw std::logic_error("unreachable expression kind");
}

MembershipSpaceReport check_axioms(const Judgement& j, const ConnectiveTriple& t,
                                   double tol) {
    if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
    MembershipSpaceReport rep;

    bool any_positive = false;
    for (const auto& [name, d] : j.degrees()) {
        if (!(d >= 0.0 && d <= 1.0)) {
            rep.axiom1 = {false, "degree for '" + name + "' outside [0,1]", name};
            break;
        }
        any_positive = any_positive || d > 0.0;
    }
    if (rep.axiom1.pass && !any_positive)
        rep.axiom1 = {false, "every degree is zero", std::nullopt};

    // Per block: its own degree plus the folded disjunction of all others.
    for (const auto& [name, d] : j.degrees()) {
        double rest = 0.0;
        for (const auto& [other, od] : j.degrees())
            if (other != name) rest = t.disj(rest, od);
        rep.closures.push_back({name, d + rest});
    }
    for (const BlockClosure& c : rep.closures) {
        if (c.value > 0.0 && c.value <= 1.0 + tol) continue;
        rep.axiom5 = {false,
                      "bound for '" + c.name + "' is " + std::to_string(c.value) +
                          ", outside (0,1]",
                      c.name};
        break;
    }

    bool axioms = rep.axiom1.pass && rep.axiom5.pass;
    bool all_one = true;
    for (const BlockClosure& c : rep.closures)
        all_one = all_one && std::abs(c.value - 1.0) <= tol;
    bool some_unit = false;
    for (const auto& [name, d] : j.degrees()) some_unit = some_unit || d >= 1.0 - tol;

    rep.regular = axioms && all_one;
    rep.normal = axioms && some_unit;
    rep.crisp = rep.normal;
    return rep;
}

namespace {

void require_bound(const VaguePartition& p, const ExprPtr& e) {
    for (const std::string& atom : atoms_of(e))
        if (!p.index_of(atom)) throw BindingError(atom);
}

bool pl_closed(const ConnectiveTriple& t) {
    return t.negation() == NegationKind::Standard &&
           (t.tnorm() == TNormKind::Minimum || t.tnorm() == TNormKind::Lukasiewicz);
}

PiecewiseLinearFn derive_pl(const VaguePartition& p, const ConnectiveTriple& t,
                            const VagueExpr& e) {
    bool luk = t.tnorm() == TNormKind::Lukasiewicz;
    switch (e.kind()) {
        case ExprKind::Bottom: return pl_constant(p.domain(), 0.0);
        case ExprKind::Top: return pl_constant(p.domain(), 1.0);
        case ExprKind::Atom: return p.block(*p.index_of(e.name()));
        case ExprKind::Neg: return pl_complement(derive_pl(p, t, *e.child()));
        case ExprKind::And:
            return pl_combine(derive_pl(p, t, *e.left()), derive_pl(p, t, *e.right()),
                              luk ? PlOp::BoundedDiff : PlOp::Min);
        case ExprKind::Or:
            return pl_combine(derive_pl(p, t, *e.left()), derive_pl(p, t, *e.right()),
                              luk ? PlOp::BoundedSum : PlOp::Max);
    }
    throw std::logic_error("unreachable expression kind");
}

double auto_step(const Interval& domain, double grid_step) {
    if (grid_step > 0.0) return grid_step;
    return domain.width() * 1e-4;
}

// Uniform grid over the domain plus every block breakpoint, so sampled
// curves keep the kinks the blocks already have.
std::vector<double> sample_xs(const VaguePartition& p, double step) {
    const Interval& dom = p.domain();
    auto cells = static_cast<std::size_t>(std::ceil(dom.width() / step));
    cells = std::max<std::size_t>(cells, 1);
    std::vector<double> xs;
    xs.reserve(cells + 1);
    for (std::size_t i = 0; i <= cells; ++i)
        xs.push_back(dom.lo + dom.width() * (static_cast<double>(i) /
                                             static_cast<double>(cells)));
    xs.back() = dom.hi;
    for (std::size_t b = 0; b < p.size(); ++b)
        for (const Breakpoint& pt : p.block(b).breakpoints()) xs.push_back(pt.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

template <typename F>
PiecewiseLinearFn sample_pl(const VaguePartition& p, double step, F&& value_at) {
    std::vector<Breakpoint> pts;
    for (double x : sample_xs(p, step))
        pts.push_back({x, std::clamp(value_at(x), 0.0, 1.0)});
    return PiecewiseLinearFn(p.domain(), std::move(pts));
}

DerivedFn materialize(const VaguePartition& p, const ConnectiveTriple& t,
                      const ExprPtr& e, double grid_step) {
    if (pl_closed(t)) return {derive_pl(p, t, *e), true, 0.0};
    double step = auto_step(p.domain(), grid_step);
    return {sample_pl(p, step,
                      [&](double x) { return eval_measure(judge(p, x), t, e); }),
            false, step};
}

}  // namespace

FuzzySet derive_fuzzy_set(PartitionPtr p, const ConnectiveTriple& t, ExprPtr e,
                          double grid_step) {
    if (!p) throw std::invalid_argument("null partition");
    if (!e) throw std::invalid_argument("null expression");
    require_bound(*p, e);
    DerivedFn d = materialize(*p, t, e, grid_step);
    return FuzzySet(std::move(p), t, std::move(e), grid_step, std::move(d));
}

double FuzzySet::membership(double x) const {
    return eval_measure(judge(*partition_, x), triple_, expr_);
}

double fs_membership(const FuzzySet& fs, double x) { return fs.membership(x); }

FuzzySet fs_combine(const FuzzySet& a, const FuzzySet& b, FsOp op) {
    if (!(a.triple() == b.triple()))
        throw CrossPartitionError("cannot combine: different connective triples");
    bool same = a.partition() == b.partition() || *a.partition() == *b.partition();
    if (!same)
        throw CrossPartitionError(
            "cannot combine fuzzy sets over different partitions ('" +
            a.partition()->concept_label() + "' over attribute '" +
            a.partition()->attribute() + "' vs '" + b.partition()->concept_label() +
            "' over attribute '" + b.partition()->attribute() + "')");
    ExprPtr e = op == FsOp::And ? VagueExpr::conj(a.expr(), b.expr())
                                : VagueExpr::disj(a.expr(), b.expr());
    double step = std::max(a.requested_step_, b.requested_step_);
    DerivedFn d = materialize(*a.partition(), a.triple(), e, step);
    return FuzzySet(a.partition(), a.triple(), std::move(e), step, std::move(d));
}

double sharpness(const VaguePartition& p, const ConnectiveTriple& t, double x) {
    Judgement j = judge(p, x);
    double acc = 0.0;
    for (const auto& [name, d] : j.degrees()) acc = t.disj(acc, d);
    return acc;
}

MeasuredValue separation(const VaguePartition& p, const ConnectiveTriple& t,
                         double grid_step) {
    TConormKind s = t.tconorm();
    if (s == TConormKind::Maximum || s == TConormKind::BoundedSum) {
        PlOp op = s == TConormKind::Maximum ? PlOp::Max : PlOp::BoundedSum;
        PiecewiseLinearFn fold = p.block(0);
        for (std::size_t i = 1; i < p.size(); ++i)
            fold = pl_combine(fold, p.block(i), op);
        PlExtrema e = pl_extrema(fold);
        return {1.0 - e.min_value, true, 0.0, e.min_x};
    }
    double step = auto_step(p.domain(), grid_step);
    double best = 2.0, best_x = p.domain().lo;
    for (double x : sample_xs(p, step)) {
        double a = sharpness(p, t, x);
        if (a < best) {
            best = a;
            best_x = x;
        }
    }
    return {1.0 - best, false, step, best_x};
}

MeasuredValue consistent_degree(const VaguePartition& p, const ConnectiveTriple& t,
                                const ExprPtr& a, const ExprPtr& b,
                                double grid_step) {
    require_bound(p, a);
    require_bound(p, b);
    ExprPtr both = VagueExpr::conj(a, b);
    if (pl_closed(t)) {
        PlExtrema e = pl_extrema(derive_pl(p, t, *both));
        return {e.max_value, true, 0.0, e.max_x};
    }
    double step = auto_step(p.domain(), grid_step);
    double best = -1.0, best_x = p.domain().lo;
    for (double x : sample_xs(p, step)) {
        double v = eval_measure(judge(p, x), t, both);
        if (v > best) {
            best = v;
            best_x = x;
        }
    }
    return {best, false, step, best_x};
}

bool incompatible(const VaguePartition& p, const ConnectiveTriple& t, const ExprPtr& a,
                  const ExprPtr& b, double tol) {
    if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
    return consistent_degree(p, t, a, b).value <= tol;
}

}  // namespace vpart
