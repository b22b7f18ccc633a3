#include "vpart/partition.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

namespace vpart {

namespace {

// Shape problems make the condition checks meaningless; range problems do
// not, so they are reported while the conditions still run.
std::optional<std::string> shape_problem(const PartitionCandidate& c) {
    if (!std::isfinite(c.domain.lo) || !std::isfinite(c.domain.hi) ||
        !(c.domain.lo < c.domain.hi))
        return "domain must be a finite interval of positive width";
    if (c.blocks.empty()) return "partition needs at least one block";

    std::set<std::string> names;
    for (std::size_t b = 0; b < c.blocks.size(); ++b) {
        const BlockCandidate& blk = c.blocks[b];
        if (blk.name.empty()) return "block " + std::to_string(b) + " has no name";
        if (!names.insert(blk.name).second)
            return "duplicate block name '" + blk.name + "'";
        if (blk.points.size() < 2)
            return "block '" + blk.name + "' needs at least two breakpoints";
        for (const Breakpoint& p : blk.points)
            if (!std::isfinite(p.x) || !std::isfinite(p.y))
                return "block '" + blk.name + "' has a non-finite breakpoint";
        for (std::size_t i = 1; i < blk.points.size(); ++i)
            if (!(blk.points[i - 1].x < blk.points[i].x))
                return "block '" + blk.name + "' breakpoints must strictly increase";
        if (blk.points.front().x != c.domain.lo || blk.points.back().x != c.domain.hi)
            return "block '" + blk.name + "' must span the domain exactly";
    }
    return std::nullopt;
}

}  // namespace

ValidationReport validate_partition(const PartitionCandidate& c, double tol) {
    if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");

    ValidationReport rep;
    if (auto problem = shape_problem(c)) {
        rep.checks[0] = {false, *problem, std::nullopt, std::nullopt};
        for (std::size_t i = 1; i <= 5; ++i)
            rep.checks[i] = {false, "not evaluated (malformed blocks)", std::nullopt,
                             std::nullopt};
        return rep;
    }

    // Range still belongs to well-formedness: memberships map into [0,1].
    for (std::size_t b = 0; b < c.blocks.size() && rep.checks[0].pass; ++b)
        for (const Breakpoint& p : c.blocks[b].points)
            if (!(p.y >= 0.0 && p.y <= 1.0)) {
                rep.checks[0] = {false,
                                 "block '" + c.blocks[b].name +
                                     "' leaves [0,1]: value " + std::to_string(p.y),
                                 p.x, b};
                break;
            }

    // (1) positive cover: the upper envelope must stay strictly positive.
    std::vector<Breakpoint> envelope = c.blocks[0].points;
    for (std::size_t b = 1; b < c.blocks.size(); ++b)
        envelope =
            detail::polyline_combine(envelope, c.blocks[b].points, detail::RawOp::Max);
    detail::RawExtrema env = detail::polyline_extrema(envelope);
    if (env.min_value > tol)
        rep.checks[1] = {true, "", std::nullopt, std::nullopt};
    else
        rep.checks[1] = {false,
                         "no block is positive at x = " + std::to_string(env.min_x),
                         env.min_x, std::nullopt};

    // (2) continuity: piecewise-linear interpolation is continuous by
    // construction once the shape check has passed.
    rep.checks[2] = {true, "", std::nullopt, std::nullopt};

    // (3) every block attains 1 somewhere (crossings count: a block whose
    // values straddle 1 passes through it).
    rep.checks[3] = {true, "", std::nullopt, std::nullopt};
    for (std::size_t b = 0; b < c.blocks.size(); ++b) {
        detail::RawExtrema e = detail::polyline_extrema(c.blocks[b].points);
        bool attains = e.max_value >= 1.0 - tol && e.min_value <= 1.0 + tol;
        if (!attains) {
            rep.checks[3] = {false,
                             "block '" + c.blocks[b].name + "' never reaches 1 (max " +
                                 std::to_string(e.max_value) + ")",
                             e.max_x, b};
            break;
        }
    }

    // (4) unimodal-with-plateau, read conditionally: a block with no unit
    // value passes vacuously and is reported by (3) instead.
    rep.checks[4] = {true, "", std::nullopt, std::nullopt};
    for (std::size_t b = 0; b < c.blocks.size(); ++b) {
        LevelSet unit = detail::polyline_level_set(c.blocks[b].points, 1.0, tol);
        if (unit.empty()) continue;
        UnimodalVerdict v = detail::polyline_unimodal(c.blocks[b].points, tol);
        if (!v.ok) {
            rep.checks[4] = {false, "block '" + c.blocks[b].name + "' " + v.reason,
                             v.witness_x, b};
            break;
        }
    }

    // (5) the plain block sum stays in (0,1]; it is linear between merged
    // breakpoints, so its extrema there are exact.
    std::vector<Breakpoint> sum = c.blocks[0].points;
    for (std::size_t b = 1; b < c.blocks.size(); ++b)
        sum = detail::polyline_combine(sum, c.blocks[b].points, detail::RawOp::Sum);
    detail::RawExtrema se = detail::polyline_extrema(sum);
    rep.sum = SumProfile{se.min_value, se.min_x, se.max_value, se.max_x};
    if (se.min_value <= tol)
        rep.checks[5] = {false,
                         "block sum is not positive at x = " + std::to_string(se.min_x) +
                             " (sum " + std::to_string(se.min_value) + ")",
                         se.min_x, std::nullopt};
    else if (se.max_value > 1.0 + tol)
        rep.checks[5] = {false,
                         "block sum exceeds 1 at x = " + std::to_string(se.max_x) +
                             " (sum " + std::to_string(se.max_value) + ")",
                         se.max_x, std::nullopt};
    else
        rep.checks[5] = {true, "", std::nullopt, std::nullopt};

    rep.valid = true;
    for (const ConditionVerdict& v : rep.checks) rep.valid = rep.valid && v.pass;

    bool sum_is_one = true;
    for (const Breakpoint& p : sum) sum_is_one = sum_is_one && std::abs(p.y - 1.0) <= tol;
    rep.regular = rep.valid && sum_is_one;
    return rep;
}

ValidationError::ValidationError(ValidationReport r)
    : std::runtime_error([&r] {
          for (const ConditionVerdict& v : r.checks)
              if (!v.pass) return "partition validation failed: " + v.detail;
          return std::string("partition validation failed");
      }()),
      report(std::move(r)) {}

PartitionPtr VaguePartition::create(const PartitionCandidate& c, double tol) {
    ValidationReport rep = validate_partition(c, tol);
    if (!rep.valid) throw ValidationError(std::move(rep));

    auto p = std::shared_ptr<VaguePartition>(new VaguePartition());
    p->concept_ = c.concept_label;
    p->attribute_ = c.attribute;
    p->domain_ = c.domain;
    p->triple_ = c.triple;
    p->regular_ = rep.regular;
    for (const BlockCandidate& blk : c.blocks) {
        p->names_.push_back(blk.name);
        p->blocks_.emplace_back(c.domain, blk.points);
    }
    return p;
}

std::optional<std::size_t> VaguePartition::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

bool VaguePartition::operator==(const VaguePartition& other) const {
    if (this == &other) return true;
    return concept_ == other.concept_ && attribute_ == other.attribute_ &&
           domain_ == other.domain_ && triple_ == other.triple_ &&
           names_ == other.names_ && blocks_ == other.blocks_;
}

PartitionCandidate to_candidate(const VaguePartition& p) {
    PartitionCandidate c;
    c.concept_label = p.concept_label();
    c.attribute = p.attribute();
    c.domain = p.domain();
    c.triple = p.triple();
    for (std::size_t i = 0; i < p.size(); ++i)
        c.blocks.push_back({p.block_name(i), p.block(i).breakpoints()});
    return c;
}

PartitionPtr random_partition(std::uint64_t seed, Interval domain,
                              std::size_t n_blocks) {
    if (!std::isfinite(domain.lo) || !std::isfinite(domain.hi) ||
        !(domain.lo < domain.hi))
        throw std::invalid_argument("domain must be a finite interval of positive width");
    if (n_blocks == 0) throw std::invalid_argument("need at least one block");
    if (n_blocks > 1000) throw std::invalid_argument("too many blocks");

    std::mt19937_64 rng(seed);
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    PartitionCandidate c;
    c.concept_label = "generated";
    c.attribute = "x";
    c.domain = domain;

    double width = domain.width();

    if (n_blocks == 1) {
        if (unit() < 0.5) {
            c.blocks.push_back({"b0", {{domain.lo, 1.0}, {domain.hi, 1.0}}});
        } else {
            // Sub-regular single block: positive shoulders below 1.
            double p1 = domain.lo + width * (0.2 + 0.2 * unit());
            double p2 = domain.hi - width * (0.2 + 0.2 * unit());
            double e0 = 0.2 + 0.7 * unit();
            double e1 = 0.2 + 0.7 * unit();
            c.blocks.push_back({"b0",
                                {{domain.lo, e0}, {p1, 1.0}, {p2, 1.0}, {domain.hi, e1}}});
        }
        return VaguePartition::create(c);
    }

    // Transition windows between consecutive blocks, kept apart by margin.
    double base = width / static_cast<double>(n_blocks);
    std::vector<double> start(n_blocks), end(n_blocks), rise(n_blocks);
    for (std::size_t k = 1; k < n_blocks; ++k) {
        double center = domain.lo + static_cast<double>(k) * base +
                        base * 0.05 * (2.0 * unit() - 1.0);
        double half = base * (0.05 + 0.35 * unit());
        start[k] = center - half;
        end[k] = center + half;
        rise[k] = start[k];
        if (unit() < 0.35)  // delayed rise: the sum dips below 1 here
            rise[k] = start[k] + (end[k] - start[k]) * (0.25 + 0.35 * unit());
    }

    for (std::size_t i = 0; i < n_blocks; ++i) {
        std::vector<Breakpoint> pts;
        if (i == 0) {
            pts.push_back({domain.lo, 1.0});
            pts.push_back({start[1], 1.0});
            pts.push_back({end[1], 0.0});
            pts.push_back({domain.hi, 0.0});
        } else if (i + 1 < n_blocks) {
            pts.push_back({domain.lo, 0.0});
            pts.push_back({rise[i], 0.0});
            pts.push_back({end[i], 1.0});
            pts.push_back({start[i + 1], 1.0});
            pts.push_back({end[i + 1], 0.0});
            pts.push_back({domain.hi, 0.0});
        } else {
            pts.push_back({domain.lo, 0.0});
            pts.push_back({rise[i], 0.0});
            pts.push_back({end[i], 1.0});
            pts.push_back({domain.hi, 1.0});
        }
        c.blocks.push_back({"b" + std::to_string(i), std::move(pts)});
    }
    return VaguePartition::create(c);
}

}  // namespace vpart
