#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vpart/connectives.hpp"
#include "vpart/expr.hpp"
#include "vpart/partition.hpp"
#include "vpart/plfunc.hpp"

namespace vpart {

// One judged object: its position x and, per named attribute value, the
// degree to which it has that value. Direct judgements that come from no
// partition (survey data, crisp classifications) are first-class here.
class Judgement {
public:
    // Throws invalid_argument on empty list, duplicate or empty names, or
    // degrees outside [0,1].
    Judgement(double x, std::vector<std::pair<std::string, double>> degrees);

    double x() const { return x_; }
    const std::vector<std::pair<std::string, double>>& degrees() const {
        return degrees_;
    }
    std::size_t size() const { return degrees_.size(); }
    std::optional<double> find(std::string_view name) const;

private:
    double x_;
    std::vector<std::pair<std::string, double>> degrees_;
};

struct BindingError : std::runtime_error {
    std::string atom;
    explicit BindingError(std::string a)
        : std::runtime_error("unbound atom '" + a + "'"), atom(std::move(a)) {}
};

// Degrees of every block at x, in block order.
Judgement judge(const VaguePartition& p, double x);

// Compositional degree of an expression: bot is 0, top is 1, atoms look up
// the judgement, and the connective triple interprets !, &, |.
double eval_measure(const Judgement& j, const ConnectiveTriple& t, const ExprPtr& e);

struct AxiomVerdict {
    bool pass = true;
    std::string detail;                  // failure reason, empty when passing
    std::optional<std::string> witness;  // offending block name
};

// The per-block bound: degree plus the disjunctive fold of all the others.
// Plain arithmetic sum, deliberately never clamped.
struct BlockClosure {
    std::string name;
    double value;
};

// axiom1: degrees lie in [0,1] and at least one is positive.
// axiom5: every closure lies in (0, 1]. regular: every closure equals 1.
// normal: some degree equals 1; crisp mirrors normal. Classification flags
// are gated on the axioms passing, which makes normal imply regular.
struct MembershipSpaceReport {
    AxiomVerdict axiom1;
    AxiomVerdict axiom5;
    std::vector<BlockClosure> closures;
    bool regular = false;
    bool normal = false;
    bool crisp = false;
};

MembershipSpaceReport check_axioms(const Judgement& j, const ConnectiveTriple& t,
                                   double tol = 1e-9);

// Materialized membership function of an expression. exact means the triple
// kept every step piecewise-linear; otherwise fn interpolates a dense sample
// and grid_step records its resolution.
struct DerivedFn {
    PiecewiseLinearFn fn;
    bool exact;
    double grid_step;  // 0 on the exact path
};

struct CrossPartitionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class FsOp { And, Or };

// An expression over one partition's blocks together with its materialized
// membership function. Immutable; the partition is shared, not copied.
class FuzzySet {
public:
    double membership(double x) const;  // direct recursion, the authority

    const PartitionPtr& partition() const { return partition_; }
    const ConnectiveTriple& triple() const { return triple_; }
    const ExprPtr& expr() const { return expr_; }
    const DerivedFn& derived() const { return derived_; }

private:
    FuzzySet(PartitionPtr p, ConnectiveTriple t, ExprPtr e, double requested_step,
             DerivedFn d)
        : partition_(std::move(p)),
          triple_(t),
          expr_(std::move(e)),
          requested_step_(requested_step),
          derived_(std::move(d)) {}

    friend FuzzySet derive_fuzzy_set(PartitionPtr p, const ConnectiveTriple& t,
                                     ExprPtr e, double grid_step);
    friend FuzzySet fs_combine(const FuzzySet& a, const FuzzySet& b, FsOp op);

    PartitionPtr partition_;
    ConnectiveTriple triple_;
    ExprPtr expr_;
    double requested_step_;
    DerivedFn derived_;
};

// grid_step 0 means automatic (domain width * 1e-4) when sampling is needed;
// it is ignored on the exact path. Throws BindingError on atoms that name no
// block.
FuzzySet derive_fuzzy_set(PartitionPtr p, const ConnectiveTriple& t, ExprPtr e,
                          double grid_step = 0.0);

double fs_membership(const FuzzySet& fs, double x);

// Same-partition combination only: the partitions must be structurally equal
// and the triples identical, otherwise CrossPartitionError.
FuzzySet fs_combine(const FuzzySet& a, const FuzzySet& b, FsOp op);

// A quantity plus how it was obtained: exact piecewise-linear analysis or a
// grid scan at the recorded step.
struct MeasuredValue {
    double value;
    bool exact;
    double grid_step;  // 0 when exact
    double witness_x;  // where the defining extremum is attained
};

// Disjunctive fold of the judgement at x, in block order.
double sharpness(const VaguePartition& p, const ConnectiveTriple& t, double x);

// 1 minus the minimum sharpness over the domain. Exact for the max and
// bounded-sum disjunctions; otherwise a flagged grid scan.
MeasuredValue separation(const VaguePartition& p, const ConnectiveTriple& t,
                         double grid_step = 0.0);

// Maximum over the domain of the conjunction of two expressions.
MeasuredValue consistent_degree(const VaguePartition& p, const ConnectiveTriple& t,
                                const ExprPtr& a, const ExprPtr& b,
                                double grid_step = 0.0);

// True when the consistent degree vanishes.
bool incompatible(const VaguePartition& p, const ConnectiveTriple& t,
                  const ExprPtr& a, const ExprPtr& b, double tol = 1e-9);

}  // namespace vpart
