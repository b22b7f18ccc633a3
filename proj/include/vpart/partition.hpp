#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vpart/connectives.hpp"
#include "vpart/plfunc.hpp"

namespace vpart {

struct BlockCandidate {
    std::string name;
    std::vector<Breakpoint> points;  // raw; value range unrestricted until validation
};

// Unvalidated input: whatever a document or generator proposes.
struct PartitionCandidate {
    std::string concept_label;
    std::string attribute;
    Interval domain{0.0, 1.0};
    std::vector<BlockCandidate> blocks;
    ConnectiveTriple triple = ConnectiveTriple::standard();
};

struct ConditionVerdict {
    bool pass = true;
    std::string detail;  // failure reason, empty when passing
    std::optional<double> witness_x;
    std::optional<std::size_t> block;  // offending block index when meaningful
};

struct SumProfile {
    double min_value, min_x;
    double max_value, max_x;
};

// checks[0] is well-formedness (block shape and [0,1] range); checks[1..5]
// are the partition conditions: positive cover, continuity, attains one,
// unimodal shape, bounded sum. When the blocks are too malformed to evaluate
// (unsorted, not spanning the domain, non-finite), conditions carry a
// "not evaluated" failure. Range violations leave the conditions evaluable.
struct ValidationReport {
    std::array<ConditionVerdict, 6> checks;
    std::optional<SumProfile> sum;  // profile of the pointwise block sum
    bool valid = false;             // every check passes
    bool regular = false;           // valid and the sum is identically 1

    const ConditionVerdict& condition(std::size_t i) const { return checks.at(i); }
};

ValidationReport validate_partition(const PartitionCandidate& c, double tol = 1e-9);

struct ValidationError : std::runtime_error {
    ValidationReport report;
    explicit ValidationError(ValidationReport r);
};

class VaguePartition;
using PartitionPtr = std::shared_ptr<const VaguePartition>;

// A validated partition of the domain into named vague blocks. Immutable.
class VaguePartition {
public:
    // Throws ValidationError carrying the full report when validation fails.
    static PartitionPtr create(const PartitionCandidate& c, double tol = 1e-9);

    const std::string& concept_label() const { return concept_; }
    const std::string& attribute() const { return attribute_; }
    const Interval& domain() const { return domain_; }
    const ConnectiveTriple& triple() const { return triple_; }
    bool regular() const { return regular_; }

    std::size_t size() const { return blocks_.size(); }
    const std::string& block_name(std::size_t i) const { return names_.at(i); }
    const PiecewiseLinearFn& block(std::size_t i) const { return blocks_.at(i); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    // Structural equality: two loads of the same document are the same
    // partition for combination purposes.
    bool operator==(const VaguePartition& other) const;

private:
    VaguePartition() = default;

    std::string concept_;
    std::string attribute_;
    Interval domain_;
    ConnectiveTriple triple_ = ConnectiveTriple::standard();
    std::vector<std::string> names_;
    std::vector<PiecewiseLinearFn> blocks_;
    bool regular_ = false;
};

PartitionCandidate to_candidate(const VaguePartition& p);

// Deterministic seeded generator: a chain of trapezoid blocks covering the
// domain. Transition windows are complementary (sum 1) or, at random, have a
// delayed rise that pulls the sum below 1 while every condition still holds,
// so roughly a third of the results come out valid but sub-regular.
PartitionPtr random_partition(std::uint64_t seed, Interval domain,
                              std::size_t n_blocks);

}  // namespace vpart
