#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "vpart/inverse.hpp"
#include "vpart/measure.hpp"
#include "vpart/partition.hpp"

namespace vpart {

// Document text that is not JSON at all; byte is the parser's offset.
struct SyntaxError : std::runtime_error {
    std::size_t byte;
    SyntaxError(std::size_t b, const std::string& what)
        : std::runtime_error(what), byte(b) {}
};

// JSON that does not match the schema; path names the offending field,
// e.g. "blocks[2].breakpoints[0]".
struct SchemaError : std::runtime_error {
    std::string path;
    SchemaError(std::string p, const std::string& what)
        : std::runtime_error(p + ": " + what), path(std::move(p)) {}
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Schema (format_version 1): concept, attribute, domain [lo, hi], blocks
// [{name, breakpoints [[x, y], ...]}], optional triple {negation, tnorm,
// tconorm} defaulting to standard/min/max. Unknown keys are rejected.
PartitionCandidate read_candidate(const std::string& text);

// read_candidate + validation. Throws ValidationError carrying the report.
PartitionPtr load_partition_text(const std::string& text, double tol = 1e-9);
PartitionPtr load_partition(const std::string& path, double tol = 1e-9);

// Canonical document text; loading it back reproduces the partition
// breakpoint for breakpoint (numbers are printed round-trip exact).
std::string partition_to_json(const VaguePartition& p);
void save_partition(const VaguePartition& p, const std::string& path);

std::string validation_report_to_json(const ValidationReport& r);
std::string space_report_to_json(const MembershipSpaceReport& r);
std::string judgement_to_json(const Judgement& j);
std::string inversion_to_json(const InversionResult& r);

}  // namespace vpart
