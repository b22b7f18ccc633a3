#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vpart/measure.hpp"
#include "vpart/partition.hpp"
#include "vpart/plfunc.hpp"

namespace vpart {

// Which degrees the sought objects must have. Unmentioned blocks impose no
// constraint. tolerance fattens every level set symmetrically.
struct TargetVector {
    std::vector<std::pair<std::string, double>> targets;
    double tolerance = 0.0;
};

// How close one block can come to its target, for diagnosing an empty
// intersection: the nearest attainable degree and where it is attained.
struct BlockFeasibility {
    std::string name;
    double target;
    bool feasible;  // this block alone can reach the target
    double nearest_value;
    double nearest_x;
};

struct InversionResult {
    LevelSet solutions;
    std::vector<BlockFeasibility> feasibility;
};

// Objects whose judgement matches every specified target: the intersection
// of the blocks' level sets, computed exactly on the polylines. Endpoints
// are widened one ulp outward before intersecting so tangential solutions
// survive rounding; hairline pieces collapse back to points afterwards.
// Empty solutions are an answer, not an error.
// Throws invalid_argument on malformed targets, BindingError on names that
// match no block.
InversionResult invert(const VaguePartition& p, const TargetVector& targets);

// Same, with |degree - target| <= tol replacing equality. tol must be > 0.
InversionResult invert_approx(const VaguePartition& p, const TargetVector& targets,
                              double tol);

}  // namespace vpart
