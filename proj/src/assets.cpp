#include "vpart/assets.hpp"

namespace vpart::assets {

namespace {

constexpr std::string_view k_height_partition_json = R"vpart({
  "format_version": 1,
  "concept": "height",
  "attribute": "height_m",
  "domain": [0.0, 3.0],
  "blocks": [
    {
      "name": "short",
      "breakpoints": [[0.0, 1.0], [1.35, 1.0], [1.75, 0.0], [3.0, 0.0]]
    },
    {
      "name": "medium",
      "breakpoints": [[0.0, 0.0], [1.35, 0.0], [1.75, 1.0], [1.89, 1.0], [1.94, 0.0], [3.0, 0.0]]
    },
    {
      "name": "tall",
      "breakpoints": [[0.0, 0.0], [1.89, 0.0], [1.94, 1.0], [3.0, 1.0]]
    }
  ]
}
)vpart";

constexpr std::string_view k_ball_hue_partition_json = R"vpart({
  "format_version": 1,
  "concept": "ball colour",
  "attribute": "hue",
  "domain": [0.0, 1.0],
  "blocks": [
    {
      "name": "red",
      "breakpoints": [[0.0, 1.0], [0.25, 1.0], [0.75, 0.0], [1.0, 0.0]]
    },
    {
      "name": "other",
      "breakpoints": [[0.0, 0.0], [0.25, 0.0], [0.75, 1.0], [1.0, 1.0]]
    }
  ]
}
)vpart";

constexpr std::string_view k_ball_size_partition_json = R"vpart({
  "format_version": 1,
  "concept": "ball size",
  "attribute": "diameter",
  "domain": [0.0, 1.0],
  "blocks": [
    {
      "name": "small",
      "breakpoints": [[0.0, 1.0], [0.25, 1.0], [0.75, 0.0], [1.0, 0.0]]
    },
    {
      "name": "large",
      "breakpoints": [[0.0, 0.0], [0.25, 0.0], [0.75, 1.0], [1.0, 1.0]]
    }
  ]
}
)vpart";

}  // namespace

std::string_view height_partition_json() { return k_height_partition_json; }

std::string_view ball_hue_partition_json() { return k_ball_hue_partition_json; }

std::string_view ball_size_partition_json() { return k_ball_size_partition_json; }

}  // namespace vpart::assets
