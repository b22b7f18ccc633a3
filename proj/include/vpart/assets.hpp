#pragma once

#include <string_view>

// Bundled partition documents, byte-identical to the files under data/, so
// the demos run without any files on disk.
namespace vpart::assets {

std::string_view height_partition_json();
std::string_view ball_hue_partition_json();
std::string_view ball_size_partition_json();

}  // namespace vpart::assets
