#pragma once

#include "rgb2point/pointcloud.hpp"

#include <filesystem>

namespace rgb2point {

enum class CloudFormat { ply_ascii, xyz_text };

// Reads a PLY (ASCII or binary-little-endian) or whitespace-separated XYZ
// text file. The format is chosen by sniffing the first bytes, not the
// extension. Points come back in file order.
PointCloud load_cloud(const std::filesystem::path& path);

// Writes ASCII PLY with float x/y/z vertex properties, or one "x y z" line
// per point. Round-trips through load_cloud to within 1e-6 per coordinate.
void save_cloud(const PointCloud& cloud, const std::filesystem::path& path,
                CloudFormat format = CloudFormat::ply_ascii);

}  // namespace rgb2point
