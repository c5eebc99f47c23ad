#pragma once

#include "rgb2point/core.hpp"
#include "rgb2point/kdtree.hpp"

#include <string>
#include <utility>

namespace rgb2point {

// Ordered set of 3D points in unitless model coordinates. Point order is
// significant: file IO and subsampling preserve it.
struct PointCloud {
  Points3d points;      // n x 3, n >= 1 for a valid cloud
  std::string category;
  std::string id;

  Eigen::Index size() const { return points.rows(); }

  static PointCloud from_points(Points3d pts, std::string category = {}, std::string id = {}) {
    PointCloud c;
    c.points = std::move(pts);
    c.category = std::move(category);
    c.id = std::move(id);
    return c;
  }
};

// Throws unless the cloud is nonempty with all-finite coordinates.
void validate(const PointCloud& cloud, const std::string& context);

enum class NormalizationMode { unit_sphere_centered, unit_cube_centered, none };

// Records the affine map applied by normalize(): y = (x - offset) * scale.
struct NormalizationSpec {
  NormalizationMode mode = NormalizationMode::none;
  Vec3d offset = Vec3d::Zero();
  double scale = 1.0;

  Points3d apply(const Points3d& pts) const {
    return (pts.rowwise() - offset.transpose()) * scale;
  }
  Points3d invert(const Points3d& pts) const {
    return (pts / scale).rowwise() + offset.transpose();
  }
};

// Centers the cloud and rescales per mode:
//   unit_sphere_centered: centroid at origin, max point norm 1
//   unit_cube_centered:   centroid at origin, max |coordinate| 1/2
// A cloud of identical points has no defined scale; it is centered with scale 1.
std::pair<PointCloud, NormalizationSpec> normalize(const PointCloud& cloud,
                                                   NormalizationMode mode);

// Exact nearest neighbor of x in P (the arg-min over P of the Euclidean
// distance), ties resolved to the lowest point index.
struct NearestNeighbor {
  Vec3d point;
  double distance;
  Eigen::Index index;
};

NearestNeighbor nearest_neighbor(const Vec3d& x, const PointCloud& P);

const char* normalization_mode_name(NormalizationMode mode);
NormalizationMode normalization_mode_from_name(const std::string& name);

}  // namespace rgb2point
