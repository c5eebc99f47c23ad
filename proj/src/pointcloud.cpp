#include "rgb2point/pointcloud.hpp"

namespace rgb2point {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::file_missing: return "file-missing";
    case Errc::malformed_record: return "malformed-record";
    case Errc::empty_cloud: return "empty-cloud";
    case Errc::io_failure: return "io-failure";
    case Errc::degenerate_mesh: return "degenerate-mesh";
    case Errc::cardinality_mismatch: return "cardinality-mismatch";
    case Errc::solver_infeasible: return "solver-infeasible";
    case Errc::nonpositive_threshold: return "nonpositive-threshold";
    case Errc::empty_input: return "empty-input";
    case Errc::nonpositive_baseline: return "nonpositive-baseline";
    case Errc::wrong_input_shape: return "wrong-input-shape";
    case Errc::missing_pretrained_weights: return "missing-pretrained-weights";
    case Errc::width_mismatch: return "width-mismatch";
    case Errc::resolution_mismatch: return "resolution-mismatch";
    case Errc::non_finite_loss: return "non-finite-loss";
    case Errc::version_mismatch: return "version-mismatch";
    case Errc::corrupt_archive: return "corrupt-archive";
    case Errc::unknown_category: return "unknown-category";
    case Errc::duplicate_id: return "duplicate-id";
    case Errc::insufficient_points: return "insufficient-points";
    case Errc::unreadable_image: return "unreadable-image";
    case Errc::invalid_argument: return "invalid-argument";
  }
  return "unknown-error";
}

void validate(const PointCloud& cloud, const std::string& context) {
  if (cloud.points.rows() == 0) fail(Errc::empty_cloud, context);
  if (!cloud.points.allFinite())
    fail(Errc::malformed_record, context + ": cloud contains non-finite coordinates");
}

std::pair<PointCloud, NormalizationSpec> normalize(const PointCloud& cloud,
                                                   NormalizationMode mode) {
  validate(cloud, "normalize");
  NormalizationSpec spec;
  spec.mode = mode;
  if (mode == NormalizationMode::none) return {cloud, spec};

  spec.offset = cloud.points.colwise().mean().transpose();
  Points3d centered = cloud.points.rowwise() - spec.offset.transpose();

  double extent = 0.0;
  if (mode == NormalizationMode::unit_sphere_centered) {
    extent = centered.rowwise().norm().maxCoeff();
  } else {
    extent = 2.0 * centered.cwiseAbs().maxCoeff();
  }
  spec.scale = extent > 0.0 ? 1.0 / extent : 1.0;

  PointCloud out = cloud;
  out.points = centered * spec.scale;
  return {out, spec};
}

NearestNeighbor nearest_neighbor(const Vec3d& x, const PointCloud& P) {
  validate(P, "nearest_neighbor");
  KdTree3<double> tree(P.points);
  auto res = tree.nearest(x);
  return {P.points.row(res.index).transpose(), res.distance, res.index};
}

const char* normalization_mode_name(NormalizationMode mode) {
  switch (mode) {
    case NormalizationMode::unit_sphere_centered: return "unit-sphere-centered";
    case NormalizationMode::unit_cube_centered: return "unit-cube-centered";
    case NormalizationMode::none: return "none";
  }
  return "none";
}

NormalizationMode normalization_mode_from_name(const std::string& name) {
  if (name == "unit-sphere-centered") return NormalizationMode::unit_sphere_centered;
  if (name == "unit-cube-centered") return NormalizationMode::unit_cube_centered;
  if (name == "none") return NormalizationMode::none;
  fail(Errc::invalid_argument, "unknown normalization mode: " + name);
}

}  // namespace rgb2point
