#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rgb2point {

// Row-major N x 3 coordinate block; the storage behind every point cloud.
template <typename Scalar>
using Points3 = Eigen::Matrix<Scalar, Eigen::Dynamic, 3, Eigen::RowMajor>;

template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;

using Points3d = Points3<double>;
using Vec3d = Vec3<double>;

enum class Errc {
  file_missing,
  malformed_record,
  empty_cloud,
  io_failure,
  degenerate_mesh,
  cardinality_mismatch,
  solver_infeasible,
  nonpositive_threshold,
  empty_input,
  nonpositive_baseline,
  wrong_input_shape,
  missing_pretrained_weights,
  width_mismatch,
  resolution_mismatch,
  non_finite_loss,
  version_mismatch,
  corrupt_archive,
  unknown_category,
  duplicate_id,
  insufficient_points,
  unreadable_image,
  invalid_argument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

}  // namespace rgb2point
