#pragma once

#include "rgb2point/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace rgb2point {

// Exact 3D nearest-neighbor index. Candidates are ordered by (distance, point
// index), so equal-distance ties always resolve to the lowest index and every
// query reproduces what a linear scan over the input order would return.
template <typename Scalar>
class KdTree3 {
 public:
  struct Result {
    Eigen::Index index = -1;
    Scalar distance = std::numeric_limits<Scalar>::infinity();
  };

  KdTree3() = default;

  explicit KdTree3(const Points3<Scalar>& pts) { build(pts); }

  void build(const Points3<Scalar>& pts) {
    if (pts.rows() == 0) fail(Errc::empty_cloud, "cannot index an empty cloud");
    pts_ = pts;
    order_.resize(static_cast<std::size_t>(pts_.rows()));
    std::iota(order_.begin(), order_.end(), Eigen::Index{0});
    nodes_.clear();
    nodes_.reserve(order_.size());
    root_ = build_range(0, static_cast<Eigen::Index>(order_.size()));
  }

  Eigen::Index size() const { return pts_.rows(); }

  Result nearest(const Vec3<Scalar>& query) const {
    Result best;
    Scalar best_sq = std::numeric_limits<Scalar>::infinity();
    search(root_, query, best, best_sq);
    best.distance = std::sqrt(best_sq);
    return best;
  }

  // Squared distance to the nearest point; cheaper inner loop for metrics.
  Scalar nearest_squared(const Vec3<Scalar>& query, Eigen::Index* index = nullptr) const {
    Result best;
    Scalar best_sq = std::numeric_limits<Scalar>::infinity();
    search(root_, query, best, best_sq);
    if (index) *index = best.index;
    return best_sq;
  }

 private:
  static constexpr Eigen::Index kLeafSize = 16;

  struct Node {
    Scalar split = 0;
    int axis = -1;         // -1 marks a leaf
    Eigen::Index left = -1, right = -1;
    Eigen::Index begin = 0, end = 0;  // leaf range into order_
  };

  Eigen::Index build_range(Eigen::Index begin, Eigen::Index end) {
    Node node;
    if (end - begin <= kLeafSize) {
      node.begin = begin;
      node.end = end;
      // Leaf scan order = input order, to keep tie-breaking index-stable.
      std::sort(order_.begin() + begin, order_.begin() + end);
      nodes_.push_back(node);
      return static_cast<Eigen::Index>(nodes_.size()) - 1;
    }
    Vec3<Scalar> lo = pts_.row(order_[static_cast<std::size_t>(begin)]);
    Vec3<Scalar> hi = lo;
    for (Eigen::Index i = begin; i < end; ++i) {
      Vec3<Scalar> p = pts_.row(order_[static_cast<std::size_t>(i)]);
      lo = lo.cwiseMin(p);
      hi = hi.cwiseMax(p);
    }
    int axis = 0;
    (hi - lo).maxCoeff(&axis);
    Eigen::Index mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                     [&](Eigen::Index a, Eigen::Index b) {
                       return pts_(a, axis) < pts_(b, axis) ||
                              (pts_(a, axis) == pts_(b, axis) && a < b);
                     });
    node.axis = axis;
    node.split = pts_(order_[static_cast<std::size_t>(mid)], axis);
    nodes_.push_back(node);
    Eigen::Index self = static_cast<Eigen::Index>(nodes_.size()) - 1;
    Eigen::Index left = build_range(begin, mid);
    Eigen::Index right = build_range(mid, end);
    nodes_[static_cast<std::size_t>(self)].left = left;
    nodes_[static_cast<std::size_t>(self)].right = right;
    return self;
  }

  void search(Eigen::Index node_id, const Vec3<Scalar>& q, Result& best, Scalar& best_sq) const {
    const Node& node = nodes_[static_cast<std::size_t>(node_id)];
    if (node.axis < 0) {
      for (Eigen::Index i = node.begin; i < node.end; ++i) {
        Eigen::Index idx = order_[static_cast<std::size_t>(i)];
        Scalar d2 = (pts_.row(idx).transpose() - q).squaredNorm();
        if (d2 < best_sq || (d2 == best_sq && idx < best.index)) {
          best_sq = d2;
          best.index = idx;
        }
      }
      return;
    }
    Scalar delta = q[node.axis] - node.split;
    Eigen::Index near = delta < 0 ? node.left : node.right;
    Eigen::Index far = delta < 0 ? node.right : node.left;
    search(near, q, best, best_sq);
    // <= keeps equal-distance candidates reachable for the index tie-break.
    if (delta * delta <= best_sq) search(far, q, best, best_sq);
  }

  Points3<Scalar> pts_;
  std::vector<Eigen::Index> order_;
  std::vector<Node> nodes_;
  Eigen::Index root_ = -1;
};

}  // namespace rgb2point
