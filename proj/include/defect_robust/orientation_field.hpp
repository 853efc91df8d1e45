#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <stdexcept>

#include "defect_robust/angles.hpp"

namespace defect_robust {

/// Rectangular grid of orientation angles. Vertex (i, j) sits at field
/// coordinates (i h, j h); storage is row-major with row j = y.
template <typename Scalar>
class BasicOrientationField {
 public:
  using AngleArray = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  BasicOrientationField(int nx, int ny, Scalar h = Scalar(1),
                        PeriodMode mode = PeriodMode::Nematic)
      : h_(h), mode_(mode), angles_(AngleArray::Zero(ny, nx)) {
    if (nx < 2 || ny < 2) throw std::invalid_argument("field must be at least 2x2");
    if (!(h > Scalar(0)) || !std::isfinite(h))
      throw std::invalid_argument("grid spacing must be positive");
  }

  /// Takes ny x nx raw angles and canonicalizes them.
  BasicOrientationField(const AngleArray& raw, Scalar h, PeriodMode mode)
      : BasicOrientationField(static_cast<int>(raw.cols()), static_cast<int>(raw.rows()), h,
                              mode) {
    for (Eigen::Index j = 0; j < raw.rows(); ++j)
      for (Eigen::Index i = 0; i < raw.cols(); ++i) angles_(j, i) = canonicalize(raw(j, i), mode);
  }

  int nx() const { return static_cast<int>(angles_.cols()); }
  int ny() const { return static_cast<int>(angles_.rows()); }
  Scalar h() const { return h_; }
  PeriodMode mode() const { return mode_; }
  std::size_t size() const { return static_cast<std::size_t>(angles_.size()); }

  bool contains(int i, int j) const { return i >= 0 && j >= 0 && i < nx() && j < ny(); }

  Scalar operator()(int i, int j) const { return angles_(j, i); }

  /// Stores the canonical representative of `angle`.
  void set(int i, int j, Scalar angle) { angles_(j, i) = canonicalize(angle, mode_); }

  /// Flattened row-major index of vertex (i, j).
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * static_cast<std::size_t>(nx()) +
           static_cast<std::size_t>(i);
  }

  const AngleArray& angles() const { return angles_; }

  bool operator==(const BasicOrientationField& o) const {
    return h_ == o.h_ && mode_ == o.mode_ && angles_.rows() == o.angles_.rows() &&
           angles_.cols() == o.angles_.cols() && (angles_ == o.angles_).all();
  }

 private:
  Scalar h_;
  PeriodMode mode_;
  AngleArray angles_;
};

using OrientationField = BasicOrientationField<double>;

}  // namespace defect_robust
