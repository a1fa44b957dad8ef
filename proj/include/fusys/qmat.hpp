#pragma once

#include <optional>
#include <vector>

#include "fusys/common.hpp"
#include "fusys/rational.hpp"

namespace fusys {

// Dense matrix over the exact rationals.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  QMat mul(const QMat& rhs) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  QMat vstack(const QMat& below) const;
  void append_row(const std::vector<Rational>& r);
  bool operator==(const QMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

std::vector<std::size_t> q_rref(QMat& m);
std::size_t q_rank(QMat m);
QMat q_kernel(QMat m);  // rows span {x : m x = 0}
std::optional<std::vector<Rational>> q_solve(QMat m, std::vector<Rational> b);

// Row space in RREF over Q.
class QSubspace {
 public:
  QSubspace() = default;
  explicit QSubspace(QMat generators);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  const QMat& basis() const { return basis_; }

  bool contains(const std::vector<Rational>& v) const;
  std::optional<std::vector<Rational>> coords(const std::vector<Rational>& v) const;
  bool operator==(const QSubspace& o) const { return basis_ == o.basis_; }

 private:
  QMat basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace fusys
