#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fusys/common.hpp"

namespace fusys {

// Prime field context. All matrix entries live in [0, p).
struct Fp {
  std::uint32_t p = 2;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }
  std::uint32_t neg(std::uint32_t a) const { return a ? p - a : 0; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(std::uint64_t(a) * b % p);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }
};

// Dense row-major matrix over F_p.
class FpMat {
 public:
  FpMat() = default;
  FpMat(std::size_t rows, std::size_t cols, Fp f)
      : rows_(rows), cols_(cols), f_(f), data_(rows * cols, 0) {}

  static FpMat identity(std::size_t n, Fp f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Fp field() const { return f_; }

  std::uint32_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::uint32_t* row(std::size_t r) { return data_.data() + r * cols_; }
  const std::uint32_t* row(std::size_t r) const { return data_.data() + r * cols_; }

  FpMat mul(const FpMat& rhs) const;
  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const;  // this * v
  FpMat transpose() const;
  FpMat vstack(const FpMat& below) const;
  bool operator==(const FpMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && f_.p == o.f_.p && data_ == o.data_;
  }

  void append_row(const std::vector<std::uint32_t>& r);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Fp f_;
  std::vector<std::uint32_t> data_;
};

// In-place reduced row echelon form; returns the pivot columns in order.
// The serial version is the reference; the parallel one uses OpenMP over
// the row-update loop and must produce the identical matrix (RREF is unique).
std::vector<std::size_t> fp_rref_serial(FpMat& m);
std::vector<std::size_t> fp_rref_parallel(FpMat& m);
std::vector<std::size_t> fp_rref(FpMat& m);  // dispatches on size

std::size_t fp_rank(FpMat m);

// Basis of the right kernel {x : m x = 0}, one row per basis vector.
FpMat fp_kernel(FpMat m);

// One solution x of m x = b, if any.
std::optional<std::vector<std::uint32_t>> fp_solve(FpMat m, std::vector<std::uint32_t> b);

// Incremental row-space builder: feed rows one at a time, keeping a dense
// echelon basis. Suited to tall sparse matrices streamed row by row.
class FpRowReducer {
 public:
  FpRowReducer(std::size_t ncols, Fp f) : ncols_(ncols), f_(f), pivot_row_(ncols, -1) {}

  // Reduces r against the current basis (r is clobbered); inserts the
  // residual if nonzero. Returns true if the rank grew.
  bool add_row(std::vector<std::uint32_t>& r);
  void add_sparse_row(const std::vector<std::pair<std::size_t, std::uint32_t>>& entries);

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  Fp field() const { return f_; }

  // Unique RREF of the accumulated row space.
  FpMat rref() const;

  void merge(const FpRowReducer& other);

 private:
  std::size_t ncols_;
  Fp f_;
  std::vector<std::vector<std::uint32_t>> rows_;  // echelon rows, pivot normalized to 1
  std::vector<long> pivot_row_;                   // col -> index into rows_, or -1
};

// Row space spanned by a set of vectors, held in RREF. Value-comparable.
class FpSubspace {
 public:
  FpSubspace() = default;
  explicit FpSubspace(FpMat generators);                 // rows span the space
  static FpSubspace full(std::size_t dim, Fp f);
  static FpSubspace zero(std::size_t dim, Fp f);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  const FpMat& basis() const { return basis_; }          // RREF rows
  Fp field() const { return basis_.field(); }

  bool contains(const std::vector<std::uint32_t>& v) const;
  bool contains(const FpSubspace& other) const;
  bool operator==(const FpSubspace& o) const { return basis_ == o.basis_; }

  // Coordinates of v in the RREF basis; nullopt when v is outside.
  std::optional<std::vector<std::uint32_t>> coords(const std::vector<std::uint32_t>& v) const;

  FpSubspace sum(const FpSubspace& other) const;
  FpSubspace intersect(const FpSubspace& other) const;   // Zassenhaus

 private:
  FpMat basis_;
  std::vector<std::size_t> pivots_;
};

// Quotient of F_p^D by a subspace: coordinates on the non-pivot positions.
class FpQuotient {
 public:
  FpQuotient() = default;
  FpQuotient(std::size_t ambient_dim, const FpSubspace& sub);

  std::size_t dim() const { return free_cols_.size(); }
  std::size_t ambient_dim() const { return ambient_; }

  std::vector<std::uint32_t> project(std::vector<std::uint32_t> v) const;
  std::vector<std::uint32_t> lift(std::size_t basis_index) const;  // unit vector section

 private:
  std::size_t ambient_ = 0;
  FpSubspace sub_;
  std::vector<std::size_t> free_cols_;
};

}  // namespace fusys
