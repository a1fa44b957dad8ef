#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fusys/fpmat.hpp"

namespace fusys {

// Bit-packed incremental row echelon over F_2. Rows are streamed in; the
// reducer keeps an echelon basis with one pivot per column.
class F2RowReducer {
 public:
  explicit F2RowReducer(std::size_t ncols)
      : ncols_(ncols), words_((ncols + 63) / 64), pivot_row_(ncols, -1) {}

  std::size_t ncols() const { return ncols_; }
  std::size_t words() const { return words_; }
  std::size_t rank() const { return rows_.size(); }

  // r is a packed row of `words()` limbs; clobbered. True if rank grew.
  bool add_row(std::vector<std::uint64_t>& r);
  void add_sparse_row(const std::vector<std::size_t>& cols);

  void merge(const F2RowReducer& other);

  // Unique RREF of the accumulated row space, unpacked over F_2.
  FpMat rref() const;

 private:
  std::size_t ncols_, words_;
  std::vector<std::vector<std::uint64_t>> rows_;
  std::vector<long> pivot_row_;
};

// Rank of a tall sparse F_2 matrix given by a row generator: fill(i, cols)
// must append the column indices of row i into cols. The serial version is
// the reference; the parallel one reduces per-thread blocks and merges.
using SparseRowFn = std::function<void(std::size_t, std::vector<std::size_t>&)>;

std::size_t f2_stream_rank_serial(std::size_t nrows, std::size_t ncols, const SparseRowFn& fill);
std::size_t f2_stream_rank_parallel(std::size_t nrows, std::size_t ncols, const SparseRowFn& fill);
std::size_t f2_stream_rank(std::size_t nrows, std::size_t ncols, const SparseRowFn& fill);

// Same interface for odd p: entries are (col, value) pairs.
using SparseRowFnP =
    std::function<void(std::size_t, std::vector<std::pair<std::size_t, std::uint32_t>>&)>;

std::size_t fp_stream_rank_serial(std::size_t nrows, std::size_t ncols, Fp f,
                                  const SparseRowFnP& fill);
std::size_t fp_stream_rank_parallel(std::size_t nrows, std::size_t ncols, Fp f,
                                    const SparseRowFnP& fill);
std::size_t fp_stream_rank(std::size_t nrows, std::size_t ncols, Fp f, const SparseRowFnP& fill);

}  // namespace fusys
