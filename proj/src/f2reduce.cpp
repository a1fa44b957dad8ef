#include "fusys/f2reduce.hpp"

#include <bit>

#ifdef FUSYS_OPENMP
#include <omp.h>
#endif

namespace fusys {

namespace {

inline long leading_bit(const std::vector<std::uint64_t>& r) {
  for (std::size_t w = 0; w < r.size(); ++w)
    if (r[w]) return static_cast<long>(w * 64 + std::countr_zero(r[w]));
  return -1;
}

inline void xor_into(std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                     std::size_t from_word) {
  for (std::size_t w = from_word; w < a.size(); ++w) a[w] ^= b[w];
}

}  // namespace

bool F2RowReducer::add_row(std::vector<std::uint64_t>& r) {
  for (;;) {
    const long lead = leading_bit(r);
    if (lead < 0) return false;
    const long pr = pivot_row_[lead];
    if (pr < 0) {
      pivot_row_[lead] = static_cast<long>(rows_.size());
      rows_.push_back(std::move(r));
      r.assign(words_, 0);
      return true;
    }
    xor_into(r, rows_[pr], static_cast<std::size_t>(lead) / 64);
  }
}

void F2RowReducer::add_sparse_row(const std::vector<std::size_t>& cols) {
  std::vector<std::uint64_t> r(words_, 0);
  for (std::size_t c : cols) r[c / 64] ^= 1ull << (c % 64);
  add_row(r);
}

void F2RowReducer::merge(const F2RowReducer& other) {
  check(ncols_ == other.ncols_, "F2RowReducer::merge width mismatch");
  for (const auto& row : other.rows_) {
    std::vector<std::uint64_t> r = row;
    add_row(r);
  }
}

FpMat F2RowReducer::rref() const {
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t c = 0; c < ncols_; ++c)
    if (pivot_row_[c] >= 0) order.emplace_back(c, static_cast<std::size_t>(pivot_row_[c]));
  std::vector<std::vector<std::uint64_t>> rs;
  rs.reserve(order.size());
  for (auto& [c, ri] : order) rs.push_back(rows_[ri]);
  for (std::size_t i = order.size(); i-- > 0;) {
    const std::size_t pc = order[i].first;
    for (std::size_t k = 0; k < i; ++k)
      if (rs[k][pc / 64] >> (pc % 64) & 1) xor_into(rs[k], rs[i], pc / 64);
  }
  FpMat m(order.size(), ncols_, Fp{2});
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t c = 0; c < ncols_; ++c) m.at(i, c) = rs[i][c / 64] >> (c % 64) & 1;
  return m;
}

std::size_t f2_stream_rank_serial(std::size_t nrows, std::size_t ncols, const SparseRowFn& fill) {
  F2RowReducer red(ncols);
  std::vector<std::size_t> cols;
  std::vector<std::uint64_t> r(red.words(), 0);
  for (std::size_t i = 0; i < nrows; ++i) {
    cols.clear();
    fill(i, cols);
    std::fill(r.begin(), r.end(), 0);
    for (std::size_t c : cols) r[c / 64] ^= 1ull << (c % 64);
    red.add_row(r);
    r.assign(red.words(), 0);
  }
  return red.rank();
}

std::size_t f2_stream_rank_parallel(std::size_t nrows, std::size_t ncols, const SparseRowFn& fill) {
#ifndef FUSYS_OPENMP
  return f2_stream_rank_serial(nrows, ncols, fill);
#else
  const int nt = std::max(1, omp_get_max_threads());
  std::vector<F2RowReducer> local(nt, F2RowReducer(ncols));
#pragma omp parallel num_threads(nt)
  {
    const int tid = omp_get_thread_num();
    F2RowReducer& red = local[tid];
    std::vector<std::size_t> cols;
    std::vector<std::uint64_t> r(red.words(), 0);
#pragma omp for schedule(static)
    for (long long i = 0; i < static_cast<long long>(nrows); ++i) {
      cols.clear();
      fill(static_cast<std::size_t>(i), cols);
      std::fill(r.begin(), r.end(), 0);
      for (std::size_t c : cols) r[c / 64] ^= 1ull << (c % 64);
      red.add_row(r);
      r.assign(red.words(), 0);
    }
  }
  for (int t = 1; t < nt; ++t) local[0].merge(local[t]);
  return local[0].rank();
#endif
}

std::size_t f2_stream_rank(std::size_t nrows, std::size_t ncols, const SparseRowFn& fill) {
#ifdef FUSYS_OPENMP
  if (nrows > 4096) return f2_stream_rank_parallel(nrows, ncols, fill);
#endif
  return f2_stream_rank_serial(nrows, ncols, fill);
}

std::size_t fp_stream_rank_serial(std::size_t nrows, std::size_t ncols, Fp f,
                                  const SparseRowFnP& fill) {
  FpRowReducer red(ncols, f);
  std::vector<std::pair<std::size_t, std::uint32_t>> entries;
  for (std::size_t i = 0; i < nrows; ++i) {
    entries.clear();
    fill(i, entries);
    red.add_sparse_row(entries);
  }
  return red.rank();
}

std::size_t fp_stream_rank_parallel(std::size_t nrows, std::size_t ncols, Fp f,
                                    const SparseRowFnP& fill) {
#ifndef FUSYS_OPENMP
  return fp_stream_rank_serial(nrows, ncols, f, fill);
#else
  const int nt = std::max(1, omp_get_max_threads());
  std::vector<FpRowReducer> local(nt, FpRowReducer(ncols, f));
#pragma omp parallel num_threads(nt)
  {
    const int tid = omp_get_thread_num();
    FpRowReducer& red = local[tid];
    std::vector<std::pair<std::size_t, std::uint32_t>> entries;
#pragma omp for schedule(static)
    for (long long i = 0; i < static_cast<long long>(nrows); ++i) {
      entries.clear();
      fill(static_cast<std::size_t>(i), entries);
      red.add_sparse_row(entries);
    }
  }
  for (int t = 1; t < nt; ++t) local[0].merge(local[t]);
  return local[0].rank();
#endif
}

std::size_t fp_stream_rank(std::size_t nrows, std::size_t ncols, Fp f, const SparseRowFnP& fill) {
#ifdef FUSYS_OPENMP
  if (nrows > 4096) return fp_stream_rank_parallel(nrows, ncols, f, fill);
#endif
  return fp_stream_rank_serial(nrows, ncols, f, fill);
}

}  // namespace fusys
