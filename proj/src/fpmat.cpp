#include "fusys/fpmat.hpp"

#include <algorithm>
#include <cstring>

#ifdef FUSYS_OPENMP
#include <omp.h>
#endif

namespace fusys {

std::uint32_t Fp::inv(std::uint32_t a) const {
  check(a != 0, "Fp::inv of zero");
  // extended Euclid
  long long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    long long q = r / nr;
    long long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

FpMat FpMat::identity(std::size_t n, Fp f) {
  FpMat m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FpMat FpMat::mul(const FpMat& rhs) const {
  check(cols_ == rhs.rows_ && f_.p == rhs.f_.p, "FpMat::mul shape/field mismatch");
  FpMat out(rows_, rhs.cols_, f_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint32_t a = at(i, k);
      if (!a) continue;
      const std::uint32_t* rr = rhs.row(k);
      std::uint32_t* ro = out.row(i);
      for (std::size_t j = 0; j < rhs.cols_; ++j)
        ro[j] = f_.add(ro[j], f_.mul(a, rr[j]));
    }
  }
  return out;
}

std::vector<std::uint32_t> FpMat::apply(const std::vector<std::uint32_t>& v) const {
  check(v.size() == cols_, "FpMat::apply size mismatch");
  std::vector<std::uint32_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    const std::uint32_t* r = row(i);
    for (std::size_t j = 0; j < cols_; ++j) acc += std::uint64_t(r[j]) * v[j] % f_.p;
    out[i] = static_cast<std::uint32_t>(acc % f_.p);
  }
  return out;
}

FpMat FpMat::transpose() const {
  FpMat out(cols_, rows_, f_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

FpMat FpMat::vstack(const FpMat& below) const {
  check(cols_ == below.cols_ && f_.p == below.f_.p, "FpMat::vstack mismatch");
  FpMat out(rows_ + below.rows_, cols_, f_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + data_.size());
  return out;
}

void FpMat::append_row(const std::vector<std::uint32_t>& r) {
  check(r.size() == cols_ || rows_ == 0, "FpMat::append_row size mismatch");
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

namespace {

template <bool Parallel>
std::vector<std::size_t> rref_impl(FpMat& m) {
  const Fp f = m.field();
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t ri = 0;
  for (std::size_t col = 0; col < nc && ri < nr; ++col) {
    std::size_t sel = nr;
    for (std::size_t i = ri; i < nr; ++i)
      if (m.at(i, col)) {
        sel = i;
        break;
      }
    if (sel == nr) continue;
    if (sel != ri)
      for (std::size_t j = col; j < nc; ++j) std::swap(m.at(ri, j), m.at(sel, j));
    const std::uint32_t pinv = f.inv(m.at(ri, col));
    if (pinv != 1)
      for (std::size_t j = col; j < nc; ++j) m.at(ri, j) = f.mul(pinv, m.at(ri, j));
    const std::uint32_t* prow = m.row(ri);
#ifdef FUSYS_OPENMP
#pragma omp parallel for schedule(static) if (Parallel && nr > 64)
#endif
    for (long long i = 0; i < static_cast<long long>(nr); ++i) {
      if (static_cast<std::size_t>(i) == ri) continue;
      const std::uint32_t v = m.at(i, col);
      if (!v) continue;
      std::uint32_t* r = m.row(i);
      const std::uint32_t c = f.neg(v);
      for (std::size_t j = col; j < nc; ++j) r[j] = f.add(r[j], f.mul(c, prow[j]));
    }
    pivots.push_back(col);
    ++ri;
  }
  return pivots;
}

}  // namespace

std::vector<std::size_t> fp_rref_serial(FpMat& m) { return rref_impl<false>(m); }
std::vector<std::size_t> fp_rref_parallel(FpMat& m) { return rref_impl<true>(m); }

std::vector<std::size_t> fp_rref(FpMat& m) {
#ifdef FUSYS_OPENMP
  if (m.rows() * m.cols() > 1u << 16) return fp_rref_parallel(m);
#endif
  return fp_rref_serial(m);
}

std::size_t fp_rank(FpMat m) { return fp_rref(m).size(); }

FpMat fp_kernel(FpMat m) {
  const std::size_t nc = m.cols();
  const Fp f = m.field();
  std::vector<std::size_t> pivots = fp_rref(m);
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  FpMat out(nc - pivots.size(), nc, f);
  std::size_t k = 0;
  for (std::size_t c = 0; c < nc; ++c) {
    if (is_pivot[c]) continue;
    out.at(k, c) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      out.at(k, pivots[i]) = f.neg(m.at(i, c));
    ++k;
  }
  return out;
}

std::optional<std::vector<std::uint32_t>> fp_solve(FpMat m, std::vector<std::uint32_t> b) {
  check(b.size() == m.rows(), "fp_solve shape mismatch");
  FpMat aug(m.rows(), m.cols() + 1, m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::copy(m.row(i), m.row(i) + m.cols(), aug.row(i));
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = fp_rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
  std::vector<std::uint32_t> x(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
  return x;
}

bool FpRowReducer::add_row(std::vector<std::uint32_t>& r) {
  check(r.size() == ncols_, "FpRowReducer row width mismatch");
  for (std::size_t c = 0; c < ncols_; ++c) {
    if (!r[c]) continue;
    long pr = pivot_row_[c];
    if (pr < 0) {
      const std::uint32_t pinv = f_.inv(r[c]);
      if (pinv != 1)
        for (std::size_t j = c; j < ncols_; ++j) r[j] = f_.mul(pinv, r[j]);
      pivot_row_[c] = static_cast<long>(rows_.size());
      rows_.push_back(std::move(r));
      r.clear();
      return true;
    }
    const std::uint32_t coef = f_.neg(r[c]);
    const std::vector<std::uint32_t>& prow = rows_[pr];
    for (std::size_t j = c; j < ncols_; ++j) r[j] = f_.add(r[j], f_.mul(coef, prow[j]));
  }
  return false;
}

void FpRowReducer::add_sparse_row(
    const std::vector<std::pair<std::size_t, std::uint32_t>>& entries) {
  std::vector<std::uint32_t> r(ncols_, 0);
  for (auto& [c, v] : entries) r[c] = f_.add(r[c], v % f_.p);
  add_row(r);
}

FpMat FpRowReducer::rref() const {
  FpMat m(rows_.size(), ncols_, f_);
  // insert rows ordered by pivot column, then back-substitute
  std::vector<std::pair<std::size_t, std::size_t>> order;  // (pivot col, row idx)
  for (std::size_t c = 0; c < ncols_; ++c)
    if (pivot_row_[c] >= 0) order.emplace_back(c, static_cast<std::size_t>(pivot_row_[c]));
  for (std::size_t i = 0; i < order.size(); ++i)
    std::copy(rows_[order[i].second].begin(), rows_[order[i].second].end(), m.row(i));
  for (std::size_t i = order.size(); i-- > 0;) {
    const std::size_t pc = order[i].first;
    for (std::size_t k = 0; k < i; ++k) {
      const std::uint32_t v = m.at(k, pc);
      if (!v) continue;
      const std::uint32_t coef = f_.neg(v);
      std::uint32_t* rk = m.row(k);
      const std::uint32_t* ri = m.row(i);
      for (std::size_t j = pc; j < ncols_; ++j) rk[j] = f_.add(rk[j], f_.mul(coef, ri[j]));
    }
  }
  return m;
}

void FpRowReducer::merge(const FpRowReducer& other) {
  check(ncols_ == other.ncols_ && f_.p == other.f_.p, "FpRowReducer::merge mismatch");
  for (const auto& row : other.rows_) {
    std::vector<std::uint32_t> r = row;
    add_row(r);
  }
}

FpSubspace::FpSubspace(FpMat generators) {
  pivots_ = fp_rref(generators);
  FpMat basis(pivots_.size(), generators.cols(), generators.field());
  for (std::size_t i = 0; i < pivots_.size(); ++i)
    std::copy(generators.row(i), generators.row(i) + generators.cols(), basis.row(i));
  basis_ = std::move(basis);
}

FpSubspace FpSubspace::full(std::size_t dim, Fp f) { return FpSubspace(FpMat::identity(dim, f)); }

FpSubspace FpSubspace::zero(std::size_t dim, Fp f) { return FpSubspace(FpMat(0, dim, f)); }

std::optional<std::vector<std::uint32_t>> FpSubspace::coords(
    const std::vector<std::uint32_t>& v) const {
  check(v.size() == basis_.cols(), "FpSubspace::coords size mismatch");
  const Fp f = basis_.field();
  std::vector<std::uint32_t> r = v, c(dim(), 0);
  for (std::size_t i = 0; i < dim(); ++i) {
    const std::uint32_t x = r[pivots_[i]];
    if (!x) continue;
    c[i] = x;
    const std::uint32_t coef = f.neg(x);
    const std::uint32_t* bi = basis_.row(i);
    for (std::size_t j = pivots_[i]; j < r.size(); ++j) r[j] = f.add(r[j], f.mul(coef, bi[j]));
  }
  for (std::uint32_t x : r)
    if (x) return std::nullopt;
  return c;
}

bool FpSubspace::contains(const std::vector<std::uint32_t>& v) const {
  return coords(v).has_value();
}

bool FpSubspace::contains(const FpSubspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i) {
    std::vector<std::uint32_t> r(other.basis_.row(i), other.basis_.row(i) + other.basis_.cols());
    if (!contains(r)) return false;
  }
  return true;
}

FpSubspace FpSubspace::sum(const FpSubspace& other) const {
  return FpSubspace(basis_.vstack(other.basis_));
}

FpSubspace FpSubspace::intersect(const FpSubspace& other) const {
  // Zassenhaus: rref of [A|A; B|0], intersection basis in the right block of
  // rows whose left block vanished.
  check(ambient_dim() == other.ambient_dim(), "FpSubspace::intersect mismatch");
  const std::size_t n = ambient_dim();
  const Fp f = basis_.field();
  FpMat z(dim() + other.dim(), 2 * n, f);
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      z.at(i, j) = basis_.at(i, j);
      z.at(i, n + j) = basis_.at(i, j);
    }
  for (std::size_t i = 0; i < other.dim(); ++i)
    for (std::size_t j = 0; j < n; ++j) z.at(dim() + i, j) = other.basis_.at(i, j);
  fp_rref(z);
  FpMat inter(0, n, f);
  for (std::size_t i = 0; i < z.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t j = 0; j < n && left_zero; ++j) left_zero = z.at(i, j) == 0;
    bool right_nonzero = false;
    for (std::size_t j = 0; j < n && !right_nonzero; ++j) right_nonzero = z.at(i, n + j) != 0;
    if (left_zero && right_nonzero) {
      std::vector<std::uint32_t> r(n);
      for (std::size_t j = 0; j < n; ++j) r[j] = z.at(i, n + j);
      inter.append_row(r);
    }
  }
  return FpSubspace(inter);
}

FpQuotient::FpQuotient(std::size_t ambient_dim, const FpSubspace& sub)
    : ambient_(ambient_dim), sub_(sub) {
  check(sub.ambient_dim() == ambient_dim || sub.dim() == 0, "FpQuotient dim mismatch");
  std::vector<bool> is_pivot(ambient_dim, false);
  for (std::size_t i = 0; i < sub.dim(); ++i) {
    const std::uint32_t* r = sub.basis().row(i);
    for (std::size_t c = 0; c < ambient_dim; ++c)
      if (r[c]) {
        is_pivot[c] = true;
        break;
      }
  }
  for (std::size_t c = 0; c < ambient_dim; ++c)
    if (!is_pivot[c]) free_cols_.push_back(c);
}

std::vector<std::uint32_t> FpQuotient::project(std::vector<std::uint32_t> v) const {
  check(v.size() == ambient_, "FpQuotient::project size mismatch");
  const Fp f = sub_.field();
  for (std::size_t i = 0; i < sub_.dim(); ++i) {
    const std::uint32_t* bi = sub_.basis().row(i);
    std::size_t pc = 0;
    while (!bi[pc]) ++pc;
    const std::uint32_t x = v[pc];
    if (!x) continue;
    const std::uint32_t coef = f.neg(x);
    for (std::size_t j = pc; j < ambient_; ++j) v[j] = f.add(v[j], f.mul(coef, bi[j]));
  }
  std::vector<std::uint32_t> out(free_cols_.size());
  for (std::size_t k = 0; k < free_cols_.size(); ++k) out[k] = v[free_cols_[k]];
  return out;
}

std::vector<std::uint32_t> FpQuotient::lift(std::size_t basis_index) const {
  std::vector<std::uint32_t> v(ambient_, 0);
  v[free_cols_[basis_index]] = 1;
  return v;
}

}  // namespace fusys
