#include "fusys/qmat.hpp"

#include <algorithm>

namespace fusys {

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::mul(const QMat& rhs) const {
  check(cols_ == rhs.rows_, "QMat::mul shape mismatch");
  QMat out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

std::vector<Rational> QMat::apply(const std::vector<Rational>& v) const {
  check(v.size() == cols_, "QMat::apply size mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * v[j];
  return out;
}

QMat QMat::vstack(const QMat& below) const {
  check(cols_ == below.cols_, "QMat::vstack mismatch");
  QMat out(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), out.data_.begin() + data_.size());
  return out;
}

void QMat::append_row(const std::vector<Rational>& r) {
  check(r.size() == cols_ || rows_ == 0, "QMat::append_row size mismatch");
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

std::vector<std::size_t> q_rref(QMat& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t ri = 0;
  for (std::size_t col = 0; col < nc && ri < nr; ++col) {
    std::size_t sel = nr;
    for (std::size_t i = ri; i < nr; ++i)
      if (m.at(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel == nr) continue;
    if (sel != ri)
      for (std::size_t j = col; j < nc; ++j) std::swap(m.at(ri, j), m.at(sel, j));
    const Rational pinv = 1 / m.at(ri, col);
    if (pinv != 1)
      for (std::size_t j = col; j < nc; ++j) m.at(ri, j) *= pinv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == ri || m.at(i, col) == 0) continue;
      const Rational c = m.at(i, col);
      for (std::size_t j = col; j < nc; ++j) m.at(i, j) -= c * m.at(ri, j);
    }
    pivots.push_back(col);
    ++ri;
  }
  return pivots;
}

std::size_t q_rank(QMat m) { return q_rref(m).size(); }

QMat q_kernel(QMat m) {
  const std::size_t nc = m.cols();
  std::vector<std::size_t> pivots = q_rref(m);
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  QMat out(nc - pivots.size(), nc);
  std::size_t k = 0;
  for (std::size_t c = 0; c < nc; ++c) {
    if (is_pivot[c]) continue;
    out.at(k, c) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) out.at(k, pivots[i]) = -m.at(i, c);
    ++k;
  }
  return out;
}

std::optional<std::vector<Rational>> q_solve(QMat m, std::vector<Rational> b) {
  check(b.size() == m.rows(), "q_solve shape mismatch");
  QMat aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  std::vector<std::size_t> pivots = q_rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, m.cols());
  return x;
}

QSubspace::QSubspace(QMat generators) {
  pivots_ = q_rref(generators);
  QMat basis(pivots_.size(), generators.cols());
  for (std::size_t i = 0; i < pivots_.size(); ++i)
    for (std::size_t j = 0; j < generators.cols(); ++j) basis.at(i, j) = generators.at(i, j);
  basis_ = std::move(basis);
}

std::optional<std::vector<Rational>> QSubspace::coords(const std::vector<Rational>& v) const {
  check(v.size() == basis_.cols(), "QSubspace::coords size mismatch");
  std::vector<Rational> r = v, c(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Rational x = r[pivots_[i]];
    if (x == 0) continue;
    c[i] = x;
    for (std::size_t j = pivots_[i]; j < r.size(); ++j) r[j] -= x * basis_.at(i, j);
  }
  for (const Rational& x : r)
    if (x != 0) return std::nullopt;
  return c;
}

bool QSubspace::contains(const std::vector<Rational>& v) const { return coords(v).has_value(); }

}  // namespace fusys
