#pragma once

#include <string>
#include <vector>

#include "fusys/common.hpp"

namespace fusys {

// Permutation of {0, .., n-1}, stored as the image vector.
struct Perm {
  std::vector<elt> img;

  static Perm id(std::size_t n) {
    Perm p;
    p.img.resize(n);
    for (std::size_t i = 0; i < n; ++i) p.img[i] = static_cast<elt>(i);
    return p;
  }

  // Cycles use 1-based points, e.g. {{1,2,3},{4,5}}.
  static Perm from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles);

  std::size_t degree() const { return img.size(); }
  elt operator()(elt x) const { return img[x]; }
  bool is_identity() const {
    for (std::size_t i = 0; i < img.size(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  // (a * b)(x) = a(b(x)); b is applied first.
  Perm operator*(const Perm& b) const {
    check(degree() == b.degree(), "Perm compose degree mismatch");
    Perm r;
    r.img.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) r.img[i] = img[b.img[i]];
    return r;
  }

  Perm inverse() const {
    Perm r;
    r.img.resize(degree());
    for (std::size_t i = 0; i < degree(); ++i) r.img[img[i]] = static_cast<elt>(i);
    return r;
  }

  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }

  std::string cycle_string() const;  // 1-based, "()" for the identity
};

}  // namespace fusys
