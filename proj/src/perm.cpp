#include "fusys/perm.hpp"

#include <algorithm>

namespace fusys {

Perm Perm::from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
  Perm p = Perm::id(n);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      check(a >= 1 && a <= static_cast<int>(n) && b >= 1 && b <= static_cast<int>(n),
            "cycle point out of range");
      check(p.img[a - 1] == a - 1, "point repeated across cycles");
      p.img[a - 1] = static_cast<elt>(b - 1);
    }
  }
  return p;
}

std::string Perm::cycle_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || img[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = img[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace fusys
