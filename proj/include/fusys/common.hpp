#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fusys {

// Element index inside a finite group's multiplication table.
using elt = std::uint16_t;

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

inline void check(bool cond, const std::string& what) {
  if (!cond) throw error(what);
}

}  // namespace fusys
