#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace fusys {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

// True when the (reduced) denominator is coprime to p.
inline bool p_locally_integral(const Rational& r, unsigned p) {
  return den(r) % p != 0;
}

// Image of r in F_p; requires the denominator to be a unit mod p.
inline std::uint32_t reduce_mod_p(const Rational& r, std::uint32_t p) {
  BigInt n = num(r) % p, d = den(r) % p;
  if (n < 0) n += p;
  if (d < 0) d += p;
  if (d == 0) throw std::runtime_error("reduce_mod_p: denominator divisible by p");
  // d^(p-2) mod p
  std::uint64_t dv = d.convert_to<std::uint64_t>(), inv = 1, base = dv;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(n.convert_to<std::uint64_t>() * inv % p);
}

}  // namespace fusys
