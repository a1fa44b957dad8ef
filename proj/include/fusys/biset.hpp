#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fusys/group.hpp"
#include "fusys/rational.hpp"

namespace fusys {

// Coefficient ring: exact rationals or a prime field. F_p coefficients are
// kept as reduced rationals with denominator 1 and numerator in [0, p).
struct RingTag {
  bool rational = true;
  std::uint32_t p = 0;

  static RingTag Q() { return RingTag{true, 0}; }
  static RingTag mod(std::uint32_t p) { return RingTag{false, p}; }
  bool operator==(const RingTag& o) const { return rational == o.rational && p == o.p; }
  std::string str() const { return rational ? "Q" : "F" + std::to_string(p); }
};

// Transitive bifree (H,G)-biset H x_{(phi,U)} G: U <= G, phi: U -> H mono.
// Stored as the minimum of its equivalence class under
// (U, phi) ~ (xUx^-1, c_h o phi o c_{x^-1}), ordered by (|U|, U, phi).
struct BisetLabel {
  GroupPtr left;            // H
  GroupPtr right;           // G
  std::vector<elt> u;       // subgroup of G, sorted
  std::vector<elt> phi;     // phi[i] = image of u[i] in H

  bool operator<(const BisetLabel& o) const {
    if (u.size() != o.u.size()) return u.size() < o.u.size();
    if (u != o.u) return u < o.u;
    return phi < o.phi;
  }
  bool operator==(const BisetLabel& o) const {
    return left == o.left && right == o.right && u == o.u && phi == o.phi;
  }
  std::size_t biset_size() const { return left->order() * right->order() / u.size(); }
  std::string str() const;
};

BisetLabel canonical_label(const GroupPtr& left, const GroupPtr& right, std::vector<elt> u,
                           std::vector<elt> phi);
BisetLabel identity_label(const GroupPtr& g);

// All transitive bifree classes, canonical and sorted.
std::vector<BisetLabel> transitive_basis(const GroupPtr& left, const GroupPtr& right);

// Concrete biset with explicit action tables.
struct Biset {
  GroupPtr left, right;
  std::size_t size = 0;
  std::vector<std::uint32_t> lact;  // |H| x size
  std::vector<std::uint32_t> ract;  // size x |G|

  std::uint32_t lapply(elt h, std::uint32_t x) const { return lact[h * size + x]; }
  std::uint32_t rapply(std::uint32_t x, elt g) const { return ract[x * right->order() + g]; }
  bool is_bifree() const;
  Biset opposite() const;  // the (G,H)-biset with inverted actions
};

Biset realize(const BisetLabel& label);

// Formal k-linear combination of transitive classes in kB(H,G).
class BurnsideElt {
 public:
  BurnsideElt() = default;
  BurnsideElt(GroupPtr left, GroupPtr right, RingTag ring)
      : left_(std::move(left)), right_(std::move(right)), ring_(ring) {}
  static BurnsideElt from_label(const BisetLabel& l, RingTag ring, const Rational& c = 1);

  const GroupPtr& left() const { return left_; }
  const GroupPtr& right() const { return right_; }
  RingTag ring() const { return ring_; }
  const std::map<BisetLabel, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const BisetLabel& l, const Rational& c);
  BurnsideElt operator+(const BurnsideElt& o) const;
  BurnsideElt operator-(const BurnsideElt& o) const;
  BurnsideElt scaled(const Rational& c) const;
  bool operator==(const BurnsideElt& o) const;

  // Total size sum c_i * |H||G|/|U_i| (rational).
  Rational total_size() const;
  bool p_locally_integral(std::uint32_t p) const;
  BurnsideElt reduced_mod(std::uint32_t p) const;  // to the F_p ring
  BurnsideElt opposite() const;

  std::string str() const;

 private:
  GroupPtr left_, right_;
  RingTag ring_;
  std::map<BisetLabel, Rational> terms_;
};

// Orbit decomposition of a bifree biset into the transitive basis.
BurnsideElt decompose(const Biset& x, RingTag ring = RingTag::Q());

// beta o alpha: composition kB(K,H) x kB(H,G) -> kB(K,G) via the concrete
// tensor product Y x_H X (H-orbits of Y x X).
BurnsideElt tensor_compose(const BurnsideElt& beta, const BurnsideElt& alpha);

// kBbar(G,H) = kB(G,H) / I(G,H): basis given by the labels with U = H
// (monos H -> G up to conjugacy); projection kills proper-U labels.
struct BbarModule {
  GroupPtr left, right;  // bar of kB(left, right)
  RingTag ring;
  std::vector<BisetLabel> basis;
  std::map<BisetLabel, std::size_t> index;

  std::size_t dim() const { return basis.size(); }
  std::vector<Rational> project(const BurnsideElt& e) const;
  BurnsideElt lift(std::size_t i) const { return BurnsideElt::from_label(basis[i], ring); }
};

BbarModule bbar_module(const GroupPtr& left, const GroupPtr& right, RingTag ring);

// The algebra iso kBbar(H,H) = kOut(H): label class -> out element.
elt bbar_label_to_out(const BisetLabel& l, const AutOut& aut);
BisetLabel out_to_bbar_label(elt out_elt, const AutOut& aut, const GroupPtr& h);

}  // namespace fusys
