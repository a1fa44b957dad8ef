#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "fusys/perm.hpp"

namespace fusys {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// Finite group as a dense multiplication table on element indices.
// Index 0 is the identity. Immutable after construction; the subgroup
// lattice is memoized behind a lock on first use.
class Group : public std::enable_shared_from_this<Group> {
 public:
  // Closure of permutation generators; canonical indexing is breadth-first
  // by word length with ties broken by lexicographic permutation image.
  static GroupPtr from_generators(std::string name, std::size_t npoints,
                                  std::vector<Perm> gens, std::size_t cap = 10000);
  // Table input: index 0 must be the identity; validated as a group.
  static GroupPtr from_table(std::string name, std::vector<std::vector<elt>> table);

  std::size_t order() const { return order_; }
  const std::string& name() const { return name_; }

  elt mul(elt a, elt b) const { return mult_[a * order_ + b]; }
  elt inv(elt a) const { return inv_[a]; }
  elt conj(elt x, elt a) const { return mul(mul(x, a), inv_[x]); }  // x a x^-1
  unsigned element_order(elt a) const { return elt_order_[a]; }

  bool has_perms() const { return !perms_.empty(); }
  const std::vector<Perm>& perms() const { return perms_; }
  std::string element_name(elt a) const;

  // All subgroups, canonical order (order, then element set lexicographic).
  const std::vector<class Subgroup>& subgroups() const;

  bool is_p_group(unsigned p) const;

 private:
  Group() = default;
  void finish_tables();

  std::size_t order_ = 0;
  std::vector<elt> mult_, inv_;
  std::vector<unsigned> elt_order_;
  std::vector<Perm> perms_;  // optional provenance, aligned with indices
  std::string name_;

  mutable std::once_flag subgroups_once_;
  mutable std::vector<class Subgroup> subgroups_;
};

// Subgroup as a sorted element-index set of a parent group.
class Subgroup {
 public:
  Subgroup() = default;
  Subgroup(GroupPtr parent, std::vector<elt> elems);

  const GroupPtr& parent() const { return parent_; }
  std::size_t order() const { return elems_.size(); }
  const std::vector<elt>& elems() const { return elems_; }
  elt elem(std::size_t i) const { return elems_[i]; }

  bool contains(elt x) const { return member_[x]; }
  bool contains(const Subgroup& other) const;
  std::size_t pos_of(elt x) const;  // index into elems()

  bool operator==(const Subgroup& o) const {
    return parent_ == o.parent_ && elems_ == o.elems_;
  }
  // (order, element set) — the canonical enumeration order.
  bool operator<(const Subgroup& o) const {
    if (elems_.size() != o.elems_.size()) return elems_.size() < o.elems_.size();
    return elems_ < o.elems_;
  }

 private:
  GroupPtr parent_;
  std::vector<elt> elems_;
  std::vector<char> member_;
};

// Injective homomorphism between subgroups (possibly of different parents).
// img[i] is the image of src.elems()[i] in dst.parent() numbering.
struct GroupMono {
  Subgroup src;
  Subgroup dst;
  std::vector<elt> img;

  elt apply(elt x) const { return img[src.pos_of(x)]; }
  Subgroup image() const;
  bool is_iso_onto_dst() const { return img.size() == dst.order(); }

  GroupMono restrict_to(const Subgroup& smaller_src) const;
  GroupMono corestrict() const;                       // src -> image()
  GroupMono inverse() const;                          // image() -> src, for isos
  static GroupMono compose(const GroupMono& g, const GroupMono& f);  // g after f
  static GroupMono inclusion(const Subgroup& p, const Subgroup& q);  // p <= q
  static GroupMono identity(const Subgroup& p);
  static GroupMono conjugation(const Subgroup& p, elt x, const Subgroup& into);  // c_x|_p

  bool operator==(const GroupMono& o) const {
    return src == o.src && dst == o.dst && img == o.img;
  }
  bool operator<(const GroupMono& o) const;

  void validate() const;  // homomorphism + injectivity + identity
};

// Full subgroup view of a group.
Subgroup full_subgroup(const GroupPtr& g);
Subgroup trivial_subgroup(const GroupPtr& g);

// Closure of seed elements inside parent.
Subgroup subgroup_generated(const GroupPtr& parent, const std::vector<elt>& seeds);
Subgroup conjugate_subgroup(const Subgroup& p, elt x);
Subgroup intersect(const Subgroup& a, const Subgroup& b);
// N_container(p) = {x in container : x p x^-1 = p}
Subgroup normalizer_in(const Subgroup& container, const Subgroup& p);
std::vector<elt> minimal_generating_set(const Subgroup& u);

// One representative per double coset H x K inside g_sub, minimal index first.
std::vector<elt> double_coset_reps(const Subgroup& g_sub, const Subgroup& h,
                                   const Subgroup& k);
std::vector<elt> double_coset_reps(const GroupPtr& g, const Subgroup& h, const Subgroup& k);

// All injective homomorphisms u -> h (backtracking over a minimal
// generating set, pruned by element orders and partial closure).
std::vector<GroupMono> monomorphisms(const Subgroup& u, const GroupPtr& h);

// Aut(H) as an abstract group acting on H by permutations, with Inn and Out.
struct AutOut {
  GroupPtr aut;                   // abstract automorphism group
  std::vector<Perm> action;       // action[i]: automorphism i on H's elements
  Subgroup inn;                   // subgroup of aut
  GroupPtr out;                   // quotient aut/inn
  std::vector<elt> aut_to_out;    // coset map
  std::vector<elt> out_section;   // out elt -> minimal aut coset rep
};
AutOut aut_out(const GroupPtr& h);

Subgroup sylow_subgroup(const GroupPtr& g, unsigned p);

// The subgroup as a standalone group: local indices follow the ambient
// element order, so local identity is 0. to_ambient maps local -> ambient.
struct LocalGroup {
  GroupPtr group;
  std::vector<elt> to_ambient;
  std::vector<elt> to_local;  // ambient -> local, undefined outside
};
LocalGroup localize(const Subgroup& s);

}  // namespace fusys
