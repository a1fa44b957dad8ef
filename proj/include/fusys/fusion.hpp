#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fusys/group.hpp"

namespace fusys {

// Fusion system on a finite p-group S: objects are all subgroups of S,
// morphism sets Hom_F(P,Q) stored explicitly as element maps. The base
// group is standalone (fusion induced by an ambient group is transported
// onto a localized copy of its Sylow subgroup).
class FusionSystem {
 public:
  FusionSystem(GroupPtr s, unsigned p);

  unsigned p() const { return p_; }
  const GroupPtr& S() const { return s_; }

  std::size_t num_objects() const { return objects_.size(); }
  const std::vector<Subgroup>& objects() const { return objects_; }
  const Subgroup& object(std::size_t i) const { return objects_[i]; }
  std::size_t object_index(const Subgroup& p) const;
  std::size_t full_object_index() const { return objects_.size() - 1; }

  const std::vector<GroupMono>& homs(std::size_t pi, std::size_t qi) const {
    return homs_[pi * objects_.size() + qi];
  }
  const std::vector<GroupMono>& homs(const Subgroup& p, const Subgroup& q) const {
    return homs(object_index(p), object_index(q));
  }

  // Hom_F(L,L): every mono L -> L is an automorphism.
  std::size_t aut_f_order(std::size_t li) const { return homs(li, li).size(); }
  // Aut_F(L) as a subgroup of aut.aut, where aut describes Aut(L) on the
  // localized copy of L.
  Subgroup aut_f_subgroup(std::size_t li, const AutOut& aut) const;

  // Isomorphisms in Hom_F(P,Q) (all of them when |P| = |Q|, none otherwise).
  std::vector<GroupMono> isos(std::size_t pi, std::size_t qi) const;

  // Partition of object indices into F-isomorphism classes, each sorted,
  // classes ordered by smallest member.
  std::vector<std::vector<std::size_t>> f_classes() const;
  // Classes restricted to objects abstractly isomorphic to qtype.
  std::vector<std::vector<std::size_t>> f_iso_classes_of_type(const GroupPtr& qtype) const;

  bool has_morphism(std::size_t pi, std::size_t qi, const std::vector<elt>& img) const;

  std::size_t total_morphisms() const;

  // Category axioms from the spec: inner fusion contained, closed under
  // composition, restriction, corestriction + inclusion, and inverses of
  // isomorphisms. Throws with a description on failure.
  void validate() const;

  // Mutation is only exposed to the builders in this module.
  bool insert(std::size_t pi, std::size_t qi, std::vector<elt> img);

 private:
  GroupPtr s_;
  unsigned p_;
  std::vector<Subgroup> objects_;
  std::map<std::vector<elt>, std::size_t> object_index_;
  std::vector<std::vector<GroupMono>> homs_;  // [pi * n + qi], sorted by img
};

// Hom_F(P,Q) = {c_g|_P : g in G, gPg^-1 <= Q} for S a Sylow p-subgroup of G.
FusionSystem fusion_of_group(const GroupPtr& g, const Subgroup& s, unsigned p);

// Smallest fusion system on S containing inner fusion and gens; closed
// under composition, restriction, corestriction + inclusion, inversion.
FusionSystem fusion_from_generators(const GroupPtr& s, unsigned p,
                                    const std::vector<GroupMono>& gens);

bool is_subsystem(const FusionSystem& e, const FusionSystem& f);
bool fusion_equal(const FusionSystem& e, const FusionSystem& f);

// Saturation check: every F-class must contain a fully normalized member
// that is fully automized and receptive.
struct SaturationReport {
  bool saturated = false;
  std::string detail;                    // witness description on failure
  std::optional<std::size_t> witness;    // object index
};
SaturationReport is_saturated(const FusionSystem& f);

// fusion_from_generators(S, p, union of Aut_F(L) over all L).
FusionSystem alperin_closure(const FusionSystem& f);

}  // namespace fusys
