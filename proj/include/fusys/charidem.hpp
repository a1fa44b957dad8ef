#pragma once

#include "fusys/biset.hpp"
#include "fusys/fusion.hpp"
#include "fusys/qmat.hpp"

namespace fusys {

// Basis of the subspace of QB(S,S) spanned by F-generated elements
// (support on labels whose map lies in F) that are two-sided F-stable.
struct StableSubalgebra {
  std::vector<BisetLabel> full_basis;     // transitive basis of QB(S,S)
  std::vector<BisetLabel> f_labels;       // the F-generated coordinate labels
  std::vector<BurnsideElt> basis;         // basis elements of the subalgebra
};

StableSubalgebra f_generated_stable_subalgebra(const FusionSystem& f);

// Characteristic idempotent with its certificates. All certificates are
// re-verified post hoc; construction fails hard if any does not hold.
struct CharIdem {
  BurnsideElt element;     // rational element of QB(S,S)
  unsigned p = 0;
  bool idempotent = false;
  bool f_generated = false;
  bool two_sided_stable = false;
  bool p_integral = false;
  bool unique_identity = false;
  Rational size;           // must equal |S|

  bool all_certified() const {
    return idempotent && f_generated && two_sided_stable && p_integral && unique_identity;
  }
  std::string str() const;
};

// The identity element of the F-generated two-sided F-stable subalgebra,
// found by exact linear solve; throws if the subalgebra has no identity.
CharIdem characteristic_idempotent(const FusionSystem& f);

// True iff alpha is right F-stable: alpha o [S x_(phi,P) P] agrees with
// alpha o [S x_(incl,P) P] for every P <= S and phi in Hom_F(P,S).
bool is_right_f_stable(const FusionSystem& f, const BurnsideElt& alpha);
bool is_left_f_stable(const FusionSystem& f, const BurnsideElt& alpha);
bool is_f_generated(const FusionSystem& f, const BurnsideElt& alpha);

// The (S,P)-restriction biset [S x_(phi,P) P] for phi: P -> S in F.
BurnsideElt restriction_biset(const FusionSystem& f, std::size_t pi, const GroupMono& phi,
                              const LocalGroup& ploc);

}  // namespace fusys
