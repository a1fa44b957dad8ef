#include "doctest.h"
#include "fusys/charidem.hpp"

using namespace fusys;

namespace {

GroupPtr sym3() {
  return Group::from_generators("S3", 3,
                                {Perm::from_cycles(3, {{1, 2, 3}}), Perm::from_cycles(3, {{1, 2}})});
}

GroupPtr sym4() {
  return Group::from_generators("S4", 4,
                                {Perm::from_cycles(4, {{1, 2, 3, 4}}), Perm::from_cycles(4, {{1, 2}})});
}

}  // namespace

TEST_CASE("inner fusion has the identity label as idempotent") {
  auto s3 = sym3();
  FusionSystem f3 = fusion_of_group(s3, sylow_subgroup(s3, 3), 3);
  GroupPtr c3 = f3.S();
  FusionSystem inner = fusion_of_group(c3, full_subgroup(c3), 3);
  CharIdem ci = characteristic_idempotent(inner);
  CHECK(ci.all_certified());
  CHECK(ci.element == BurnsideElt::from_label(identity_label(c3), RingTag::Q()));
  CHECK(ci.size == 3);
}

TEST_CASE("omega for F_C3(S3) is (1/2)([C3,id] + [C3,inv])") {
  auto s3 = sym3();
  FusionSystem f = fusion_of_group(s3, sylow_subgroup(s3, 3), 3);
  GroupPtr c3 = f.S();

  StableSubalgebra alg = f_generated_stable_subalgebra(f);
  // contains (1/2)([C3,id]+[C3,inv]): check stability directly
  BurnsideElt expected(c3, c3, RingTag::Q());
  auto basis = transitive_basis(c3, c3);
  REQUIRE(basis.size() == 3);
  expected.add_term(basis[1], Rational(1, 2));  // U = C3 classes
  expected.add_term(basis[2], Rational(1, 2));
  CHECK(is_right_f_stable(f, expected));
  CHECK(is_left_f_stable(f, expected));
  CHECK(is_f_generated(f, expected));

  CharIdem ci = characteristic_idempotent(f);
  CHECK(ci.all_certified());
  CHECK(ci.element == expected);
  CHECK(ci.size == 3);
  CHECK(ci.element.p_locally_integral(3));
  // 1/2 is invertible 3-locally but the element is visibly not integral at 2
  CHECK(!ci.element.p_locally_integral(2));
}

TEST_CASE("omega for F_D8(S4): certified, odd denominators, size 8") {
  auto s4 = sym4();
  FusionSystem f = fusion_of_group(s4, sylow_subgroup(s4, 2), 2);
  CharIdem ci = characteristic_idempotent(f);
  CHECK(ci.all_certified());
  CHECK(ci.size == 8);
  CHECK(ci.element.p_locally_integral(2));
  // genuinely different from the inner idempotent
  FusionSystem inner = fusion_of_group(f.S(), full_subgroup(f.S()), 2);
  CharIdem cii = characteristic_idempotent(inner);
  CHECK(cii.element == BurnsideElt::from_label(identity_label(f.S()), RingTag::Q()));
  CHECK(!(ci.element == cii.element));
}

TEST_CASE("omega of F_S(G) matches decompose([G])/|G:S| as a stable element") {
  // the G-biset renormalized lies in the subalgebra
  auto s3 = sym3();
  Subgroup syl = sylow_subgroup(s3, 3);
  FusionSystem f = fusion_of_group(s3, syl, 3);
  LocalGroup c3 = localize(syl);

  Biset x;
  x.left = c3.group;
  x.right = c3.group;
  x.size = s3->order();
  x.lact.resize(3 * 6);
  x.ract.resize(6 * 3);
  for (elt a = 0; a < 3; ++a)
    for (std::uint32_t pt = 0; pt < 6; ++pt)
      x.lact[a * 6 + pt] = s3->mul(c3.to_ambient[a], static_cast<elt>(pt));
  for (std::uint32_t pt = 0; pt < 6; ++pt)
    for (elt b = 0; b < 3; ++b)
      x.ract[pt * 3 + b] = s3->mul(static_cast<elt>(pt), c3.to_ambient[b]);

  BurnsideElt gbiset = decompose(x).scaled(Rational(1, 2));  // |G:S| = 2
  CHECK(is_f_generated(f, gbiset));
  CHECK(is_right_f_stable(f, gbiset));
  CHECK(is_left_f_stable(f, gbiset));
  // here [G]/|G:S| is exactly omega
  CharIdem ci = characteristic_idempotent(f);
  CHECK(ci.element == gbiset);
}

TEST_CASE("idempotent squares exactly under concrete composition") {
  auto s4 = sym4();
  FusionSystem f = fusion_of_group(s4, sylow_subgroup(s4, 2), 2);
  CharIdem ci = characteristic_idempotent(f);
  CHECK(tensor_compose(ci.element, ci.element) == ci.element);
}
