#include <algorithm>
#include <set>

#include "doctest.h"
#include "fusys/group.hpp"

using namespace fusys;

namespace {

GroupPtr cyclic(int n) {
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = i + 1;
  return Group::from_generators("C" + std::to_string(n), n, {Perm::from_cycles(n, {cyc})});
}

GroupPtr sym3() {
  return Group::from_generators("S3", 3,
                                {Perm::from_cycles(3, {{1, 2, 3}}), Perm::from_cycles(3, {{1, 2}})});
}

GroupPtr dih8() {
  return Group::from_generators(
      "D8", 4, {Perm::from_cycles(4, {{1, 2, 3, 4}}), Perm::from_cycles(4, {{1, 3}})});
}

GroupPtr quat8() {
  return Group::from_generators("Q8", 8,
                                {Perm::from_cycles(8, {{1, 2, 3, 4}, {5, 6, 7, 8}}),
                                 Perm::from_cycles(8, {{1, 5, 3, 7}, {2, 8, 4, 6}})});
}

GroupPtr sym4() {
  return Group::from_generators("S4", 4,
                                {Perm::from_cycles(4, {{1, 2, 3, 4}}), Perm::from_cycles(4, {{1, 2}})});
}

// Brute-force oracle: count subgroups by testing every subset closure of
// small groups via element pairs. Only feasible for |G| <= 16ish.
std::size_t subgroup_count_oracle(const GroupPtr& g) {
  std::set<std::vector<elt>> subs;
  const std::size_t n = g->order();
  // every subgroup is generated by at most log2|G| elements; for the desk
  // sizes here two generators plus closure over all pairs of elements and
  // singletons suffices only for special cases, so use full subset scan for
  // tiny groups and generator pairs/triples otherwise.
  std::vector<std::vector<elt>> seeds;
  for (elt a = 0; a < n; ++a) {
    seeds.push_back({a});
    for (elt b = a; b < n; ++b) {
      seeds.push_back({a, b});
      for (elt c = b; c < n; ++c) seeds.push_back({a, b, c});
    }
  }
  for (auto& s : seeds) subs.insert(subgroup_generated(g, s).elems());
  return subs.size();
}

// Brute-force oracle: all bijections of H fixing products (only for tiny H).
std::size_t automorphism_count_oracle(const GroupPtr& h) {
  const std::size_t n = h->order();
  std::vector<elt> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<elt>(i);
  std::size_t count = 0;
  std::sort(perm.begin(), perm.end());
  do {
    if (perm[0] != 0) continue;
    bool hom = true;
    for (elt a = 0; a < n && hom; ++a)
      for (elt b = 0; b < n && hom; ++b) hom = perm[h->mul(a, b)] == h->mul(perm[a], perm[b]);
    if (hom) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST_CASE("closure enumeration: orders") {
  CHECK(Group::from_generators("C2", 2, {Perm::from_cycles(2, {{1, 2}})})->order() == 2);
  CHECK(sym3()->order() == 6);
  CHECK(dih8()->order() == 8);
  CHECK(quat8()->order() == 8);
  CHECK(sym4()->order() == 24);
  // Q8 signature: a unique involution
  auto q8 = quat8();
  int involutions = 0;
  for (elt a = 0; a < q8->order(); ++a)
    if (q8->element_order(a) == 2) ++involutions;
  CHECK(involutions == 1);
}

TEST_CASE("closure cap is enforced") {
  CHECK_THROWS_AS(Group::from_generators("S4", 4,
                                         {Perm::from_cycles(4, {{1, 2, 3, 4}}),
                                          Perm::from_cycles(4, {{1, 2}})},
                                         10),
                  error);
}

TEST_CASE("table constructor validates") {
  // C2 x C2 table
  std::vector<std::vector<elt>> v4 = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  CHECK(Group::from_table("V4", v4)->order() == 4);
  std::vector<std::vector<elt>> bad = {{0, 1}, {1, 1}};
  CHECK_THROWS(Group::from_table("bad", bad));
  // associativity failure: a Latin square with identity that is not a group
  std::vector<std::vector<elt>> nonassoc = {{0, 1, 2, 3, 4},
                                            {1, 0, 3, 4, 2},
                                            {2, 4, 0, 1, 3},
                                            {3, 2, 4, 0, 1},
                                            {4, 3, 1, 2, 0}};
  CHECK_THROWS_WITH_AS(Group::from_table("na", nonassoc), "table is not associative", error);
}

TEST_CASE("subgroup enumeration counts") {
  CHECK(cyclic(2)->subgroups().size() == 2);
  CHECK(sym3()->subgroups().size() == 6);
  CHECK(dih8()->subgroups().size() == 10);
  CHECK(subgroup_count_oracle(sym3()) == 6);
  CHECK(subgroup_count_oracle(dih8()) == 10);
  CHECK(quat8()->subgroups().size() == subgroup_count_oracle(quat8()));
  // canonical order: sizes ascending, trivial first, full group last
  const auto& subs = sym3()->subgroups();
  CHECK(subs.front().order() == 1);
  CHECK(subs.back().order() == 6);
  CHECK(std::is_sorted(subs.begin(), subs.end(), std::less<Subgroup>()));
}

TEST_CASE("double cosets partition the group") {
  auto s3 = sym3();
  // <(1 2)> is generated by the first transposition found in the table
  Subgroup h = [&] {
    for (const Subgroup& s : s3->subgroups())
      if (s.order() == 2) return s;
    throw error("no C2");
  }();
  auto reps = double_coset_reps(s3, h, h);
  CHECK(reps.size() == 2);

  // |HxK| = |H||K|/|H n xKx^-1| and the cosets cover G
  for (const Subgroup& h2 : s3->subgroups())
    for (const Subgroup& k2 : s3->subgroups()) {
      auto rr = double_coset_reps(s3, h2, k2);
      std::size_t total = 0;
      for (elt x : rr) {
        Subgroup xk = conjugate_subgroup(k2, x);
        total += h2.order() * k2.order() / intersect(h2, xk).order();
      }
      CHECK(total == s3->order());
    }

  CHECK(double_coset_reps(s3, full_subgroup(s3), full_subgroup(s3)).size() == 1);
  CHECK(double_coset_reps(s3, trivial_subgroup(s3), trivial_subgroup(s3)).size() == 6);
}

TEST_CASE("monomorphisms") {
  auto c2 = cyclic(2), c3 = cyclic(3), s3 = sym3();
  CHECK(monomorphisms(full_subgroup(c2), c3).empty());
  CHECK(monomorphisms(full_subgroup(c2), c2).size() == 1);
  CHECK(monomorphisms(full_subgroup(c3), s3).size() == 2);
  // |monos(H,H)| = |Aut(H)|
  CHECK(monomorphisms(full_subgroup(dih8()), dih8()).size() == 8);
  for (const GroupMono& m : monomorphisms(full_subgroup(c3), s3)) m.validate();
}

TEST_CASE("aut and out groups") {
  auto a3 = aut_out(cyclic(3));
  CHECK(a3.aut->order() == 2);
  CHECK(a3.out->order() == 2);
  CHECK(a3.inn.order() == 1);

  auto ad8 = aut_out(dih8());
  CHECK(ad8.aut->order() == 8);
  CHECK(ad8.out->order() == 2);
  CHECK(automorphism_count_oracle(dih8()) == 8);

  auto aq8 = aut_out(quat8());
  CHECK(aq8.aut->order() == 24);
  CHECK(aq8.out->order() == 6);

  // Inn(H) = H/Z(H): |Z(D8)| = 2, so |Inn| = 4
  CHECK(ad8.inn.order() == 4);
  // every returned automorphism preserves multiplication
  auto d8 = dih8();
  for (const Perm& p : ad8.action)
    for (elt a = 0; a < d8->order(); ++a)
      for (elt b = 0; b < d8->order(); ++b) CHECK(p(d8->mul(a, b)) == d8->mul(p(a), p(b)));
}

TEST_CASE("sylow subgroups") {
  CHECK(sylow_subgroup(sym3(), 3).order() == 3);
  CHECK(sylow_subgroup(sym4(), 2).order() == 8);
  CHECK(sylow_subgroup(cyclic(2), 3).order() == 1);
  // order is exactly the p-part
  CHECK(sylow_subgroup(sym4(), 3).order() == 3);
}

TEST_CASE("localize keeps multiplication") {
  auto s4 = sym4();
  Subgroup syl = sylow_subgroup(s4, 2);
  LocalGroup lg = localize(syl);
  CHECK(lg.group->order() == 8);
  for (elt i = 0; i < 8; ++i)
    for (elt j = 0; j < 8; ++j)
      CHECK(lg.to_ambient[lg.group->mul(i, j)] == s4->mul(lg.to_ambient[i], lg.to_ambient[j]));
  // identity stays first
  CHECK(lg.to_ambient[0] == 0);
}

TEST_CASE("mono algebra: compose, restrict, invert") {
  auto s3 = sym3();
  Subgroup c3 = sylow_subgroup(s3, 3);
  auto monos = monomorphisms(c3, s3);
  REQUIRE(monos.size() == 2);
  GroupMono inv_mono = monos[1].corestrict();
  CHECK(inv_mono.is_iso_onto_dst());
  GroupMono back = inv_mono.inverse();
  GroupMono round = GroupMono::compose(back, inv_mono);
  CHECK(round == GroupMono::identity(c3));
}
