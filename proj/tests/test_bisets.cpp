#include <set>

#include "fusys/qmat.hpp"

#include "doctest.h"
#include "fusys/biset.hpp"

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

// Independent oracle: count equivalence classes of pairs (U <= G, phi mono)
// by direct orbit partition, no canonical forms.
std::size_t basis_count_oracle(const GroupPtr& h, const GroupPtr& g) {
  std::vector<std::pair<std::vector<elt>, std::vector<elt>>> pairs;
  for (const Subgroup& u : g->subgroups()) {
    LocalGroup lg = localize(u);
    for (const GroupMono& m : monomorphisms(full_subgroup(lg.group), h))
      pairs.emplace_back(u.elems(), m.img);
  }
  // orbit partition under (x in G, h in H)
  std::vector<int> cls(pairs.size(), -1);
  int ncls = 0;
  auto transform = [&](const std::pair<std::vector<elt>, std::vector<elt>>& p, elt x, elt hh) {
    std::vector<std::pair<elt, elt>> z(p.first.size());
    for (std::size_t i = 0; i < p.first.size(); ++i)
      z[i] = {g->conj(x, p.first[i]), h->conj(hh, p.second[i])};
    std::sort(z.begin(), z.end());
    std::pair<std::vector<elt>, std::vector<elt>> out;
    for (auto& [a, b] : z) {
      out.first.push_back(a);
      out.second.push_back(b);
    }
    return out;
  };
  std::map<std::pair<std::vector<elt>, std::vector<elt>>, std::size_t> index;
  for (std::size_t i = 0; i < pairs.size(); ++i) index[pairs[i]] = i;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (cls[i] >= 0) continue;
    ++ncls;
    for (elt x = 0; x < g->order(); ++x)
      for (elt hh = 0; hh < h->order(); ++hh) cls[index.at(transform(pairs[i], x, hh))] = ncls;
  }
  return static_cast<std::size_t>(ncls);
}

}  // namespace

TEST_CASE("transitive basis counts") {
  auto c2 = cyclic(2), c3 = cyclic(3);
  CHECK(transitive_basis(c2, c2).size() == 2);
  CHECK(transitive_basis(c3, c3).size() == 3);
  CHECK(transitive_basis(c3, c2).size() == 1);
  auto d8 = dih8();
  CHECK(transitive_basis(d8, d8).size() == basis_count_oracle(d8, d8));
  auto s3 = sym3();
  CHECK(transitive_basis(s3, c2).size() == basis_count_oracle(s3, c2));
  // swapping roles via opposite bisets preserves the count
  CHECK(transitive_basis(s3, c2).size() == basis_count_oracle(c2, s3));
}

TEST_CASE("realize sizes and round trip") {
  auto c2 = cyclic(2), c3 = cyclic(3);
  for (const BisetLabel& l : transitive_basis(c2, c2))
    CHECK(realize(l).size == (l.u.size() == 1 ? 4 : 2));
  // (C3; U=C3, inversion) has size 3 with a twisted right action
  auto basis3 = transitive_basis(c3, c3);
  REQUIRE(basis3.size() == 3);
  CHECK(realize(basis3[1]).size == 3);
  CHECK(realize(basis3[2]).size == 3);

  // decompose(realize(L)) = 1*L for every basis label
  for (const auto& g : {c2, c3}) {
    for (const BisetLabel& l : transitive_basis(g, g)) {
      BurnsideElt d = decompose(realize(l));
      REQUIRE(d.terms().size() == 1);
      CHECK(d.terms().begin()->first == l);
      CHECK(d.terms().begin()->second == 1);
    }
  }
  auto d8 = dih8();
  for (const BisetLabel& l : transitive_basis(d8, d8)) {
    BurnsideElt d = decompose(realize(l));
    REQUIRE(d.terms().size() == 1);
    CHECK(d.terms().begin()->first == l);
  }
}

TEST_CASE("group as biset over a subgroup decomposes by double cosets") {
  // S3 as a (C3,C3)-biset = [C3,id] + [C3,inv]
  auto s3 = sym3();
  Subgroup syl = sylow_subgroup(s3, 3);
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
  BurnsideElt d = decompose(x);
  CHECK(d.terms().size() == 2);
  for (const auto& [l, c] : d.terms()) {
    CHECK(c == 1);
    CHECK(l.u.size() == 3);  // both summands have U = C3
  }
  // identity label appears (the identity double coset gives the untwisted class)
  CHECK(d.terms().count(identity_label(c3.group)) == 1);

  // ([C3,id]+[C3,inv])^2 = 2([C3,id]+[C3,inv]) mirrors [S3][S3] = 2[S3]
  BurnsideElt sq = tensor_compose(d, d);
  CHECK(sq == d.scaled(2));
}

TEST_CASE("tensor composition: unit and free class") {
  auto c2 = cyclic(2);
  BurnsideElt unit = BurnsideElt::from_label(identity_label(c2), RingTag::Q());
  CHECK(tensor_compose(unit, unit) == unit);

  // free class: [C2 x_(triv,1) C2]^2 = 2 [C2 x_(triv,1) C2]
  auto basis = transitive_basis(c2, c2);
  BurnsideElt freecl = BurnsideElt::from_label(basis[0], RingTag::Q());
  REQUIRE(basis[0].u.size() == 1);
  CHECK(tensor_compose(freecl, freecl) == freecl.scaled(2));

  // unit is two-sided
  auto d8 = dih8();
  BurnsideElt unit8 = BurnsideElt::from_label(identity_label(d8), RingTag::Q());
  for (const BisetLabel& l : transitive_basis(d8, d8)) {
    BurnsideElt e = BurnsideElt::from_label(l, RingTag::Q());
    CHECK(tensor_compose(unit8, e) == e);
    CHECK(tensor_compose(e, unit8) == e);
  }
}

TEST_CASE("composition is associative on catalog triples") {
  auto c3 = cyclic(3);
  auto basis = transitive_basis(c3, c3);
  for (const BisetLabel& a : basis)
    for (const BisetLabel& b : basis)
      for (const BisetLabel& c : basis) {
        BurnsideElt ea = BurnsideElt::from_label(a, RingTag::Q());
        BurnsideElt eb = BurnsideElt::from_label(b, RingTag::Q());
        BurnsideElt ec = BurnsideElt::from_label(c, RingTag::Q());
        CHECK(tensor_compose(tensor_compose(ea, eb), ec) ==
              tensor_compose(ea, tensor_compose(eb, ec)));
      }
}

TEST_CASE("opposite is an involution and fixes the basis count") {
  auto s3 = sym3();
  auto c2 = cyclic(2);
  for (const BisetLabel& l : transitive_basis(s3, c2)) {
    BurnsideElt e = BurnsideElt::from_label(l, RingTag::Q(), Rational(3, 2));
    CHECK(e.opposite().opposite() == e);
    CHECK(e.opposite().left() == c2);
  }
}

TEST_CASE("bbar dimensions") {
  auto c3 = cyclic(3), c2 = cyclic(2), s3 = sym3();
  CHECK(bbar_module(c3, c3, RingTag::Q()).dim() == 2);   // |Out(C3)|
  CHECK(bbar_module(s3, c2, RingTag::Q()).dim() == 1);   // 3 monos, all conjugate
  CHECK(bbar_module(c2, c3, RingTag::Q()).dim() == 0);   // no mono C3 -> C2
  auto d8 = dih8();
  CHECK(bbar_module(d8, d8, RingTag::Q()).dim() == aut_out(d8).out->order());
}

TEST_CASE("projection kills proper-U labels") {
  auto c3 = cyclic(3);
  BbarModule m = bbar_module(c3, c3, RingTag::Q());
  BurnsideElt e(c3, c3, RingTag::Q());
  for (const BisetLabel& l : transitive_basis(c3, c3)) e.add_term(l, 1);
  auto coords = m.project(e);
  CHECK(coords.size() == 2);
  CHECK(coords[0] == 1);
  CHECK(coords[1] == 1);
  // the trivial-U class is gone: reconstruct and compare supports
  std::size_t proper = 0;
  for (const auto& [l, c] : e.terms())
    if (l.u.size() < 3) ++proper;
  CHECK(proper == 1);
}

TEST_CASE("bbar(H,H) = kOut(H) as an algebra") {
  for (auto g : {cyclic(3), dih8()}) {
    AutOut ao = aut_out(g);
    BbarModule m = bbar_module(g, g, RingTag::Q());
    REQUIRE(m.dim() == ao.out->order());
    // label -> out -> label round trip and multiplicativity
    for (const BisetLabel& a : m.basis)
      for (const BisetLabel& b : m.basis) {
        const elt oa = bbar_label_to_out(a, ao);
        const elt ob = bbar_label_to_out(b, ao);
        // compose labels concretely, project, read off the out element
        BurnsideElt prod =
            tensor_compose(BurnsideElt::from_label(a, RingTag::Q()),
                           BurnsideElt::from_label(b, RingTag::Q()));
        auto coords = m.project(prod);
        std::size_t nonzero = 0, where = 0;
        for (std::size_t i = 0; i < coords.size(); ++i)
          if (coords[i] != 0) {
            ++nonzero;
            where = i;
          }
        REQUIRE(nonzero == 1);
        CHECK(coords[where] == 1);
        CHECK(bbar_label_to_out(m.basis[where], ao) == ao.out->mul(oa, ob));
      }
  }
}

TEST_CASE("I(G,H) equals the span of proper-U labels") {
  // the ideal computed as sum_{K<H} B(G,K) B(K,H) spans exactly the
  // proper-U coordinate subspace
  auto g = sym3();
  auto h = cyclic(2);
  auto basis = transitive_basis(g, h);
  std::map<BisetLabel, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

  QMat products(0, basis.size());
  for (const Subgroup& ksub : h->subgroups()) {
    if (ksub.order() == h->order()) continue;
    LocalGroup k = localize(ksub);
    for (const BisetLabel& a : transitive_basis(g, k.group))
      for (const BisetLabel& b : transitive_basis(k.group, h)) {
        BurnsideElt prod = tensor_compose(BurnsideElt::from_label(a, RingTag::Q()),
                                          BurnsideElt::from_label(b, RingTag::Q()));
        std::vector<Rational> row(basis.size());
        for (const auto& [l, c] : prod.terms()) row[index.at(l)] = c;
        products.append_row(row);
      }
  }
  QSubspace ideal(products);
  std::size_t proper = 0;
  for (const BisetLabel& l : basis)
    if (l.u.size() < h->order()) ++proper;
  CHECK(ideal.dim() == proper);
  for (const BisetLabel& l : basis) {
    std::vector<Rational> v(basis.size());
    v[index.at(l)] = 1;
    CHECK(ideal.contains(v) == (l.u.size() < h->order()));
  }
}
