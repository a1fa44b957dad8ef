#include "fusys/fusion.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace fusys {

FusionSystem::FusionSystem(GroupPtr s, unsigned p) : s_(std::move(s)), p_(p) {
  check(s_->is_p_group(p), "base group is not a p-group");
  objects_ = s_->subgroups();
  for (std::size_t i = 0; i < objects_.size(); ++i) object_index_[objects_[i].elems()] = i;
  homs_.resize(objects_.size() * objects_.size());
}

std::size_t FusionSystem::object_index(const Subgroup& p) const {
  check(p.parent() == s_, "subgroup not below the base group");
  auto it = object_index_.find(p.elems());
  check(it != object_index_.end(), "subgroup is not an object");
  return it->second;
}

bool FusionSystem::insert(std::size_t pi, std::size_t qi, std::vector<elt> img) {
  auto& hs = homs_[pi * objects_.size() + qi];
  GroupMono m;
  m.src = objects_[pi];
  m.dst = objects_[qi];
  m.img = std::move(img);
  auto it = std::lower_bound(hs.begin(), hs.end(), m);
  if (it != hs.end() && *it == m) return false;
  hs.insert(it, std::move(m));
  return true;
}

bool FusionSystem::has_morphism(std::size_t pi, std::size_t qi,
                                const std::vector<elt>& img) const {
  GroupMono m;
  m.src = objects_[pi];
  m.dst = objects_[qi];
  m.img = img;
  const auto& hs = homs(pi, qi);
  return std::binary_search(hs.begin(), hs.end(), m);
}

Subgroup FusionSystem::aut_f_subgroup(std::size_t li, const AutOut& aut) const {
  const Subgroup& l = objects_[li];
  LocalGroup lg = localize(l);
  std::map<Perm, elt> index;
  for (elt i = 0; i < aut.aut->order(); ++i) index.emplace(aut.action[i], i);
  std::set<elt> members;
  for (const GroupMono& m : homs(li, li)) {
    Perm p;
    p.img.resize(l.order());
    for (std::size_t i = 0; i < l.order(); ++i) p.img[i] = lg.to_local[m.img[i]];
    members.insert(index.at(p));
  }
  return Subgroup(aut.aut, std::vector<elt>(members.begin(), members.end()));
}

std::vector<GroupMono> FusionSystem::isos(std::size_t pi, std::size_t qi) const {
  if (objects_[pi].order() != objects_[qi].order()) return {};
  return homs(pi, qi);
}

std::vector<std::vector<std::size_t>> FusionSystem::f_classes() const {
  const std::size_t n = objects_.size();
  std::vector<std::size_t> root(n);
  for (std::size_t i = 0; i < n; ++i) root[i] = i;
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!isos(i, j).empty()) root[find(i)] = find(j);
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t i = 0; i < n; ++i) by_root[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> classes;
  for (auto& [r, members] : by_root) classes.push_back(members);
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

std::vector<std::vector<std::size_t>> FusionSystem::f_iso_classes_of_type(
    const GroupPtr& qtype) const {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& cls : f_classes()) {
    const Subgroup& rep = objects_[cls.front()];
    if (rep.order() != qtype->order()) continue;
    LocalGroup lg = localize(rep);
    if (monomorphisms(full_subgroup(qtype), lg.group).empty()) continue;
    out.push_back(cls);
  }
  return out;
}

std::size_t FusionSystem::total_morphisms() const {
  std::size_t n = 0;
  for (const auto& hs : homs_) n += hs.size();
  return n;
}

void FusionSystem::validate() const {
  const std::size_t n = objects_.size();
  // inner fusion contained
  for (elt s = 0; s < s_->order(); ++s)
    for (std::size_t pi = 0; pi < n; ++pi) {
      const Subgroup conj = conjugate_subgroup(objects_[pi], s);
      for (std::size_t qi = 0; qi < n; ++qi) {
        if (!objects_[qi].contains(conj)) continue;
        std::vector<elt> img;
        img.reserve(objects_[pi].order());
        for (elt x : objects_[pi].elems()) img.push_back(s_->conj(s, x));
        check(has_morphism(pi, qi, img), "missing inner morphism");
      }
    }
  for (std::size_t pi = 0; pi < n; ++pi)
    for (std::size_t qi = 0; qi < n; ++qi)
      for (const GroupMono& f : homs(pi, qi)) {
        f.validate();
        // composition closure
        for (std::size_t ri = 0; ri < n; ++ri)
          for (const GroupMono& g : homs(qi, ri)) {
            GroupMono gf = GroupMono::compose(g, f);
            check(has_morphism(pi, ri, gf.img), "not closed under composition");
          }
        // restriction closure
        for (std::size_t si = 0; si < n; ++si)
          if (objects_[pi].contains(objects_[si]))
            check(has_morphism(si, qi, f.restrict_to(objects_[si]).img),
                  "not closed under restriction");
        // corestriction to the image, and the image inclusion
        const Subgroup im = f.image();
        const std::size_t ii = object_index_.at(im.elems());
        check(has_morphism(pi, ii, f.img), "corestriction missing");
        check(has_morphism(ii, qi, im.elems()), "image inclusion missing");
        // inverses of isomorphisms
        if (objects_[pi].order() == objects_[qi].order())
          check(has_morphism(qi, pi, f.corestrict().inverse().img), "inverse missing");
      }
}

FusionSystem fusion_of_group(const GroupPtr& g, const Subgroup& s, unsigned p) {
  check(s.parent() == g, "Sylow subgroup of a different group");
  std::size_t ppart = 1, rest = g->order();
  while (rest % p == 0) {
    ppart *= p;
    rest /= p;
  }
  check(s.order() == ppart, "subgroup is not Sylow");

  LocalGroup lg = localize(s);
  FusionSystem f(lg.group, p);
  const std::size_t n = f.num_objects();
  for (elt x = 0; x < g->order(); ++x) {
    for (std::size_t pi = 0; pi < n; ++pi) {
      const Subgroup& po = f.object(pi);
      std::vector<elt> img_local(po.order());
      bool inside = true;
      for (std::size_t i = 0; i < po.order() && inside; ++i) {
        const elt amb = g->conj(x, lg.to_ambient[po.elem(i)]);
        if (!s.contains(amb))
          inside = false;
        else
          img_local[i] = lg.to_local[amb];
      }
      if (!inside) continue;
      std::vector<elt> sorted = img_local;
      std::sort(sorted.begin(), sorted.end());
      for (std::size_t qi = 0; qi < n; ++qi) {
        const Subgroup& qo = f.object(qi);
        bool contained = true;
        for (elt y : sorted)
          if (!qo.contains(y)) {
            contained = false;
            break;
          }
        if (contained) f.insert(pi, qi, img_local);
      }
    }
  }
  return f;
}

FusionSystem fusion_from_generators(const GroupPtr& s, unsigned p,
                                    const std::vector<GroupMono>& gens) {
  FusionSystem f = fusion_of_group(s, full_subgroup(s), p);  // inner fusion
  const std::size_t n = f.num_objects();

  std::deque<std::tuple<std::size_t, std::size_t, std::vector<elt>>> work;
  auto add = [&](std::size_t pi, std::size_t qi, std::vector<elt> img) {
    if (f.insert(pi, qi, img)) work.emplace_back(pi, qi, std::move(img));
  };
  // Inner fusion is already closed under everything below, and every newly
  // inserted morphism is processed against all current ones, so seeding the
  // worklist with the generators alone suffices.
  for (const GroupMono& m : gens) {
    check(m.src.parent() == s && m.dst.parent() == s, "generator not on the base group");
    m.validate();
    add(f.object_index(m.src), f.object_index(m.dst), m.img);
  }

  while (!work.empty()) {
    auto [pi, qi, img] = work.front();
    work.pop_front();
    GroupMono m;
    m.src = f.object(pi);
    m.dst = f.object(qi);
    m.img = img;

    // corestriction and inverse
    const Subgroup im = m.image();
    const std::size_t ii = f.object_index(im);
    add(pi, ii, m.img);
    if (im.order() == f.object(qi).order()) add(qi, pi, m.corestrict().inverse().img);

    // restrictions to subobjects
    for (std::size_t si = 0; si < n; ++si)
      if (si != pi && f.object(pi).contains(f.object(si)))
        add(si, qi, m.restrict_to(f.object(si)).img);

    // compositions with all current morphisms on either side
    for (std::size_t ri = 0; ri < n; ++ri) {
      const auto after = f.homs(qi, ri);  // copy: insertions invalidate iterators
      for (const GroupMono& gmor : after) add(pi, ri, GroupMono::compose(gmor, m).img);
      const auto before = f.homs(ri, pi);
      for (const GroupMono& gmor : before) add(ri, qi, GroupMono::compose(m, gmor).img);
    }
  }
  return f;
}

bool is_subsystem(const FusionSystem& e, const FusionSystem& f) {
  check(e.S() == f.S(), "fusion systems on different base groups");
  const std::size_t n = e.num_objects();
  for (std::size_t pi = 0; pi < n; ++pi)
    for (std::size_t qi = 0; qi < n; ++qi)
      for (const GroupMono& m : e.homs(pi, qi))
        if (!f.has_morphism(pi, qi, m.img)) return false;
  return true;
}

bool fusion_equal(const FusionSystem& e, const FusionSystem& f) {
  return is_subsystem(e, f) && is_subsystem(f, e);
}

namespace {

// Conjugation maps c_s|_P for s in N_S(P), as image vectors on P.
std::set<std::vector<elt>> aut_s_maps(const FusionSystem& f, const Subgroup& p) {
  const GroupPtr& s = f.S();
  std::set<std::vector<elt>> out;
  const Subgroup norm = normalizer_in(full_subgroup(s), p);
  for (elt x : norm.elems()) {
    std::vector<elt> img;
    img.reserve(p.order());
    for (elt a : p.elems()) img.push_back(s->conj(x, a));
    out.insert(std::move(img));
  }
  return out;
}

}  // namespace

SaturationReport is_saturated(const FusionSystem& f) {
  const GroupPtr& s = f.S();
  const Subgroup sfull = full_subgroup(s);

  for (const auto& cls : f.f_classes()) {
    // normalizer orders over the class
    std::size_t max_norm = 0;
    for (std::size_t li : cls)
      max_norm = std::max(max_norm, normalizer_in(sfull, f.object(li)).order());

    bool class_ok = false;
    std::string why;
    for (std::size_t li : cls) {
      const Subgroup& l = f.object(li);
      if (normalizer_in(sfull, l).order() != max_norm) continue;  // not fully normalized

      // fully automized: [Aut_F(L) : Aut_S(L)] coprime to p
      const auto auts = aut_s_maps(f, l);
      const std::size_t aut_f = f.aut_f_order(li);
      check(aut_f % auts.size() == 0, "Aut_S does not divide Aut_F");
      if ((aut_f / auts.size()) % f.p() == 0) {
        why = "fully normalized member " + std::to_string(li) + " is not fully automized";
        continue;
      }

      // receptive: every iso onto L extends to its N_phi
      bool receptive = true;
      for (std::size_t qi : cls) {
        for (const GroupMono& phi : f.isos(qi, li)) {
          if (phi.image().elems() != l.elems()) continue;
          const GroupMono phi_iso = phi.corestrict();
          const GroupMono phi_inv = phi_iso.inverse();
          const Subgroup& q = f.object(qi);
          std::vector<elt> nphi_elems;
          const Subgroup norm_q = normalizer_in(sfull, q);
          for (elt gx : norm_q.elems()) {
            // phi c_g phi^-1 on L
            std::vector<elt> img;
            img.reserve(l.order());
            for (elt a : l.elems())
              img.push_back(phi_iso.apply(s->conj(gx, phi_inv.apply(a))));
            if (auts.count(img)) nphi_elems.push_back(gx);
          }
          const Subgroup nphi(s, nphi_elems);
          const std::size_t ni = f.object_index(nphi);
          bool extends = false;
          for (const GroupMono& psi : f.homs(ni, f.full_object_index())) {
            bool matches = true;
            for (elt a : q.elems())
              if (psi.apply(a) != phi.apply(a)) {
                matches = false;
                break;
              }
            if (matches) {
              extends = true;
              break;
            }
          }
          if (!extends) {
            receptive = false;
            why = "iso into member " + std::to_string(li) + " does not extend to N_phi";
            break;
          }
        }
        if (!receptive) break;
      }
      if (receptive) {
        class_ok = true;
        break;
      }
    }
    if (!class_ok) {
      SaturationReport r;
      r.saturated = false;
      r.witness = cls.front();
      r.detail = why.empty() ? "class has no fully normalized receptive member" : why;
      return r;
    }
  }
  SaturationReport r;
  r.saturated = true;
  return r;
}

FusionSystem alperin_closure(const FusionSystem& f) {
  std::vector<GroupMono> gens;
  for (std::size_t li = 0; li < f.num_objects(); ++li)
    for (const GroupMono& m : f.homs(li, li)) gens.push_back(m);
  return fusion_from_generators(f.S(), f.p(), gens);
}

}  // namespace fusys
