#include "fusys/group.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace fusys {

namespace {

// Closure of a seed set under the ambient multiplication table. Closure
// under products suffices: in a finite group a^-1 is a positive power of a.
std::vector<elt> table_closure(const Group& g, const std::vector<elt>& seeds) {
  std::vector<char> in(g.order(), 0);
  std::vector<elt> elems;
  auto push = [&](elt x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  };
  push(0);
  for (elt s : seeds) push(s);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      push(g.mul(elems[i], elems[j]));
      push(g.mul(elems[j], elems[i]));
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

}  // namespace

void Group::finish_tables() {
  inv_.assign(order_, 0);
  for (elt a = 0; a < order_; ++a)
    for (elt b = 0; b < order_; ++b)
      if (mul(a, b) == 0) {
        inv_[a] = b;
        break;
      }
  elt_order_.assign(order_, 1);
  for (elt a = 0; a < order_; ++a) {
    elt x = a;
    unsigned k = 1;
    while (x != 0) {
      x = mul(x, a);
      ++k;
    }
    elt_order_[a] = k;
  }
}

GroupPtr Group::from_generators(std::string name, std::size_t npoints, std::vector<Perm> gens,
                                std::size_t cap) {
  for (const Perm& p : gens) check(p.degree() == npoints, "generator degree mismatch");
  std::erase_if(gens, [](const Perm& p) { return p.is_identity(); });
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Perm> elems{Perm::id(npoints)};
  std::map<Perm, elt> index{{elems[0], 0}};
  std::vector<elt> frontier{0};
  while (!frontier.empty()) {
    std::set<Perm> next;
    for (elt f : frontier)
      for (const Perm& g : gens) {
        Perm p = elems[f] * g;
        if (!index.count(p)) next.insert(std::move(p));
      }
    frontier.clear();
    for (const Perm& p : next) {
      check(elems.size() < cap, "generator closure exceeds cap");
      index.emplace(p, static_cast<elt>(elems.size()));
      frontier.push_back(static_cast<elt>(elems.size()));
      elems.push_back(p);
    }
  }

  auto g = std::shared_ptr<Group>(new Group());
  g->name_ = std::move(name);
  g->order_ = elems.size();
  g->perms_ = elems;
  g->mult_.assign(g->order_ * g->order_, 0);
  for (elt a = 0; a < g->order_; ++a)
    for (elt b = 0; b < g->order_; ++b) g->mult_[a * g->order_ + b] = index.at(elems[a] * elems[b]);
  g->finish_tables();
  return g;
}

GroupPtr Group::from_table(std::string name, std::vector<std::vector<elt>> table) {
  const std::size_t n = table.size();
  check(n >= 1 && n <= 512, "table size out of range");
  for (const auto& row : table) check(row.size() == n, "table not square");
  for (elt a = 0; a < n; ++a) {
    check(table[0][a] == a && table[a][0] == a, "index 0 is not a two-sided identity");
    std::vector<char> seen_r(n, 0), seen_c(n, 0);
    for (elt b = 0; b < n; ++b) {
      check(table[a][b] < n, "table entry out of range");
      check(!seen_r[table[a][b]], "row is not a permutation");
      seen_r[table[a][b]] = 1;
      check(!seen_c[table[b][a]], "column is not a permutation");
      seen_c[table[b][a]] = 1;
    }
  }
  for (elt a = 0; a < n; ++a)
    for (elt b = 0; b < n; ++b)
      for (elt c = 0; c < n; ++c)
        check(table[table[a][b]][c] == table[a][table[b][c]], "table is not associative");
  bool has_inverses = true;
  for (elt a = 0; a < n && has_inverses; ++a) {
    bool found = false;
    for (elt b = 0; b < n && !found; ++b) found = table[a][b] == 0 && table[b][a] == 0;
    has_inverses = found;
  }
  check(has_inverses, "table has no two-sided inverses");

  auto g = std::shared_ptr<Group>(new Group());
  g->name_ = std::move(name);
  g->order_ = n;
  g->mult_.assign(n * n, 0);
  for (elt a = 0; a < n; ++a)
    for (elt b = 0; b < n; ++b) g->mult_[a * n + b] = table[a][b];
  g->finish_tables();
  return g;
}

std::string Group::element_name(elt a) const {
  if (a == 0) return "e";
  if (has_perms()) return perms_[a].cycle_string();
  return "g" + std::to_string(a);
}

bool Group::is_p_group(unsigned p) const {
  std::size_t n = order_;
  while (n % p == 0) n /= p;
  return n == 1;
}

const std::vector<Subgroup>& Group::subgroups() const {
  std::call_once(subgroups_once_, [this] {
    GroupPtr self = shared_from_this();
    std::set<std::vector<elt>> seen;
    std::vector<std::vector<elt>> work{{0}};
    seen.insert(work[0]);
    for (std::size_t i = 0; i < work.size(); ++i) {
      const std::vector<elt> h = work[i];
      std::vector<char> in(order_, 0);
      for (elt x : h) in[x] = 1;
      for (elt gext = 1; gext < order_; ++gext) {
        if (in[gext]) continue;
        std::vector<elt> ext = h;
        ext.push_back(gext);
        std::vector<elt> k = table_closure(*this, ext);
        if (seen.insert(k).second) work.push_back(std::move(k));
      }
    }
    std::vector<std::vector<elt>> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    for (auto& s : sorted) subgroups_.emplace_back(self, std::move(s));
  });
  return subgroups_;
}

Subgroup::Subgroup(GroupPtr parent, std::vector<elt> elems)
    : parent_(std::move(parent)), elems_(std::move(elems)) {
  check(parent_ != nullptr, "subgroup without parent");
  std::sort(elems_.begin(), elems_.end());
  check(!elems_.empty() && elems_[0] == 0, "subgroup must contain the identity");
  check(parent_->order() % elems_.size() == 0, "subgroup order must divide group order");
  member_.assign(parent_->order(), 0);
  for (elt x : elems_) {
    check(x < parent_->order(), "subgroup element out of range");
    check(!member_[x], "duplicate subgroup element");
    member_[x] = 1;
  }
  for (elt a : elems_) {
    check(member_[parent_->inv(a)], "subgroup not closed under inverses");
    for (elt b : elems_) check(member_[parent_->mul(a, b)], "subgroup not closed");
  }
}

bool Subgroup::contains(const Subgroup& other) const {
  if (parent_ != other.parent_) return false;
  for (elt x : other.elems_)
    if (!member_[x]) return false;
  return true;
}

std::size_t Subgroup::pos_of(elt x) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  check(it != elems_.end() && *it == x, "element not in subgroup");
  return static_cast<std::size_t>(it - elems_.begin());
}

Subgroup full_subgroup(const GroupPtr& g) {
  std::vector<elt> all(g->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<elt>(i);
  return Subgroup(g, std::move(all));
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup(g, {0}); }

Subgroup subgroup_generated(const GroupPtr& parent, const std::vector<elt>& seeds) {
  return Subgroup(parent, table_closure(*parent, seeds));
}

Subgroup conjugate_subgroup(const Subgroup& p, elt x) {
  const Group& g = *p.parent();
  std::vector<elt> out;
  out.reserve(p.order());
  for (elt a : p.elems()) out.push_back(g.conj(x, a));
  return Subgroup(p.parent(), std::move(out));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  check(a.parent() == b.parent(), "intersect: different parents");
  std::vector<elt> out;
  for (elt x : a.elems())
    if (b.contains(x)) out.push_back(x);
  return Subgroup(a.parent(), std::move(out));
}

Subgroup normalizer_in(const Subgroup& container, const Subgroup& p) {
  std::vector<elt> out;
  for (elt x : container.elems())
    if (conjugate_subgroup(p, x).elems() == p.elems()) out.push_back(x);
  return Subgroup(container.parent(), std::move(out));
}

std::vector<elt> minimal_generating_set(const Subgroup& u) {
  std::vector<elt> gens;
  std::vector<elt> closure{0};
  while (closure.size() < u.order()) {
    elt next = 0;
    for (elt x : u.elems())
      if (!std::binary_search(closure.begin(), closure.end(), x)) {
        next = x;
        break;
      }
    gens.push_back(next);
    std::vector<elt> seed = gens;
    closure = table_closure(*u.parent(), seed);
  }
  return gens;
}

std::vector<elt> double_coset_reps(const Subgroup& g_sub, const Subgroup& h, const Subgroup& k) {
  check(g_sub.contains(h) && g_sub.contains(k), "double_coset_reps: not subgroups");
  const Group& g = *g_sub.parent();
  std::vector<char> visited(g.order(), 0);
  std::vector<elt> reps;
  for (elt x : g_sub.elems()) {
    if (visited[x]) continue;
    reps.push_back(x);
    for (elt a : h.elems())
      for (elt b : k.elems()) visited[g.mul(g.mul(a, x), b)] = 1;
  }
  return reps;
}

std::vector<elt> double_coset_reps(const GroupPtr& g, const Subgroup& h, const Subgroup& k) {
  return double_coset_reps(full_subgroup(g), h, k);
}

Subgroup GroupMono::image() const {
  std::vector<elt> im = img;
  return Subgroup(dst.parent(), std::move(im));
}

GroupMono GroupMono::restrict_to(const Subgroup& smaller_src) const {
  check(src.contains(smaller_src), "restrict_to: not a subgroup of the source");
  GroupMono m;
  m.src = smaller_src;
  m.dst = dst;
  m.img.reserve(smaller_src.order());
  for (elt x : smaller_src.elems()) m.img.push_back(apply(x));
  return m;
}

GroupMono GroupMono::corestrict() const {
  GroupMono m;
  m.src = src;
  m.dst = image();
  m.img = img;
  return m;
}

GroupMono GroupMono::inverse() const {
  check(is_iso_onto_dst(), "inverse of a non-surjective mono");
  GroupMono m;
  m.src = dst;
  m.dst = src;
  m.img.assign(dst.order(), 0);
  for (std::size_t i = 0; i < img.size(); ++i) m.img[dst.pos_of(img[i])] = src.elem(i);
  return m;
}

GroupMono GroupMono::compose(const GroupMono& g, const GroupMono& f) {
  check(f.dst == g.src, "compose: middle subgroup mismatch");
  GroupMono m;
  m.src = f.src;
  m.dst = g.dst;
  m.img.reserve(f.img.size());
  for (elt y : f.img) m.img.push_back(g.apply(y));
  return m;
}

GroupMono GroupMono::inclusion(const Subgroup& p, const Subgroup& q) {
  check(q.contains(p), "inclusion: p not inside q");
  GroupMono m;
  m.src = p;
  m.dst = q;
  m.img = p.elems();
  return m;
}

GroupMono GroupMono::identity(const Subgroup& p) { return inclusion(p, p); }

GroupMono GroupMono::conjugation(const Subgroup& p, elt x, const Subgroup& into) {
  const Group& g = *p.parent();
  GroupMono m;
  m.src = p;
  m.dst = into;
  m.img.reserve(p.order());
  for (elt a : p.elems()) {
    const elt b = g.conj(x, a);
    check(into.contains(b), "conjugation image not inside target");
    m.img.push_back(b);
  }
  return m;
}

bool GroupMono::operator<(const GroupMono& o) const {
  if (src.elems() != o.src.elems()) return src.elems() < o.src.elems();
  if (dst.elems() != o.dst.elems()) return dst.elems() < o.dst.elems();
  return img < o.img;
}

void GroupMono::validate() const {
  check(img.size() == src.order(), "mono image size mismatch");
  check(img[0] == 0, "mono must send identity to identity");
  std::set<elt> distinct(img.begin(), img.end());
  check(distinct.size() == img.size(), "mono is not injective");
  for (elt y : img) check(dst.contains(y), "mono image outside target");
  const Group& gs = *src.parent();
  const Group& gd = *dst.parent();
  for (elt a : src.elems())
    for (elt b : src.elems())
      check(apply(gs.mul(a, b)) == gd.mul(apply(a), apply(b)), "mono is not a homomorphism");
}

std::vector<GroupMono> monomorphisms(const Subgroup& u, const GroupPtr& h) {
  std::vector<GroupMono> out;
  if (h->order() % u.order() != 0) return out;  // Lagrange
  const Subgroup target = full_subgroup(h);
  const Group& gu = *u.parent();

  if (u.order() == 1) {
    GroupMono m;
    m.src = u;
    m.dst = target;
    m.img = {0};
    out.push_back(std::move(m));
    return out;
  }

  const std::vector<elt> gens = minimal_generating_set(u);
  std::vector<elt> gen_img(gens.size(), 0);

  // partial map over u.parent element indices, -1 = unassigned
  std::vector<int> pmap(gu.order(), -1), rmap(h->order(), -1);

  // Extends the partial map over <gens[0..k]> and checks every Cayley edge.
  auto consistent = [&](std::size_t k) -> bool {
    std::fill(pmap.begin(), pmap.end(), -1);
    std::fill(rmap.begin(), rmap.end(), -1);
    pmap[0] = 0;
    rmap[0] = 0;
    std::vector<elt> known{0};
    for (std::size_t i = 0; i < known.size(); ++i) {
      for (std::size_t j = 0; j <= k; ++j) {
        const elt u2 = gu.mul(known[i], gens[j]);
        const elt h2 = h->mul(static_cast<elt>(pmap[known[i]]), gen_img[j]);
        if (pmap[u2] == -1) {
          if (rmap[h2] != -1) return false;  // injectivity
          pmap[u2] = h2;
          rmap[h2] = u2;
          known.push_back(u2);
        } else if (pmap[u2] != static_cast<int>(h2)) {
          return false;
        }
      }
    }
    // verify every edge, including those into earlier-known elements
    for (elt a : known)
      for (std::size_t j = 0; j <= k; ++j)
        if (pmap[gu.mul(a, gens[j])] != static_cast<int>(h->mul(static_cast<elt>(pmap[a]), gen_img[j])))
          return false;
    return true;
  };

  auto emit = [&] {
    GroupMono m;
    m.src = u;
    m.dst = target;
    m.img.reserve(u.order());
    for (elt x : u.elems()) m.img.push_back(static_cast<elt>(pmap[x]));
    out.push_back(std::move(m));
  };

  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == gens.size()) {
      // pmap covers <gens> = u entirely, injectively
      emit();
      return;
    }
    const unsigned ord = gu.element_order(gens[k]);
    for (elt cand = 0; cand < h->order(); ++cand) {
      if (h->element_order(cand) != ord) continue;
      gen_img[k] = cand;
      if (consistent(k)) self(self, k + 1);  // consistent() rebuilds pmap from scratch
    }
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end());
  return out;
}

AutOut aut_out(const GroupPtr& h) {
  AutOut r;
  const Subgroup hf = full_subgroup(h);
  std::vector<GroupMono> autos = monomorphisms(hf, h);
  std::vector<Perm> perms;
  perms.reserve(autos.size());
  for (const GroupMono& a : autos) perms.push_back(Perm{a.img});

  std::vector<Perm> gens;
  for (const Perm& p : perms)
    if (!p.is_identity()) gens.push_back(p);
  r.aut = Group::from_generators("Aut(" + h->name() + ")", h->order(), gens);
  check(r.aut->order() == autos.size(), "automorphism set not closed");
  r.action = r.aut->perms();

  std::map<Perm, elt> index;
  for (elt i = 0; i < r.aut->order(); ++i) index.emplace(r.action[i], i);

  std::set<elt> inn_idx;
  for (elt x = 0; x < h->order(); ++x) {
    Perm c;
    c.img.resize(h->order());
    for (elt ue = 0; ue < h->order(); ++ue) c.img[ue] = h->conj(x, ue);
    inn_idx.insert(index.at(c));
  }
  r.inn = Subgroup(r.aut, std::vector<elt>(inn_idx.begin(), inn_idx.end()));

  // cosets of inn, minimal representative each, identity coset first
  std::vector<elt> coset_rep(r.aut->order());
  for (elt a = 0; a < r.aut->order(); ++a) {
    elt rep = a;
    for (elt i : r.inn.elems()) rep = std::min(rep, r.aut->mul(a, i));
    coset_rep[a] = rep;
  }
  std::set<elt> reps_set(coset_rep.begin(), coset_rep.end());
  r.out_section.assign(reps_set.begin(), reps_set.end());
  std::map<elt, elt> out_index;
  for (elt i = 0; i < r.out_section.size(); ++i) out_index[r.out_section[i]] = i;
  r.aut_to_out.resize(r.aut->order());
  for (elt a = 0; a < r.aut->order(); ++a) r.aut_to_out[a] = out_index.at(coset_rep[a]);

  const std::size_t m = r.out_section.size();
  std::vector<std::vector<elt>> table(m, std::vector<elt>(m));
  for (elt i = 0; i < m; ++i)
    for (elt j = 0; j < m; ++j)
      table[i][j] = out_index.at(coset_rep[r.aut->mul(r.out_section[i], r.out_section[j])]);
  r.out = Group::from_table("Out(" + h->name() + ")", table);
  return r;
}

Subgroup sylow_subgroup(const GroupPtr& g, unsigned p) {
  std::size_t ppart = 1, n = g->order();
  while (n % p == 0) {
    ppart *= p;
    n /= p;
  }
  for (const Subgroup& s : g->subgroups())
    if (s.order() == ppart) return s;
  throw error("no Sylow subgroup found");  // unreachable for valid groups
}

LocalGroup localize(const Subgroup& s) {
  LocalGroup lg;
  if (s.order() == s.parent()->order()) {
    lg.group = s.parent();
    lg.to_ambient.resize(s.order());
    lg.to_local.resize(s.order());
    for (elt i = 0; i < s.order(); ++i) lg.to_ambient[i] = lg.to_local[i] = i;
    return lg;
  }
  const Group& g = *s.parent();
  lg.to_ambient = s.elems();
  lg.to_local.assign(g.order(), 0);
  for (elt i = 0; i < lg.to_ambient.size(); ++i) lg.to_local[lg.to_ambient[i]] = i;
  const std::size_t n = s.order();
  std::vector<std::vector<elt>> table(n, std::vector<elt>(n));
  for (elt i = 0; i < n; ++i)
    for (elt j = 0; j < n; ++j)
      table[i][j] = lg.to_local[g.mul(lg.to_ambient[i], lg.to_ambient[j])];
  lg.group = Group::from_table(g.name() + "<" + std::to_string(n) + ">", std::move(table));
  return lg;
}

}  // namespace fusys
