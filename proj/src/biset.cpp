#include "fusys/biset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fusys {

namespace {

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::string BisetLabel::str() const {
  std::string s = "[U={";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) s += ",";
    s += right->element_name(u[i]);
  }
  s += "}, phi=(";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) s += ",";
    s += left->element_name(phi[i]);
  }
  s += ")]";
  return s;
}

BisetLabel canonical_label(const GroupPtr& left, const GroupPtr& right, std::vector<elt> u,
                           std::vector<elt> phi) {
  check(u.size() == phi.size(), "label tabulation size mismatch");
  BisetLabel best;
  best.left = left;
  best.right = right;
  bool have = false;
  const std::size_t m = u.size();
  std::vector<std::pair<elt, elt>> conj(m);  // (conjugated u, mapped phi)
  for (elt x = 0; x < right->order(); ++x) {
    for (elt h = 0; h < left->order(); ++h) {
      // (u, phi) -> (x u x^-1, c_h(phi(u)))
      for (std::size_t i = 0; i < m; ++i)
        conj[i] = {right->conj(x, u[i]), left->conj(h, phi[i])};
      std::sort(conj.begin(), conj.end());
      BisetLabel cand;
      cand.u.resize(m);
      cand.phi.resize(m);
      for (std::size_t i = 0; i < m; ++i) {
        cand.u[i] = conj[i].first;
        cand.phi[i] = conj[i].second;
      }
      if (!have || cand < best) {
        best.u = std::move(cand.u);
        best.phi = std::move(cand.phi);
        have = true;
      }
    }
  }
  return best;
}

BisetLabel identity_label(const GroupPtr& g) {
  std::vector<elt> all(g->order()), id(g->order());
  for (elt i = 0; i < g->order(); ++i) all[i] = id[i] = i;
  return canonical_label(g, g, all, id);
}

std::vector<BisetLabel> transitive_basis(const GroupPtr& left, const GroupPtr& right) {
  std::set<BisetLabel> out;
  for (const Subgroup& u : right->subgroups()) {
    LocalGroup lg = localize(u);
    for (const GroupMono& m : monomorphisms(full_subgroup(lg.group), left)) {
      std::vector<elt> phi(u.order());
      for (std::size_t i = 0; i < u.order(); ++i) phi[i] = m.img[i];
      out.insert(canonical_label(left, right, u.elems(), phi));
    }
  }
  return std::vector<BisetLabel>(out.begin(), out.end());
}

bool Biset::is_bifree() const {
  for (elt h = 1; h < left->order(); ++h)
    for (std::uint32_t x = 0; x < size; ++x)
      if (lapply(h, x) == x) return false;
  for (elt g = 1; g < right->order(); ++g)
    for (std::uint32_t x = 0; x < size; ++x)
      if (rapply(x, g) == x) return false;
  return true;
}

Biset Biset::opposite() const {
  Biset op;
  op.left = right;
  op.right = left;
  op.size = size;
  op.lact.resize(right->order() * size);
  op.ract.resize(size * left->order());
  for (elt g = 0; g < right->order(); ++g)
    for (std::uint32_t x = 0; x < size; ++x) op.lact[g * size + x] = rapply(x, right->inv(g));
  for (std::uint32_t x = 0; x < size; ++x)
    for (elt h = 0; h < left->order(); ++h) op.ract[x * left->order() + h] = lapply(left->inv(h), x);
  return op;
}

Biset realize(const BisetLabel& label) {
  const GroupPtr& h = label.left;
  const GroupPtr& g = label.right;
  const std::size_t nh = h->order(), ng = g->order();
  UnionFind uf(nh * ng);
  auto idx = [&](elt a, elt b) { return static_cast<std::uint32_t>(a * ng + b); };
  // (a phi(u), b) ~ (a, u b)
  for (elt a = 0; a < nh; ++a)
    for (elt b = 0; b < ng; ++b)
      for (std::size_t i = 0; i < label.u.size(); ++i)
        uf.unite(idx(h->mul(a, label.phi[i]), b), idx(a, g->mul(label.u[i], b)));

  std::vector<std::uint32_t> rep_of(nh * ng);
  std::vector<std::uint32_t> points;
  std::map<std::uint32_t, std::uint32_t> point_id;
  for (std::uint32_t x = 0; x < nh * ng; ++x) {
    const std::uint32_t r = uf.find(x);
    auto it = point_id.find(r);
    if (it == point_id.end()) {
      it = point_id.emplace(r, static_cast<std::uint32_t>(points.size())).first;
      points.push_back(r);
    }
    rep_of[x] = it->second;
  }
  Biset bs;
  bs.left = h;
  bs.right = g;
  bs.size = points.size();
  check(bs.size == label.biset_size(), "realized biset has wrong size");
  bs.lact.resize(nh * bs.size);
  bs.ract.resize(bs.size * ng);
  for (std::uint32_t x = 0; x < bs.size; ++x) {
    const elt a = static_cast<elt>(points[x] / ng);
    const elt b = static_cast<elt>(points[x] % ng);
    for (elt hh = 0; hh < nh; ++hh) bs.lact[hh * bs.size + x] = rep_of[idx(h->mul(hh, a), b)];
    for (elt gg = 0; gg < ng; ++gg) bs.ract[x * ng + gg] = rep_of[idx(a, g->mul(b, gg))];
  }
  check(bs.is_bifree(), "realized biset is not bifree");
  return bs;
}

BurnsideElt BurnsideElt::from_label(const BisetLabel& l, RingTag ring, const Rational& c) {
  BurnsideElt e(l.left, l.right, ring);
  e.add_term(l, c);
  return e;
}

void BurnsideElt::add_term(const BisetLabel& l, const Rational& c) {
  check(l.left == left_ && l.right == right_, "label for a different group pair");
  Rational v = terms_.count(l) ? terms_[l] + c : c;
  if (!ring_.rational) {
    const BigInt denom = den(v);
    check(denom % ring_.p != 0, "F_p coefficient with denominator divisible by p");
    v = Rational(BigInt(reduce_mod_p(v, ring_.p)), 1);
  }
  if (v == 0)
    terms_.erase(l);
  else
    terms_[l] = v;
}

BurnsideElt BurnsideElt::operator+(const BurnsideElt& o) const {
  check(left_ == o.left_ && right_ == o.right_ && ring_ == o.ring_, "mixed rings or groups");
  BurnsideElt r = *this;
  for (const auto& [l, c] : o.terms_) r.add_term(l, c);
  return r;
}

BurnsideElt BurnsideElt::operator-(const BurnsideElt& o) const {
  check(left_ == o.left_ && right_ == o.right_ && ring_ == o.ring_, "mixed rings or groups");
  BurnsideElt r = *this;
  for (const auto& [l, c] : o.terms_) r.add_term(l, -c);
  return r;
}

BurnsideElt BurnsideElt::scaled(const Rational& c) const {
  BurnsideElt r(left_, right_, ring_);
  if (c == 0) return r;
  for (const auto& [l, v] : terms_) r.add_term(l, v * c);
  return r;
}

bool BurnsideElt::operator==(const BurnsideElt& o) const {
  return left_ == o.left_ && right_ == o.right_ && ring_ == o.ring_ && terms_ == o.terms_;
}

Rational BurnsideElt::total_size() const {
  Rational s = 0;
  for (const auto& [l, c] : terms_) s += c * Rational(l.biset_size());
  return s;
}

bool BurnsideElt::p_locally_integral(std::uint32_t p) const {
  for (const auto& [l, c] : terms_)
    if (!fusys::p_locally_integral(c, p)) return false;
  return true;
}

BurnsideElt BurnsideElt::reduced_mod(std::uint32_t p) const {
  BurnsideElt r(left_, right_, RingTag::mod(p));
  for (const auto& [l, c] : terms_) r.add_term(l, c);
  return r;
}

BurnsideElt BurnsideElt::opposite() const {
  BurnsideElt r(right_, left_, ring_);
  for (const auto& [l, c] : terms_) {
    const BurnsideElt d = decompose(realize(l).opposite(), ring_);
    for (const auto& [l2, c2] : d.terms()) r.add_term(l2, c * c2);
  }
  return r;
}

std::string BurnsideElt::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [l, c] : terms_) {
    if (!s.empty()) s += " + ";
    const std::string cs = c.str();
    if (cs != "1") s += cs + "*";
    s += l.str();
  }
  if (!ring_.rational) s += " (mod " + std::to_string(ring_.p) + ")";
  return s;
}

BurnsideElt decompose(const Biset& x, RingTag ring) {
  check(x.is_bifree(), "decompose: biset is not bifree");
  const GroupPtr& h = x.left;
  const GroupPtr& g = x.right;
  UnionFind uf(x.size);
  for (std::uint32_t pt = 0; pt < x.size; ++pt) {
    for (elt a = 0; a < h->order(); ++a) uf.unite(pt, x.lapply(a, pt));
    for (elt b = 0; b < g->order(); ++b) uf.unite(pt, x.rapply(pt, b));
  }
  std::map<std::uint32_t, std::uint32_t> orbit_min;
  for (std::uint32_t pt = 0; pt < x.size; ++pt) orbit_min.try_emplace(uf.find(pt), pt);
  BurnsideElt out(h, g, ring);
  for (const auto& [root, x0] : orbit_min) {
    (void)root;
    // h attaining each point of the left orbit H.x0
    std::map<std::uint32_t, elt> h_of;
    for (elt a = 0; a < h->order(); ++a) {
      const std::uint32_t y = x.lapply(a, x0);
      check(!h_of.count(y), "left action not free on orbit");
      h_of[y] = a;
    }
    std::vector<elt> u, phi;
    for (elt b = 0; b < g->order(); ++b) {
      auto it = h_of.find(x.rapply(x0, b));
      if (it != h_of.end()) {
        u.push_back(b);
        phi.push_back(it->second);
      }
    }
    out.add_term(canonical_label(h, g, std::move(u), std::move(phi)), 1);
  }
  return out;
}

namespace {

// Concrete composition of two transitive classes: realize, take H-orbits of
// Y x X, decompose over (K,G).
BurnsideElt compose_labels(const BisetLabel& b, const BisetLabel& a, RingTag ring) {
  const Biset y = realize(b);  // (K,H)
  const Biset x = realize(a);  // (H,G)
  const GroupPtr& k = y.left;
  const GroupPtr& h = y.right;
  const GroupPtr& g = x.right;
  const std::size_t n = y.size * x.size;
  UnionFind uf(n);
  auto idx = [&](std::uint32_t yy, std::uint32_t xx) {
    return static_cast<std::uint32_t>(yy * x.size + xx);
  };
  for (std::uint32_t yy = 0; yy < y.size; ++yy)
    for (std::uint32_t xx = 0; xx < x.size; ++xx)
      for (elt hh = 0; hh < h->order(); ++hh)
        uf.unite(idx(yy, xx), idx(y.rapply(yy, hh), x.lapply(h->inv(hh), xx)));

  std::vector<std::uint32_t> rep_of(n);
  std::vector<std::uint32_t> points;
  std::map<std::uint32_t, std::uint32_t> point_id;
  for (std::uint32_t t = 0; t < n; ++t) {
    const std::uint32_t r = uf.find(t);
    auto it = point_id.find(r);
    if (it == point_id.end()) {
      it = point_id.emplace(r, static_cast<std::uint32_t>(points.size())).first;
      points.push_back(r);
    }
    rep_of[t] = it->second;
  }
  Biset prod;
  prod.left = k;
  prod.right = g;
  prod.size = points.size();
  prod.lact.resize(k->order() * prod.size);
  prod.ract.resize(prod.size * g->order());
  for (std::uint32_t t = 0; t < prod.size; ++t) {
    const std::uint32_t yy = points[t] / x.size;
    const std::uint32_t xx = points[t] % x.size;
    for (elt kk = 0; kk < k->order(); ++kk)
      prod.lact[kk * prod.size + t] = rep_of[idx(y.lapply(kk, yy), xx)];
    for (elt gg = 0; gg < g->order(); ++gg)
      prod.ract[t * g->order() + gg] = rep_of[idx(yy, x.rapply(xx, gg))];
  }
  return decompose(prod, ring);
}

}  // namespace

BurnsideElt tensor_compose(const BurnsideElt& beta, const BurnsideElt& alpha) {
  check(beta.right() == alpha.left(), "tensor_compose: middle group mismatch");
  check(beta.ring() == alpha.ring(), "tensor_compose: mixed coefficient rings");
  BurnsideElt out(beta.left(), alpha.right(), beta.ring());
  for (const auto& [lb, cb] : beta.terms())
    for (const auto& [la, ca] : alpha.terms()) {
      const BurnsideElt d = compose_labels(lb, la, beta.ring());
      for (const auto& [l, c] : d.terms()) out.add_term(l, cb * ca * c);
    }
  return out;
}

std::vector<Rational> BbarModule::project(const BurnsideElt& e) const {
  check(e.left() == left && e.right() == right, "project: wrong group pair");
  check(e.ring() == ring, "project: wrong ring");
  std::vector<Rational> out(basis.size());
  for (const auto& [l, c] : e.terms()) {
    if (l.u.size() < right->order()) continue;  // I(G,H): proper U
    out[index.at(l)] = c;
  }
  return out;
}

BbarModule bbar_module(const GroupPtr& left, const GroupPtr& right, RingTag ring) {
  BbarModule m;
  m.left = left;
  m.right = right;
  m.ring = ring;
  for (const BisetLabel& l : transitive_basis(left, right))
    if (l.u.size() == right->order()) {
      m.index[l] = m.basis.size();
      m.basis.push_back(l);
    }
  return m;
}

elt bbar_label_to_out(const BisetLabel& l, const AutOut& aut) {
  check(l.left == l.right, "out iso needs an (H,H) label");
  check(l.u.size() == l.right->order(), "label does not lie in the bar quotient");
  Perm p;
  p.img.resize(l.u.size());
  for (std::size_t i = 0; i < l.u.size(); ++i) p.img[l.u[i]] = l.phi[i];
  for (elt i = 0; i < aut.aut->order(); ++i)
    if (aut.action[i] == p) return aut.aut_to_out[i];
  throw error("label map is not an automorphism");
}

BisetLabel out_to_bbar_label(elt out_elt, const AutOut& aut, const GroupPtr& h) {
  const Perm& p = aut.action[aut.out_section[out_elt]];
  std::vector<elt> u(h->order()), phi(h->order());
  for (elt i = 0; i < h->order(); ++i) {
    u[i] = i;
    phi[i] = p.img[i];
  }
  return canonical_label(h, h, std::move(u), std::move(phi));
}

}  // namespace fusys
