#include "fusys/charidem.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fusys {

namespace {

// Distinct restriction-biset classes {[S x_(phi,P) P] : phi in Hom_F(P,S)}
// per object P, keeping whether the class is the untwisted inclusion one.
struct RestrictionClasses {
  std::vector<LocalGroup> locals;                       // per object
  std::vector<std::vector<BisetLabel>> twisted;         // per object, != inclusion class
  std::vector<BisetLabel> inclusion;                    // per object
};

RestrictionClasses restriction_classes(const FusionSystem& f) {
  RestrictionClasses rc;
  const GroupPtr& s = f.S();
  const std::size_t full = f.full_object_index();
  for (std::size_t pi = 0; pi < f.num_objects(); ++pi) {
    const Subgroup& p = f.object(pi);
    LocalGroup lg = localize(p);
    std::vector<elt> uall(p.order());
    for (elt i = 0; i < p.order(); ++i) uall[i] = i;
    const BisetLabel incl = canonical_label(s, lg.group, uall, p.elems());
    std::set<BisetLabel> seen{incl};
    std::vector<BisetLabel> tw;
    for (const GroupMono& phi : f.homs(pi, full)) {
      BisetLabel l = canonical_label(s, lg.group, uall, phi.img);
      if (seen.insert(l).second) tw.push_back(l);
    }
    rc.locals.push_back(std::move(lg));
    rc.twisted.push_back(std::move(tw));
    rc.inclusion.push_back(incl);
  }
  return rc;
}

}  // namespace

BurnsideElt restriction_biset(const FusionSystem& f, std::size_t pi, const GroupMono& phi,
                              const LocalGroup& ploc) {
  const Subgroup& p = f.object(pi);
  std::vector<elt> uall(p.order());
  for (elt i = 0; i < p.order(); ++i) uall[i] = i;
  return BurnsideElt::from_label(canonical_label(f.S(), ploc.group, uall, phi.img),
                                 RingTag::Q());
}

StableSubalgebra f_generated_stable_subalgebra(const FusionSystem& f) {
  const GroupPtr& s = f.S();
  StableSubalgebra out;
  out.full_basis = transitive_basis(s, s);

  // F-generated coordinate labels: the label map must be a morphism of F
  for (const BisetLabel& l : out.full_basis) {
    const std::size_t ui = f.object_index(Subgroup(s, l.u));
    if (f.has_morphism(ui, f.full_object_index(), l.phi)) out.f_labels.push_back(l);
  }
  const std::size_t nf = out.f_labels.size();

  const RestrictionClasses rc = restriction_classes(f);

  // stability conditions as rows over the F-label coordinates
  QMat rows(0, nf);
  auto add_conditions = [&](bool left_side) {
    for (std::size_t pi = 0; pi < f.num_objects(); ++pi) {
      const GroupPtr& ploc = rc.locals[pi].group;
      std::vector<BisetLabel> cod_basis =
          left_side ? transitive_basis(ploc, s) : transitive_basis(s, ploc);
      std::map<BisetLabel, std::size_t> cod_index;
      for (std::size_t i = 0; i < cod_basis.size(); ++i) cod_index[cod_basis[i]] = i;

      BurnsideElt r_incl = BurnsideElt::from_label(rc.inclusion[pi], RingTag::Q());
      BurnsideElt t_incl = r_incl.opposite();
      for (const BisetLabel& lphi : rc.twisted[pi]) {
        BurnsideElt r_phi = BurnsideElt::from_label(lphi, RingTag::Q());
        BurnsideElt t_phi = r_phi.opposite();
        std::vector<std::vector<Rational>> delta(nf,
                                                 std::vector<Rational>(cod_basis.size()));
        for (std::size_t j = 0; j < nf; ++j) {
          BurnsideElt a = BurnsideElt::from_label(out.f_labels[j], RingTag::Q());
          BurnsideElt d = left_side ? tensor_compose(t_phi, a) - tensor_compose(t_incl, a)
                                    : tensor_compose(a, r_phi) - tensor_compose(a, r_incl);
          for (const auto& [l, c] : d.terms()) delta[j][cod_index.at(l)] = c;
        }
        for (std::size_t t = 0; t < cod_basis.size(); ++t) {
          std::vector<Rational> row(nf);
          bool nonzero = false;
          for (std::size_t j = 0; j < nf; ++j) {
            row[j] = delta[j][t];
            nonzero = nonzero || row[j] != 0;
          }
          if (nonzero) rows.append_row(row);
        }
      }
    }
  };
  add_conditions(false);
  add_conditions(true);

  QMat kern = rows.rows() ? q_kernel(rows) : QMat::identity(nf);
  for (std::size_t k = 0; k < kern.rows(); ++k) {
    BurnsideElt e(s, s, RingTag::Q());
    for (std::size_t j = 0; j < nf; ++j)
      if (kern.at(k, j) != 0) e.add_term(out.f_labels[j], kern.at(k, j));
    out.basis.push_back(std::move(e));
  }
  return out;
}

bool is_f_generated(const FusionSystem& f, const BurnsideElt& alpha) {
  for (const auto& [l, c] : alpha.terms()) {
    (void)c;
    const std::size_t ui = f.object_index(Subgroup(f.S(), l.u));
    if (!f.has_morphism(ui, f.full_object_index(), l.phi)) return false;
  }
  return true;
}

namespace {

bool is_stable_side(const FusionSystem& f, const BurnsideElt& alpha, bool left_side) {
  const RestrictionClasses rc = restriction_classes(f);
  for (std::size_t pi = 0; pi < f.num_objects(); ++pi) {
    BurnsideElt r_incl = BurnsideElt::from_label(rc.inclusion[pi], RingTag::Q());
    BurnsideElt t_incl = r_incl.opposite();
    for (const BisetLabel& lphi : rc.twisted[pi]) {
      BurnsideElt r_phi = BurnsideElt::from_label(lphi, RingTag::Q());
      if (left_side) {
        if (!(tensor_compose(r_phi.opposite(), alpha) == tensor_compose(t_incl, alpha)))
          return false;
      } else {
        if (!(tensor_compose(alpha, r_phi) == tensor_compose(alpha, r_incl))) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_right_f_stable(const FusionSystem& f, const BurnsideElt& alpha) {
  return is_stable_side(f, alpha, false);
}

bool is_left_f_stable(const FusionSystem& f, const BurnsideElt& alpha) {
  return is_stable_side(f, alpha, true);
}

std::string CharIdem::str() const {
  std::string s = "omega = " + element.str();
  s += "\n  size = " + size.str();
  s += "\n  certificates: idempotent=" + std::string(idempotent ? "yes" : "no");
  s += " f_generated=" + std::string(f_generated ? "yes" : "no");
  s += " two_sided_stable=" + std::string(two_sided_stable ? "yes" : "no");
  s += " p_locally_integral=" + std::string(p_integral ? "yes" : "no");
  s += " unique_identity=" + std::string(unique_identity ? "yes" : "no");
  return s;
}

CharIdem characteristic_idempotent(const FusionSystem& f) {
  const GroupPtr& s = f.S();
  StableSubalgebra alg = f_generated_stable_subalgebra(f);
  const std::size_t r = alg.basis.size();
  check(r > 0, "stable subalgebra is zero; no identity exists");
  const std::size_t m = alg.full_basis.size();

  std::map<BisetLabel, std::size_t> full_index;
  for (std::size_t i = 0; i < m; ++i) full_index[alg.full_basis[i]] = i;
  auto coords = [&](const BurnsideElt& e) {
    std::vector<Rational> v(m);
    for (const auto& [l, c] : e.terms()) v[full_index.at(l)] = c;
    return v;
  };

  // products basis x basis, each computed once
  std::vector<std::vector<std::vector<Rational>>> prod(
      r, std::vector<std::vector<Rational>>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      prod[i][j] = coords(tensor_compose(alg.basis[i], alg.basis[j]));

  // solve e o b_j = b_j and b_j o e = b_j for e = sum y_k b_k
  QMat lhs(0, r);
  std::vector<Rational> rhs_all;
  for (std::size_t j = 0; j < r; ++j) {
    const std::vector<Rational> bj = coords(alg.basis[j]);
    for (std::size_t t = 0; t < m; ++t) {
      std::vector<Rational> row(r);
      for (std::size_t k = 0; k < r; ++k) row[k] = prod[k][j][t];
      lhs.append_row(row);
      rhs_all.push_back(bj[t]);
    }
    for (std::size_t t = 0; t < m; ++t) {
      std::vector<Rational> row(r);
      for (std::size_t k = 0; k < r; ++k) row[k] = prod[j][k][t];
      lhs.append_row(row);
      rhs_all.push_back(bj[t]);
    }
  }
  auto sol = q_solve(lhs, rhs_all);
  check(sol.has_value(), "stable subalgebra has no identity (non-saturated input or bug)");

  // uniqueness: the homogeneous system has trivial kernel on the subalgebra
  QMat hom = lhs;
  const std::size_t hom_kernel_dim = q_kernel(std::move(hom)).rows();

  CharIdem ci;
  ci.p = f.p();
  ci.element = BurnsideElt(s, s, RingTag::Q());
  for (std::size_t k = 0; k < r; ++k)
    if ((*sol)[k] != 0) {
      BurnsideElt scaled = alg.basis[k].scaled((*sol)[k]);
      ci.element = ci.element + scaled;
    }
  ci.unique_identity = hom_kernel_dim == 0;
  ci.idempotent = tensor_compose(ci.element, ci.element) == ci.element;
  ci.f_generated = is_f_generated(f, ci.element);
  ci.two_sided_stable = is_right_f_stable(f, ci.element) && is_left_f_stable(f, ci.element);
  ci.p_integral = ci.element.p_locally_integral(f.p());
  ci.size = ci.element.total_size();

  check(ci.idempotent, "identity candidate is not idempotent");
  check(ci.f_generated, "identity candidate is not F-generated");
  check(ci.two_sided_stable, "identity candidate is not two-sided F-stable");
  check(ci.p_integral, "characteristic idempotent not p-locally integral (bug)");
  check(ci.size == Rational(s->order()), "characteristic idempotent has wrong size");
  return ci;
}

}  // namespace fusys
