#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "gncg/graph.hpp"
#include "gncg/group.hpp"

namespace gncg {

/// The triple (G, H, g) together with the derived sets Z(H,G) and K(H,G).
/// The graph it realizes has vertex set G \ Z(H,G); distinct x, y are
/// adjacent iff (x in H or y in H) and [x,y] is neither g nor g^-1.
struct DeltaGraphSpec {
  const GroupTable* group = nullptr;
  Subgroup subgroup;        // H
  Elem g = GroupTable::identity;
  Subgroup z_hg;            // Z(H,G)
  std::vector<Elem> k_hg;   // K(H,G), sorted
};

inline DeltaGraphSpec make_delta_spec(const GroupTable& g, Subgroup h, Elem el) {
  if (el < 0 || el >= g.order()) throw std::invalid_argument("g is not a valid element index");
  validate_subgroup(g, h);
  DeltaGraphSpec spec;
  spec.group = &g;
  spec.z_hg = relative_center(g, h);
  spec.k_hg = commutator_set(g, h);
  spec.subgroup = std::move(h);
  spec.g = el;
  return spec;
}

/// Same (G, H) with a different g; reuses the cached derived sets.
inline DeltaGraphSpec with_g(const DeltaGraphSpec& spec, Elem el) {
  if (el < 0 || el >= spec.group->order()) throw std::invalid_argument("g is not a valid element index");
  DeltaGraphSpec out = spec;
  out.g = el;
  return out;
}

enum class Admissibility { Admissible, HEqualsRelCenter, GNotInK };

inline Admissibility admissibility(const DeltaGraphSpec& spec) {
  if (spec.z_hg.size() == spec.subgroup.size()) return Admissibility::HEqualsRelCenter;
  if (!std::binary_search(spec.k_hg.begin(), spec.k_hg.end(), spec.g)) return Admissibility::GNotInK;
  return Admissibility::Admissible;
}

inline std::string_view to_string(Admissibility a) {
  switch (a) {
    case Admissibility::Admissible: return "admissible";
    case Admissibility::HEqualsRelCenter: return "h-equals-rel-center";
    case Admissibility::GNotInK: return "g-not-in-k";
  }
  return "?";
}

/// Realize the graph. The adjacency predicate is evaluated independently for
/// every ordered pair; the UGraph constructor rejects the result if it is not
/// symmetric, so symmetry is a checked consequence of {g, g^-1} being closed
/// under inversion, not something imposed here.
inline UGraph build_delta(const DeltaGraphSpec& spec) {
  const GroupTable& gt = *spec.group;
  std::vector<char> in_h(static_cast<std::size_t>(gt.order()), 0);
  for (Elem m : spec.subgroup.members) in_h[static_cast<std::size_t>(m)] = 1;
  std::vector<Elem> labels;
  for (Elem x = 0; x < gt.order(); ++x)
    if (!spec.z_hg.contains(x)) labels.push_back(x);
  const int n = static_cast<int>(labels.size());
  const Elem g = spec.g;
  const Elem ginv = gt.inv(g);
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Elem x = labels[static_cast<std::size_t>(i)];
      Elem y = labels[static_cast<std::size_t>(j)];
      if (!in_h[static_cast<std::size_t>(x)] && !in_h[static_cast<std::size_t>(y)]) continue;
      Elem c = gt.commutator(x, y);
      adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (c != g && c != ginv);
    }
  return UGraph(std::move(labels), std::move(adj));
}

/// True iff the graphs for g and g^-1 have identical adjacency.
inline bool symmetry_check(const DeltaGraphSpec& spec) {
  UGraph a = build_delta(spec);
  UGraph b = build_delta(with_g(spec, spec.group->inv(spec.g)));
  return a.labels() == b.labels() && a.adjacency() == b.adjacency();
}

/// Which stated degree formula applies to a vertex.
enum class DegreeCase {
  InHIdentityG,        // x in H, g = 1
  InHConjugateOne,     // x in H, g^2 != 1, x conjugate to exactly one of xg, xg^-1
  InHConjugateBoth,    // x in H, g^2 != 1, x conjugate to both
  InHInvolutionConj,   // x in H, g != 1 = g^2, x conjugate to xg
  OutHIdentityG,       // x not in H, g = 1
  OutHConjugateOne,    // x not in H, g^2 != 1, conjugate via H to exactly one
  OutHConjugateBoth,   // x not in H, g^2 != 1, conjugate via H to both
  OutHInvolutionConj,  // x not in H, g != 1 = g^2, conjugate via H to xg
};

inline std::string_view to_string(DegreeCase c) {
  switch (c) {
    case DegreeCase::InHIdentityG: return "in-h-g1";
    case DegreeCase::InHConjugateOne: return "in-h-conj-one";
    case DegreeCase::InHConjugateBoth: return "in-h-conj-both";
    case DegreeCase::InHInvolutionConj: return "in-h-involution";
    case DegreeCase::OutHIdentityG: return "out-h-g1";
    case DegreeCase::OutHConjugateOne: return "out-h-conj-one";
    case DegreeCase::OutHConjugateBoth: return "out-h-conj-both";
    case DegreeCase::OutHInvolutionConj: return "out-h-involution";
  }
  return "?";
}

struct FormulaDegree {
  int value = 0;
  DegreeCase degree_case = DegreeCase::InHIdentityG;
};

/// Vertex degree predicted by the stated formulas, or nothing when no stated
/// case applies (g != 1 and the required conjugacy fails). Conjugacy of x to
/// xg is tested over all of G when x in H, and over H when x is outside H.
/// Throws when x is not a vertex.
inline std::optional<FormulaDegree> degree_by_formula(const DeltaGraphSpec& spec, Elem x) {
  const GroupTable& gt = *spec.group;
  if (x < 0 || x >= gt.order()) throw std::invalid_argument("x is not a valid element index");
  if (spec.z_hg.contains(x)) throw std::invalid_argument("x lies in Z(H,G) and is not a vertex");
  const Elem g = spec.g;
  const int zsize = spec.z_hg.size();
  const bool in_h = spec.subgroup.contains(x);
  const Elem xg = gt.mul(x, g);
  const Elem xginv = gt.mul(x, gt.inv(g));
  if (in_h) {
    const int c = centralizer(gt, x).size();
    if (g == GroupTable::identity)
      return FormulaDegree{gt.order() - c, DegreeCase::InHIdentityG};
    std::vector<Elem> all = full_subgroup(gt).members;
    const bool to_xg = is_conjugate_via(gt, x, xg, all);
    const bool to_xginv = is_conjugate_via(gt, x, xginv, all);
    if (gt.mul(g, g) == GroupTable::identity) {
      if (to_xg) return FormulaDegree{gt.order() - zsize - c - 1, DegreeCase::InHInvolutionConj};
      return std::nullopt;
    }
    if (to_xg && to_xginv)
      return FormulaDegree{gt.order() - zsize - 2 * c - 1, DegreeCase::InHConjugateBoth};
    if (to_xg || to_xginv)
      return FormulaDegree{gt.order() - zsize - c - 1, DegreeCase::InHConjugateOne};
    return std::nullopt;
  }
  const int c = centralizer_in(gt, x, spec.subgroup).size();
  const int hsize = spec.subgroup.size();
  if (g == GroupTable::identity)
    return FormulaDegree{hsize - c, DegreeCase::OutHIdentityG};
  const bool to_xg = is_conjugate_via(gt, x, xg, spec.subgroup.members);
  const bool to_xginv = is_conjugate_via(gt, x, xginv, spec.subgroup.members);
  if (gt.mul(g, g) == GroupTable::identity) {
    if (to_xg) return FormulaDegree{hsize - zsize - c, DegreeCase::OutHInvolutionConj};
    return std::nullopt;
  }
  if (to_xg && to_xginv)
    return FormulaDegree{hsize - zsize - 2 * c, DegreeCase::OutHConjugateBoth};
  if (to_xg || to_xginv)
    return FormulaDegree{hsize - zsize - c, DegreeCase::OutHConjugateOne};
  return std::nullopt;
}

}  // namespace gncg
