#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gncg/delta.hpp"
#include "gncg/descriptor.hpp"
#include "gncg/subgroup_enum.hpp"

namespace gncg {

/// One (H, g) case of a sweep, plus the sort keys that pin row order.
struct SweepRow {
  std::string group;
  int h_size = 0;
  std::string h_gens;
  std::string g;
  std::string admissible;
  bool connected = false;
  std::optional<int> diameter;
  bool tree = false;
  bool star = false;
  std::size_t edges = 0;
  std::size_t isolated_count = 0;

  std::vector<Elem> h_members;
  Elem g_index = 0;
};

/// Evaluate every (H, g) case. g_selector: "all-admissible" (g in K(H,G)),
/// "all" (every element), or a single element name ("1" is the identity).
inline std::vector<SweepRow> sweep_rows(const GroupTable& gt, const std::vector<Subgroup>& subgroups,
                                        const std::string& g_selector) {
  std::vector<SweepRow> rows;
  for (const Subgroup& h : subgroups) {
    DeltaGraphSpec base = make_delta_spec(gt, h, GroupTable::identity);
    std::vector<Elem> gs;
    if (g_selector == "all-admissible")
      gs = base.k_hg;
    else if (g_selector == "all")
      for (Elem e = 0; e < gt.order(); ++e) gs.push_back(e);
    else
      gs.push_back(parse_element(gt, g_selector));
    std::string gens;
    for (Elem e : minimal_generators(gt, h)) {
      if (!gens.empty()) gens += " ";
      gens += gt.name(e);
    }
    for (Elem e : gs) {
      DeltaGraphSpec spec = with_g(base, e);
      GraphReport rep = analyze(build_delta(spec));
      SweepRow row;
      row.group = gt.tag().descriptor;
      row.h_size = h.size();
      row.h_gens = gens;
      row.g = gt.name(e);
      row.admissible = std::string(to_string(admissibility(spec)));
      row.connected = rep.connected;
      row.diameter = rep.diameter;
      row.tree = rep.is_tree;
      row.star = rep.is_star;
      row.edges = rep.n_edges;
      row.isolated_count = rep.isolated.size();
      row.h_members = h.members;
      row.g_index = e;
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.h_size != b.h_size) return a.h_size < b.h_size;
    if (a.h_members != b.h_members) return a.h_members < b.h_members;
    return a.g_index < b.g_index;
  });
  return rows;
}

/// Fixed column order; byte-identical output for identical input.
inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "group,h_size,h_gens,g,admissible,connected,diameter,tree,star,edges,isolated_count\n";
  for (const SweepRow& r : rows) {
    os << r.group << ',' << r.h_size << ',' << r.h_gens << ',' << r.g << ',' << r.admissible << ','
       << (r.connected ? "true" : "false") << ','
       << (r.diameter ? std::to_string(*r.diameter) : "inf") << ',' << (r.tree ? "true" : "false")
       << ',' << (r.star ? "true" : "false") << ',' << r.edges << ',' << r.isolated_count << '\n';
  }
  return os.str();
}

}  // namespace gncg
