#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gncg/group.hpp"
#include "gncg/subgroup_enum.hpp"

namespace gncg {

struct DescriptorError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NameLookupError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline int parse_int(std::string_view s, std::size_t& pos) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
  if (ec != std::errc() || ptr == s.data() + pos)
    throw DescriptorError("expected a number in group descriptor at offset " + std::to_string(pos));
  pos = static_cast<std::size_t>(ptr - s.data());
  return value;
}

inline GroupTable parse_group_at(std::string_view s, std::size_t& pos) {
  if (pos >= s.size()) throw DescriptorError("empty group descriptor");
  char fam = s[pos];
  if (pos + 1 >= s.size() || s[pos + 1] != ':')
    throw DescriptorError("group descriptor must look like D:12, Q:8, A:4, S:4, C:6 or P:<desc>x<desc>");
  pos += 2;
  switch (fam) {
    case 'D': {
      int order = parse_int(s, pos);
      if (order < 6 || order % 2 != 0)
        throw DescriptorError("dihedral descriptor D:k needs even k >= 6");
      return make_dihedral(order / 2);
    }
    case 'Q': {
      int order = parse_int(s, pos);
      if (order < 8 || order % 4 != 0)
        throw DescriptorError("dicyclic descriptor Q:k needs k >= 8 divisible by 4");
      return make_dicyclic(order / 4);
    }
    case 'A':
      return make_alternating(parse_int(s, pos));
    case 'S':
      return make_symmetric(parse_int(s, pos));
    case 'C':
      return make_cyclic(parse_int(s, pos));
    case 'P': {
      GroupTable left = parse_group_at(s, pos);
      if (pos >= s.size() || s[pos] != 'x')
        throw DescriptorError("product descriptor needs the form P:<desc>x<desc>");
      ++pos;
      GroupTable right = parse_group_at(s, pos);
      return direct_product(left, right);
    }
    default:
      throw DescriptorError(std::string("unknown group family '") + fam + "'");
  }
}

}  // namespace detail

/// Build a group from a descriptor string: "D:12" (dihedral of order 12),
/// "Q:8", "A:4", "S:4", "C:6", "P:D:6xC:2".
inline GroupTable make_group(std::string_view descriptor) {
  std::size_t pos = 0;
  GroupTable g = detail::parse_group_at(descriptor, pos);
  if (pos != descriptor.size())
    throw DescriptorError("trailing characters in group descriptor: " + std::string(descriptor.substr(pos)));
  return g;
}

/// Element lookup by display name; "a2" is accepted for "a^2".
inline Elem parse_element(const GroupTable& g, std::string_view name) {
  if (auto e = g.element_by_name(name)) return *e;
  throw NameLookupError("unknown element name '" + std::string(name) + "' in " + g.tag().descriptor);
}

/// Subgroup selector: "all", "order:<k>", or "gen:<name>,<name>,...".
/// "all" and "order:" draw from the full catalog; "gen:" closes the listed
/// elements directly.
inline std::vector<Subgroup> select_subgroups(const GroupTable& g, std::string_view selector,
                                              int max_order = detail::kMaxGroupOrder) {
  if (selector == "all") {
    return enumerate_subgroups(g, max_order).subgroups;
  }
  if (selector.rfind("order:", 0) == 0) {
    std::size_t pos = 6;
    int k = detail::parse_int(selector, pos);
    if (pos != selector.size()) throw DescriptorError("bad subgroup selector: " + std::string(selector));
    SubgroupCatalog catalog = enumerate_subgroups(g, max_order);
    std::vector<Subgroup> out;
    auto it = catalog.by_order.find(k);
    if (it != catalog.by_order.end())
      for (std::size_t idx : it->second) out.push_back(catalog.subgroups[idx]);
    return out;
  }
  if (selector.rfind("gen:", 0) == 0) {
    std::vector<Elem> gens;
    std::string_view rest = selector.substr(4);
    while (!rest.empty()) {
      std::size_t comma = rest.find(',');
      std::string_view tok = rest.substr(0, comma);
      if (tok.empty()) throw DescriptorError("empty generator name in selector");
      gens.push_back(parse_element(g, tok));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (gens.empty()) throw DescriptorError("gen: selector needs at least one element name");
    return {generated_subgroup(g, gens)};
  }
  throw DescriptorError("subgroup selector must be 'all', 'order:<k>' or 'gen:<names>'");
}

}  // namespace gncg
