#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gncg {

/// Index of an element inside a GroupTable. Element 0 is always the identity.
using Elem = int;

/// How a GroupTable was constructed: family, parameter, canonical descriptor
/// string as accepted by the CLI (e.g. "D:12" for the dihedral group of
/// order 12, "Q:8", "A:4", "S:4", "C:6", "P:D:6xC:2").
struct GroupTag {
  enum class Family { Cyclic, Dihedral, Dicyclic, Alternating, Symmetric, Product };
  Family family = Family::Cyclic;
  int param = 0;
  std::string descriptor;
};

struct SizeCapError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Immutable finite group stored as an order x order multiplication table.
///
/// Construction validates the table: Latin square, identity row/column,
/// two-sided inverses, and associativity (exhaustive up to order 64,
/// deterministically sampled above that). A table that fails any check
/// throws; nothing downstream ever sees a malformed group.
class GroupTable {
 public:
  static constexpr Elem identity = 0;

  GroupTable(int order, std::vector<Elem> mul, std::vector<std::string> names, GroupTag tag)
      : order_(order), mul_(std::move(mul)), names_(std::move(names)), tag_(std::move(tag)) {
    if (order_ <= 0) throw std::invalid_argument("group order must be positive");
    if (mul_.size() != static_cast<std::size_t>(order_) * order_)
      throw std::invalid_argument("multiplication table has wrong size");
    if (names_.size() != static_cast<std::size_t>(order_))
      throw std::invalid_argument("name table has wrong size");
    validate_table();
    build_inverses();
    build_name_maps();
  }

  int order() const noexcept { return order_; }

  Elem mul(Elem x, Elem y) const { return mul_[static_cast<std::size_t>(x) * order_ + y]; }

  Elem inv(Elem x) const { return inv_[static_cast<std::size_t>(x)]; }

  /// x^k for any integer k (negative exponents go through the inverse).
  Elem power(Elem x, long k) const {
    if (k < 0) return power(inv(x), -k);
    Elem acc = identity;
    for (long i = 0; i < k; ++i) acc = mul(acc, x);
    return acc;
  }

  /// by^-1 * x * by
  Elem conjugate(Elem x, Elem by) const { return mul(mul(inv(by), x), by); }

  /// [x, y] = x^-1 y^-1 x y
  Elem commutator(Elem x, Elem y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }

  /// Smallest k >= 1 with x^k = 1.
  int element_order(Elem x) const {
    Elem acc = x;
    int k = 1;
    while (acc != identity) {
      acc = mul(acc, x);
      if (++k > order_) throw std::logic_error("element order exceeds group order");
    }
    return k;
  }

  bool is_central(Elem x) const {
    for (Elem y = 0; y < order_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
    return true;
  }

  bool is_abelian() const {
    for (Elem x = 0; x < order_; ++x)
      if (!is_central(x)) return false;
    return true;
  }

  const std::string& name(Elem x) const { return names_[static_cast<std::size_t>(x)]; }

  /// Strict name lookup. Falls back to a caret-insensitive match ("a2" finds
  /// "a^2") when the exact form is absent; an ambiguous fallback fails.
  std::optional<Elem> element_by_name(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it != by_name_.end()) return it->second;
    std::string stripped = strip_carets(name);
    auto jt = by_stripped_name_.find(stripped);
    if (jt != by_stripped_name_.end() && jt->second >= 0) return jt->second;
    return std::nullopt;
  }

  const GroupTag& tag() const noexcept { return tag_; }

 private:
  static std::string strip_carets(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s)
      if (c != '^') out.push_back(c);
    return out;
  }

  void validate_table() {
    const int n = order_;
    for (std::size_t i = 0; i < mul_.size(); ++i)
      if (mul_[i] < 0 || mul_[i] >= n) throw std::invalid_argument("table entry out of range");
    // Latin square: each row and column is a permutation.
    std::vector<char> seen(static_cast<std::size_t>(n));
    for (Elem x = 0; x < n; ++x) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Elem y = 0; y < n; ++y) {
        Elem p = mul(x, y);
        if (seen[static_cast<std::size_t>(p)]) throw std::invalid_argument("row is not a permutation");
        seen[static_cast<std::size_t>(p)] = 1;
      }
    }
    for (Elem y = 0; y < n; ++y) {
      std::fill(seen.begin(), seen.end(), 0);
      for (Elem x = 0; x < n; ++x) {
        Elem p = mul(x, y);
        if (seen[static_cast<std::size_t>(p)]) throw std::invalid_argument("column is not a permutation");
        seen[static_cast<std::size_t>(p)] = 1;
      }
    }
    for (Elem x = 0; x < n; ++x)
      if (mul(identity, x) != x || mul(x, identity) != x)
        throw std::invalid_argument("element 0 is not the identity");
    if (n <= 64) {
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          for (Elem z = 0; z < n; ++z)
            if (mul(mul(x, y), z) != mul(x, mul(y, z)))
              throw std::invalid_argument("multiplication is not associative");
    } else {
      // Deterministic sample: 32 evenly spread elements, all triples among them.
      std::vector<Elem> s;
      for (int t = 0; t < 32; ++t) {
        Elem e = static_cast<Elem>(static_cast<long>(t) * (n - 1) / 31);
        if (s.empty() || s.back() != e) s.push_back(e);
      }
      for (Elem x : s)
        for (Elem y : s)
          for (Elem z : s)
            if (mul(mul(x, y), z) != mul(x, mul(y, z)))
              throw std::invalid_argument("multiplication is not associative (sampled)");
    }
  }

  void build_inverses() {
    inv_.assign(static_cast<std::size_t>(order_), identity);
    for (Elem x = 0; x < order_; ++x) {
      Elem found = -1;
      for (Elem y = 0; y < order_; ++y)
        if (mul(x, y) == identity) {
          found = y;
          break;
        }
      if (found < 0 || mul(found, x) != identity)
        throw std::invalid_argument("element lacks a two-sided inverse");
      inv_[static_cast<std::size_t>(x)] = found;
    }
  }

  void build_name_maps() {
    for (Elem x = 0; x < order_; ++x) {
      if (names_[static_cast<std::size_t>(x)].empty())
        throw std::invalid_argument("empty element name");
      if (!by_name_.emplace(names_[static_cast<std::size_t>(x)], x).second)
        throw std::invalid_argument("duplicate element name: " + names_[static_cast<std::size_t>(x)]);
    }
    for (Elem x = 0; x < order_; ++x) {
      std::string stripped = strip_carets(names_[static_cast<std::size_t>(x)]);
      auto [it, inserted] = by_stripped_name_.emplace(stripped, x);
      if (!inserted) it->second = -1;  // ambiguous under caret-insensitive lookup
    }
  }

  int order_;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
  std::vector<std::string> names_;
  GroupTag tag_;
  std::unordered_map<std::string, Elem> by_name_;
  std::unordered_map<std::string, Elem> by_stripped_name_;
};

/// An element-index set inside a GroupTable, closed under product and inverse.
struct Subgroup {
  std::vector<Elem> members;  // sorted ascending, always contains 0
  int parent_order = 0;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(Elem x) const { return std::binary_search(members.begin(), members.end(), x); }
  bool operator==(const Subgroup& o) const { return members == o.members; }
};

/// Throws unless H is a genuine subgroup of G (identity, closure, inverses,
/// Lagrange).
inline void validate_subgroup(const GroupTable& g, const Subgroup& h) {
  if (h.parent_order != g.order()) throw std::invalid_argument("subgroup belongs to a different group");
  if (h.members.empty() || h.members.front() != GroupTable::identity)
    throw std::invalid_argument("subgroup must contain the identity");
  if (!std::is_sorted(h.members.begin(), h.members.end()) ||
      std::adjacent_find(h.members.begin(), h.members.end()) != h.members.end())
    throw std::invalid_argument("subgroup members must be sorted and unique");
  for (Elem x : h.members) {
    if (x < 0 || x >= g.order()) throw std::invalid_argument("subgroup member out of range");
    if (!h.contains(g.inv(x))) throw std::invalid_argument("subgroup not closed under inverse");
    for (Elem y : h.members)
      if (!h.contains(g.mul(x, y))) throw std::invalid_argument("subgroup not closed under product");
  }
  if (g.order() % h.size() != 0) throw std::invalid_argument("subgroup order does not divide group order");
}

inline Subgroup trivial_subgroup(const GroupTable& g) {
  return Subgroup{{GroupTable::identity}, g.order()};
}

inline Subgroup full_subgroup(const GroupTable& g) {
  Subgroup h;
  h.parent_order = g.order();
  h.members.resize(static_cast<std::size_t>(g.order()));
  for (Elem x = 0; x < g.order(); ++x) h.members[static_cast<std::size_t>(x)] = x;
  return h;
}

struct ElementInfo {
  Elem index = 0;
  int order = 1;
  bool is_central = false;
};

inline ElementInfo element_info(const GroupTable& g, Elem x) {
  return ElementInfo{x, g.element_order(x), g.is_central(x)};
}

/// C_S(x) = { s in S : sx = xs }.
inline Subgroup centralizer_in(const GroupTable& g, Elem x, const Subgroup& s) {
  Subgroup c;
  c.parent_order = g.order();
  for (Elem y : s.members)
    if (g.mul(x, y) == g.mul(y, x)) c.members.push_back(y);
  return c;
}

/// C_G(x).
inline Subgroup centralizer(const GroupTable& g, Elem x) {
  Subgroup c;
  c.parent_order = g.order();
  for (Elem y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) c.members.push_back(y);
  return c;
}

/// Z(G).
inline Subgroup center(const GroupTable& g) {
  Subgroup z;
  z.parent_order = g.order();
  for (Elem x = 0; x < g.order(); ++x)
    if (g.is_central(x)) z.members.push_back(x);
  return z;
}

/// Z(H, G) = { x in H : xy = yx for all y in G }. Equals H intersected with Z(G).
inline Subgroup relative_center(const GroupTable& g, const Subgroup& h) {
  Subgroup z;
  z.parent_order = g.order();
  for (Elem x : h.members)
    if (g.is_central(x)) z.members.push_back(x);
  return z;
}

/// K(H, G) = { [x, y] : x in H, y in G or x in G, y in H }, as a sorted set.
/// Symmetric in the two slots, hence closed under inversion.
inline std::vector<Elem> commutator_set(const GroupTable& g, const Subgroup& h) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Elem x : h.members)
    for (Elem y = 0; y < g.order(); ++y) {
      seen[static_cast<std::size_t>(g.commutator(x, y))] = 1;
      seen[static_cast<std::size_t>(g.commutator(y, x))] = 1;
    }
  std::vector<Elem> out;
  for (Elem e = 0; e < g.order(); ++e)
    if (seen[static_cast<std::size_t>(e)]) out.push_back(e);
  return out;
}

/// True iff s^-1 x s = y for some s in the given conjugator set.
inline bool is_conjugate_via(const GroupTable& g, Elem x, Elem y, const std::vector<Elem>& conjugators) {
  for (Elem s : conjugators)
    if (g.conjugate(x, s) == y) return true;
  return false;
}

/// Multiset of element orders, sorted. An isomorphism-invariant fingerprint;
/// equality is necessary (not sufficient) for isomorphism.
inline std::vector<int> order_multiset(const GroupTable& g) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (Elem x = 0; x < g.order(); ++x) out.push_back(g.element_order(x));
  std::sort(out.begin(), out.end());
  return out;
}

/// Conjugacy classes, each sorted, listed by smallest member.
inline std::vector<std::vector<Elem>> conjugacy_classes(const GroupTable& g) {
  std::vector<char> done(static_cast<std::size_t>(g.order()), 0);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < g.order(); ++x) {
    if (done[static_cast<std::size_t>(x)]) continue;
    std::vector<char> in_class(static_cast<std::size_t>(g.order()), 0);
    for (Elem s = 0; s < g.order(); ++s) in_class[static_cast<std::size_t>(g.conjugate(x, s))] = 1;
    std::vector<Elem> cls;
    for (Elem y = 0; y < g.order(); ++y)
      if (in_class[static_cast<std::size_t>(y)]) {
        cls.push_back(y);
        done[static_cast<std::size_t>(y)] = 1;
      }
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace detail {

constexpr int kMaxGroupOrder = 200;

inline std::string power_name(std::string_view base, int e, bool reflected) {
  std::string out;
  if (e == 1) {
    out = std::string(base);
  } else if (e >= 2) {
    out = std::string(base) + "^" + std::to_string(e);
  }
  if (reflected) out += "b";
  if (out.empty()) out = "1";
  return out;
}

using Perm = std::vector<std::uint8_t>;

inline Perm perm_identity(int k) {
  Perm p(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  return p;
}

/// (p * q)(i) = p(q(i)): q acts first.
inline Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline bool perm_is_even(const Perm& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

/// Cycle notation with 1-based points: "1", "(123)", "(12)(34)".
inline std::string perm_cycle_name(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out.push_back('(');
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      out += std::to_string(j + 1);
      j = p[j];
    }
    out.push_back(')');
  }
  return out.empty() ? "1" : out;
}

inline GroupTable permutation_group(std::vector<Perm> elems, std::vector<std::string> names, GroupTag tag) {
  const int n = static_cast<int>(elems.size());
  std::unordered_map<std::string, Elem> index;
  auto key = [](const Perm& p) {
    return std::string(reinterpret_cast<const char*>(p.data()), p.size());
  };
  for (Elem i = 0; i < n; ++i)
    if (!index.emplace(key(elems[static_cast<std::size_t>(i)]), i).second)
      throw std::invalid_argument("duplicate permutation in group construction");
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      Perm prod = perm_compose(elems[static_cast<std::size_t>(x)], elems[static_cast<std::size_t>(y)]);
      auto it = index.find(key(prod));
      if (it == index.end()) throw std::invalid_argument("permutation set not closed under composition");
      mul[static_cast<std::size_t>(x) * n + y] = it->second;
    }
  return GroupTable(n, std::move(mul), std::move(names), std::move(tag));
}

}  // namespace detail

/// Dihedral group of order 2n, n >= 3:
///   <a, b : a^n = b^2 = 1, b a b^-1 = a^-1>.
/// Element layout: a^i at index i, a^i b at index n + i.
inline GroupTable make_dihedral(int n) {
  if (n < 3) throw std::invalid_argument("dihedral parameter must satisfy n >= 3");
  if (2 * n > detail::kMaxGroupOrder) throw SizeCapError("dihedral group exceeds the order cap");
  const int order = 2 * n;
  std::vector<Elem> mul(static_cast<std::size_t>(order) * order);
  auto at = [n](int i, int f) { return f ? n + i : i; };
  for (int i = 0; i < n; ++i)
    for (int f = 0; f < 2; ++f)
      for (int j = 0; j < n; ++j)
        for (int h = 0; h < 2; ++h) {
          int rot = f ? (i - j + n) % n : (i + j) % n;
          mul[static_cast<std::size_t>(at(i, f)) * order + at(j, h)] = at(rot, f ^ h);
        }
  std::vector<std::string> names(static_cast<std::size_t>(order));
  for (int i = 0; i < n; ++i) {
    names[static_cast<std::size_t>(at(i, 0))] = detail::power_name("a", i, false);
    names[static_cast<std::size_t>(at(i, 1))] = detail::power_name("a", i, true);
  }
  GroupTable g(order, std::move(mul), std::move(names),
               GroupTag{GroupTag::Family::Dihedral, n, "D:" + std::to_string(order)});
  const Elem a = 1, b = n;
  if (g.power(a, n) != GroupTable::identity || g.power(b, 2) != GroupTable::identity ||
      g.mul(g.mul(b, a), g.inv(b)) != g.inv(a))
    throw std::logic_error("dihedral presentation check failed");
  return g;
}

/// Dicyclic group of order 4m, m >= 2:
///   <a, b : a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1>.
/// m = 2 gives the quaternion group Q8. Layout as in make_dihedral with 2m
/// rotations.
inline GroupTable make_dicyclic(int m) {
  if (m < 2) throw std::invalid_argument("dicyclic parameter must satisfy m >= 2");
  if (4 * m > detail::kMaxGroupOrder) throw SizeCapError("dicyclic group exceeds the order cap");
  const int nrot = 2 * m;
  const int order = 4 * m;
  std::vector<Elem> mul(static_cast<std::size_t>(order) * order);
  auto at = [nrot](int i, int f) { return f ? nrot + i : i; };
  for (int i = 0; i < nrot; ++i)
    for (int f = 0; f < 2; ++f)
      for (int j = 0; j < nrot; ++j)
        for (int h = 0; h < 2; ++h) {
          int rot = f ? (i - j + nrot) % nrot : (i + j) % nrot;
          int flip = f ^ h;
          if (f && h) rot = (rot + m) % nrot;  // b^2 = a^m
          mul[static_cast<std::size_t>(at(i, f)) * order + at(j, h)] = at(rot, flip);
        }
  std::vector<std::string> names(static_cast<std::size_t>(order));
  for (int i = 0; i < nrot; ++i) {
    names[static_cast<std::size_t>(at(i, 0))] = detail::power_name("a", i, false);
    names[static_cast<std::size_t>(at(i, 1))] = detail::power_name("a", i, true);
  }
  GroupTable g(order, std::move(mul), std::move(names),
               GroupTag{GroupTag::Family::Dicyclic, m, "Q:" + std::to_string(order)});
  const Elem a = 1, b = nrot;
  if (g.power(a, 2 * m) != GroupTable::identity || g.power(b, 2) != g.power(a, m) ||
      g.mul(g.mul(b, a), g.inv(b)) != g.inv(a))
    throw std::logic_error("dicyclic presentation check failed");
  return g;
}

/// Cyclic group of order k, elements named 1, c, c^2, ...
inline GroupTable make_cyclic(int k) {
  if (k < 1) throw std::invalid_argument("cyclic parameter must satisfy k >= 1");
  if (k > detail::kMaxGroupOrder) throw SizeCapError("cyclic group exceeds the order cap");
  std::vector<Elem> mul(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) mul[static_cast<std::size_t>(i) * k + j] = (i + j) % k;
  std::vector<std::string> names(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) names[static_cast<std::size_t>(i)] = detail::power_name("c", i, false);
  return GroupTable(k, std::move(mul), std::move(names),
                    GroupTag{GroupTag::Family::Cyclic, k, "C:" + std::to_string(k)});
}

/// Symmetric group S_k, 1 <= k <= 5, permutations in lexicographic order,
/// cycle-notation names.
inline GroupTable make_symmetric(int k) {
  if (k < 1 || k > 5) throw std::invalid_argument("symmetric parameter must satisfy 1 <= k <= 5");
  detail::Perm p = detail::perm_identity(k);
  std::vector<detail::Perm> elems;
  std::vector<std::string> names;
  do {
    elems.push_back(p);
    names.push_back(detail::perm_cycle_name(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return detail::permutation_group(std::move(elems), std::move(names),
                                   GroupTag{GroupTag::Family::Symmetric, k, "S:" + std::to_string(k)});
}

/// Alternating group A_k, 3 <= k <= 6. For k = 4 the element order and names
/// follow the presentation <a, b : a^2 = b^3 = (ab)^3 = 1> with a = (12)(34)
/// and b = (123); other k use lexicographic order and cycle notation.
inline GroupTable make_alternating(int k) {
  if (k < 3 || k > 6) throw std::invalid_argument("alternating parameter must satisfy 3 <= k <= 6");
  if (k == 4) {
    const detail::Perm pa = {1, 0, 3, 2};  // (12)(34)
    const detail::Perm pb = {1, 2, 0, 3};  // (123)
    const std::vector<std::pair<std::string, std::string>> words = {
        {"1", ""},        {"a", "a"},       {"b", "b"},       {"b^2", "bb"},
        {"ab", "ab"},     {"ba", "ba"},     {"aba", "aba"},   {"b^2a", "bba"},
        {"ab^2", "abb"},  {"bab^2", "babb"}, {"b^2ab", "bbab"}, {"ab^2a", "abba"}};
    std::vector<detail::Perm> elems;
    std::vector<std::string> names;
    for (const auto& [name, word] : words) {
      detail::Perm cur = detail::perm_identity(4);
      for (char c : word) cur = detail::perm_compose(cur, c == 'a' ? pa : pb);
      elems.push_back(std::move(cur));
      names.push_back(name);
    }
    GroupTable g = detail::permutation_group(std::move(elems), std::move(names),
                                             GroupTag{GroupTag::Family::Alternating, 4, "A:4"});
    const Elem a = 1, b = 2;
    if (g.power(a, 2) != GroupTable::identity || g.power(b, 3) != GroupTable::identity ||
        g.power(g.mul(a, b), 3) != GroupTable::identity)
      throw std::logic_error("A4 presentation check failed");
    return g;
  }
  detail::Perm p = detail::perm_identity(k);
  std::vector<detail::Perm> elems;
  std::vector<std::string> names;
  do {
    if (!detail::perm_is_even(p)) continue;
    elems.push_back(p);
    names.push_back(detail::perm_cycle_name(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return detail::permutation_group(std::move(elems), std::move(names),
                                   GroupTag{GroupTag::Family::Alternating, k, "A:" + std::to_string(k)});
}

/// Direct product G1 x G2; element (x, y) at index x * |G2| + y.
inline GroupTable direct_product(const GroupTable& g1, const GroupTable& g2) {
  const long order = static_cast<long>(g1.order()) * g2.order();
  if (order > detail::kMaxGroupOrder) throw SizeCapError("direct product exceeds the order cap");
  const int n = static_cast<int>(order);
  const int n2 = g2.order();
  std::vector<Elem> mul(static_cast<std::size_t>(n) * n);
  for (Elem x1 = 0; x1 < g1.order(); ++x1)
    for (Elem x2 = 0; x2 < n2; ++x2)
      for (Elem y1 = 0; y1 < g1.order(); ++y1)
        for (Elem y2 = 0; y2 < n2; ++y2)
          mul[static_cast<std::size_t>(x1 * n2 + x2) * n + (y1 * n2 + y2)] =
              g1.mul(x1, y1) * n2 + g2.mul(x2, y2);
  std::vector<std::string> names(static_cast<std::size_t>(n));
  for (Elem x1 = 0; x1 < g1.order(); ++x1)
    for (Elem x2 = 0; x2 < n2; ++x2)
      names[static_cast<std::size_t>(x1 * n2 + x2)] = "(" + g1.name(x1) + "," + g2.name(x2) + ")";
  return GroupTable(n, std::move(mul), std::move(names),
                    GroupTag{GroupTag::Family::Product, 0,
                             "P:" + g1.tag().descriptor + "x" + g2.tag().descriptor});
}

}  // namespace gncg
