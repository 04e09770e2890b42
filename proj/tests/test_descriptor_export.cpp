#include <catch2/catch_amalgamated.hpp>

#include "gncg/descriptor.hpp"
#include "gncg/dot.hpp"
#include "gncg/subgroup_enum.hpp"
#include "gncg/sweep.hpp"

using namespace gncg;

TEST_CASE("group descriptors") {
  CHECK(make_group("D:12").order() == 12);
  CHECK(make_group("D:12").tag().family == GroupTag::Family::Dihedral);
  CHECK(make_group("Q:8").order() == 8);
  CHECK(make_group("A:4").order() == 12);
  CHECK(make_group("A:5").order() == 60);
  CHECK(make_group("S:4").order() == 24);
  CHECK(make_group("C:7").order() == 7);
  CHECK(make_group("P:D:6xC:2").order() == 12);
  CHECK(make_group("P:P:C:2xC:2xC:2").order() == 8);
  CHECK(make_group("P:C:2xP:C:2xC:2").order() == 8);
}

TEST_CASE("descriptor errors are specific") {
  CHECK_THROWS_AS(make_group("D:7"), DescriptorError);    // odd order
  CHECK_THROWS_AS(make_group("D:4"), DescriptorError);    // below n = 3
  CHECK_THROWS_AS(make_group("Q:10"), DescriptorError);   // not divisible by 4
  CHECK_THROWS_AS(make_group("Q:4"), DescriptorError);    // m = 1
  CHECK_THROWS_AS(make_group("A:7"), std::invalid_argument);
  CHECK_THROWS_AS(make_group("C:0"), std::invalid_argument);
  CHECK_THROWS_AS(make_group("X:3"), DescriptorError);
  CHECK_THROWS_AS(make_group("D12"), DescriptorError);
  CHECK_THROWS_AS(make_group("D:12rest"), DescriptorError);
  CHECK_THROWS_AS(make_group("P:C:2"), DescriptorError);  // missing right factor
  CHECK_THROWS_AS(make_group(""), DescriptorError);
  CHECK_THROWS_AS(make_group("C:999"), SizeCapError);
  CHECK_THROWS_AS(make_group("P:C:20xC:20"), SizeCapError);
}

TEST_CASE("element parsing is strict with a caret-insensitive fallback") {
  GroupTable d12 = make_group("D:12");
  CHECK(parse_element(d12, "a^3") == 3);
  CHECK(parse_element(d12, "a3") == 3);
  CHECK(parse_element(d12, "1") == GroupTable::identity);
  CHECK_THROWS_AS(parse_element(d12, "z"), NameLookupError);
  CHECK_THROWS_AS(parse_element(d12, "a^9"), NameLookupError);
}

TEST_CASE("subgroup selectors") {
  GroupTable d8 = make_group("D:8");
  CHECK(select_subgroups(d8, "all").size() == 10);
  CHECK(select_subgroups(d8, "order:4").size() == 3);
  CHECK(select_subgroups(d8, "order:3").empty());

  std::vector<Subgroup> klein = select_subgroups(d8, "gen:a2,b");
  REQUIRE(klein.size() == 1);
  CHECK(klein[0].members == std::vector<Elem>{0, 2, 4, 6});  // {1, a^2, b, a^2b}

  CHECK_THROWS_AS(select_subgroups(d8, "weird"), DescriptorError);
  CHECK_THROWS_AS(select_subgroups(d8, "gen:"), DescriptorError);
  CHECK_THROWS_AS(select_subgroups(d8, "gen:zz"), NameLookupError);
  CHECK_THROWS_AS(select_subgroups(d8, "order:4x"), DescriptorError);
}

TEST_CASE("DOT export is deterministic and round-trips its counts") {
  GroupTable a4 = make_group("A:4");
  Subgroup h = generated_subgroup(a4, {parse_element(a4, "a")});
  DeltaGraphSpec spec = make_delta_spec(a4, h, parse_element(a4, "bab^2"));
  UGraph g = build_delta(spec);
  GraphReport rep = analyze(g);
  std::string dot = to_dot(a4, g, "A:4", minimal_generators(a4, h), spec.g);
  CHECK(dot == to_dot(a4, g, "A:4", minimal_generators(a4, h), spec.g));
  CHECK(dot.find("// group=A:4 H=gen:a g=bab^2") != std::string::npos);
  DotCounts counts = parse_dot_counts(dot);
  CHECK(counts.vertices == rep.n_vertices);
  CHECK(counts.edges == static_cast<int>(rep.n_edges));
}

TEST_CASE("DOT round-trip across a sweep") {
  GroupTable d8 = make_group("D:8");
  for (const Subgroup& h : select_subgroups(d8, "all")) {
    DeltaGraphSpec base = make_delta_spec(d8, h, GroupTable::identity);
    for (Elem el : base.k_hg) {
      UGraph g = build_delta(with_g(base, el));
      GraphReport rep = analyze(g);
      DotCounts counts = parse_dot_counts(to_dot(d8, g, "D:8", minimal_generators(d8, h), el));
      REQUIRE(counts.vertices == rep.n_vertices);
      REQUIRE(counts.edges == static_cast<int>(rep.n_edges));
    }
  }
}

TEST_CASE("sweep CSV matches the hand-derived D:6 table byte for byte") {
  // Every row below was derived by hand from the adjacency rule:
  // the three reflection subgroups give stars at g = 1 and empty graphs at
  // g = a, a^2; H = <a> gives a 6-edge connected graph at g = 1 and a single
  // surviving edge a ~ a^2 otherwise; H = G at g = 1 is the non-commuting
  // graph (K5 minus the a-a^2 edge).
  const std::string expected =
      "group,h_size,h_gens,g,admissible,connected,diameter,tree,star,edges,isolated_count\n"
      "D:6,1,1,1,h-equals-rel-center,false,inf,false,false,0,5\n"
      "D:6,2,b,1,admissible,true,2,true,true,4,0\n"
      "D:6,2,b,a,admissible,false,inf,false,false,0,5\n"
      "D:6,2,b,a^2,admissible,false,inf,false,false,0,5\n"
      "D:6,2,ab,1,admissible,true,2,true,true,4,0\n"
      "D:6,2,ab,a,admissible,false,inf,false,false,0,5\n"
      "D:6,2,ab,a^2,admissible,false,inf,false,false,0,5\n"
      "D:6,2,a^2b,1,admissible,true,2,true,true,4,0\n"
      "D:6,2,a^2b,a,admissible,false,inf,false,false,0,5\n"
      "D:6,2,a^2b,a^2,admissible,false,inf,false,false,0,5\n"
      "D:6,3,a,1,admissible,true,2,false,false,6,0\n"
      "D:6,3,a,a,admissible,false,inf,false,false,1,3\n"
      "D:6,3,a,a^2,admissible,false,inf,false,false,1,3\n"
      "D:6,6,a b,1,admissible,true,2,false,false,9,0\n"
      "D:6,6,a b,a,admissible,false,inf,false,false,1,3\n"
      "D:6,6,a b,a^2,admissible,false,inf,false,false,1,3\n";
  GroupTable d6 = make_group("D:6");
  std::vector<SweepRow> rows = sweep_rows(d6, select_subgroups(d6, "all"), "all-admissible");
  CHECK(sweep_csv(rows) == expected);
  // Byte-identical on a second run.
  std::vector<SweepRow> again = sweep_rows(d6, select_subgroups(d6, "all"), "all-admissible");
  CHECK(sweep_csv(again) == expected);
}

TEST_CASE("sweep g selectors") {
  GroupTable d8 = make_group("D:8");
  auto all_subs = select_subgroups(d8, "all");
  std::vector<SweepRow> one = sweep_rows(d8, all_subs, "1");
  CHECK(one.size() == all_subs.size());
  for (const SweepRow& r : one) CHECK(r.g == "1");
  std::vector<SweepRow> every = sweep_rows(d8, all_subs, "all");
  CHECK(every.size() == all_subs.size() * static_cast<std::size_t>(d8.order()));
  CHECK_THROWS_AS(sweep_rows(d8, all_subs, "nope"), NameLookupError);
}

TEST_CASE("sweep rows are sorted by (|H|, members, g index)") {
  GroupTable q12 = make_group("Q:12");
  std::vector<SweepRow> rows = sweep_rows(q12, select_subgroups(q12, "all"), "all-admissible");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const SweepRow& p = rows[i - 1];
    const SweepRow& q = rows[i];
    bool ordered = p.h_size < q.h_size ||
                   (p.h_size == q.h_size &&
                    (p.h_members < q.h_members ||
                     (p.h_members == q.h_members && p.g_index < q.g_index)));
    CHECK(ordered);
  }
}
