#include <doctest.h>

#include <sstream>

#include "adf/digraph.hpp"
#include "adf/errors.hpp"

using namespace adf;

namespace {

int parse_error_line(std::string_view text) {
  try {
    parse_digraph(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("digraph parse and serialize round trip") {
  const Digraph d = parse_digraph("# comment\n4\n0 1\n\n1 0\n2 3\n3 2\n");
  CHECK(d.order() == 4);
  CHECK(d.size() == 4);
  CHECK(d.has_arc(0, 1));
  CHECK(d.has_arc(1, 0));
  CHECK_FALSE(d.has_arc(0, 2));
  CHECK(serialize(d) == "4\n0 1\n1 0\n2 3\n3 2\n");
  CHECK(parse_digraph(serialize(d)) == d);
  std::istringstream in(serialize(d));
  CHECK(parse_digraph(in) == d);
}

TEST_CASE("digraph parse errors carry line numbers in file order") {
  CHECK(parse_error_line("3\n0 1\n0 0\n") == 3);
  CHECK(parse_error_line("3\n0 5\n0 0\n") == 2);
  CHECK(parse_error_line("3\n0 1\n0 1\n") == 3);
  CHECK(parse_error_line("3\n0 x\n") == 2);
  CHECK(parse_error_line("3\n0 1 2\n") == 2);
  CHECK(parse_error_line("zero\n") == 1);
  CHECK(parse_error_line("# only comments\n") == 0);
}

TEST_CASE("simple graph format requires u < v") {
  const SimpleGraph g = parse_simple_graph("3\n0 1\n1 2\n");
  CHECK(g.size() == 2);
  CHECK(g.has_edge(2, 1));
  CHECK(serialize(g) == "3\n0 1\n1 2\n");
  CHECK_THROWS_AS(parse_simple_graph("3\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_simple_graph("3\n0 1\n0 1\n"), ParseError);
}

TEST_CASE("constructors reject loops, duplicates and bad orders") {
  CHECK_THROWS_AS(Digraph(3, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(Digraph(3, {{0, 1}, {0, 1}}), PreconditionError);
  CHECK_THROWS_AS(Digraph(3, {{0, 3}}), PreconditionError);
  CHECK_THROWS_AS(Digraph(-2, {}), PreconditionError);
  CHECK_THROWS_AS(SimpleGraph(3, {{1, 0}, {0, 1}}), PreconditionError);
  CHECK_NOTHROW(Digraph(2, {{0, 1}, {1, 0}}));
}

TEST_CASE("min_degree and the split complete digraph") {
  CHECK(min_degree(complete_digraph(5)) == 4);
  for (int n : {6, 10, 14}) {
    const Digraph d = split_complete_digraph(n);
    CHECK(min_degree(d) == n / 2 - 1);
    CHECK(d.size() == static_cast<std::size_t>(n * (n / 2 - 1)));
    CHECK_FALSE(d.has_arc(0, n - 1));
  }
  CHECK_THROWS_AS(split_complete_digraph(7), PreconditionError);
  const Digraph out_star(3, {{0, 1}, {0, 2}});
  CHECK(min_degree(out_star) == 0);
}

TEST_CASE("anti-directed cover validation") {
  // 0 and 2 are sources, 1 and 3 sinks.
  const Digraph d(4, {{0, 1}, {2, 1}, {2, 3}, {0, 3}});
  CycleCover unoriented{{{0, 1, 2, 3}}, std::nullopt};
  CHECK(validate_anti_directed_cover(d, unoriented));
  CycleCover oriented{{{0, 1, 2, 3}}, std::vector<std::vector<bool>>{{true, false, true, false}}};
  CHECK(validate_anti_directed_cover(d, oriented));
  const auto arcs = oriented.oriented_arcs();
  CHECK(arcs.size() == 4);

  SUBCASE("wrong orientation") {
    CycleCover bad{{{0, 1, 2, 3}}, std::vector<std::vector<bool>>{{false, true, false, true}}};
    CHECK_FALSE(validate_anti_directed_cover(d, bad));
  }
  SUBCASE("directed cycle is not anti-directed") {
    const Digraph cyc(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK_FALSE(validate_anti_directed_cover(cyc, unoriented));
  }
  SUBCASE("missing and repeated vertices") {
    CHECK_FALSE(validate_anti_directed_cover(d, CycleCover{{{0, 1, 2}}, std::nullopt}));
    CHECK_FALSE(validate_anti_directed_cover(d, CycleCover{{{0, 1, 2, 3, 0, 1}}, std::nullopt}));
  }
  SUBCASE("2-cycles are never anti-directed") {
    const Digraph two(2, {{0, 1}, {1, 0}});
    CHECK_FALSE(validate_anti_directed_cover(two, CycleCover{{{0, 1}}, std::nullopt}));
  }
}

TEST_CASE("with_arc adds exactly one arc") {
  const Digraph d(3, {{0, 1}});
  const Digraph e = d.with_arc({1, 2});
  CHECK(e.size() == 2);
  CHECK(e.has_arc(1, 2));
  CHECK_THROWS_AS(e.with_arc({0, 1}), PreconditionError);
}
