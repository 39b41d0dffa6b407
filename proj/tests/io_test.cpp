#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "berge/generators.hpp"
#include "berge/io.hpp"

using namespace berge;

TEST_CASE("edge list parse and emit") {
  const Multigraph t = parse_edgelist("2 3\n0 1\n0 1\n0 1\n");
  CHECK(t == theta_graph());
  CHECK(emit_edgelist(t) == "2 3\n0 1\n0 1\n0 1\n");

  const std::string with_comments = "# theta\n2 3\n\n0 1\n# middle\n0 1\n0 1\n";
  CHECK(parse_edgelist(with_comments) == t);

  for (const Multigraph& g : {complete_k4(), prism(), petersen(), moebius_kantor(),
                              generalized_petersen(9, 4), flower_snark(7)}) {
    const std::string text = emit_edgelist(g);
    CHECK(parse_edgelist(text) == g);
    CHECK(emit_edgelist(parse_edgelist(text)) == text);
  }
}

TEST_CASE("edge list errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_edgelist(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("") == 1);
  CHECK(line_of("2 x\n") == 1);
  CHECK(line_of("2 2\n0 1\n1 0\n") == 3);
  CHECK(line_of("2 2\n0 1\n") == 2);
  CHECK(line_of("2 1\n0 1\n0 1\n") == 3);
  CHECK(line_of("2 1\n0 2\n") == 2);
  CHECK(line_of("2 1\n1 1\n") == 2);
}

TEST_CASE("graph6") {
  const Multigraph k4 = parse_graph6("C~");
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  CHECK(k4 == complete_k4());

  // Golden strings produced by networkx for the same labelled graphs.
  CHECK(emit_graph6(complete_k4()) == "C~");
  CHECK(emit_graph6(petersen()) == "IheA@GUAo");
  const Multigraph p = parse_graph6(">>graph6<<IheA@GUAo\n");
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  for (Vertex v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);

  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
  CHECK_THROWS_AS(parse_graph6("\x01"), ParseError);
  CHECK_THROWS(emit_graph6(theta_graph()));
}

TEST_CASE("cover text") {
  const std::vector<EdgeSet> cover{{0, 5, 9}, {1, 2, 3}};
  const std::string text = emit_cover(cover);
  CHECK(text == "cover 2\n0 5 9\n1 2 3\n");
  CHECK(parse_cover(text) == cover);
  CHECK(parse_cover(text + "\n\n") == cover);
  CHECK_THROWS_AS(parse_cover("cover 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_cover("cover 1\n3 1\n"), ParseError);
  CHECK_THROWS_AS(parse_cover("cover 1\n1 2\n3\n"), ParseError);
  CHECK_THROWS_AS(parse_cover("covr 1\n1\n"), ParseError);
}
