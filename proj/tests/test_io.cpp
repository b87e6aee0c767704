#include <gtest/gtest.h>

#include <filesystem>

#include "monotop/io.hpp"

namespace monotop {
namespace {

namespace fs = std::filesystem;

const fs::path kData = MONOTOP_TEST_DATA;

TEST(ParseIdeal, HeaderCommentsAndUnit) {
  const auto i = parse_ideal("# comment\nvars: a b c\na b  # edge\n\nc\n");
  EXPECT_EQ(i.universe().names(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(i.to_string(), "(c, a*b)");
  EXPECT_TRUE(parse_ideal("vars: a\n()\n").is_unit());
  EXPECT_TRUE(parse_ideal("vars:\n").is_zero());
}

TEST(ParseIdeal, ErrorsCarryLineNumbers) {
  try {
    parse_ideal("vars: a b\na b\na z\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
  EXPECT_THROW(parse_ideal(""), ParseError);
  EXPECT_THROW(parse_ideal("vars: a a\n"), ParseError);
}

TEST(ParseGraph, VerticesLineAndFirstAppearance) {
  const Graph g = parse_graph("b a\na c\n");
  EXPECT_EQ(g.vertices().names(), (std::vector<std::string>{"b", "a", "c"}));
  EXPECT_EQ(g.num_edges(), 2u);
  const Graph h = parse_graph("vertices: z y\n");
  EXPECT_EQ(h.num_vertices(), 2u);
  EXPECT_EQ(h.num_edges(), 0u);
}

TEST(ParseComplex, RoundTrip) {
  const auto u = VariableUniverse::numbered(3);
  const auto c = simplex_boundary(u, u->all());
  EXPECT_EQ(parse_complex(format_complex(c), u), c);
  EXPECT_THROW(parse_complex("x1 x2\n", u), ParseError);
  EXPECT_TRUE(parse_complex("", u).is_empty());
}

TEST(Corpus, RoundTripsEveryFile) {
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(kData)) {
    if (!entry.is_regular_file()) continue;
    const std::string text = read_text_file(entry.path());
    ++files;
    if (input_kind(entry.path()) == InputKind::Graph) {
      const Graph g = parse_graph(text);
      EXPECT_EQ(parse_graph(format_graph(g)), g) << entry.path();
    } else {
      const MonomialIdeal i = parse_ideal(text);
      EXPECT_EQ(parse_ideal(format_ideal(i)), i) << entry.path();
      EXPECT_EQ(format_ideal(parse_ideal(format_ideal(i))), format_ideal(i));
    }
  }
  EXPECT_GE(files, 10u);
}

TEST(Corpus, MalformedFilesAreRejected) {
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(kData / "bad")) {
    const std::string text = read_text_file(entry.path());
    ++files;
    if (input_kind(entry.path()) == InputKind::Graph) {
      EXPECT_THROW(parse_graph(text), ParseError) << entry.path();
    } else {
      EXPECT_THROW(parse_ideal(text), ParseError) << entry.path();
    }
  }
  EXPECT_EQ(files, 8u);
}

TEST(ReadTextFile, MissingFile) {
  EXPECT_THROW(read_text_file(kData / "missing.ideal"), ParseError);
}

TEST(ParseGraph, TooManyVertices) {
  std::string text;
  for (int k = 0; k < 65; ++k) text += "h" + std::to_string(k) + " t" + std::to_string(k) + "\n";
  EXPECT_THROW(parse_graph(text), ParseError);
}

}  // namespace
}  // namespace monotop
