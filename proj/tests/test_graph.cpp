#include <gtest/gtest.h>

#include "gkm/graph.hpp"

using namespace gkm;

namespace {

ErrorCode code_of(const GraphDescription& desc) {
  try {
    build_graph(desc);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::ParseError;
}

GraphDescription triangle() {
  return {{"a", "b", "c"}, {{"ab", "a", "b"}, {"bc", "b", "c"}, {"ca", "c", "a"}}, {}, {}};
}

}  // namespace

TEST(Graph, TriangleStructure) {
  const auto g = build_graph(triangle());
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.dart_count(), 6u);
  EXPECT_EQ(g.valence(), 2u);
  for (std::size_t d = 0; d < g.dart_count(); ++d) {
    EXPECT_NE(g.reverse(d), d);
    EXPECT_EQ(g.reverse(g.reverse(d)), d);
    EXPECT_EQ(g.source(g.reverse(d)), g.target(d));
    EXPECT_EQ(g.out_darts(g.source(d))[g.position(d)], d);
  }
  EXPECT_EQ(g.dart_id(g.reverse(g.dart_index("ab"))), "ab~");
  EXPECT_EQ(g.edge_representatives().size(), 3u);
}

TEST(Graph, DefaultOrderingIsById) {
  const auto g = build_graph(triangle());
  const auto out = g.out_darts(g.vertex_index("a"));
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(g.dart_id(out[0]), "ab");
  EXPECT_EQ(g.dart_id(out[1]), "ca~");
}

TEST(Graph, PinnedOrdering) {
  auto desc = triangle();
  desc.orderings = {{"a", {"ca~", "ab"}}};
  const auto g = build_graph(desc);
  EXPECT_EQ(g.dart_id(g.out_darts(g.vertex_index("a"))[0]), "ca~");
  EXPECT_FALSE(g == build_graph(triangle()));
}

TEST(Graph, MultigraphEdges) {
  GraphDescription desc{{"p", "q"}, {{"e1", "p", "q"}, {"e2", "p", "q"}, {"e3", "q", "p"}}, {}, {}};
  const auto g = build_graph(desc);
  EXPECT_EQ(g.valence(), 3u);
}

TEST(Graph, ExplicitDarts) {
  GraphDescription desc{{"p", "q"}, {}, {{"x", "p", "q", "y"}, {"y", "q", "p", "x"}}, {}};
  const auto g = build_graph(desc);
  EXPECT_EQ(g.reverse(g.dart_index("x")), g.dart_index("y"));
}

TEST(Graph, Errors) {
  EXPECT_EQ(code_of({{"a", "b"}, {{"aa", "a", "a"}}, {}, {}}), ErrorCode::LoopEdge);
  EXPECT_EQ(code_of({{"a", "b", "c", "d"}, {{"ab", "a", "b"}, {"cd", "c", "d"}}, {}, {}}), ErrorCode::Disconnected);
  EXPECT_EQ(code_of({{"a", "b", "c"}, {{"ab", "a", "b"}, {"bc", "b", "c"}}, {}, {}}), ErrorCode::NonRegular);
  EXPECT_EQ(code_of({{"p", "q"}, {}, {{"x", "p", "q", "x"}}, {}}), ErrorCode::BadInvolution);
  EXPECT_EQ(code_of({{"p", "q"}, {}, {{"x", "p", "q", "y"}, {"y", "p", "q", "x"}}, {}}), ErrorCode::BadInvolution);
  EXPECT_EQ(code_of({{"a", "b"}, {{"ab", "a", "z"}}, {}, {}}), ErrorCode::UnknownId);
  auto bad = triangle();
  bad.orderings = {{"a", {"ab", "bc"}}};
  EXPECT_EQ(code_of(bad), ErrorCode::BadOrdering);
}

TEST(Graph, NonRegularNamesVertex) {
  try {
    build_graph({{"a", "b", "c"}, {{"ab", "a", "b"}, {"bc", "b", "c"}}, {}, {}});
    FAIL();
  } catch (const Error& e) {
    // Valence is taken from the first vertex, so the middle vertex is flagged.
    EXPECT_NE(std::string(e.what()).find("'b'"), std::string::npos) << e.what();
  }
}
