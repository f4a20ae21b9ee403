#include "helpers.hpp"

#include "tangle/error.hpp"
#include "tangle/io.hpp"

#include <gtest/gtest.h>

using namespace tangle;

TEST(HomJson, RoundTrip) {
  const Homomorphism phi = testing_support::fig2_hom();
  const Json doc = to_json(phi);
  EXPECT_EQ(doc.dump(),
            R"j({"rank":3,"degree":9,"images":["(15)(687)","(172569)","(1934)(58)"]})j");
  EXPECT_EQ(hom_from_json(doc), phi);

  SplitMix64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const Homomorphism psi =
        sample_hom(rng, 1 + static_cast<int>(uniform_below(rng, 3)),
                   1 + uniform_below(rng, 14));
    EXPECT_EQ(hom_from_json(parse_json(to_json(psi).dump())), psi);
  }
}

TEST(HomJson, Errors) {
  EXPECT_THROW(hom_from_json(parse_json(R"j({"rank":2,"degree":3,"images":["()"]})j")),
               InvalidArgument);
  EXPECT_THROW(hom_from_json(parse_json(R"j({"rank":1,"degree":3})j")),
               InvalidArgument);
  EXPECT_THROW(hom_from_json(parse_json(R"j({"rank":1,"degree":3,"images":[1]})j")),
               InvalidArgument);
  EXPECT_THROW(hom_from_json(parse_json(R"j({"rank":1,"degree":3,"images":["(14)"]})j")),
               ParseError);
  EXPECT_THROW(parse_json("{"), ParseError);
  EXPECT_THROW(read_json_file("/nonexistent/file.json"), InvalidArgument);
}

TEST(GraphJson, SortedEdgesAndRoundTrip) {
  const LabelledGraph g = testing_support::fig3_g1();
  const Json doc = to_json(g, 0);
  EXPECT_EQ(doc["edges"].dump(),
            "[[0,1,1],[2,4,1],[3,2,1],[0,3,2],[1,2,2],[2,5,2],[0,5,3],[1,4,3]]");
  const RootedGraph back = graph_from_json(doc);
  EXPECT_EQ(back.basepoint, 0u);
  EXPECT_EQ(canonical_form(back.graph, 0), canonical_form(g, 0));
  EXPECT_EQ(to_json(back.graph, 0), doc);
}

TEST(GraphJson, DuplicatesLoadPrefolded) {
  const RootedGraph g = graph_from_json(
      parse_json(R"j({"rank":1,"vertices":2,"edges":[[0,1,1],[0,1,1]]})j"));
  EXPECT_EQ(g.graph.state(), GraphState::Prefolded);
  EXPECT_FALSE(is_valid(g.graph));
}

TEST(GraphJson, Errors) {
  EXPECT_THROW(graph_from_json(parse_json(
                   R"j({"rank":1,"vertices":2,"edges":[[0,2,1]]})j")),
               InvalidArgument);
  EXPECT_THROW(graph_from_json(parse_json(
                   R"j({"rank":1,"vertices":2,"edges":[[0,1]]})j")),
               InvalidArgument);
  EXPECT_THROW(graph_from_json(parse_json(
                   R"j({"rank":1,"vertices":2,"edges":[]})j")),
               InvalidArgument);
  EXPECT_THROW(graph_from_json(parse_json(
                   R"j({"rank":1,"vertices":1,"edges":[],"basepoint":1})j")),
               InvalidArgument);
}

TEST(SurfaceJson, RoundTrip) {
  const Json doc = parse_json(R"j({"genus":1,"punctures":1,"pairs":[
      {"id":"c","base_length":"0.25","a1":"a b","a2":"B"}]})j");
  const BaseSurface s = surface_from_json(doc);
  EXPECT_EQ(s.rank(), 2);
  EXPECT_DOUBLE_EQ(s.pairs().front().base_length, 0.25);
  EXPECT_EQ(to_json(s)["pairs"][0]["base_length"], "0.25");
  EXPECT_EQ(to_json(surface_from_json(to_json(s))), to_json(s));
}

TEST(SurfaceJson, Errors) {
  EXPECT_THROW(surface_from_json(parse_json(R"j({"genus":0,"punctures":3,"pairs":[
      {"id":"c","base_length":0.25,"a1":"a","a2":"b"}]})j")),
               InvalidArgument);
  EXPECT_THROW(surface_from_json(parse_json(R"j({"genus":0,"punctures":3,"pairs":[
      {"id":"c","base_length":"-1","a1":"a","a2":"b"}]})j")),
               ParseError);
  EXPECT_THROW(surface_from_json(parse_json(R"j({"genus":0,"punctures":3,"pairs":[
      {"id":"c","base_length":"1","a1":"a","a2":"c"}]})j")),
               ParseError);
  EXPECT_THROW(surface_from_json(parse_json(R"j({"genus":0,"punctures":3,"pairs":[
      {"id":"c","base_length":"1","a1":"a","a2":"a a"}]})j")),
               InvalidArgument);
  EXPECT_THROW(surface_from_json(parse_json(R"j({"genus":0,"punctures":0,"pairs":[]})j")),
               InvalidArgument);
}

TEST(Decimal, Parsing) {
  EXPECT_DOUBLE_EQ(parse_decimal("0"), 0.0);
  EXPECT_DOUBLE_EQ(parse_decimal("12.5"), 12.5);
  for (const char *bad : {"", ".5", "1.", "1e3", "-1", "1.2.3", " 1"})
    EXPECT_THROW(parse_decimal(bad), ParseError) << bad;
}
