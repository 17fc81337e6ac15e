#include <doctest.h>

#include "xsecdb/error.hpp"
#include "xsecdb/xml.hpp"

#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace xsecdb;
using fixtures::rat;

TEST_SUITE("store") {

TEST_CASE("ingesting the hospital markup yields the full fact set") {
  Document doc = fixtures::hospital();
  CHECK(doc.size() == 12);
  CHECK(doc.role() == DocRole::Source);
  CHECK(doc.contains(NodeId::document()));
  CHECK(doc.children(fixtures::n2()) ==
        std::vector<NodeId>{fixtures::n3(), fixtures::n5()});
}

TEST_CASE("minimal document") {
  Document doc = ingest_xml("<a/>");
  CHECK(doc.size() == 2);
  CHECK(doc.label_of(NodeId::root()) == "a");
}

TEST_CASE("rejected markup classes") {
  CHECK_THROWS_WITH_AS(ingest_xml("<a x='1'/>"),
                       doctest::Contains("attributes are not supported"),
                       ParseError);
  CHECK_THROWS_AS(ingest_xml("<a></b>"), ParseError);
  CHECK_THROWS_AS(ingest_xml("<a/><b/>"), ParseError);
  CHECK_THROWS_AS(ingest_xml(""), ParseError);
  CHECK_THROWS_AS(ingest_xml("   "), ParseError);
  CHECK_THROWS_AS(ingest_xml("<a>"), ParseError);
  CHECK_THROWS_AS(ingest_xml("<?xml version='1.0'?><a/>"), ParseError);
  CHECK_THROWS_AS(ingest_xml("<a><!-- no --></a>"), ParseError);
  CHECK_THROWS_AS(ingest_xml("plain text"), ParseError);
}

TEST_CASE("text runs become one node each; whitespace-only runs vanish") {
  Document doc = ingest_xml("<a>  one <b/> two  </a>");
  // children of the root: "one", b, "two"
  auto kids = doc.children(NodeId::root());
  REQUIRE(kids.size() == 3);
  CHECK(doc.label_of(kids[0]) == "one");
  CHECK(doc.label_of(kids[1]) == "b");
  CHECK(doc.label_of(kids[2]) == "two");

  Document spaced = ingest_xml("<a>\n  <b/>\n</a>");
  CHECK(spaced.size() == 3);  // no text child
}

TEST_CASE("document order is a preorder walk") {
  Document doc = fixtures::hospital();
  std::vector<std::string> labels;
  for (const NodeFact& fact : doc.document_order()) labels.push_back(fact.label);
  CHECK(labels == std::vector<std::string>{
                      "/", "patients", "franck", "service", "otolarynology",
                      "diagnosis", "tonsillitis", "robert", "service",
                      "pneumology", "diagnosis", "penumonia"});
}

TEST_CASE("serialization round trips geometry and labels") {
  Document doc = fixtures::hospital();
  Document again = ingest_xml(serialize_xml(doc));
  CHECK(to_label_tree(again) == to_label_tree(doc));

  testsupport::Rng rng(23);
  for (int i = 0; i < 30; ++i) {
    Document d = testsupport::random_document(rng, 20);
    Document back = ingest_xml(serialize_xml(d));
    CHECK(to_label_tree(back) == to_label_tree(d));
  }
}

TEST_CASE("single node serializes as an empty element") {
  CHECK(serialize_xml(ingest_xml("<a/>")) == "<a/>\n");
}

TEST_CASE("RESTRICTED labels serialize verbatim") {
  std::vector<NodeFact> facts{{NodeId::document(), "/"},
                              {NodeId::root(), "patients"},
                              {fixtures::n2(), "RESTRICTED"}};
  Document view(facts, DocRole::View);
  std::string markup = serialize_xml(view);
  CHECK(markup.find("RESTRICTED") != std::string::npos);
  Document back = ingest_xml(markup);
  CHECK(to_label_tree(back) == to_label_tree(view));
}

TEST_CASE("dump format") {
  Document doc = fixtures::hospital();
  std::string dump = to_dump(doc);
  CHECK(dump.rfind("/\t/\n", 0) == 0);
  CHECK(dump.find("0:/:1/1\tpatients\n") != std::string::npos);
  CHECK(dump.find("1:1/1:2/1\trobert\n") != std::string::npos);

  Document back = parse_dump(dump);
  CHECK(back.facts() == doc.facts());

  CHECK_THROWS_AS(parse_dump("no tab here"), Error);
  CHECK_THROWS_AS(parse_dump("bogus\tlabel\n"), Error);
}

TEST_CASE("store invariants are enforced on construction") {
  // duplicate identifier
  CHECK_THROWS_AS(Document({{NodeId::document(), "/"},
                            {NodeId::root(), "a"},
                            {NodeId(1, rat(1, 1), rat(1, 1)), "b"},
                            {NodeId(1, rat(1, 1), rat(1, 1)), "c"}},
                           DocRole::Source),
                  Error);
  // same local code at one level under different parents
  CHECK_THROWS_AS(Document({{NodeId::document(), "/"},
                            {NodeId::root(), "a"},
                            {NodeId(1, rat(1, 1), rat(1, 1)), "b"},
                            {NodeId(1, rat(1, 1), rat(2, 1)), "c"},
                            {NodeId(2, rat(1, 1), rat(5, 1)), "d"},
                            {NodeId(2, rat(2, 1), rat(5, 1)), "e"}},
                           DocRole::Source),
                  Error);
  // dangling parent code
  CHECK_THROWS_AS(Document({{NodeId::document(), "/"},
                            {NodeId::root(), "a"},
                            {NodeId(2, rat(9, 1), rat(1, 1)), "b"}},
                           DocRole::Source),
                  Error);
  // missing document anchor
  CHECK_THROWS_AS(Document({{NodeId::root(), "a"}}, DocRole::Source), Error);
  // empty label
  CHECK_THROWS_AS(Document({{NodeId::document(), "/"}, {NodeId::root(), ""}},
                           DocRole::Source),
                  Error);
  // document label must be "/"
  CHECK_THROWS_AS(Document({{NodeId::document(), "x"}}, DocRole::Source), Error);
}

}  // TEST_SUITE
